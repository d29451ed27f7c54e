#include <catch2/catch_amalgamated.hpp>

#include "stralg/bands.hpp"
#include "stralg/presentation.hpp"
#include "support.hpp"

using namespace stralg;
using testsupport::corpus;

TEST_CASE("corpus algebras parse with the documented shapes") {
  auto r1 = corpus("r1");
  REQUIRE(r1.vertices().size() == 1);
  REQUIRE(r1.arrows().size() == 2);
  REQUIRE(r1.relations().size() == 3);

  auto l2 = corpus("lambda2");
  REQUIRE(l2.vertices().size() == 4);
  REQUIRE(l2.arrows().size() == 5);
  REQUIRE(l2.relations().size() == 2);

  // degenerate quiver: one vertex, no arrows
  auto semi = parse_algebra("algebra k\nvertices: v\n");
  REQUIRE(validate_string_algebra(semi).empty());
}

TEST_CASE("parser reports errors with positions") {
  REQUIRE_THROWS_AS(parse_algebra(""), ParseError);
  REQUIRE_THROWS_AS(parse_algebra("algebra x\nvertices: v\narrow a: v -> w\n"),
                    ParseError);  // dangling vertex
  REQUIRE_THROWS_AS(
      parse_algebra("algebra x\nvertices: v w u\narrow a: v -> w\narrow b: u "
                    "-> v\nrelation: b a\n"),
      ParseError);  // non-composable: source(b)=u != target(a)=w
  REQUIRE_THROWS_AS(parse_algebra("algebra x\nvertices: v\nnonsense: 1\n"),
                    ParseError);
  try {
    parse_algebra("algebra x\nvertices: v\narrow oops v -> v\n");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    REQUIRE(e.line == 3);
  }
  // length-1 relations are rejected: killing an arrow is a quotient
  REQUIRE_THROWS_AS(
      parse_algebra("algebra x\nvertices: v\narrow a: v -> v\nrelation: a\n"),
      ParseError);
}

TEST_CASE("string algebra validation accepts the corpus") {
  for (auto const& name : {"a1tilde", "r1", "g23", "lambda2"}) {
    auto A = corpus(name);
    REQUIRE(A.validated());
  }
}

TEST_CASE("validation rejects axiom violations with a diagnosis") {
  auto three_in = parse_algebra(
      "algebra x\nvertices: v w\narrow a: v -> w\narrow b: v -> w\narrow c: v "
      "-> w\n");
  auto vio = validate_string_algebra(three_in);
  REQUIRE_FALSE(vio.empty());
  bool has_in = false, has_out = false;
  for (auto const& v : vio) {
    if (v.axiom == "too-many-ingoing") has_in = true;
    if (v.axiom == "too-many-outgoing") has_out = true;
  }
  REQUIRE(has_in);
  REQUIRE(has_out);

  // two nonzero compositions through one arrow
  auto dbl = parse_algebra(
      "algebra x\nvertices: u v w z\narrow a: u -> v\narrow b: w -> v\narrow "
      "c: v -> z\n");
  auto vio2 = validate_string_algebra(dbl);
  REQUIRE(vio2.size() == 1);
  REQUIRE(vio2[0].axiom == "double-nonzero-composition");

  // a loop with no relation: unbounded paths, not a bound quiver algebra
  auto freeloop = parse_algebra("algebra x\nvertices: v\narrow a: v -> v\n");
  auto vio3 = validate_string_algebra(freeloop);
  REQUIRE(vio3.size() == 1);
  REQUIRE(vio3[0].axiom == "unbounded-path");
}

TEST_CASE("relation normalization drops non-minimal relations") {
  auto A = parse_algebra(
      "algebra x\nvertices: v\narrow a: v -> v\narrow b: v -> v\nrelation: a "
      "a\nrelation: b b\nrelation: a b\nrelation: b a a\n");
  // b a a contains a a
  REQUIRE(A.relations().size() == 3);
}

TEST_CASE("dsl round trip is structurally exact") {
  for (auto const& name : {"a1tilde", "r1", "g23", "lambda2"}) {
    auto A = corpus(name);
    auto B = parse_algebra(A.to_dsl());
    REQUIRE(A == B);
  }
}

TEST_CASE("quotient by arrows") {
  auto l2 = corpus("lambda2");

  SECTION("empty kill set is the identity") {
    auto q = quotient_by_arrows(l2, {});
    REQUIRE(q == l2);
  }
  SECTION("unknown arrow is an error") {
    REQUIRE_THROWS_AS(quotient_by_arrows(l2, {"zz"}), std::invalid_argument);
  }
  SECTION("lambda2 minus {d,e,g} is Kronecker shaped") {
    auto q = quotient_by_arrows(l2, {"d", "e", "g"});
    REQUIRE(q.arrows().size() == 2);
    REQUIRE(q.relations().empty());
    REQUIRE(validate_string_algebra(q).empty());
    auto bands = enumerate_bands(q, 10);
    REQUIRE(bands.bands.size() == 2);  // a b^-1 and b a^-1
    // same band set as a hand-built Kronecker on those vertices
    auto kron = parse_algebra(
        "algebra k\nvertices: 3 4\narrow a: 4 -> 3\narrow b: 4 -> 3\n");
    validate_string_algebra(kron);
    auto kb = enumerate_bands(kron, 10);
    REQUIRE(kb.bands.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
      REQUIRE(kb.bands[i].str() == bands.bands[i].str());
  }
  SECTION("r1 minus {a} is a single loop with b^2 = 0, band free") {
    auto r1 = corpus("r1");
    auto q = quotient_by_arrows(r1, {"a"});
    REQUIRE(q.arrows().size() == 1);
    REQUIRE(q.relations() == std::vector<RelationPath>{{"b", "b"}});
    REQUIRE(validate_string_algebra(q).empty());
    REQUIRE(enumerate_bands(q, 16).bands.empty());
  }
  SECTION("quotients never add arrows or relations and preserve validity") {
    for (auto const& name : {"a1tilde", "r1", "g23", "lambda2"}) {
      auto A = corpus(name);
      for (auto const& kill : A.arrows()) {
        auto q = quotient_by_arrows(A, {kill.name});
        REQUIRE(q.arrows().size() == A.arrows().size() - 1);
        REQUIRE(q.relations().size() <= A.relations().size());
        REQUIRE(validate_string_algebra(q).empty());
      }
    }
  }
}
