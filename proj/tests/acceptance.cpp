// The acceptance gate: one check per criterion, each printed as a pass/fail
// line with its runtime.  Everything is pinned here: corpus facts read off
// the four algebras, exact matrix identities, seeded property sweeps, and
// oracle equivalences at the stated bounds.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "stralg/audit.hpp"
#include "stralg/cli.hpp"
#include "stralg/field.hpp"
#include "stralg/json_io.hpp"
#include "stralg/ringel.hpp"
#include "support.hpp"

using namespace stralg;
using K = Rational;

namespace {

struct Gate {
  int failures = 0;

  void run(std::string const& name, std::function<void()> const& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      body();
    } catch (std::exception const& e) {
      error = e.what();
    }
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (error.empty()) {
      line << "[PASS] " << name << " (" << dt << "s)";
    } else {
      line << "[FAIL] " << name << " (" << dt << "s): " << error;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }
};

void expect(bool cond, std::string const& what) {
  if (!cond) throw std::runtime_error(what);
}

void expect_time(double seconds, double bound, std::string const& what) {
  if (seconds > bound)
    throw std::runtime_error(what + ": took " + std::to_string(seconds) +
                             "s, bound " + std::to_string(bound) + "s");
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

TwoSidedWord figure2(AlgebraPresentation const& r1, HPartition const& P) {
  OneSidedWord u(r1, FiniteWord("1", +1), make_word(r1, "1", "a b^-1"));
  OneSidedWord v(r1, make_word(r1, "1", "b"), make_word(r1, "1", "a b^-1"));
  return TwoSidedWord(r1, P, u, v);
}

TwoSidedWord lambda2_query(AlgebraPresentation const& l2, HPartition const& H) {
  OneSidedWord u(l2, make_word(l2, "1", "e g"), make_word(l2, "3", "a b^-1"));
  OneSidedWord v(l2, FiniteWord("1", +1), make_word(l2, "1", "d e^-1"));
  return TwoSidedWord(l2, H, u, v);
}

// the longest run of inverse letters any word over A can end with
std::size_t max_inverse_descent(AlgebraPresentation const& A) {
  std::size_t best = 0;
  for (auto const& a : A.arrows()) {
    TrailingWindow t(A);
    t.push(Letter(a.name, Dir::inverse));
    best = std::max(best, 1 + detail::inverse_descent(A, t).size());
  }
  return best;
}

ChainWord oracle_chain_word(AlgebraPresentation const& A, HPartition const& H,
                            FDModule<K> const& M, PointedElement<K> const& m,
                            int side, std::size_t bound) {
  FiniteWord best(m.vertex, side);
  bool best_set = div_subspace(A, H, M, best).contains(m.coords);
  visit_words(A, m.vertex, bound, [&](std::vector<Letter> const& ls) {
    if (H.side(m.vertex, ls[0]) != side) return;
    FiniteWord w(A, m.vertex, ls);
    if (!div_subspace(A, H, M, w).contains(m.coords)) return;
    if (!best_set || compare(A, H, WordView(best), WordView(w)) == Ordering::LT) {
      best = w;
      best_set = true;
    }
  });
  expect(best_set, "oracle found no satisfied word");
  return best;
}

}  // namespace

int main() {
  Gate gate;
  auto const a1 = testsupport::corpus("a1tilde");
  auto const r1 = testsupport::corpus("r1");
  auto const g23 = testsupport::corpus("g23");
  auto const l2 = testsupport::corpus("lambda2");
  auto const P = testsupport::paper_partition_r1(r1);
  std::vector<std::reference_wrapper<AlgebraPresentation const>> corpus_all{
      a1, r1, g23, l2};
  std::vector<std::string> corpus_names{"a1tilde", "r1", "g23", "lambda2"};

  gate.run("C01 corpus validation and axiom diagnoses", [&] {
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < corpus_all.size(); ++i) {
      auto A = corpus_all[i].get();
      expect(validate_string_algebra(A).empty(),
             corpus_names[i] + " failed validation");
    }
    // one mutation per axiom, each rejected with the right diagnosis
    auto diag = [&](std::string const& src) {
      auto A = parse_algebra(src);
      auto v = validate_string_algebra(A);
      expect(!v.empty(), "mutation accepted: " + src);
      return v[0].axiom;
    };
    expect(diag("algebra x\nvertices: v w\narrow a: v -> w\narrow b: v -> "
                "w\narrow c: v -> w\n") == "too-many-ingoing",
           "third parallel arrow diagnosis");
    expect(diag("algebra x\nvertices: u v w z\narrow a: u -> v\narrow b: w -> "
                "v\narrow c: v -> z\n") == "double-nonzero-composition",
           "double composition diagnosis");
    expect(diag("algebra x\nvertices: v\narrow a: v -> v\n") ==
               "unbounded-path",
           "free loop diagnosis");
    expect_time(elapsed(t0), 1.0, "validation");
  });

  gate.run("C02 domesticity labels and witness", [&] {
    auto t0 = std::chrono::steady_clock::now();
    expect(is_domestic(a1).domestic && is_domestic(a1).n == 1, "A1~ label");
    expect(is_domestic(r1).domestic && is_domestic(r1).n == 1, "R1 label");
    expect(is_domestic(l2).domestic && is_domestic(l2).n == 2,
           "Lambda2 label");
    auto g = is_domestic(g23);
    expect(!g.domestic, "G23 must be non-domestic");
    expect(!g.witness_a.empty() && !g.witness_b.empty() &&
               g.witness_a != g.witness_b,
           "two-cycle witness");
    WalkAutomaton aut(g23);
    expect(aut.is_cyclically_valid(g.witness_a) &&
               aut.is_cyclically_valid(g.witness_b),
           "witness cycles repeat");
    expect_time(elapsed(t0), 1.0, "domesticity");
  });

  gate.run("C03 band sets", [&] {
    auto strs = [](BandSet const& bs) {
      std::set<std::string> out;
      for (auto const& b : bs.bands) out.insert(b.str());
      return out;
    };
    expect(strs(enumerate_bands(r1, 20)) ==
               std::set<std::string>{"a b^-1", "b a^-1"},
           "bands of R1");
    expect(strs(enumerate_bands(l2, 20)) ==
               std::set<std::string>{"a b^-1", "b a^-1", "d e^-1", "e d^-1"},
           "bands of Lambda2");
    Band example(g23, parse_letters("a b^-1 b^-1 a b^-1 b^-1 a b^-1"));
    auto bg = enumerate_bands(g23, 9);
    expect(std::find(bg.bands.begin(), bg.bands.end(), example) !=
               bg.bands.end(),
           "example band over G23");
    expect(bg.truncated, "G23 enumeration must be truncated");
    concat(g23, example.word(), example.word());  // square is a word
  });

  gate.run("C04 bridge quiver of Lambda2 with golden DOT", [&] {
    auto t0 = std::chrono::steady_clock::now();
    auto q = bridge_quiver(l2);
    expect(q.bands.size() == 4, "four bands");
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < q.bands.size(); ++i) idx[q.bands[i].str()] = i;
    std::size_t C = idx.at("e d^-1"), D = idx.at("a b^-1");
    std::size_t Ci = idx.at("d e^-1"), Di = idx.at("b a^-1");
    expect(q.le[C][D] && q.le[Di][Ci], "the two chains");
    expect(!q.le[D][C] && !q.le[Ci][Di] && !q.le[C][Di] && !q.le[C][Ci] &&
               !q.le[D][Ci] && !q.le[Di][C],
           "no other strict relations");
    expect(q.covers.size() == 2, "two covers");
    for (auto const& c : q.covers) {
      std::string u;
      for (auto const& l : c.witness) u += (u.empty() ? "" : " ") + l.str();
      if (c.from == C) expect(u == "e g", "bridge witness contains e g");
    }
    std::ifstream golden(std::string(STRALG_GOLDEN_DIR) +
                         "/lambda2_bridge.dot");
    expect(golden.good(), "golden file present");
    std::ostringstream want;
    want << golden.rdbuf();
    expect(q.dot(l2) == want.str(), "DOT output matches the golden file");
    expect_time(elapsed(t0), 5.0, "bridge quiver");
  });

  gate.run("C05 two-layer band module identities", [&] {
    Band C(a1, parse_letters("a b^-1"));
    for (int lam : {1, 2}) {
      auto M = band_module<K>(a1, C, K(lam), 2);
      auto z11 = M.basis_element(0, 1), z12 = M.basis_element(0, 2);
      auto z21 = M.basis_element(1, 1), z22 = M.basis_element(1, 2);
      auto want = linalg::add(linalg::scale(z12.coords, K(lam)), z11.coords);
      expect(M.module().action("b").apply(z22.coords) == want,
             "beta z_2^2 = lambda z_1^2 + z_1^1");
      expect(M.module().action("b").apply(z21.coords) ==
                 linalg::scale(z11.coords, K(lam)),
             "beta z_2^1 = lambda z_1^1");
      expect(M.module().action("a").apply(z22.coords) == z12.coords &&
                 M.module().action("a").apply(z21.coords) == z11.coords,
             "alpha is the layer identity");
      for (auto const& r : a1.relations())
        expect(M.module().path_action(r).is_zero(), "relations vanish");
    }
  });

  gate.run("C06 chain order examples and law sweep", [&] {
    auto cmp = [&](char const* x, char const* y) {
      return compare(r1, P, WordView(make_word(r1, "1", x)),
                     WordView(make_word(r1, "1", y)));
    };
    expect(cmp("b a^-1", "b") == Ordering::LT, "b a^-1 < b");
    FiniteWord e_minus("1", -1);
    expect(compare(r1, P, WordView(make_word(r1, "1", "a^-1")),
                   WordView(e_minus)) == Ordering::LT,
           "a^-1 < empty");
    expect(compare(r1, P, WordView(e_minus),
                   WordView(make_word(r1, "1", "a"))) == Ordering::LT,
           "empty < a");
    OneSidedWord abinf(r1, FiniteWord("1", +1), make_word(r1, "1", "a b^-1"));
    for (int n = 1; n <= 10; ++n) {
      std::string t;
      for (int i = 0; i < n; ++i) t += "a b^-1 ";
      expect(compare(r1, P, WordView(abinf),
                     WordView(make_word(r1, "1", t))) == Ordering::GT,
             "periodic word dominates its truncations");
    }
    // seeded law sweep: 1000 triples per corpus algebra
    for (std::size_t i = 0; i < corpus_all.size(); ++i) {
      auto const& A = corpus_all[i].get();
      auto H = compute_h_partition(A);
      std::mt19937_64 rng(42);
      std::map<std::pair<std::string, int>, std::vector<FiniteWord>> chains;
      for (auto const& v : A.vertices()) {
        chains[{v.id, +1}].push_back(FiniteWord(v.id, +1));
        chains[{v.id, -1}].push_back(FiniteWord(v.id, -1));
        visit_words(A, v.id, 7, [&](std::vector<Letter> const& ls) {
          chains[{v.id, H.side(v.id, ls[0])}].emplace_back(A, v.id, ls);
        });
      }
      std::vector<std::pair<std::string, int>> keys;
      for (auto const& [k, ws] : chains)
        if (ws.size() >= 2) keys.push_back(k);
      for (int t = 0; t < 1000; ++t) {
        auto const& ws = chains[keys[rng() % keys.size()]];
        auto const& x = ws[rng() % ws.size()];
        auto const& y = ws[rng() % ws.size()];
        auto const& z = ws[rng() % ws.size()];
        auto xy = compare(A, H, WordView(x), WordView(y));
        auto yx = compare(A, H, WordView(y), WordView(x));
        expect((xy == Ordering::EQ) == (x == y), "antisymmetry/reflexivity");
        if (xy == Ordering::LT) expect(yx == Ordering::GT, "antisymmetry");
        if (xy == Ordering::GT) expect(yx == Ordering::LT, "antisymmetry");
        auto yz = compare(A, H, WordView(y), WordView(z));
        if (xy != Ordering::GT && yz != Ordering::GT)
          expect(compare(A, H, WordView(x), WordView(z)) != Ordering::GT,
                 "transitivity");
      }
    }
  });

  gate.run("C07 word of the leftmost basis element vs exhaustive oracle", [&] {
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < corpus_all.size(); ++i) {
      auto const& A = corpus_all[i].get();
      auto H = compute_h_partition(A);
      // any word strictly above the result diverges within one letter plus
      // a full inverse descent, so this bound makes the oracle exhaustive
      std::size_t slack = max_inverse_descent(A) + 2;
      for (auto const& vtx : A.vertices()) {
        visit_words(A, vtx.id, 8, [&](std::vector<Letter> const& ls) {
          FiniteWord u(A, vtx.id, ls);
          auto SM = string_module<K>(A, u);
          auto m = SM.basis_element(0);
          int s = H.side(vtx.id, ls[0]);
          auto got = chain_word(A, H, SM.module(), m, s);
          expect(std::holds_alternative<FiniteWord>(got) &&
                     std::get<FiniteWord>(got) == u,
                 "v(leftmost of M(u)) = u for " + u.str());
          auto oracle =
              oracle_chain_word(A, H, SM.module(), m, s, u.size() + slack);
          expect(std::get<FiniteWord>(oracle) == u,
                 "oracle maximum differs for " + u.str());
          auto other = chain_word(A, H, SM.module(), m, -s);
          expect(std::holds_alternative<FiniteWord>(other) &&
                     std::get<FiniteWord>(other) == FiniteWord(vtx.id, -s),
                 "other side of the leftmost element is empty");
        });
      }
    }
    expect_time(elapsed(t0), 60.0, "word-of sweep");
  });

  gate.run("C08 triangle inequality, 1000 seeded cases per algebra", [&] {
    for (std::size_t i = 0; i < corpus_all.size(); ++i) {
      auto const& A = corpus_all[i].get();
      auto H = compute_h_partition(A);
      std::mt19937_64 rng(2718);
      auto mods = audit_detail::sweep_modules<K>(A, 4);
      std::vector<std::string> vertices;
      for (auto const& v : A.vertices()) vertices.push_back(v.id);
      std::size_t done = 0;
      while (done < 1000) {
        auto M =
            direct_sum(mods[rng() % mods.size()], mods[rng() % mods.size()]);
        auto const& vx = vertices[rng() % vertices.size()];
        auto m1 = audit_detail::random_element(M, vx, rng);
        auto m2 = audit_detail::random_element(M, vx, rng);
        if (!m1 || !m2) continue;
        auto sum = linalg::add(m1->coords, m2->coords);
        if (linalg::is_zero_vec(sum)) continue;
        ++done;
        PointedElement<K> m{vx, sum};
        auto v1 = right_word(A, H, M, *m1);
        auto v2 = right_word(A, H, M, *m2);
        auto vm = right_word(A, H, M, m);
        auto c12 = compare(A, H, chain_view(v1), chain_view(v2));
        auto const& vmin = c12 == Ordering::GT ? v2 : v1;
        auto c = compare(A, H, chain_view(vm), chain_view(vmin));
        expect(c != Ordering::LT, "v(m1+m2) >= min(v1,v2)");
        if (c12 != Ordering::EQ)
          expect(c == Ordering::EQ, "equality when v1 != v2");
      }
    }
  });

  gate.run("C09 homogeneity of basis elements and the split witness", [&] {
    for (std::size_t i = 0; i < corpus_all.size(); ++i) {
      auto const& A = corpus_all[i].get();
      auto H = compute_h_partition(A);
      for (auto const& vtx : A.vertices()) {
        auto S = string_module<K>(A, FiniteWord(vtx.id, +1));
        expect(is_homogeneous(A, H, S.module(), S.basis_element(0)).homogeneous,
               "simple module generator");
        visit_words(A, vtx.id, 8, [&](std::vector<Letter> const& ls) {
          auto SM = string_module<K>(A, FiniteWord(A, vtx.id, ls));
          for (std::size_t node = 0; node < SM.nodes(); ++node)
            expect(is_homogeneous(A, H, SM.module(), SM.basis_element(node))
                       .homogeneous,
                   "basis node of " + SM.word().str());
        });
      }
    }
    // the direct sum counterexample, with the witness checked by the words
    auto Mb = string_module<K>(r1, make_word(r1, "1", "b"));
    auto Ma = string_module<K>(r1, make_word(r1, "1", "a"));
    auto M = direct_sum(Mb.module(), Ma.module());
    std::vector<K> coords(M.dim("1"), K(0));
    coords[0] = K(1);
    coords[Mb.module().dim("1")] = K(1);
    PointedElement<K> m{"1", coords};
    auto res = is_homogeneous(r1, P, M, m);
    expect(!res.homogeneous, "sum of leftmost elements splits");
    auto const& x = *res.witness;
    auto um = left_word(r1, P, M, m);
    auto ux = left_word(r1, P, M, x);
    expect(compare(r1, P, chain_view(um), chain_view(ux)) == Ordering::LT,
           "witness: u(x) > u(m)");
    PointedElement<K> rest{"1", linalg::sub(m.coords, x.coords)};
    expect(compare(r1, P, chain_view(right_word(r1, P, M, m)),
                   chain_view(right_word(r1, P, M, rest))) == Ordering::LT,
           "witness: v(m-x) > v(m)");
  });

  gate.run("C10 division contract on all homogeneous basis elements", [&] {
    for (std::size_t i = 0; i < corpus_all.size(); ++i) {
      auto const& A = corpus_all[i].get();
      auto H = compute_h_partition(A);
      for (auto const& vtx : A.vertices()) {
        visit_words(A, vtx.id, 8, [&](std::vector<Letter> const& ls) {
          auto SM = string_module<K>(A, FiniteWord(A, vtx.id, ls));
          for (std::size_t node = 0; node < SM.nodes(); ++node) {
            auto m = SM.basis_element(node);
            auto vw = right_word(A, H, SM.module(), m);
            if (!std::holds_alternative<FiniteWord>(vw)) return;
            auto vf = std::get<FiniteWord>(vw);
            if (vf.empty()) continue;
            Letter l = vf[0];
            auto uw = left_word(A, H, SM.module(), m);
            auto u = std::get<FiniteWord>(uw);
            auto n = divide(A, H, SM.module(), m, l);
            auto wn = word_of(A, H, SM.module(), n);
            auto linv_head = FiniteWord(A, n.vertex, {l.inverse()});
            auto linv = u.empty() ? linv_head : concat(A, linv_head, u);
            int lside = side_of(A, H, WordView(linv), n.vertex);
            std::vector<Letter> vp(vf.letters().begin() + 1,
                                   vf.letters().end());
            FiniteWord tail = vp.empty() ? FiniteWord(n.vertex, -lside)
                                         : FiniteWord(A, n.vertex, vp);
            TwoSidedWord expected =
                lside == -1 ? TwoSidedWord(A, H, linv, tail)
                            : TwoSidedWord(A, H, tail, linv);
            expect(wn == expected, "w(n) = u^-1 l . v' at node " +
                   std::to_string(node) + " of " + SM.word().str());
            expect(is_homogeneous(A, H, SM.module(), n).homogeneous,
                   "n is homogeneous");
          }
        });
      }
    }
  });

  gate.run("C11 graph map count equals the solver dimension", [&] {
    auto t0 = std::chrono::steady_clock::now();
    auto anchor = [&](char const* u, char const* v, std::size_t want) {
      auto Mu = string_module<K>(a1, make_word(a1, "1", u));
      auto Mv = string_module<K>(a1, make_word(a1, "1", v));
      auto triples = admissible_triples(a1, Mu.word(), Mv.word());
      expect(triples.size() == want, "anchor value");
      expect(hom_dimension_oracle(Mu.module(), Mv.module()) == want,
             "anchor oracle value");
    };
    anchor("a b^-1", "a b^-1", 1);
    anchor("a", "a b^-1", 0);
    anchor("a b^-1", "a", 1);
    for (auto const& Aref :
         {std::cref(r1), std::cref(l2)}) {
      auto const& A = Aref.get();
      std::vector<FiniteWord> words;
      for (auto const& v : A.vertices()) {
        words.emplace_back(v.id, +1);
        visit_words(A, v.id, 6, [&](std::vector<Letter> const& ls) {
          words.emplace_back(A, v.id, ls);
        });
      }
      for (auto const& u : words)
        for (auto const& v : words) {
          auto Mu = string_module<K>(A, u);
          auto Mv = string_module<K>(A, v);
          auto triples = admissible_triples(A, u, v);
          expect(triples.size() == hom_dimension_oracle(Mu.module(), Mv.module()),
                 "count mismatch at " + u.str() + " -> " + v.str());
          for (auto const& t : triples)
            expect(is_module_hom(A, Mu.module(), Mv.module(),
                                 graph_map_hom(A, Mu, Mv, t)),
                   "graph map does not commute");
        }
    }
    expect_time(elapsed(t0), 120.0, "hom sweep");
  });

  gate.run("C12 pp membership vs the truncation oracle", [&] {
    auto t0 = std::chrono::steady_clock::now();
    auto w = figure2(r1, P);
    std::vector<FiniteWord> lefts{FiniteWord("1", -1)},
        rights{FiniteWord("1", +1)};
    visit_words(r1, "1", 8, [&](std::vector<Letter> const& ls) {
      FiniteWord f(r1, "1", ls);
      (P.side("1", ls[0]) == -1 ? lefts : rights).push_back(f);
    });
    // cache the truncation modules across all pairs
    std::size_t n0 = default_start_level(w);
    std::vector<StringModule<K>> levels;
    std::vector<PointedElement<K>> marks;
    for (std::size_t n = n0; n < n0 + 12; ++n) {
      auto t = truncate(r1, w, n);
      levels.emplace_back(r1, t.word);
      marks.push_back(levels.back().basis_element(t.anchor_node));
    }
    std::size_t in = 0, notin = 0;
    for (auto const& C1 : lefts)
      for (auto const& D1 : rights) {
        auto fast = pp_member(r1, P, w, C1, D1);
        std::optional<bool> last;
        std::size_t run = 0;
        std::optional<bool> verdict;
        for (std::size_t i = 0; i < levels.size(); ++i) {
          bool sat = pp_subspace(r1, P, levels[i].module(),
                                 PPWordFormula::both(C1, D1))
                         .contains(marks[i].coords);
          run = (last && *last == sat) ? run + 1 : 1;
          last = sat;
          if (run >= 3) {
            verdict = sat;
            break;
          }
        }
        expect(verdict.has_value(), "oracle did not stabilize");
        expect((fast == TypeVerdict::InType) == *verdict,
               "disagreement at (" + C1.str() + ", " + D1.str() + ")");
        (fast == TypeVerdict::InType ? in : notin) += 1;
      }
    expect(in > 0 && notin > 0, "both verdicts must occur");
    expect_time(elapsed(t0), 120.0, "pp membership sweep");
  });

  gate.run("C13 the basic open pair isolates the canonical element", [&] {
    auto w = figure2(r1, P);
    auto z = ziegler_basic_open(r1, P, w);
    expect(pp_member(r1, P, w, z.C, z.D) == TypeVerdict::InType,
           "phi accepted by the word rules");
    expect(pp_member(r1, P, w, z.E2, z.D) == TypeVerdict::NotInType &&
               pp_member(r1, P, w, z.C, z.F2) == TypeVerdict::NotInType,
           "psi summands rejected by the word rules");
    expect(truncation_oracle_formula<K>(r1, P, w, z.phi()) ==
               TypeVerdict::InType,
           "phi accepted by the oracle");
    expect(truncation_oracle_formula<K>(r1, P, w, z.psi_left()) ==
                   TypeVerdict::NotInType &&
               truncation_oracle_formula<K>(r1, P, w, z.psi_right()) ==
                   TypeVerdict::NotInType,
           "psi summands rejected by the oracle");
    for (std::size_t n = 1; n <= 4; ++n) {
      auto t = truncate(r1, w, n);
      StringModule<K> M(r1, t.word);
      auto m = canonical_element(M, t);
      expect(pp_subspace(r1, P, M.module(), z.phi()).contains(m.coords),
             "phi holds in truncation " + std::to_string(n));
      if (n >= 2)
        expect(!satisfies_psi(r1, P, M.module(), m, z),
               "psi fails in truncation " + std::to_string(n));
    }
  });

  gate.run("C14 classifier agrees with the oracle on seeded inputs", [&] {
    // The Kronecker algebra admits no biperiodic two-sided word (all its
    // infinite words are rotations of the single band), so the classifier
    // has no query there; the criterion runs over R1 and Lambda2.
    {
      auto Ha = compute_h_partition(a1);
      auto la = enumerate_ringel_list(a1, Ha, {2, 4, {"1"}});
      for (auto const& d : la)
        expect(d.kind != RingelDescriptor::Kind::TwoSidedString,
               "unexpected biperiodic word over the Kronecker algebra");
    }
    struct Setup {
      AlgebraPresentation const& A;
      HPartition H;
      TwoSidedWord w;
    };
    std::vector<Setup> setups;
    setups.push_back({r1, P, figure2(r1, P)});
    {
      auto Hl = compute_h_partition(l2);
      setups.push_back({l2, Hl, lambda2_query(l2, Hl)});
    }
    for (auto& s : setups) {
      auto z = ziegler_basic_open(s.A, s.H, s.w);
      std::mt19937_64 rng(1234);
      std::vector<FiniteWord> tails;
      for (auto const& v : s.A.vertices())
        visit_words(s.A, v.id, 3, [&](std::vector<Letter> const& ls) {
          tails.emplace_back(s.A, v.id, ls);
        });
      int tested = 0, in_type = 0;
      while (tested < 200) {
        auto left = z.C, right = z.D;
        for (int round = 0; round < 2; ++round) {
          auto const& ext = tails[rng() % tails.size()];
          try {
            if (rng() % 2)
              right = concat(s.A, right, ext);
            else
              left = concat(s.A, left, ext);
          } catch (WordError const&) {
          }
        }
        FiniteWord G = [&]() {
          try {
            return concat(s.A, invert(s.A, left), right);
          } catch (WordError const&) {
            return concat(s.A, invert(s.A, z.C), z.D);
          }
        }();
        StringModule<K> L(s.A, G);
        auto phi = pp_subspace(s.A, s.H, L.module(), z.phi());
        if (phi.dim() == 0) continue;
        std::vector<K> coords(L.module().dim(s.w.anchor()), K(0));
        for (auto const& b : phi.basis())
          coords =
              linalg::add(coords, linalg::scale(b, K(int(rng() % 3) - 1)));
        if (linalg::is_zero_vec(coords)) continue;
        PointedElement<K> l{s.w.anchor(), coords};
        ++tested;
        auto fast = classify_formula<K>(s.A, s.H, s.w, &L, l);
        auto slow = truncation_oracle_pointed(s.A, s.H, s.w, L.module(), l);
        expect(fast == slow, "classifier/oracle disagreement");
        in_type += fast == TypeVerdict::InType;
      }
      expect(in_type > 0 && in_type < tested, "both verdicts occur");
      // band modules support nothing below phi on the corpus queries, so
      // the band branch holds vacuously; the precondition must reject them
      auto bands = enumerate_bands(s.A, 12);
      for (auto const& b : bands.bands) {
        auto B = band_module<K>(s.A, b, K(2), 2);
        expect(pp_subspace(s.A, s.H, B.module(), z.phi()).dim() == 0,
               "phi subspace of a band module");
      }
    }
  });

  gate.run("C15 quotient to one band keeps only its rotations", [&] {
    auto q = quotient_by_arrows(l2, {"d", "e", "g"});
    expect(validate_string_algebra(q).empty(), "quotient validates");
    auto bs = enumerate_bands(q, 20);
    std::set<std::string> got;
    for (auto const& b : bs.bands) got.insert(b.str());
    expect(got == std::set<std::string>{"a b^-1", "b a^-1"},
           "band set of the quotient");
  });

  if (gate.failures == 0)
    std::cout << "acceptance: all 15 criteria passed" << std::endl;
  else
    std::cout << "acceptance: " << gate.failures << " criteria FAILED"
              << std::endl;
  return gate.failures;
}
