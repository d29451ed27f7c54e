// Seeded property suites over one algebra: the consolidated audit behind the
// `audit` subcommand and the acceptance checks.  Everything is deterministic
// given (algebra, configuration, seed); suites needing a domestic algebra are
// skipped with a reason otherwise.

#ifndef STRALG_AUDIT_HPP_
#define STRALG_AUDIT_HPP_

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bands.hpp"
#include "homs.hpp"
#include "ringel.hpp"
#include "wordof.hpp"

namespace stralg {

struct AuditConfig {
  std::uint64_t seed = 1;
  std::size_t word_len = 6;       // word length bound for sweeps
  std::size_t order_triples = 1000;
  std::size_t triangle_cases = 1000;
  std::size_t homog_len = 6;      // words whose basis elements are checked
  std::size_t hom_len = 4;        // graph map sweep bound
  std::size_t string_bound = 12;  // band fact (iii) enumeration bound
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  bool skipped = false;
  std::string detail;
  std::size_t checks = 0;
};

namespace audit_detail {

template <typename K>
std::vector<FDModule<K>> sweep_modules(AlgebraPresentation const& A,
                                       std::size_t maxlen) {
  std::vector<FDModule<K>> out;
  for (auto const& v : A.vertices()) {
    out.push_back(string_module<K>(A, FiniteWord(v.id, +1)).module());
    visit_words(A, v.id, maxlen, [&](std::vector<Letter> const& ls) {
      out.push_back(string_module<K>(A, FiniteWord(A, v.id, ls)).module());
    });
  }
  auto bands = enumerate_bands(A, 8);
  for (auto const& b : bands.bands) {
    out.push_back(band_module<K>(A, b, K(2), 1).module());
    out.push_back(band_module<K>(A, b, K(1), 2).module());
  }
  return out;
}

template <typename K>
std::optional<PointedElement<K>> random_element(FDModule<K> const& M,
                                                std::string const& vertex,
                                                std::mt19937_64& rng) {
  std::size_t n = M.dim(vertex);
  if (n == 0) return std::nullopt;
  std::vector<K> coords(n);
  bool nz = false;
  for (auto& c : coords) {
    c = K(int(rng() % 5) - 2);
    if (c != K(0)) nz = true;
  }
  if (!nz) return std::nullopt;
  return PointedElement<K>{vertex, std::move(coords)};
}

}  // namespace audit_detail

template <typename K>
std::vector<SuiteResult> run_audit(AlgebraPresentation A,
                                   AuditConfig const& cfg = {}) {
  std::vector<SuiteResult> out;
  auto violations = validate_string_algebra(A);
  {
    SuiteResult r{"axioms"};
    r.checks = 1;
    if (!violations.empty()) {
      r.pass = false;
      r.detail = violations[0].axiom + ": " + violations[0].detail;
    }
    out.push_back(r);
    if (!r.pass) return out;
  }
  auto H = compute_h_partition(A);
  auto dom = is_domestic(A);

  {  // band set sanity: rotation-normal, inversion closed, revalidating
    SuiteResult r{"bands"};
    auto bs = enumerate_bands(A, 2 * A.arrows().size() + 6);
    for (auto const& b : bs.bands) {
      ++r.checks;
      Band again(A, b.letters());
      if (!(again == b)) r.pass = false;
      auto inv = b.inverse(A);
      if (!bs.truncated && !bs.contains(inv)) {
        r.pass = false;
        r.detail = "inverse of " + b.str() + " missing";
      }
    }
    out.push_back(r);
  }

  {  // bridge quiver order sanity
    SuiteResult r{"bridge-antisymmetry"};
    if (!dom.domestic) {
      r.skipped = true;
      r.detail = "non-domestic";
    } else {
      auto q = bridge_quiver(A);  // throws on an antisymmetry failure
      r.checks = q.bands.size() * q.bands.size();
    }
    out.push_back(r);
  }

  {  // the band combinatorics facts
    SuiteResult r{"band-facts"};
    if (!dom.domestic) {
      r.skipped = true;
      r.detail = "non-domestic";
    } else {
      for (auto const& f : band_facts_audit(A, cfg.string_bound)) {
        ++r.checks;
        if (!f.pass) {
          r.pass = false;
          r.detail = f.check + " " + f.detail;
        }
      }
    }
    out.push_back(r);
  }

  {  // order laws on sampled triples in a common chain
    SuiteResult r{"order-laws"};
    std::mt19937_64 rng(cfg.seed);
    std::map<std::pair<std::string, int>, std::vector<FiniteWord>> chains;
    for (auto const& v : A.vertices()) {
      chains[{v.id, +1}].push_back(FiniteWord(v.id, +1));
      chains[{v.id, -1}].push_back(FiniteWord(v.id, -1));
      visit_words(A, v.id, cfg.word_len, [&](std::vector<Letter> const& ls) {
        chains[{v.id, H.side(v.id, ls[0])}].emplace_back(A, v.id, ls);
      });
    }
    std::vector<std::pair<std::string, int>> keys;
    for (auto const& [k, ws] : chains)
      if (ws.size() >= 2) keys.push_back(k);
    for (std::size_t t = 0; t < cfg.order_triples && !keys.empty(); ++t) {
      auto const& ws = chains[keys[rng() % keys.size()]];
      auto const& x = ws[rng() % ws.size()];
      auto const& y = ws[rng() % ws.size()];
      auto const& z = ws[rng() % ws.size()];
      ++r.checks;
      auto xy = compare(A, H, WordView(x), WordView(y));
      auto yx = compare(A, H, WordView(y), WordView(x));
      bool ok = (xy == Ordering::EQ) == (x == y);
      if (xy == Ordering::LT) ok = ok && yx == Ordering::GT;
      if (xy == Ordering::GT) ok = ok && yx == Ordering::LT;
      auto yz = compare(A, H, WordView(y), WordView(z));
      auto xz = compare(A, H, WordView(x), WordView(z));
      if (xy != Ordering::GT && yz != Ordering::GT)
        ok = ok && xz != Ordering::GT;
      if (!ok) {
        r.pass = false;
        r.detail = x.str() + " / " + y.str() + " / " + z.str();
      }
    }
    out.push_back(r);
  }

  {  // triangle inequality for right words of sums
    SuiteResult r{"triangle"};
    std::mt19937_64 rng(cfg.seed + 1);
    auto mods = audit_detail::sweep_modules<K>(A, cfg.word_len);
    std::vector<std::string> vertices;
    for (auto const& v : A.vertices()) vertices.push_back(v.id);
    for (std::size_t t = 0; t < cfg.triangle_cases; ++t) {
      auto M = direct_sum(mods[rng() % mods.size()], mods[rng() % mods.size()]);
      auto const& vx = vertices[rng() % vertices.size()];
      auto m1 = audit_detail::random_element(M, vx, rng);
      auto m2 = audit_detail::random_element(M, vx, rng);
      if (!m1 || !m2) continue;
      auto sum = linalg::add(m1->coords, m2->coords);
      if (linalg::is_zero_vec(sum)) continue;
      PointedElement<K> m{vx, sum};
      ++r.checks;
      auto v1 = right_word(A, H, M, *m1);
      auto v2 = right_word(A, H, M, *m2);
      auto vm = right_word(A, H, M, m);
      auto c12 = compare(A, H, chain_view(v1), chain_view(v2));
      auto const& vmin = c12 == Ordering::GT ? v2 : v1;
      auto c = compare(A, H, chain_view(vm), chain_view(vmin));
      bool ok = c != Ordering::LT;
      if (c12 != Ordering::EQ) ok = ok && c == Ordering::EQ;
      if (!ok) {
        r.pass = false;
        r.detail = "at sum over " + vx;
      }
    }
    out.push_back(r);
  }

  {  // standard basis elements of string modules are homogeneous
    SuiteResult r{"homogeneous-basis"};
    for (auto const& v : A.vertices()) {
      visit_words(A, v.id, cfg.homog_len, [&](std::vector<Letter> const& ls) {
        auto SM = string_module<K>(A, FiniteWord(A, v.id, ls));
        for (std::size_t node = 0; node < SM.nodes(); ++node) {
          ++r.checks;
          if (!is_homogeneous(A, H, SM.module(), SM.basis_element(node))
                   .homogeneous) {
            r.pass = false;
            r.detail = "node " + std::to_string(node) + " of " +
                       SM.word().str();
          }
        }
      });
    }
    out.push_back(r);
  }

  {  // dividing a homogeneous element shifts its word by one letter
    SuiteResult r{"division"};
    for (auto const& v : A.vertices()) {
      visit_words(A, v.id, cfg.homog_len, [&](std::vector<Letter> const& ls) {
        auto SM = string_module<K>(A, FiniteWord(A, v.id, ls));
        for (std::size_t node = 0; node < SM.nodes(); ++node) {
          auto m = SM.basis_element(node);
          auto vw = right_word(A, H, SM.module(), m);
          if (!std::holds_alternative<FiniteWord>(vw)) continue;
          auto vf = std::get<FiniteWord>(vw);
          if (vf.empty()) continue;
          ++r.checks;
          try {
            auto n = divide(A, H, SM.module(), m, vf[0]);
            bool ok = is_homogeneous(A, H, SM.module(), n).homogeneous;
            if (vf[0].is_direct()) {
              std::vector<Letter> tail(vf.letters().begin() + 1,
                                       vf.letters().end());
              if (!tail.empty()) {
                // the remaining word continues in the chain of its own side
                FiniteWord tw(A, n.vertex, tail);
                auto vn = chain_word(A, H, SM.module(), n,
                                     H.side(n.vertex, tail[0]));
                ok = ok && std::holds_alternative<FiniteWord>(vn) &&
                     std::get<FiniteWord>(vn) == tw;
              }
            }
            if (!ok) {
              r.pass = false;
              r.detail = "divide at node " + std::to_string(node) + " of " +
                         SM.word().str();
            }
          } catch (std::exception const& e) {
            r.pass = false;
            r.detail = e.what();
          }
        }
      });
    }
    out.push_back(r);
  }

  {  // graph map count equals the solver dimension
    SuiteResult r{"hom-oracle"};
    std::vector<FiniteWord> words;
    for (auto const& v : A.vertices()) {
      words.emplace_back(v.id, +1);
      visit_words(A, v.id, cfg.hom_len, [&](std::vector<Letter> const& ls) {
        words.emplace_back(A, v.id, ls);
      });
    }
    for (auto const& u : words)
      for (auto const& w : words) {
        ++r.checks;
        auto Mu = string_module<K>(A, u);
        auto Mw = string_module<K>(A, w);
        auto triples = admissible_triples(A, u, w);
        if (triples.size() != hom_dimension_oracle(Mu.module(), Mw.module())) {
          r.pass = false;
          r.detail = u.str() + " -> " + w.str();
        }
      }
    out.push_back(r);
  }

  return out;
}

inline std::string render_audit_text(std::string const& algebra,
                                     std::vector<SuiteResult> const& results,
                                     AuditConfig const& cfg) {
  std::ostringstream os;
  os << "audit " << algebra << " seed=" << cfg.seed << "\n";
  bool all = true;
  for (auto const& r : results) {
    if (r.skipped) {
      os << "  [skip] " << r.suite << " (" << r.detail << ")\n";
      continue;
    }
    os << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.suite << " ("
       << r.checks << " checks";
    if (!r.pass) os << "; " << r.detail;
    os << ")\n";
    all = all && r.pass;
  }
  os << (all ? "all suites passed" : "audit failed") << "\n";
  return os.str();
}

}  // namespace stralg

#endif
