// Bands, the domesticity decision, and the bridge quiver.
//
// A band is a primitive cyclically valid word containing letters of both
// kinds, normalized to the lexicographically least rotation that starts with
// a direct letter and ends with an inverse one.  A band and its inverse are
// distinct elements of the band set.

#ifndef STRALG_BANDS_HPP_
#define STRALG_BANDS_HPP_

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "automaton.hpp"
#include "words.hpp"

namespace stralg {

class Band {
 public:
  // Normalizes a cyclically valid primitive word.
  Band(AlgebraPresentation const& A, std::vector<Letter> cycle) {
    if (cycle.empty()) throw std::invalid_argument("empty band");
    bool has_direct = false, has_inverse = false;
    for (auto const& l : cycle) (l.is_direct() ? has_direct : has_inverse) = true;
    if (!has_direct || !has_inverse)
      throw std::invalid_argument("a band contains both letter kinds");
    for (std::size_t d = 1; d < cycle.size(); ++d) {
      if (cycle.size() % d != 0) continue;
      bool power = true;
      for (std::size_t i = d; i < cycle.size() && power; ++i)
        if (!(cycle[i] == cycle[i % d])) power = false;
      if (power) throw std::invalid_argument("band is a proper power");
    }
    std::optional<std::vector<Letter>> best;
    for (std::size_t r = 0; r < cycle.size(); ++r) {
      std::vector<Letter> rot(cycle.begin() + r, cycle.end());
      rot.insert(rot.end(), cycle.begin(), cycle.begin() + r);
      if (!rot.front().is_direct() || rot.back().is_direct()) continue;
      if (!best || rot < *best) best = rot;
    }
    if (!best)
      throw std::invalid_argument(
          "band admits no rotation starting direct and ending inverse");
    letters_ = *best;
    word_ = FiniteWord(A, left_vertex(A, letters_.front()), letters_);
    // cyclic validity: the square must be a word
    concat(A, word_, word_);
  }

  std::vector<Letter> const& letters() const { return letters_; }
  FiniteWord const& word() const { return word_; }
  std::size_t size() const { return letters_.size(); }
  std::string const& base_vertex() const { return word_.anchor(); }

  Band inverse(AlgebraPresentation const& A) const {
    std::vector<Letter> inv;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      inv.push_back(it->inverse());
    return Band(A, std::move(inv));
  }

  bool rotation_of(std::vector<Letter> const& other) const {
    if (other.size() != letters_.size()) return false;
    for (std::size_t r = 0; r < other.size(); ++r) {
      bool eq = true;
      for (std::size_t i = 0; i < other.size() && eq; ++i)
        if (!(other[(r + i) % other.size()] == letters_[i])) eq = false;
      if (eq) return true;
    }
    return false;
  }

  friend bool operator==(Band const& a, Band const& b) {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(Band const& a, Band const& b) {
    return a.letters_ <=> b.letters_;
  }

  std::string str() const { return word_.str(); }

 private:
  std::vector<Letter> letters_;
  FiniteWord word_;
};

struct BandSet {
  std::vector<Band> bands;  // sorted, inverses stored separately
  bool truncated = false;   // longer bands exist beyond the length bound

  bool contains(Band const& b) const {
    return std::binary_search(bands.begin(), bands.end(), b);
  }
  /// Number of bands up to rotation and inversion.
  std::size_t count_up_to_inversion(AlgebraPresentation const& A) const {
    std::set<Band> seen;
    std::size_t n = 0;
    for (auto const& b : bands) {
      if (seen.count(b)) continue;
      seen.insert(b);
      seen.insert(b.inverse(A));
      ++n;
    }
    return n;
  }
};

struct DomesticityResult {
  bool domestic;
  std::size_t n = 0;  // bands up to rotation and inversion, when domestic
  // two distinct cycles through a shared state, when not
  std::vector<Letter> witness_a, witness_b;
};

inline DomesticityResult is_domestic(AlgebraPresentation const& A,
                                     WalkAutomaton const& aut) {
  if (auto bad = aut.find_branching_scc()) {
    auto [c1, c2] = aut.two_cycles(*bad);
    return {false, 0, c1, c2};
  }
  std::set<Band> bands;
  for (std::size_t c = 0; c < aut.scc_count(); ++c) {
    auto members = aut.cyclic_scc_states(c);
    if (members.empty()) continue;
    bands.insert(Band(A, aut.scc_cycle(c)));
  }
  BandSet bs{std::vector<Band>(bands.begin(), bands.end()), false};
  return {true, bs.count_up_to_inversion(A), {}, {}};
}

inline DomesticityResult is_domestic(AlgebraPresentation const& A) {
  WalkAutomaton aut(A);
  return is_domestic(A, aut);
}

inline BandSet enumerate_bands(AlgebraPresentation const& A,
                               std::size_t max_len) {
  WalkAutomaton aut(A);
  auto dom = is_domestic(A, aut);
  BandSet out;
  std::set<Band> seen;
  if (dom.domestic) {
    for (std::size_t c = 0; c < aut.scc_count(); ++c) {
      auto members = aut.cyclic_scc_states(c);
      if (members.empty()) continue;
      Band b(A, aut.scc_cycle(c));
      if (b.size() <= max_len)
        seen.insert(b);
      else
        out.truncated = true;
    }
  } else {
    out.truncated = true;  // branching SCCs admit arbitrarily long bands
    aut.visit_closed_walks(max_len, [&](std::vector<Letter> const& cyc) {
      bool has_direct = false, has_inverse = false;
      for (auto const& l : cyc) (l.is_direct() ? has_direct : has_inverse) = true;
      if (!has_direct || !has_inverse) return;
      for (std::size_t d = 1; d < cyc.size(); ++d) {
        if (cyc.size() % d != 0) continue;
        bool power = true;
        for (std::size_t i = d; i < cyc.size() && power; ++i)
          if (!(cyc[i] == cyc[i % d])) power = false;
        if (power) return;
      }
      bool rotatable = false;
      for (std::size_t r = 0; r < cyc.size() && !rotatable; ++r)
        if (cyc[r].is_direct() &&
            !cyc[(r + cyc.size() - 1) % cyc.size()].is_direct())
          rotatable = true;
      if (!rotatable) return;
      seen.insert(Band(A, cyc));
    });
  }
  out.bands.assign(seen.begin(), seen.end());
  return out;
}

// ---------------------------------------------------------------------------
// Bridge quiver: C precedes D when some finite word C u D exists.  The search
// is exact reachability in the walk automaton, so no length bound is needed;
// the witness u returned per cover is shortest, ties broken by letter order.

struct BridgeCover {
  std::size_t from, to;        // indices into the band list
  std::vector<Letter> witness; // shortest u with C u D a word
};

struct BridgeQuiver {
  std::vector<Band> bands;
  std::vector<std::vector<bool>> le;  // reflexive-transitive order
  std::vector<BridgeCover> covers;

  std::string dot(AlgebraPresentation const&) const {
    std::ostringstream os;
    os << "digraph bridge_quiver {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < bands.size(); ++i)
      os << "  b" << i << " [label=\"" << bands[i].str() << "\"];\n";
    for (auto const& c : covers) {
      os << "  b" << c.from << " -> b" << c.to << " [label=\"";
      for (std::size_t i = 0; i < c.witness.size(); ++i)
        os << (i ? " " : "") << c.witness[i].str();
      os << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }
};

class NonDomesticError : public std::runtime_error {
 public:
  explicit NonDomesticError(std::string const& op)
      : std::runtime_error(op + " requires a domestic algebra") {}
};

inline BridgeQuiver bridge_quiver(AlgebraPresentation const& A) {
  WalkAutomaton aut(A);
  auto dom = is_domestic(A, aut);
  if (!dom.domestic) throw NonDomesticError("bridge_quiver");
  auto bs = enumerate_bands(A, SIZE_MAX);

  BridgeQuiver q;
  q.bands = bs.bands;
  std::size_t n = q.bands.size();
  q.le.assign(n, std::vector<bool>(n, false));

  // states from which a given band can be read in full
  auto readable_from = [&](Band const& D) {
    std::vector<bool> ok(aut.size(), false);
    for (std::size_t s = 0; s < aut.size(); ++s)
      if (aut.fold(s, D.letters())) ok[s] = true;
    return ok;
  };

  std::vector<std::vector<bool>> targets;
  targets.reserve(n);
  for (auto const& D : q.bands) targets.push_back(readable_from(D));

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Letter>> witness;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t start = *aut.fold(std::nullopt, q.bands[i].letters());
    // BFS over automaton edges, edges in letter order for deterministic ties
    for (std::size_t j = 0; j < n; ++j) {
      if (targets[j][start]) {
        q.le[i][j] = true;
        witness[{i, j}] = {};
        continue;
      }
      std::map<std::size_t, std::pair<std::size_t, Letter>> parent;
      std::deque<std::size_t> bfs{start};
      parent.emplace(start, std::make_pair(SIZE_MAX, Letter()));
      std::optional<std::size_t> found;
      while (!bfs.empty() && !found) {
        std::size_t at = bfs.front();
        bfs.pop_front();
        for (auto const& e : aut.out(at)) {
          if (parent.count(e.to)) continue;
          parent.emplace(e.to, std::make_pair(at, e.letter));
          if (targets[j][e.to]) {
            found = e.to;
            break;
          }
          bfs.push_back(e.to);
        }
      }
      if (found) {
        q.le[i][j] = true;
        std::vector<Letter> u;
        std::size_t at = *found;
        while (parent.at(at).first != SIZE_MAX) {
          u.push_back(parent.at(at).second);
          at = parent.at(at).first;
        }
        std::reverse(u.begin(), u.end());
        witness[{i, j}] = u;
      }
    }
  }

  // antisymmetry is a theorem for domestic algebras; refuse to go on quietly
  // if the search ever contradicts it
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && q.le[i][j] && q.le[j][i])
        throw std::logic_error("bridge order failed antisymmetry between " +
                               q.bands[i].str() + " and " + q.bands[j].str());

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !q.le[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && q.le[i][k] && q.le[k][j]) cover = false;
      if (cover) q.covers.push_back({i, j, witness.at({i, j})});
    }
  return q;
}

// ---------------------------------------------------------------------------
// Audits of the band combinatorics used throughout: shared inverse-direct
// transitions force rotation equivalence, shared starting arrows force
// equality, and words sharing a band's endpoints are powers of it.

struct AuditFinding {
  std::string check;
  bool pass;
  std::string detail;
};

inline std::vector<AuditFinding> band_facts_audit(AlgebraPresentation const& A,
                                                  std::size_t string_bound = 12) {
  auto dom = is_domestic(A);
  if (!dom.domestic) throw NonDomesticError("band_facts_audit");
  auto bs = enumerate_bands(A, SIZE_MAX);
  std::vector<AuditFinding> out;

  auto transitions = [&](Band const& b) {
    std::set<std::pair<std::string, std::string>> ts;  // inverse a then direct c
    auto const& ls = b.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      Letter const& x = ls[i];
      Letter const& y = ls[(i + 1) % ls.size()];
      if (!x.is_direct() && y.is_direct()) ts.insert({x.arrow, y.arrow});
    }
    return ts;
  };

  {  // (i) shared inverse-direct transition implies rotation equivalent
    bool pass = true;
    std::string detail;
    for (auto const& e : bs.bands)
      for (auto const& f : bs.bands) {
        auto te = transitions(e), tf = transitions(f);
        bool share = std::any_of(te.begin(), te.end(),
                                 [&](auto const& t) { return tf.count(t); });
        if (share && !e.rotation_of(f.letters())) {
          pass = false;
          detail = e.str() + " / " + f.str();
        }
      }
    out.push_back({"shared-transition-implies-rotation", pass, detail});
  }
  {  // (ii) bands sharing a starting arrow coincide
    bool pass = true;
    std::string detail;
    for (auto const& e : bs.bands)
      for (auto const& f : bs.bands) {
        std::set<std::string> se, sf;
        for (std::size_t i = 0; i < e.letters().size(); ++i)
          if (e.letters()[i].is_direct() &&
              !e.letters()[(i + e.size() - 1) % e.size()].is_direct())
            se.insert(e.letters()[i].arrow);
        for (std::size_t i = 0; i < f.letters().size(); ++i)
          if (f.letters()[i].is_direct() &&
              !f.letters()[(i + f.size() - 1) % f.size()].is_direct())
            sf.insert(f.letters()[i].arrow);
        bool share = std::any_of(se.begin(), se.end(),
                                 [&](auto const& s) { return sf.count(s); });
        if (share && !(e == f)) {
          pass = false;
          detail = e.str() + " / " + f.str();
        }
      }
    out.push_back({"shared-start-implies-equal", pass, detail});
  }
  {  // (iii) strings with a band's endpoints are powers of it
    bool pass = true;
    std::string detail;
    for (auto const& e : bs.bands) {
      Letter first = e.letters().front(), last = e.letters().back();
      visit_words(A, e.base_vertex(), string_bound,
                  [&](std::vector<Letter> const& w) {
                    if (!(w.front() == first) || !(w.back() == last)) return;
                    if (w.size() % e.size() != 0) {
                      pass = false;
                      return;
                    }
                    for (std::size_t i = 0; i < w.size(); ++i)
                      if (!(w[i] == e.letters()[i % e.size()])) {
                        pass = false;
                        return;
                      }
                  });
      if (!pass && detail.empty()) detail = "band " + e.str();
    }
    out.push_back({"endpoint-strings-are-powers", pass, detail});
  }
  return out;
}

}  // namespace stralg

#endif
