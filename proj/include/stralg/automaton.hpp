// The walk automaton.  A state remembers the trailing window of the current
// same-direction run, bounded by (max relation length - 1) letters, which is
// exactly the memory needed so that paths in the automaton correspond one to
// one with valid words.  With length-2 relations the states collapse to
// single letters; longer relations (beta^3 over the Gelfand-Ponomarev
// algebra) need the window.

#ifndef STRALG_AUTOMATON_HPP_
#define STRALG_AUTOMATON_HPP_

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "words.hpp"

namespace stralg {

// Incremental validity checker: the trailing window of a growing word.
class TrailingWindow {
 public:
  TrailingWindow(AlgebraPresentation const& A)
      : A_(&A), cap_(std::max<std::size_t>(1, A.max_relation_length() - 1)) {}

  static TrailingWindow of_word(AlgebraPresentation const& A,
                                FiniteWord const& w) {
    TrailingWindow t(A);
    for (auto const& l : w.letters())
      if (!t.push(l)) throw std::logic_error("of_word on invalid word");
    return t;
  }

  bool empty() const { return window_.empty(); }
  Letter const& last() const { return window_.back(); }
  std::vector<Letter> const& window() const { return window_; }

  // Whether l validly extends; on success the window advances.
  bool push(Letter const& l) {
    if (!can_push(l)) return false;
    if (!window_.empty() && window_.back().is_direct() != l.is_direct())
      window_.clear();
    window_.push_back(l);
    if (window_.size() > cap_) window_.erase(window_.begin());
    return true;
  }

  bool can_push(Letter const& l) const {
    if (A_->find_arrow(l.arrow) == nullptr) return false;
    if (!window_.empty()) {
      if (right_vertex(*A_, window_.back()) != left_vertex(*A_, l)) return false;
      if (l == window_.back().inverse()) return false;
    }
    if (window_.empty() || window_.back().is_direct() != l.is_direct())
      return true;
    // a relation factor could complete at l
    std::vector<Letter> run = window_;
    run.push_back(l);
    for (auto const& r : A_->relations()) {
      if (r.size() > run.size()) continue;
      bool direct_hit = l.is_direct(), inverse_hit = !l.is_direct();
      for (std::size_t i = 0; i < r.size(); ++i) {
        Letter const& c = run[run.size() - r.size() + i];
        if (!(c.is_direct() && c.arrow == r[i])) direct_hit = false;
        if (!(!c.is_direct() && c.arrow == r[r.size() - 1 - i]))
          inverse_hit = false;
      }
      if (direct_hit || inverse_hit) return false;
    }
    return true;
  }

  // The vertex at the growing end; only meaningful when nonempty.
  std::string end_vertex() const { return right_vertex(*A_, window_.back()); }

  friend auto operator<=>(TrailingWindow const& a, TrailingWindow const& b) {
    return a.window_ <=> b.window_;
  }
  friend bool operator==(TrailingWindow const& a, TrailingWindow const& b) {
    return a.window_ == b.window_;
  }

 private:
  AlgebraPresentation const* A_;
  std::size_t cap_;
  std::vector<Letter> window_;
};

// Candidate extensions of a walk.  For a nonempty walk there is at most one
// valid direct and one valid inverse extension; for the fresh (empty) walk at
// a vertex the candidates are the entering letters, optionally restricted to
// one side of an H partition.
inline std::vector<Letter> extensions(AlgebraPresentation const& A,
                                      TrailingWindow const& t, Dir dir,
                                      std::string const& fresh_vertex = "",
                                      HPartition const* H = nullptr,
                                      int side = 0) {
  std::vector<Letter> out;
  if (t.empty()) {
    for (auto const& l : entering_letters(A, fresh_vertex)) {
      if (l.dir != dir) continue;
      if (H != nullptr && H->side(fresh_vertex, l) != side) continue;
      out.push_back(l);
    }
    return out;
  }
  for (auto const& a : A.arrows()) {
    Letter l(a.name, dir);
    if (left_vertex(A, l) != t.end_vertex()) continue;
    if (t.can_push(l)) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

class WalkAutomaton {
 public:
  struct Edge {
    std::size_t from, to;
    Letter letter;
  };

  explicit WalkAutomaton(AlgebraPresentation const& A) : A_(&A) {
    // seed with fresh single-letter states and close under transitions
    std::deque<TrailingWindow> queue;
    auto intern = [&](TrailingWindow const& t) -> std::size_t {
      auto it = index_.find(t.window());
      if (it != index_.end()) return it->second;
      std::size_t id = states_.size();
      index_[t.window()] = id;
      states_.push_back(t);
      queue.push_back(t);
      return id;
    };
    for (auto const& a : A.arrows())
      for (Dir d : {Dir::direct, Dir::inverse}) {
        TrailingWindow t(A);
        t.push(Letter(a.name, d));
        intern(t);
      }
    while (!queue.empty()) {
      TrailingWindow t = queue.front();
      queue.pop_front();
      std::size_t from = index_.at(t.window());
      for (auto const& a : A.arrows())
        for (Dir d : {Dir::direct, Dir::inverse}) {
          Letter l(a.name, d);
          if (left_vertex(A, l) != t.end_vertex()) continue;
          if (!t.can_push(l)) continue;
          TrailingWindow next = t;
          next.push(l);
          std::size_t to = intern(next);
          adj_.resize(states_.size());
          radj_.resize(states_.size());
          adj_[from].push_back({from, to, l});
          radj_[to].push_back({from, to, l});
        }
    }
    adj_.resize(states_.size());
    radj_.resize(states_.size());
    for (auto& v : adj_)
      std::sort(v.begin(), v.end(), [](Edge const& a, Edge const& b) {
        return a.letter < b.letter;
      });
    compute_sccs();
  }

  AlgebraPresentation const& algebra() const { return *A_; }
  std::size_t size() const { return states_.size(); }
  TrailingWindow const& state(std::size_t i) const { return states_[i]; }
  Letter const& label(std::size_t i) const {
    return states_[i].window().back();
  }
  std::vector<Edge> const& out(std::size_t i) const { return adj_[i]; }

  std::optional<std::size_t> find_state(std::vector<Letter> const& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Folds a letter sequence from a state (or fresh when no state is given);
  // nullopt when the extension is invalid somewhere.
  std::optional<std::size_t> fold(std::optional<std::size_t> from,
                                  std::vector<Letter> const& letters) const {
    TrailingWindow t = from ? states_[*from] : TrailingWindow(*A_);
    for (auto const& l : letters)
      if (!t.push(l)) return std::nullopt;
    if (t.empty()) return std::nullopt;
    return index_.at(t.window());
  }

  // Letter-level view: the valid two-letter words.
  std::vector<std::pair<Letter, Letter>> valid_pairs() const {
    std::set<std::pair<Letter, Letter>> seen;
    for (auto const& edges : adj_)
      for (auto const& e : edges)
        seen.insert({label(e.from), e.letter});
    return {seen.begin(), seen.end()};
  }

  // --- strongly connected components -------------------------------------

  std::size_t scc_of(std::size_t state) const { return scc_id_[state]; }
  std::size_t scc_count() const { return scc_sizes_.size(); }

  // States of an SCC that lies on a cycle (size > 1, or a self loop).
  std::vector<std::size_t> cyclic_scc_states(std::size_t scc) const {
    std::vector<std::size_t> members;
    for (std::size_t s = 0; s < states_.size(); ++s)
      if (scc_id_[s] == scc) members.push_back(s);
    if (members.size() == 1) {
      bool self = false;
      for (auto const& e : adj_[members[0]])
        if (e.to == members[0]) self = true;
      if (!self) return {};
    }
    return members;
  }

  // Whether each cyclic SCC is a single simple cycle; offending SCC returned
  // otherwise.
  std::optional<std::size_t> find_branching_scc() const {
    for (std::size_t c = 0; c < scc_count(); ++c) {
      auto members = cyclic_scc_states(c);
      if (members.empty()) continue;
      for (auto s : members) {
        std::size_t internal = 0;
        for (auto const& e : adj_[s])
          if (scc_id_[e.to] == c) ++internal;
        if (internal > 1) return c;
      }
    }
    return std::nullopt;
  }

  // The unique cycle through a cyclic SCC of a domestic algebra, as a letter
  // sequence starting at the member with the least state window.
  std::vector<Letter> scc_cycle(std::size_t scc) const {
    auto members = cyclic_scc_states(scc);
    std::size_t start = *std::min_element(
        members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
          return states_[a].window() < states_[b].window();
        });
    std::vector<Letter> cycle;
    std::size_t at = start;
    do {
      Edge const* within = nullptr;
      for (auto const& e : adj_[at])
        if (scc_id_[e.to] == scc) {
          within = &e;
          break;
        }
      cycle.push_back(within->letter);
      at = within->to;
    } while (at != start);
    return cycle;
  }

  // Two distinct simple cycles through a shared state of a branching SCC.
  std::pair<std::vector<Letter>, std::vector<Letter>> two_cycles(
      std::size_t scc) const {
    auto members = cyclic_scc_states(scc);
    for (auto s : members) {
      std::vector<Edge const*> internal;
      for (auto const& e : adj_[s])
        if (scc_id_[e.to] == scc) internal.push_back(&e);
      if (internal.size() < 2) continue;
      auto close = [&](Edge const* first) {
        // shortest path e.to -> s inside the SCC
        std::map<std::size_t, Edge const*> parent;
        std::deque<std::size_t> q{first->to};
        parent[first->to] = nullptr;
        while (!q.empty()) {
          std::size_t at = q.front();
          q.pop_front();
          if (at == s) break;
          for (auto const& e : adj_[at]) {
            if (scc_id_[e.to] != scc || parent.count(e.to)) continue;
            parent[e.to] = &e;
            q.push_back(e.to);
          }
        }
        std::vector<Letter> cyc;
        std::size_t at = s;
        while (parent.at(at) != nullptr) {
          cyc.push_back(parent.at(at)->letter);
          at = parent.at(at)->from;
        }
        cyc.push_back(first->letter);
        std::reverse(cyc.begin(), cyc.end());
        return cyc;
      };
      return {close(internal[0]), close(internal[1])};
    }
    throw std::logic_error("two_cycles on a non-branching SCC");
  }

  // All closed walks of length <= max_len, reported as cyclic letter words
  // via the callback (may repeat rotations; caller normalizes).
  void visit_closed_walks(
      std::size_t max_len,
      std::function<void(std::vector<Letter> const&)> const& fn) const {
    std::vector<Letter> walk;
    for (std::size_t s = 0; s < states_.size(); ++s) {
      std::function<void(std::size_t)> dfs = [&](std::size_t at) {
        for (auto const& e : adj_[at]) {
          walk.push_back(e.letter);
          if (e.to == s && is_cyclically_valid(walk)) fn(walk);
          if (walk.size() < max_len) dfs(e.to);
          walk.pop_back();
        }
      };
      dfs(s);
    }
  }

  // Whether the closed walk, repeated, is a valid word.
  bool is_cyclically_valid(std::vector<Letter> const& cycle) const {
    std::size_t m = A_->max_relation_length();
    std::size_t copies = (2 * m + 2) / cycle.size() + 2;
    std::vector<Letter> rep;
    for (std::size_t i = 0; i < copies; ++i)
      rep.insert(rep.end(), cycle.begin(), cycle.end());
    return !check_letter_run(*A_, rep).has_value();
  }

 private:
  void compute_sccs() {
    // Tarjan, iterative
    std::size_t n = states_.size();
    scc_id_.assign(n, SIZE_MAX);
    std::vector<std::size_t> low(n), disc(n, SIZE_MAX), stack;
    std::vector<bool> on_stack(n, false);
    std::size_t timer = 0;
    struct Frame {
      std::size_t v, edge;
    };
    for (std::size_t root = 0; root < n; ++root) {
      if (disc[root] != SIZE_MAX) continue;
      std::vector<Frame> frames{{root, 0}};
      disc[root] = low[root] = timer++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!frames.empty()) {
        auto& [v, ei] = frames.back();
        if (ei < adj_[v].size()) {
          std::size_t w = adj_[v][ei++].to;
          if (disc[w] == SIZE_MAX) {
            disc[w] = low[w] = timer++;
            stack.push_back(w);
            on_stack[w] = true;
            frames.push_back({w, 0});
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], disc[w]);
          }
        } else {
          if (low[v] == disc[v]) {
            std::size_t id = scc_sizes_.size();
            std::size_t count = 0;
            while (true) {
              std::size_t w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              scc_id_[w] = id;
              ++count;
              if (w == v) break;
            }
            scc_sizes_.push_back(count);
          }
          frames.pop_back();
          if (!frames.empty())
            low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
      }
    }
  }

  AlgebraPresentation const* A_;
  std::vector<TrailingWindow> states_;
  std::map<std::vector<Letter>, std::size_t> index_;
  std::vector<std::vector<Edge>> adj_, radj_;
  std::vector<std::size_t> scc_id_, scc_sizes_;
};

// Depth-first enumeration of all valid finite words anchored at a vertex.
// The callback receives the letter sequence; empty words are not reported.
inline void visit_words(AlgebraPresentation const& A, std::string const& anchor,
                        std::size_t max_len,
                        std::function<void(std::vector<Letter> const&)> const& fn) {
  std::vector<Letter> walk;
  TrailingWindow t(A);
  std::function<void(TrailingWindow const&)> dfs =
      [&](TrailingWindow const& at) {
        if (walk.size() >= max_len) return;
        std::vector<Letter> cands;
        if (at.empty()) {
          for (auto const& a : A.arrows())
            for (Dir d : {Dir::direct, Dir::inverse}) {
              Letter l(a.name, d);
              if (left_vertex(A, l) == anchor) cands.push_back(l);
            }
          std::sort(cands.begin(), cands.end());
        } else {
          for (Dir d : {Dir::direct, Dir::inverse})
            for (auto const& l : extensions(A, at, d)) cands.push_back(l);
          std::sort(cands.begin(), cands.end());
        }
        for (auto const& l : cands) {
          TrailingWindow next = at;
          if (!next.push(l)) continue;
          walk.push_back(l);
          fn(walk);
          dfs(next);
          walk.pop_back();
        }
      };
  dfs(t);
}

}  // namespace stralg

#endif
