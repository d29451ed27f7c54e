// Words of module elements.  The right word v(m) is the supremum of the
// chain words D with m in the divisibility subspace of D; it is computed by
// a forced greedy walk that carries the affine set of witnesses, with a
// certificate step that recognizes periodic tails exactly:
//
//   * the walk extends by the unique direct letter whenever the witness set
//     meets the arrow's image (this is forced), stops when the closing-kernel
//     test succeeds, and otherwise descends by the unique inverse letter;
//   * at a cut (inverse letter followed by a direct one) whose letter history
//     ends with two copies of a block Q, the claim  v(m) = W Q^inf  is decided
//     by finitely many subspace chains: a descending telescope for the cut
//     formulas (they stabilize because the closing arrow kills the block),
//     and ascending families excluding every stop or upward divergence along
//     the periodic tail.  Orbits of the inner subspace recursions are finite
//     for modules assembled from string and band pieces; a generous step cap
//     guards the exotic remainder.
//
// The left word u(m) is the same computation on the other side of the H
// partition.  Homogeneity testing and division of homogeneous elements by a
// letter build directly on these subspace families.

#ifndef STRALG_WORDOF_HPP_
#define STRALG_WORDOF_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modules.hpp"

namespace stralg {

using ChainWord = std::variant<FiniteWord, OneSidedWord>;

inline WordView chain_view(ChainWord const& w) {
  if (std::holds_alternative<FiniteWord>(w))
    return WordView(std::get<FiniteWord>(w));
  return WordView(std::get<OneSidedWord>(w));
}

inline std::string chain_str(ChainWord const& w) { return chain_view(w).str(); }

namespace detail {

// Letters of an infinite word p q^inf around the tail: index access.
inline Letter tail_letter(OneSidedWord const& w, std::size_t i) {
  return w.letter_at(i);
}

template <typename K>
Subspace<K> fold_letters(FDModule<K> const& M, std::vector<Letter> const& ls,
                         Subspace<K> inner) {
  for (std::size_t i = ls.size(); i-- > 0;)
    inner = apply_letter(M, ls[i], inner);
  return inner;
}

// Inner subspace orbit of Z -> Q(Z); returns the list up to the first
// repetition (preperiod + one full period).  Empty on failure to close
// within the cap.
template <typename K>
std::optional<std::vector<Subspace<K>>> subspace_orbit(
    FDModule<K> const& M, std::vector<Letter> const& Q, Subspace<K> z0,
    std::size_t cap) {
  std::vector<Subspace<K>> seen{std::move(z0)};
  for (std::size_t k = 0; k < cap; ++k) {
    Subspace<K> next = fold_letters(M, Q, seen.back());
    for (auto const& old : seen)
      if (old == next) return seen;
    seen.push_back(std::move(next));
  }
  return std::nullopt;
}

// Maximal all-inverse descent from a window.
inline std::vector<Letter> inverse_descent(AlgebraPresentation const& A,
                                           TrailingWindow t) {
  std::vector<Letter> out;
  while (true) {
    auto exts = extensions(A, t, Dir::inverse);
    if (exts.empty()) return out;
    if (exts.size() > 1)
      throw std::logic_error("multiple inverse extensions during descent");
    out.push_back(exts[0]);
    t.push(exts[0]);
    if (out.size() > 4 * (A.arrows().size() + 1) * A.max_relation_length())
      throw std::logic_error("unbounded inverse descent; validation hole");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subspace of elements whose side word is at least the infinite word w:
// the stable value of the descending telescope over the cut formulas.

template <typename K>
Subspace<K> div_subspace_infinite(AlgebraPresentation const& A,
                                  HPartition const& H, FDModule<K> const& M,
                                  OneSidedWord const& w) {
  (void)H;
  std::size_t p = w.prefix().size(), q = w.period().size();
  // first cut at or after the tail start
  std::optional<std::size_t> cut;
  for (std::size_t c = std::max<std::size_t>(p, 1); c < p + 2 * q + 1; ++c)
    if (!w.letter_at(c - 1).is_direct() && w.letter_at(c).is_direct()) {
      cut = c;
      break;
    }
  if (!cut) throw std::logic_error("periodic tail without a cut");
  std::vector<Letter> head, block;
  for (std::size_t i = 0; i < *cut; ++i) head.push_back(w.letter_at(i));
  for (std::size_t i = 0; i < q; ++i) block.push_back(w.letter_at(*cut + i));

  TrailingWindow t(A);
  for (auto const& l : head) t.push(l);
  auto closing = extensions(A, t, Dir::inverse);
  std::string end = t.end_vertex();
  Subspace<K> Y = closing.empty()
                      ? Subspace<K>::full(M.dim(end))
                      : linalg::kernel(M.action(closing[0].arrow));
  while (true) {
    Subspace<K> next = detail::fold_letters(M, block, Y);
    if (!Y.contains_subspace(next))
      throw std::logic_error("cut telescope failed to descend");
    if (next == Y) break;
    Y = std::move(next);
  }
  return detail::fold_letters(M, head, Y);
}

// ---------------------------------------------------------------------------

template <typename K>
std::optional<std::vector<K>> element_in(Subspace<K> const& s,
                                         std::vector<K> const& v) {
  return s.contains(v) ? std::optional<std::vector<K>>(v) : std::nullopt;
}

template <typename K>
ChainWord chain_word(AlgebraPresentation const& A, HPartition const& H,
                     FDModule<K> const& M, PointedElement<K> const& m,
                     int side) {
  if (m.is_zero()) throw std::invalid_argument("zero element has no word");
  std::string const S = m.vertex;
  if (m.coords.size() != M.dim(S))
    throw std::invalid_argument("coordinate length mismatch");

  std::vector<Letter> word;
  TrailingWindow t(A);
  AffineSet<K> wit = AffineSet<K>::single_point(m.coords);
  std::string at = S;
  std::size_t const orbit_cap = M.total_dim() + 6;
  std::size_t const cap =
      512 + 32 * M.total_dim() * (2 * A.arrows().size() + 2);

  auto candidate = [&](Dir d) -> std::optional<Letter> {
    auto v = extensions(A, t, d, at, t.empty() ? &H : nullptr, side);
    if (v.empty()) return std::nullopt;
    if (v.size() > 1)
      throw std::logic_error("extension not unique; not a string algebra");
    return v[0];
  };

  auto finish_finite = [&]() -> ChainWord {
    if (word.empty()) return FiniteWord(S, side);
    return FiniteWord(A, S, word);
  };

  // Attempts to certify  word of m = W Q^inf  for the block Q of length T
  // ending the current letter history.
  auto certify = [&](std::size_t T) -> bool {
    std::size_t n = word.size();
    std::vector<Letter> Q(word.begin() + (n - T), word.end());
    if (!Q.front().is_direct() || Q.back().is_direct()) return false;
    for (std::size_t i = 0; i < T; ++i)
      if (!(word[n - 2 * T + i] == Q[i])) return false;
    {  // Q must be repeatable from here
      TrailingWindow t2 = t;
      for (auto const& l : Q)
        if (!t2.push(l)) return false;
      if (t2.window() != t.window()) return false;
    }
    // (1) descending telescope for the cut formulas: v(m) >= W Q^inf
    auto closing = extensions(A, t, Dir::inverse);
    Subspace<K> Y = closing.empty()
                        ? Subspace<K>::full(M.dim(at))
                        : linalg::kernel(M.action(closing[0].arrow));
    while (true) {
      Subspace<K> next = detail::fold_letters(M, Q, Y);
      if (!Y.contains_subspace(next)) return false;
      if (next == Y) break;
      Y = std::move(next);
    }
    if (!detail::fold_letters(M, word, Y).contains(m.coords)) return false;
    // (2) exclude every stop and upward divergence along the tail
    TrailingWindow walk = t;
    for (std::size_t j = 0; j < T; ++j) {
      Letter const& pat = Q[j];
      if (!pat.is_direct()) {
        std::vector<Letter> R(Q.begin(), Q.begin() + j);
        // stop at this position: closing arrow is the pattern letter itself
        Subspace<K> z0 = detail::fold_letters(
            M, R, linalg::kernel(M.action(pat.arrow)));
        auto orbit = detail::subspace_orbit(M, Q, std::move(z0), orbit_cap);
        if (!orbit) return false;
        for (auto const& z : *orbit)
          if (detail::fold_letters(M, word, z).contains(m.coords)) return false;
        // upward divergence: the other, direct, extension
        auto alt = extensions(A, walk, Dir::direct);
        if (!alt.empty()) {
          TrailingWindow w2 = walk;
          w2.push(alt[0]);
          auto below = detail::inverse_descent(A, w2);
          std::vector<Letter> E = R;
          E.push_back(alt[0]);
          E.insert(E.end(), below.begin(), below.end());
          std::string e_end = w2.end_vertex();
          for (auto const& l : below) e_end = right_vertex(A, l);
          Subspace<K> d0 = detail::fold_letters(
              M, E, Subspace<K>::full(M.dim(e_end)));
          auto dorbit = detail::subspace_orbit(M, Q, std::move(d0), orbit_cap);
          if (!dorbit) return false;
          for (auto const& z : *dorbit)
            if (detail::fold_letters(M, word, z).contains(m.coords))
              return false;
        }
      }
      walk.push(pat);
    }
    return true;
  };

  while (true) {
    if (word.size() > cap)
      throw std::logic_error(
          "word-of computation failed to stabilize; please report");
    if (!word.empty() && !word.back().is_direct()) {
      for (std::size_t T = 2; 2 * T <= word.size(); ++T) {
        if (word.size() < 2 * T) break;
        if (!(word[word.size() - T] == word[word.size() - 2 * T])) continue;
        if (certify(T)) {
          FiniteWord prefix(A, S, word);
          std::vector<Letter> Q(word.end() - T, word.end());
          FiniteWord period(A, left_vertex(A, Q.front()), Q);
          return OneSidedWord(A, prefix, period);
        }
      }
    }
    if (auto alpha = candidate(Dir::direct)) {
      auto pre = linalg::affine_preimage(M.action(alpha->arrow), wit);
      if (!pre.empty()) {
        word.push_back(*alpha);
        t.push(*alpha);
        at = right_vertex(A, *alpha);
        wit = std::move(pre);
        continue;
      }
    }
    auto gamma = candidate(Dir::inverse);
    if (!gamma) return finish_finite();
    if (wit.meets(linalg::kernel(M.action(gamma->arrow))))
      return finish_finite();
    word.push_back(*gamma);
    t.push(*gamma);
    at = right_vertex(A, *gamma);
    wit = linalg::affine_image(M.action(gamma->arrow), wit);
  }
}

template <typename K>
ChainWord right_word(AlgebraPresentation const& A, HPartition const& H,
                     FDModule<K> const& M, PointedElement<K> const& m) {
  return chain_word(A, H, M, m, +1);
}

template <typename K>
ChainWord left_word(AlgebraPresentation const& A, HPartition const& H,
                    FDModule<K> const& M, PointedElement<K> const& m) {
  return chain_word(A, H, M, m, -1);
}

template <typename K>
TwoSidedWord word_of(AlgebraPresentation const& A, HPartition const& H,
                     FDModule<K> const& M, PointedElement<K> const& m) {
  auto u = left_word(A, H, M, m);
  auto v = right_word(A, H, M, m);
  auto lift = [](ChainWord&& w) -> TwoSidedWord::Half {
    if (std::holds_alternative<FiniteWord>(w))
      return TwoSidedWord::Half(std::get<FiniteWord>(std::move(w)));
    return TwoSidedWord::Half(std::get<OneSidedWord>(std::move(w)));
  };
  return TwoSidedWord(A, H, lift(std::move(u)), lift(std::move(v)));
}

// ---------------------------------------------------------------------------
// Homogeneity.  An element fails to be homogeneous exactly when it lies in
// the sum of a subspace forcing the left word above u(m) and one forcing the
// right word above v(m); the candidate subspaces are indexed by the possible
// divergence positions, with saturation along periodic tails.

namespace detail {

template <typename K>
std::vector<Subspace<K>> exceed_subspaces(AlgebraPresentation const& A,
                                          HPartition const& H,
                                          FDModule<K> const& M,
                                          std::string const& S, int side,
                                          ChainWord const& w) {
  std::vector<Subspace<K>> out;
  std::size_t orbit_cap = M.total_dim() + 6;
  auto stop_subspace = [&](std::vector<Letter> const& prefix,
                           Letter const& next_inverse) {
    return fold_letters(M, prefix,
                        linalg::kernel(M.action(next_inverse.arrow)));
  };
  if (std::holds_alternative<FiniteWord>(w)) {
    auto const& f = std::get<FiniteWord>(w);
    std::vector<Letter> prefix;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!f[i].is_direct()) out.push_back(stop_subspace(prefix, f[i]));
      prefix.push_back(f[i]);
    }
    // extension above the end of a finite word
    std::optional<Letter> alpha;
    if (f.empty()) {
      alpha = H.letter_on_side(S, side, Dir::direct);
    } else {
      auto t = TrailingWindow::of_word(A, f);
      auto exts = extensions(A, t, Dir::direct);
      if (!exts.empty()) alpha = exts[0];
    }
    if (alpha) {
      TrailingWindow t = f.empty() ? TrailingWindow(A)
                                   : TrailingWindow::of_word(A, f);
      t.push(*alpha);
      auto below = inverse_descent(A, t);
      std::vector<Letter> E = f.letters();
      E.push_back(*alpha);
      E.insert(E.end(), below.begin(), below.end());
      std::string end = S;
      for (auto const& l : E) end = right_vertex(A, l);
      out.push_back(fold_letters(M, E, Subspace<K>::full(M.dim(end))));
    }
  } else {
    auto const& os = std::get<OneSidedWord>(w);
    std::vector<Letter> prefix = os.prefix().letters();
    std::vector<Letter> block = os.period().letters();
    // divergences inside the prefix
    std::vector<Letter> head;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!prefix[i].is_direct()) out.push_back(stop_subspace(head, prefix[i]));
      head.push_back(prefix[i]);
    }
    // divergences along the tail, saturated over the inner orbit
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (block[j].is_direct()) continue;
      std::vector<Letter> R(block.begin(), block.begin() + j);
      Subspace<K> z0 =
          fold_letters(M, R, linalg::kernel(M.action(block[j].arrow)));
      auto orbit = subspace_orbit(M, block, std::move(z0), orbit_cap);
      if (!orbit)
        throw std::logic_error("homogeneity saturation failed to close");
      for (auto const& z : *orbit)
        out.push_back(fold_letters(M, prefix, z));
    }
  }
  return out;
}

}  // namespace detail

template <typename K>
struct HomogeneityResult {
  bool homogeneous;
  std::optional<PointedElement<K>> witness;  // x with u(x) > u, v(m-x) > v
};

template <typename K>
HomogeneityResult<K> is_homogeneous(AlgebraPresentation const& A,
                                    HPartition const& H, FDModule<K> const& M,
                                    PointedElement<K> const& m) {
  if (m.is_zero()) throw std::invalid_argument("zero element");
  auto u = left_word(A, H, M, m);
  auto v = right_word(A, H, M, m);
  auto CS = detail::exceed_subspaces(A, H, M, m.vertex, -1, u);
  auto DS = detail::exceed_subspaces(A, H, M, m.vertex, +1, v);
  std::size_t n = M.dim(m.vertex);
  for (auto const& c : CS)
    for (auto const& d : DS) {
      if (!(c + d).contains(m.coords)) continue;
      // split m = x + y with x in c, y in d
      Matrix<K> sys(n, c.dim() + d.dim());
      for (std::size_t j = 0; j < c.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i) sys(i, j) = c.basis()[j][i];
      for (std::size_t j = 0; j < d.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i)
          sys(i, c.dim() + j) = d.basis()[j][i];
      auto sol = linalg::solve(sys, m.coords);
      if (!sol) throw std::logic_error("sum membership without a splitting");
      std::vector<K> x(n, K(0));
      for (std::size_t j = 0; j < c.dim(); ++j)
        if ((*sol)[j] != K(0))
          x = linalg::add(x, linalg::scale(c.basis()[j], (*sol)[j]));
      return {false, PointedElement<K>{m.vertex, std::move(x)}};
    }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Division of a homogeneous element by the leading letter of its right word.

template <typename K>
PointedElement<K> divide(AlgebraPresentation const& A, HPartition const& H,
                         FDModule<K> const& M, PointedElement<K> const& m,
                         Letter const& l) {
  auto v = right_word(A, H, M, m);
  WordView vv = chain_view(v);
  if (vv.empty() || !(vv.at(0) == l))
    throw std::invalid_argument("right word does not start with " + l.str());
  if (!l.is_direct()) {
    // n = b m
    auto n = M.action(l.arrow).apply(m.coords);
    std::string tv = A.arrow(l.arrow).target;
    if (linalg::is_zero_vec(n))
      throw std::logic_error("division by an inverse letter hit zero");
    return {tv, std::move(n)};
  }
  // n with a n = m and v(n) = v', the tail of v
  std::string T = right_vertex(A, l);
  AffineSet<K> wit = linalg::affine_preimage(
      M.action(l.arrow), AffineSet<K>::single_point(m.coords));
  if (wit.empty())
    throw std::logic_error("element not divisible by its own leading letter");
  Subspace<K> constraint(0);
  if (vv.infinite()) {
    auto const& os = *vv.one_sided();
    // drop the first letter and re-canonicalize
    std::vector<Letter> p = os.prefix().letters();
    FiniteWord prefix = [&]() {
      if (!p.empty()) {
        std::vector<Letter> rest(p.begin() + 1, p.end());
        return rest.empty() ? FiniteWord(T, +1) : FiniteWord(A, T, rest);
      }
      // purely periodic: rotate the period
      return FiniteWord(T, +1);
    }();
    FiniteWord period = [&]() {
      if (!p.empty()) return os.period();
      std::vector<Letter> rot(os.period().letters().begin() + 1,
                              os.period().letters().end());
      rot.push_back(os.period()[0]);
      return FiniteWord(A, T, rot);
    }();
    OneSidedWord vp(A, prefix, period);
    constraint = div_subspace_infinite(A, H, M, vp);
  } else {
    auto const& f = *vv.finite();
    std::vector<Letter> rest(f.letters().begin() + 1, f.letters().end());
    // the empty tail lives in the chain opposite the one of l^-1 u
    if (rest.empty()) {
      int sprime = -H.side(T, l.inverse());
      constraint = div_subspace(A, H, M, FiniteWord(T, sprime));
    } else {
      constraint = div_subspace(A, H, M, FiniteWord(A, T, rest));
    }
  }
  auto point = wit.meet_point(constraint);
  if (!point)
    throw std::logic_error(
        "no witness with the predicted tail word; division lemma violated");
  return {T, std::move(*point)};
}

}  // namespace stralg

#endif
