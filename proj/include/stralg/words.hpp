// Letters, finite and eventually periodic one-sided words, two-sided words,
// the H(+1)/H(-1) partition of letters entering a vertex, and the total order
// on each chain.
//
// Orientation conventions (fixed by the drawing rule "direct arrows from the
// upper right to the lower left"):  reading a word left to right, a direct
// letter a at position i acts by a . x_i = x_{i-1}, an inverse letter b^-1
// acts by b . x_{i-1} = x_i.  Hence the left node of a direct letter is the
// arrow's target and its right node is the arrow's source; for an inverse
// letter it is the other way round.  Consecutive direct letters read left to
// right therefore spell a path in written (right-to-left composition) order,
// which is how relations are stored.

#ifndef STRALG_WORDS_HPP_
#define STRALG_WORDS_HPP_

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "presentation.hpp"

namespace stralg {

enum class Dir { direct, inverse };

struct Letter {
  std::string arrow;
  Dir dir = Dir::direct;

  Letter() = default;
  Letter(std::string a, Dir d) : arrow(std::move(a)), dir(d) {}

  Letter inverse() const {
    return Letter(arrow, dir == Dir::direct ? Dir::inverse : Dir::direct);
  }
  bool is_direct() const { return dir == Dir::direct; }

  friend bool operator==(Letter const&, Letter const&) = default;
  friend auto operator<=>(Letter const& a, Letter const& b) {
    if (auto c = a.arrow <=> b.arrow; c != 0) return c;
    return static_cast<int>(a.dir) <=> static_cast<int>(b.dir);
  }

  std::string str() const { return arrow + (is_direct() ? "" : "^-1"); }
};

inline std::string left_vertex(AlgebraPresentation const& A, Letter const& l) {
  auto const& a = A.arrow(l.arrow);
  return l.is_direct() ? a.target : a.source;
}
inline std::string right_vertex(AlgebraPresentation const& A, Letter const& l) {
  auto const& a = A.arrow(l.arrow);
  return l.is_direct() ? a.source : a.target;
}

class WordError : public std::runtime_error {
 public:
  WordError(std::size_t position, std::string const& reason)
      : std::runtime_error("position " + std::to_string(position) + ": " +
                           reason),
        position(position),
        reason(reason) {}
  std::size_t position;
  std::string reason;
};

// First violation in a letter sequence, if any.  `start` offsets reported
// positions (used when checking junction windows of longer words).
inline std::optional<WordError> check_letter_run(
    AlgebraPresentation const& A, std::vector<Letter> const& w,
    std::size_t start = 0) {
  for (auto const& l : w)
    if (A.find_arrow(l.arrow) == nullptr)
      return WordError(start, "unknown arrow " + l.arrow);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (right_vertex(A, w[i]) != left_vertex(A, w[i + 1]))
      return WordError(start + i + 1,
                       "non-composable pair " + w[i].str() + " " + w[i + 1].str());
    if (w[i + 1] == w[i].inverse())
      return WordError(start + i + 1, "cancellation at " + w[i].str() + " " +
                                          w[i + 1].str());
  }
  for (auto const& r : A.relations()) {
    if (r.size() > w.size()) continue;
    for (std::size_t off = 0; off + r.size() <= w.size(); ++off) {
      bool direct_hit = true, inverse_hit = true;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(w[off + i].is_direct() && w[off + i].arrow == r[i]))
          direct_hit = false;
        if (!(!w[off + i].is_direct() &&
              w[off + i].arrow == r[r.size() - 1 - i]))
          inverse_hit = false;
      }
      if (direct_hit)
        return WordError(start + off, "relation met");
      if (inverse_hit)
        return WordError(start + off, "inverse relation met");
    }
  }
  return std::nullopt;
}

// A finite word anchored at its left endpoint.  Empty words carry a sign, so
// 1_{S,+1} and 1_{S,-1} are distinct values.
class FiniteWord {
 public:
  FiniteWord() = default;
  FiniteWord(std::string anchor, int sign)
      : anchor_(std::move(anchor)), sign_(sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  }
  FiniteWord(AlgebraPresentation const& A, std::string anchor,
             std::vector<Letter> letters, int sign = 1)
      : anchor_(std::move(anchor)), letters_(std::move(letters)), sign_(sign) {
    if (!letters_.empty() && left_vertex(A, letters_[0]) != anchor_)
      throw WordError(0, "anchor mismatch: word starts at " +
                             left_vertex(A, letters_[0]));
    if (auto err = check_letter_run(A, letters_)) throw *err;
  }

  std::string const& anchor() const { return anchor_; }
  std::vector<Letter> const& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  int sign() const { return sign_; }
  Letter const& operator[](std::size_t i) const { return letters_[i]; }

  std::string end_vertex(AlgebraPresentation const& A) const {
    return letters_.empty() ? anchor_ : right_vertex(A, letters_.back());
  }
  std::string vertex_at(AlgebraPresentation const& A, std::size_t node) const {
    return node == 0 ? anchor_ : right_vertex(A, letters_[node - 1]);
  }

  friend bool operator==(FiniteWord const& a, FiniteWord const& b) {
    if (a.anchor_ != b.anchor_ || a.letters_ != b.letters_) return false;
    return !a.letters_.empty() || a.sign_ == b.sign_;
  }
  friend auto operator<=>(FiniteWord const& a, FiniteWord const& b) {
    if (auto c = a.anchor_ <=> b.anchor_; c != 0) return c;
    if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
    if (a.letters_.empty()) return a.sign_ <=> b.sign_;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (letters_.empty())
      return std::string("1_{") + anchor_ + "," + (sign_ > 0 ? "+1" : "-1") + "}";
    std::string out;
    for (auto const& l : letters_) {
      if (!out.empty()) out += ' ';
      out += l.str();
    }
    return out;
  }

 private:
  std::string anchor_;
  std::vector<Letter> letters_;
  int sign_ = 1;
};

inline FiniteWord invert(AlgebraPresentation const& A, FiniteWord const& w) {
  if (w.empty()) return FiniteWord(w.anchor(), -w.sign());
  std::vector<Letter> rev;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    rev.push_back(it->inverse());
  return FiniteWord(A, w.end_vertex(A), std::move(rev));
}

inline FiniteWord concat(AlgebraPresentation const& A, FiniteWord const& w1,
                         FiniteWord const& w2) {
  if (w1.end_vertex(A) != w2.anchor())
    throw WordError(w1.size(), "junction vertex mismatch");
  if (w1.empty()) return w2.empty() ? w1 : w2;
  if (w2.empty()) return w1;
  std::vector<Letter> joined = w1.letters();
  joined.insert(joined.end(), w2.letters().begin(), w2.letters().end());
  // only the window around the junction needs rechecking
  std::size_t m = A.max_relation_length();
  std::size_t lo = w1.size() > m ? w1.size() - m : 0;
  std::size_t hi = std::min(joined.size(), w1.size() + m);
  std::vector<Letter> window(joined.begin() + lo, joined.begin() + hi);
  if (auto err = check_letter_run(A, window, lo))
    throw WordError(err->position, "invalid junction: " + err->reason);
  return FiniteWord(A, w1.anchor(), std::move(joined));
}

// Parses space separated letter tokens ("a b^-1 g").
inline std::vector<Letter> parse_letters(std::string const& text) {
  std::vector<Letter> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1")
      out.emplace_back(tok.substr(0, tok.size() - 3), Dir::inverse);
    else
      out.emplace_back(tok, Dir::direct);
  }
  return out;
}

inline FiniteWord make_word(AlgebraPresentation const& A,
                            std::string const& anchor,
                            std::string const& letter_tokens, int sign = 1) {
  return FiniteWord(A, anchor, parse_letters(letter_tokens), sign);
}

// ---------------------------------------------------------------------------
// One-sided eventually periodic words: prefix . period^infinity, stored in
// canonical form (primitive period, shortest prefix).

class OneSidedWord {
 public:
  OneSidedWord(AlgebraPresentation const& A, FiniteWord prefix,
               FiniteWord period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("empty period");
    if (prefix_.end_vertex(A) != period_.anchor())
      throw WordError(prefix_.size(), "prefix/period junction vertex mismatch");
    canonicalize(A);
    validate(A);
  }

  FiniteWord const& prefix() const { return prefix_; }
  FiniteWord const& period() const { return period_; }
  std::string const& anchor() const { return prefix_.anchor(); }

  Letter const& letter_at(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return period_[(i - prefix_.size()) % period_.size()];
  }

  bool purely_periodic() const { return prefix_.empty(); }

  // prefix . period^n as a finite word
  FiniteWord truncate(AlgebraPresentation const& A, std::size_t n) const {
    std::vector<Letter> ls = prefix_.letters();
    for (std::size_t k = 0; k < n; ++k)
      ls.insert(ls.end(), period_.letters().begin(), period_.letters().end());
    return FiniteWord(A, anchor(), std::move(ls));
  }

  friend bool operator==(OneSidedWord const& a, OneSidedWord const& b) {
    return a.prefix_ == b.prefix_ && a.period_ == b.period_;
  }
  friend auto operator<=>(OneSidedWord const& a, OneSidedWord const& b) {
    if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
    return a.period_ <=> b.period_;
  }

  std::string str() const {
    std::string out;
    if (!prefix_.empty()) out = prefix_.str() + " | ";
    else out = "1_{" + anchor() + "} | ";
    return out + "(" + period_.str() + ")^inf";
  }

 private:
  void canonicalize(AlgebraPresentation const& A) {
    // primitive period
    std::size_t n = period_.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      bool power = true;
      for (std::size_t i = d; i < n && power; ++i)
        if (!(period_[i] == period_[i % d])) power = false;
      if (power) {
        std::vector<Letter> head(period_.letters().begin(),
                                 period_.letters().begin() + d);
        period_ = FiniteWord(A, period_.anchor(), std::move(head));
        n = d;
        break;
      }
    }
    // absorb: while the prefix ends with the period's last letter, rotate
    while (!prefix_.empty() &&
           prefix_[prefix_.size() - 1] == period_[period_.size() - 1]) {
      Letter last = period_[period_.size() - 1];
      std::vector<Letter> rot;
      rot.push_back(last);
      rot.insert(rot.end(), period_.letters().begin(),
                 period_.letters().end() - 1);
      period_ = FiniteWord(A, left_vertex(A, last), std::move(rot));
      std::vector<Letter> head(prefix_.letters().begin(),
                               prefix_.letters().end() - 1);
      int sign = prefix_.sign();
      prefix_ = head.empty() ? FiniteWord(prefix_.anchor(), sign)
                             : FiniteWord(A, prefix_.anchor(), std::move(head),
                                          sign);
    }
  }

  void validate(AlgebraPresentation const& A) const {
    // enough copies of the period that every factor window is inspected
    std::size_t m = A.max_relation_length();
    std::size_t copies = (2 * m + 2) / period_.size() + 2;
    truncate(A, copies);  // throws if invalid
  }

  FiniteWord prefix_;
  FiniteWord period_;
};

// Read access to either kind of word in chain computations.
class WordView {
 public:
  WordView(FiniteWord const& w) : fin_(&w), os_(nullptr) {}
  WordView(OneSidedWord const& w) : fin_(nullptr), os_(&w) {}

  bool infinite() const { return os_ != nullptr; }
  std::size_t finite_size() const { return fin_->size(); }
  bool has(std::size_t i) const { return infinite() || i < fin_->size(); }
  Letter const& at(std::size_t i) const {
    return infinite() ? os_->letter_at(i) : (*fin_)[i];
  }
  std::string const& anchor() const {
    return infinite() ? os_->anchor() : fin_->anchor();
  }
  int sign_if_empty() const {
    return (!infinite() && fin_->empty()) ? fin_->sign() : 0;
  }
  bool empty() const { return !infinite() && fin_->empty(); }
  FiniteWord const* finite() const { return fin_; }
  OneSidedWord const* one_sided() const { return os_; }

  std::string str() const { return infinite() ? os_->str() : fin_->str(); }

 private:
  FiniteWord const* fin_;
  OneSidedWord const* os_;
};

// ---------------------------------------------------------------------------
// The H partition.  At each vertex S the entering letters are the ingoing
// arrows (as direct letters) and the inverses of the outgoing arrows.  A
// valid partition puts at most one direct and one inverse letter on each
// side, and a direct a together with an inverse b^-1 forces the composition
// "b after a" to be a relation.

inline std::vector<Letter> entering_letters(AlgebraPresentation const& A,
                                            std::string const& S) {
  std::vector<Letter> out;
  for (auto const& a : A.arrows()) {
    if (a.target == S) out.emplace_back(a.name, Dir::direct);
    if (a.source == S) out.emplace_back(a.name, Dir::inverse);
  }
  std::sort(out.begin(), out.end());
  return out;
}

class HPartition {
 public:
  HPartition() = default;

  void set(std::string const& vertex, Letter const& l, int side) {
    if (side != 1 && side != -1) throw std::invalid_argument("side must be +-1");
    sides_[vertex][l] = side;
  }

  int side(std::string const& vertex, Letter const& l) const {
    auto v = sides_.find(vertex);
    if (v == sides_.end())
      throw std::invalid_argument("no partition data at vertex " + vertex);
    auto it = v->second.find(l);
    if (it == v->second.end())
      throw std::invalid_argument("letter " + l.str() +
                                  " does not enter vertex " + vertex);
    return it->second;
  }

  // The one letter of the given kind on the given side, if any.
  std::optional<Letter> letter_on_side(std::string const& vertex, int side,
                                       Dir dir) const {
    auto v = sides_.find(vertex);
    if (v == sides_.end()) return std::nullopt;
    for (auto const& [l, s] : v->second)
      if (s == side && l.dir == dir) return l;
    return std::nullopt;
  }

  std::map<std::string, std::size_t> const& choice_counts() const {
    return choice_counts_;
  }
  bool ambiguous() const {
    for (auto const& [v, n] : choice_counts_)
      if (n > 1) return true;
    return false;
  }
  void set_choice_count(std::string const& vertex, std::size_t n) {
    choice_counts_[vertex] = n;
  }

 private:
  std::map<std::string, std::map<Letter, int>> sides_;
  std::map<std::string, std::size_t> choice_counts_;
};

inline bool valid_local_assignment(AlgebraPresentation const& A,
                                   std::vector<Letter> const& letters,
                                   std::vector<int> const& side) {
  for (int s : {1, -1}) {
    int directs = 0, inverses = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (side[i] != s) continue;
      (letters[i].is_direct() ? directs : inverses) += 1;
    }
    if (directs > 1 || inverses > 1) return false;
    for (std::size_t i = 0; i < letters.size(); ++i)
      for (std::size_t j = 0; j < letters.size(); ++j) {
        if (side[i] != s || side[j] != s) continue;
        if (!letters[i].is_direct() || letters[j].is_direct()) continue;
        // direct a = letters[i], inverse b^-1 = letters[j]: need "b after a"
        // to be zero
        if (A.composition_nonzero(letters[i].arrow, letters[j].arrow))
          return false;
      }
  }
  return true;
}

inline std::vector<std::vector<int>> valid_local_assignments(
    AlgebraPresentation const& A, std::string const& S) {
  auto letters = entering_letters(A, S);
  std::vector<std::vector<int>> out;
  std::size_t n = letters.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<int> side(n);
    // earlier letters on higher bits, so mask order is lexicographic order
    for (std::size_t i = 0; i < n; ++i)
      side[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
    if (valid_local_assignment(A, letters, side)) out.push_back(side);
  }
  return out;  // lexicographic with +1 before -1, by construction
}

/// Deterministic partition: per vertex the lexicographically least valid
/// assignment (letters sorted by arrow name then direction, +1 preferred).
inline HPartition compute_h_partition(AlgebraPresentation const& A) {
  HPartition H;
  for (auto const& v : A.vertices()) {
    auto letters = entering_letters(A, v.id);
    auto valid = valid_local_assignments(A, v.id);
    if (valid.empty())
      throw std::logic_error("no valid H partition at vertex " + v.id +
                             " (presentation is not a string algebra?)");
    for (std::size_t i = 0; i < letters.size(); ++i)
      H.set(v.id, letters[i], valid[0][i]);
    H.set_choice_count(v.id, valid.size());
  }
  return H;
}

inline int side_of(AlgebraPresentation const& A, HPartition const& H,
                   WordView const& w, std::string const& at) {
  if (w.anchor() != at)
    throw std::invalid_argument("anchor mismatch: word at " + w.anchor() +
                                ", queried at " + at);
  if (w.empty()) return w.sign_if_empty();
  (void)A;
  return H.side(at, w.at(0));
}

// ---------------------------------------------------------------------------
// The chain order.  Divergence rule: after the longest common prefix, an
// inverse continuation is below stopping, which is below a direct
// continuation.  The string algebra axioms make this total on each chain.

enum class Ordering { LT, EQ, GT };

inline Ordering compare(AlgebraPresentation const& A, HPartition const& H,
                        WordView const& w1, WordView const& w2) {
  if (w1.anchor() != w2.anchor())
    throw std::invalid_argument("words anchored at different vertices");
  int s1 = w1.empty() ? w1.sign_if_empty() : H.side(w1.anchor(), w1.at(0));
  int s2 = w2.empty() ? w2.sign_if_empty() : H.side(w2.anchor(), w2.at(0));
  if (s1 != s2)
    throw std::invalid_argument("words not in a common chain");
  (void)A;

  std::size_t cutoff;
  if (w1.infinite() && w2.infinite()) {
    std::size_t p1 = w1.one_sided()->prefix().size(),
                p2 = w2.one_sided()->prefix().size();
    std::size_t q1 = w1.one_sided()->period().size(),
                q2 = w2.one_sided()->period().size();
    cutoff = std::max(p1, p2) + std::lcm(q1, q2);
  } else {
    cutoff = 1 + std::max(w1.infinite() ? 0 : w1.finite_size(),
                          w2.infinite() ? 0 : w2.finite_size());
  }

  for (std::size_t i = 0; i <= cutoff; ++i) {
    bool h1 = w1.has(i), h2 = w2.has(i);
    if (!h1 && !h2) return Ordering::EQ;
    if (h1 && h2) {
      if (w1.at(i) == w2.at(i)) continue;
      bool d1 = w1.at(i).is_direct(), d2 = w2.at(i).is_direct();
      if (d1 == d2)
        throw std::logic_error(
            "diverging letters of equal directedness; not a string algebra");
      return d1 ? Ordering::GT : Ordering::LT;
    }
    if (!h1) return w2.at(i).is_direct() ? Ordering::LT : Ordering::GT;
    return w1.at(i).is_direct() ? Ordering::GT : Ordering::LT;
  }
  return Ordering::EQ;  // both infinite, agree beyond the periodicity cutoff
}

// ---------------------------------------------------------------------------
// Normal form v . l . D^infinity of a one-sided word and its end shape.

enum class EndShape { expanding, contracting };

struct OneSidedClassification {
  bool periodic;                  // l empty
  std::optional<Letter> l;        // break letter when not periodic
  std::optional<FiniteWord> head; // v (prefix before l), when not periodic
  FiniteWord period;              // D
  EndShape shape;                 // from the last letter of D
};

inline OneSidedClassification classify_one_sided(AlgebraPresentation const& A,
                                                 OneSidedWord const& w) {
  OneSidedClassification out{false,
                             std::nullopt,
                             std::nullopt,
                             w.period(),
                             w.period()[w.period().size() - 1].is_direct()
                                 ? EndShape::contracting
                                 : EndShape::expanding};
  if (w.purely_periodic()) {
    out.periodic = true;
    return out;
  }
  auto const& p = w.prefix();
  out.l = p[p.size() - 1];
  std::vector<Letter> head(p.letters().begin(), p.letters().end() - 1);
  out.head = head.empty()
                 ? FiniteWord(p.anchor(), p.sign())
                 : FiniteWord(A, p.anchor(), std::move(head), p.sign());
  return out;
}

// ---------------------------------------------------------------------------
// Two-sided words w = u^-1 . v with u in the H(-1) chain and v in the H(+1)
// chain of the anchor vertex.

class TwoSidedWord {
 public:
  using Half = std::variant<FiniteWord, OneSidedWord>;

  TwoSidedWord(AlgebraPresentation const& A, HPartition const& H, Half left,
               Half right)
      : left_(std::move(left)), right_(std::move(right)) {
    WordView u = view(left_), v = view(right_);
    anchor_ = u.anchor();
    if (v.anchor() != anchor_)
      throw std::invalid_argument("two-sided word halves anchored apart");
    int su = u.empty() ? u.sign_if_empty() : H.side(anchor_, u.at(0));
    int sv = v.empty() ? v.sign_if_empty() : H.side(anchor_, v.at(0));
    if (su != -1 || sv != 1)
      throw std::invalid_argument(
          "side assignment violated: u must lie in H(-1), v in H(+1)");
    check_junction(A, u, v);
    periodic_ = compute_periodic(u, v);
  }

  WordView u() const { return view(left_); }
  WordView v() const { return view(right_); }
  std::string const& anchor() const { return anchor_; }
  bool periodic() const { return periodic_; }

  // Letter at a biinfinite position: >= 0 reads v, < 0 reads u inverted.
  bool has_letter(long pos) const {
    WordView w = pos >= 0 ? v() : u();
    std::size_t i = pos >= 0 ? std::size_t(pos) : std::size_t(-pos - 1);
    return w.has(i);
  }
  Letter letter(long pos) const {
    if (pos >= 0) return v().at(std::size_t(pos));
    return u().at(std::size_t(-pos - 1)).inverse();
  }

  friend bool operator==(TwoSidedWord const& a, TwoSidedWord const& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

  std::string str() const {
    // display form: the left half is drawn inverted
    std::string out;
    WordView uu = u(), vv = v();
    if (uu.infinite()) {
      auto const& os = *uu.one_sided();
      std::string per;
      for (std::size_t i = os.period().size(); i-- > 0;) {
        if (!per.empty()) per += ' ';
        per += os.period()[i].inverse().str();
      }
      out += "inf^(" + per + ")";
      for (std::size_t i = os.prefix().size(); i-- > 0;)
        out += " " + os.prefix()[i].inverse().str();
    } else if (!uu.empty()) {
      auto const& f = *uu.finite();
      for (std::size_t i = f.size(); i-- > 0;) {
        if (!out.empty()) out += ' ';
        out += f[i].inverse().str();
      }
    }
    out += out.empty() ? "." : " .";
    if (vv.infinite()) {
      auto const& os = *vv.one_sided();
      if (!os.prefix().empty()) out += " " + os.prefix().str();
      out += " (" + os.period().str() + ")^inf";
    } else if (!vv.empty()) {
      out += " " + vv.finite()->str();
    }
    return out + " @" + anchor_;
  }

 private:
  static WordView view(Half const& h) {
    if (std::holds_alternative<FiniteWord>(h))
      return WordView(std::get<FiniteWord>(h));
    return WordView(std::get<OneSidedWord>(h));
  }

  void check_junction(AlgebraPresentation const& A, WordView const& u,
                      WordView const& v) {
    std::size_t m = A.max_relation_length();
    std::vector<Letter> window;
    for (std::size_t i = m; i-- > 0;)
      if (u.has(i)) window.push_back(u.at(i).inverse());
    std::size_t junction = window.size();
    for (std::size_t i = 0; i < m; ++i)
      if (v.has(i)) window.push_back(v.at(i));
    if (window.empty()) return;
    if (auto err = check_letter_run(A, window))
      throw WordError(err->position > junction ? err->position - junction : 0,
                      "invalid junction: " + err->reason);
  }

  bool compute_periodic(WordView const& u, WordView const& v) const {
    if (!u.infinite() || !v.infinite()) return false;
    std::size_t qu = u.one_sided()->period().size(),
                qv = v.one_sided()->period().size();
    if (qu != qv) return false;
    std::size_t pu = u.one_sided()->prefix().size(),
                pv = v.one_sided()->prefix().size();
    long lo = -long(pu + 2 * qu) - 1, hi = long(pv + 2 * qv) + 1;
    for (long i = lo; i + long(qv) <= hi; ++i)
      if (!(letter(i) == letter(i + long(qv)))) return false;
    return true;
  }

  Half left_, right_;
  std::string anchor_;
  bool periodic_ = false;
};

}  // namespace stralg

#endif
