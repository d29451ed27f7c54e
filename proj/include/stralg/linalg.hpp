// Dense exact linear algebra over a field: reduced row echelon form, kernels,
// images, preimages, sums and intersections of subspaces, and affine sets
// (point + direction space).  Everything is small and dimension-bounded, so a
// plain Gaussian elimination is all that is needed.

#ifndef STRALG_LINALG_HPP_
#define STRALG_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace stralg {

template <typename K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  K const& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(Matrix const& a, Matrix const& b) { return !(a == b); }

  Matrix operator*(Matrix const& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        K const& a = (*this)(i, k);
        if (a == K(0)) continue;
        for (std::size_t j = 0; j < other.cols_; ++j)
          out(i, j) += a * other(k, j);
      }
    return out;
  }

  Matrix operator+(Matrix const& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw std::invalid_argument("matrix shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
  }

  Matrix scaled(K const& c) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= c;
    return out;
  }

  bool is_zero() const {
    for (auto const& x : data_)
      if (x != K(0)) return false;
    return true;
  }

  std::vector<K> apply(std::vector<K> const& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<K> out(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != K(0)) out[i] += (*this)(i, j) * v[j];
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> data_;
};

namespace linalg {

template <typename K>
using Vec = std::vector<K>;

template <typename K>
bool is_zero_vec(Vec<K> const& v) {
  for (auto const& x : v)
    if (x != K(0)) return false;
  return true;
}

template <typename K>
Vec<K> add(Vec<K> a, Vec<K> const& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <typename K>
Vec<K> sub(Vec<K> a, Vec<K> const& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <typename K>
Vec<K> scale(Vec<K> a, K const& c) {
  for (auto& x : a) x *= c;
  return a;
}

// In-place RREF of a list of row vectors; returns pivot column per row.
// Zero rows are dropped.
template <typename K>
std::vector<std::size_t> rref(std::vector<Vec<K>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == K(0)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    K inv = K(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == K(0)) continue;
      K f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace linalg

// A linear subspace of K^n in canonical (RREF row basis) form.  Equality of
// subspaces is plain equality of the representation.
template <typename K>
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim,
                       std::vector<std::vector<K>> vectors) {
    Subspace s(ambient_dim);
    s.basis_ = std::move(vectors);
    s.pivots_ = linalg::rref(s.basis_);
    return s;
  }

  static Subspace full(std::size_t ambient_dim) {
    std::vector<std::vector<K>> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      std::vector<K> e(ambient_dim, K(0));
      e[i] = K(1);
      rows.push_back(std::move(e));
    }
    return span(ambient_dim, std::move(rows));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  std::vector<std::vector<K>> const& basis() const { return basis_; }

  bool contains(std::vector<K> const& v) const {
    return linalg::is_zero_vec(reduce(v));
  }

  // v modulo the subspace: canonical coset representative.
  std::vector<K> reduce(std::vector<K> v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      K const c = v[pivots_[i]];
      if (c == K(0)) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] -= c * basis_[i][j];
    }
    return v;
  }

  // Coordinates of v in the basis, if v lies in the subspace.
  std::optional<std::vector<K>> coordinates(std::vector<K> const& v) const {
    std::vector<K> w = v, coords(basis_.size(), K(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      coords[i] = w[pivots_[i]];
      if (coords[i] == K(0)) continue;
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= coords[i] * basis_[i][j];
    }
    if (!linalg::is_zero_vec(w)) return std::nullopt;
    return coords;
  }

  bool contains_subspace(Subspace const& other) const {
    for (auto const& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  friend bool operator==(Subspace const& a, Subspace const& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(Subspace const& a, Subspace const& b) {
    return !(a == b);
  }

  friend Subspace operator+(Subspace const& a, Subspace const& b) {
    auto rows = a.basis_;
    rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
    return span(a.ambient_, std::move(rows));
  }

 private:
  std::size_t ambient_;
  std::vector<std::vector<K>> basis_;
  std::vector<std::size_t> pivots_;
};

namespace linalg {

// Kernel of m as a subspace of K^{cols}.
template <typename K>
Subspace<K> kernel(Matrix<K> const& m) {
  std::vector<Vec<K>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec<K> r(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(i, j);
    rows.push_back(std::move(r));
  }
  auto pivots = rref(rows);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<K>> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<K> v(m.cols(), K(0));
    v[c] = K(1);
    for (std::size_t i = 0; i < rows.size(); ++i) v[pivots[i]] = -rows[i][c];
    basis.push_back(std::move(v));
  }
  return Subspace<K>::span(m.cols(), std::move(basis));
}

// Image of a subspace under m.
template <typename K>
Subspace<K> image(Matrix<K> const& m, Subspace<K> const& s) {
  std::vector<Vec<K>> vecs;
  for (auto const& v : s.basis()) vecs.push_back(m.apply(v));
  return Subspace<K>::span(m.rows(), std::move(vecs));
}

template <typename K>
Subspace<K> image(Matrix<K> const& m) {
  return image(m, Subspace<K>::full(m.cols()));
}

// Full preimage {x : m x in s}.
template <typename K>
Subspace<K> preimage(Matrix<K> const& m, Subspace<K> const& s) {
  // Kernel of the composite K^{cols} -> K^{rows} -> K^{rows}/s, realized by
  // stacking m with the generators of s as extra unknowns.
  std::size_t n = m.cols(), k = s.dim();
  Matrix<K> aug(m.rows(), n + k);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = -s.basis()[j][i];
  }
  auto ker = kernel(aug);
  std::vector<Vec<K>> basis;
  for (auto const& v : ker.basis())
    basis.emplace_back(v.begin(), v.begin() + n);
  return Subspace<K>::span(n, std::move(basis));
}

template <typename K>
Subspace<K> intersect(Subspace<K> const& a, Subspace<K> const& b) {
  // x in a∩b  <=>  x = Σ c_i a_i = Σ d_j b_j; solve for (c, d).
  std::size_t n = a.ambient_dim();
  Matrix<K> sys(n, a.dim() + b.dim());
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) sys(i, j) = a.basis()[j][i];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) sys(i, a.dim() + j) = -b.basis()[j][i];
  auto ker = kernel(sys);
  std::vector<Vec<K>> basis;
  for (auto const& cd : ker.basis()) {
    Vec<K> x(n, K(0));
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (cd[j] != K(0)) x = add(x, scale(a.basis()[j], cd[j]));
    basis.push_back(std::move(x));
  }
  return Subspace<K>::span(n, std::move(basis));
}

// One particular solution of m x = b, if any.
template <typename K>
std::optional<Vec<K>> solve(Matrix<K> const& m, Vec<K> const& b) {
  std::vector<Vec<K>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec<K> r(m.cols() + 1);
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(i, j);
    r[m.cols()] = b[i];
    rows.push_back(std::move(r));
  }
  auto pivots = rref(rows);
  Vec<K> x(m.cols(), K(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;  // inconsistent
    x[pivots[i]] = rows[i][m.cols()];
  }
  return x;
}

}  // namespace linalg

// An affine subset p + V of K^n, possibly empty.  Canonical form: the point
// is reduced modulo the direction space.
template <typename K>
class AffineSet {
 public:
  AffineSet() : empty_(true) {}
  AffineSet(std::vector<K> point, Subspace<K> dirs)
      : empty_(false), dirs_(std::move(dirs)) {
    point_ = dirs_.reduce(std::move(point));
  }

  static AffineSet empty_set() { return AffineSet(); }
  static AffineSet single_point(std::vector<K> p) {
    std::size_t n = p.size();
    return AffineSet(std::move(p), Subspace<K>(n));
  }

  bool empty() const { return empty_; }
  std::vector<K> const& point() const { return point_; }
  Subspace<K> const& directions() const { return dirs_; }

  bool meets(Subspace<K> const& s) const {
    if (empty_) return false;
    return (dirs_ + s).contains(point_);
  }

  // Some element of the intersection with s, if nonempty.
  std::optional<std::vector<K>> meet_point(Subspace<K> const& s) const {
    if (empty_) return std::nullopt;
    // point - Σ c_i d_i  in s for suitable coefficients.
    std::size_t n = point_.size();
    Matrix<K> sys(n, dirs_.dim() + s.dim());
    for (std::size_t j = 0; j < dirs_.dim(); ++j)
      for (std::size_t i = 0; i < n; ++i) sys(i, j) = dirs_.basis()[j][i];
    for (std::size_t j = 0; j < s.dim(); ++j)
      for (std::size_t i = 0; i < n; ++i) sys(i, dirs_.dim() + j) = -s.basis()[j][i];
    auto sol = linalg::solve(sys, linalg::scale(point_, K(-1)));
    if (!sol) return std::nullopt;
    std::vector<K> out = point_;
    for (std::size_t j = 0; j < dirs_.dim(); ++j)
      if ((*sol)[j] != K(0))
        out = linalg::add(out, linalg::scale(dirs_.basis()[j], (*sol)[j]));
    return out;
  }

  friend bool operator==(AffineSet const& a, AffineSet const& b) {
    if (a.empty_ != b.empty_) return false;
    if (a.empty_) return true;
    return a.dirs_ == b.dirs_ && a.point_ == b.point_;
  }

 private:
  bool empty_;
  std::vector<K> point_;
  Subspace<K> dirs_;
};

namespace linalg {

template <typename K>
AffineSet<K> affine_image(Matrix<K> const& m, AffineSet<K> const& a) {
  if (a.empty()) return AffineSet<K>::empty_set();
  return AffineSet<K>(m.apply(a.point()), image(m, a.directions()));
}

template <typename K>
AffineSet<K> affine_preimage(Matrix<K> const& m, AffineSet<K> const& a) {
  if (a.empty()) return AffineSet<K>::empty_set();
  // {x : m x in p + V}: particular solution of m x = p + Σ c_i v_i.
  std::size_t n = m.cols();
  auto const& V = a.directions();
  Matrix<K> sys(m.rows(), n + V.dim());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) sys(i, j) = m(i, j);
    for (std::size_t j = 0; j < V.dim(); ++j) sys(i, n + j) = -V.basis()[j][i];
  }
  auto sol = solve(sys, a.point());
  if (!sol) return AffineSet<K>::empty_set();
  std::vector<K> part(sol->begin(), sol->begin() + n);
  return AffineSet<K>(std::move(part), preimage(m, V));
}

}  // namespace linalg
}  // namespace stralg

#endif
