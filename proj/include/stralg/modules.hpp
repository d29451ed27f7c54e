// Finite dimensional representations over an exact field: string and band
// modules with their standard bases, projectives, pp divisibility subspaces,
// and the homomorphism-space oracle.

#ifndef STRALG_MODULES_HPP_
#define STRALG_MODULES_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "automaton.hpp"
#include "bands.hpp"
#include "linalg.hpp"
#include "words.hpp"

namespace stralg {

template <typename K>
class FDModule {
 public:
  FDModule() : A_(nullptr) {}
  FDModule(AlgebraPresentation const& A, std::map<std::string, std::size_t> dims,
           std::map<std::string, Matrix<K>> action)
      : A_(&A), dims_(std::move(dims)), action_(std::move(action)) {
    for (auto const& v : A.vertices())
      if (!dims_.count(v.id)) dims_[v.id] = 0;
    for (auto const& a : A.arrows()) {
      if (!action_.count(a.name))
        action_[a.name] = Matrix<K>(dims_.at(a.target), dims_.at(a.source));
      auto const& m = action_.at(a.name);
      if (m.rows() != dims_.at(a.target) || m.cols() != dims_.at(a.source))
        throw std::invalid_argument("arrow matrix shape mismatch at " + a.name);
    }
    check_relations();
  }

  AlgebraPresentation const& algebra() const { return *A_; }
  std::size_t dim(std::string const& vertex) const { return dims_.at(vertex); }
  std::size_t total_dim() const {
    std::size_t n = 0;
    for (auto const& [v, d] : dims_) n += d;
    return n;
  }
  Matrix<K> const& action(std::string const& arrow) const {
    return action_.at(arrow);
  }

  // Evaluates a relation-style path (written order, rightmost acts first).
  Matrix<K> path_action(RelationPath const& path) const {
    Matrix<K> m = action_.at(path.back());
    for (std::size_t i = path.size() - 1; i-- > 0;)
      m = action_.at(path[i]) * m;
    return m;
  }

  friend FDModule direct_sum(FDModule const& a, FDModule const& b) {
    if (a.A_ != b.A_) throw std::invalid_argument("algebra mismatch");
    std::map<std::string, std::size_t> dims;
    for (auto const& [v, d] : a.dims_) dims[v] = d + b.dims_.at(v);
    std::map<std::string, Matrix<K>> act;
    for (auto const& arr : a.A_->arrows()) {
      auto const& ma = a.action_.at(arr.name);
      auto const& mb = b.action_.at(arr.name);
      Matrix<K> m(dims.at(arr.target), dims.at(arr.source));
      for (std::size_t i = 0; i < ma.rows(); ++i)
        for (std::size_t j = 0; j < ma.cols(); ++j) m(i, j) = ma(i, j);
      for (std::size_t i = 0; i < mb.rows(); ++i)
        for (std::size_t j = 0; j < mb.cols(); ++j)
          m(ma.rows() + i, ma.cols() + j) = mb(i, j);
      act[arr.name] = std::move(m);
    }
    return FDModule(*a.A_, std::move(dims), std::move(act));
  }

  friend bool operator==(FDModule const& a, FDModule const& b) {
    return a.dims_ == b.dims_ && a.action_ == b.action_;
  }

 private:
  void check_relations() const {
    for (auto const& r : A_->relations())
      if (!path_action(r).is_zero())
        throw std::invalid_argument("relation does not vanish on module");
  }

  AlgebraPresentation const* A_;
  std::map<std::string, std::size_t> dims_;
  std::map<std::string, Matrix<K>> action_;
};

template <typename K>
struct PointedElement {
  std::string vertex;
  std::vector<K> coords;

  bool is_zero() const { return linalg::is_zero_vec(coords); }
};

// ---------------------------------------------------------------------------
// String modules.  One basis node per word position; a direct letter a at
// position i acts by a . x_i = x_{i-1}, an inverse letter b^-1 by
// b . x_{i-1} = x_i.

template <typename K>
class StringModule {
 public:
  StringModule(AlgebraPresentation const& A, FiniteWord word)
      : word_(std::move(word)) {
    std::map<std::string, std::size_t> dims;
    node_loc_.resize(word_.size() + 1);
    for (std::size_t i = 0; i <= word_.size(); ++i) {
      std::string v = word_.vertex_at(A, i);
      node_loc_[i] = {v, dims[v]++};
    }
    std::map<std::string, Matrix<K>> act;
    for (auto const& arr : A.arrows())
      act[arr.name] = Matrix<K>(dims.count(arr.target) ? dims[arr.target] : 0,
                                dims.count(arr.source) ? dims[arr.source] : 0);
    for (std::size_t i = 1; i <= word_.size(); ++i) {
      Letter const& l = word_[i - 1];
      auto& m = act.at(l.arrow);
      if (l.is_direct())
        m(node_loc_[i - 1].second, node_loc_[i].second) = K(1);  // a x_i = x_{i-1}
      else
        m(node_loc_[i].second, node_loc_[i - 1].second) = K(1);  // b x_{i-1} = x_i
    }
    module_ = FDModule<K>(A, std::move(dims), std::move(act));
  }

  FDModule<K> const& module() const { return module_; }
  FiniteWord const& word() const { return word_; }
  std::size_t nodes() const { return word_.size() + 1; }
  std::pair<std::string, std::size_t> const& node_location(std::size_t i) const {
    return node_loc_[i];
  }

  PointedElement<K> basis_element(std::size_t node) const {
    auto const& [v, idx] = node_loc_.at(node);
    std::vector<K> coords(module_.dim(v), K(0));
    coords[idx] = K(1);
    return {v, std::move(coords)};
  }

  // Sum of distinct basis nodes, all at one vertex.
  PointedElement<K> combination(std::vector<std::pair<std::size_t, K>> const&
                                    nodes_and_coeffs) const {
    auto const& v = node_loc_.at(nodes_and_coeffs.at(0).first).first;
    std::vector<K> coords(module_.dim(v), K(0));
    for (auto const& [node, c] : nodes_and_coeffs) {
      if (node_loc_.at(node).first != v)
        throw std::invalid_argument("combination across vertices");
      coords[node_loc_.at(node).second] += c;
    }
    return {v, std::move(coords)};
  }

 private:
  FiniteWord word_;
  std::vector<std::pair<std::string, std::size_t>> node_loc_;
  FDModule<K> module_;
};

template <typename K>
StringModule<K> string_module(AlgebraPresentation const& A, FiniteWord const& w) {
  return StringModule<K>(A, w);
}

// ---------------------------------------------------------------------------
// Band modules M(C, lambda, k).  Basis z_i^j with node i running over the
// cyclic word's positions and layer j = 1..k.  All letters act as layer
// identities except the closing (final, inverse) letter, which acts by
// lambda I + J with the nilpotent shift J between layers.

template <typename K>
class BandModule {
 public:
  BandModule(AlgebraPresentation const& A, Band const& band, K lambda,
             std::size_t layers)
      : band_(band), lambda_(std::move(lambda)), layers_(layers) {
    if (lambda_ == K(0))
      throw std::invalid_argument(
          "lambda = 0 degenerates to a string module; build the string "
          "module of the opened-up word instead");
    if (layers == 0) throw std::invalid_argument("need at least one layer");
    auto const& w = band_.word();
    std::size_t T = w.size();
    std::map<std::string, std::size_t> dims;
    node_loc_.resize(T);
    for (std::size_t i = 0; i < T; ++i) {
      std::string v = w.vertex_at(A, i);
      node_loc_[i] = {v, dims[v]};
      dims[v] += layers;
    }
    std::map<std::string, Matrix<K>> act;
    for (auto const& arr : A.arrows())
      act[arr.name] = Matrix<K>(dims.count(arr.target) ? dims[arr.target] : 0,
                                dims.count(arr.source) ? dims[arr.source] : 0);
    for (std::size_t i = 1; i <= T; ++i) {
      Letter const& l = w[i - 1];
      auto& m = act.at(l.arrow);
      std::size_t left = i - 1, right = i % T;  // node T folds onto node 0
      bool closing = (i == T);
      for (std::size_t j = 0; j < layers; ++j) {
        std::size_t li = node_loc_[left].second + j;
        std::size_t ri = node_loc_[right].second + j;
        if (!closing) {
          if (l.is_direct())
            m(li, ri) = K(1);
          else
            m(ri, li) = K(1);
        } else {
          // closing letter is inverse by normalization: b x_{T-1} = lambda x_0
          // plus the layer below
          m(ri, li) = lambda_;
          if (j > 0) m(node_loc_[right].second + j - 1, li) = K(1);
        }
      }
    }
    module_ = FDModule<K>(A, std::move(dims), std::move(act));
  }

  FDModule<K> const& module() const { return module_; }
  Band const& band() const { return band_; }
  std::size_t layers() const { return layers_; }
  K const& lambda() const { return lambda_; }

  // z_i^j with node i in [0, |C|), layer j in [1, k]
  PointedElement<K> basis_element(std::size_t node, std::size_t layer) const {
    auto const& [v, base] = node_loc_.at(node);
    std::vector<K> coords(module_.dim(v), K(0));
    coords[base + (layer - 1)] = K(1);
    return {v, std::move(coords)};
  }

 private:
  Band band_;
  K lambda_;
  std::size_t layers_;
  std::vector<std::pair<std::string, std::size_t>> node_loc_;
  FDModule<K> module_;
};

template <typename K>
BandModule<K> band_module(AlgebraPresentation const& A, Band const& C,
                          K const& lambda, std::size_t k) {
  return BandModule<K>(A, C, lambda, k);
}

// The projective A e_S: basis indexed by the nonzero paths starting at S.
template <typename K>
FDModule<K> projective_module(AlgebraPresentation const& A,
                              std::string const& at) {
  // nonzero paths from `at`, in walking order (first arrow first)
  std::vector<std::vector<std::string>> paths{{}};
  std::map<std::string, std::vector<std::size_t>> by_vertex;
  std::vector<std::string> ends{at};
  auto nonzero = [&](std::vector<std::string> const& walk) {
    for (auto const& r : A.relations()) {
      if (r.size() > walk.size()) continue;
      for (std::size_t off = 0; off + r.size() <= walk.size(); ++off) {
        bool hit = true;
        for (std::size_t i = 0; i < r.size(); ++i)
          if (walk[off + i] != r[r.size() - 1 - i]) hit = false;
        if (hit) return false;
      }
    }
    return true;
  };
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (auto const& arr : A.arrows()) {
      if (arr.source != ends[i]) continue;
      auto walk = paths[i];
      walk.push_back(arr.name);
      if (!nonzero(walk)) continue;
      paths.push_back(walk);
      ends.push_back(arr.target);
    }
  }
  std::map<std::string, std::size_t> dims;
  std::vector<std::size_t> index(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    index[i] = dims[ends[i]]++;
  }
  std::map<std::string, Matrix<K>> act;
  for (auto const& arr : A.arrows())
    act[arr.name] = Matrix<K>(dims.count(arr.target) ? dims[arr.target] : 0,
                              dims.count(arr.source) ? dims[arr.source] : 0);
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (auto const& arr : A.arrows()) {
      if (arr.source != ends[i]) continue;
      auto walk = paths[i];
      walk.push_back(arr.name);
      if (!nonzero(walk)) continue;
      auto it = std::find(paths.begin(), paths.end(), walk);
      act.at(arr.name)(index[it - paths.begin()], index[i]) = K(1);
    }
  return FDModule<K>(A, std::move(dims), std::move(act));
}

// ---------------------------------------------------------------------------
// pp divisibility subspaces.  For a finite word W anchored at S the operator
// W(N) alternates images (direct letters) and preimages (inverse letters),
// applied from the innermost (rightmost) letter outward.  The pp formula of
// W closes with the kernel of the unique arrow g extending W by g^-1 when
// one exists; the H partition decides that extension for empty words.

template <typename K>
Subspace<K> apply_letter(FDModule<K> const& M, Letter const& l,
                         Subspace<K> const& at_right) {
  auto const& m = M.action(l.arrow);
  return l.is_direct() ? linalg::image(m, at_right)
                       : linalg::preimage(m, at_right);
}

template <typename K>
Subspace<K> word_operator(FDModule<K> const& M, FiniteWord const& W,
                          Subspace<K> inner) {
  for (std::size_t i = W.size(); i-- > 0;)
    inner = apply_letter(M, W[i], inner);
  return inner;
}

inline std::optional<std::string> closing_arrow(AlgebraPresentation const& A,
                                                HPartition const& H,
                                                FiniteWord const& W) {
  if (W.empty()) {
    auto l = H.letter_on_side(W.anchor(), W.sign(), Dir::inverse);
    if (!l) return std::nullopt;
    return l->arrow;
  }
  auto t = TrailingWindow::of_word(A, W);
  auto exts = extensions(A, t, Dir::inverse);
  if (exts.empty()) return std::nullopt;
  if (exts.size() > 1)
    throw std::logic_error("multiple inverse extensions of " + W.str());
  return exts[0].arrow;
}

/// The subspace a pp divisibility formula carves out of e_S M.
template <typename K>
Subspace<K> div_subspace(AlgebraPresentation const& A, HPartition const& H,
                         FDModule<K> const& M, FiniteWord const& W) {
  std::string end = W.end_vertex(A);
  Subspace<K> inner = Subspace<K>::full(M.dim(end));
  if (auto g = closing_arrow(A, H, W)) inner = linalg::kernel(M.action(*g));
  return word_operator(M, W, std::move(inner));
}

struct PPWordFormula {
  std::optional<FiniteWord> left;   // C, in the H(-1) chain
  std::optional<FiniteWord> right;  // D, in the H(+1) chain

  static PPWordFormula right_div(FiniteWord D) { return {std::nullopt, D}; }
  static PPWordFormula left_div(FiniteWord C) { return {C, std::nullopt}; }
  static PPWordFormula both(FiniteWord C, FiniteWord D) { return {C, D}; }

  std::string anchor() const {
    return left ? left->anchor() : right->anchor();
  }

  std::string str() const {
    std::string c = left ? (left->empty() ? "1" : left->str()) : "-";
    std::string d = right ? (right->empty() ? "1" : right->str()) : "-";
    return "((" + c + ")^-1 . " + d + ")";
  }
};

template <typename K>
Subspace<K> pp_subspace(AlgebraPresentation const& A, HPartition const& H,
                        FDModule<K> const& M, PPWordFormula const& f) {
  if (!f.left && !f.right) throw std::invalid_argument("empty formula");
  std::optional<std::string> anchor;
  auto check_side = [&](FiniteWord const& w, int side) {
    int s = w.empty() ? w.sign() : H.side(w.anchor(), w[0]);
    if (s != side)
      throw std::invalid_argument("formula side mismatch for " + w.str());
    if (anchor && *anchor != w.anchor())
      throw std::invalid_argument("formula halves anchored apart");
    anchor = w.anchor();
  };
  if (f.left) check_side(*f.left, -1);
  if (f.right) check_side(*f.right, +1);
  std::optional<Subspace<K>> out;
  if (f.left) out = div_subspace(A, H, M, *f.left);
  if (f.right) {
    auto r = div_subspace(A, H, M, *f.right);
    out = out ? linalg::intersect(*out, r) : r;
  }
  return *out;
}

// ---------------------------------------------------------------------------
// Homomorphism spaces by direct linear solve: the independent oracle used to
// validate the graph-map combinatorics.

template <typename K>
struct ModuleHom {
  std::map<std::string, Matrix<K>> blocks;  // per-vertex maps

  std::vector<K> apply(PointedElement<K> const& x) const {
    return blocks.at(x.vertex).apply(x.coords);
  }
};

namespace detail {

// Ordering of the unknowns of a hom system: per vertex, row-major blocks.
template <typename K>
struct HomSystem {
  std::vector<std::string> vertices;
  std::map<std::string, std::size_t> offset;  // vertex -> first unknown
  std::size_t unknowns = 0;

  HomSystem(FDModule<K> const& From, FDModule<K> const& To) {
    for (auto const& v : From.algebra().vertices()) {
      vertices.push_back(v.id);
      offset[v.id] = unknowns;
      unknowns += To.dim(v.id) * From.dim(v.id);
    }
  }

  std::size_t cell(FDModule<K> const& From, FDModule<K> const& To,
                   std::string const& v, std::size_t row, std::size_t col) const {
    return offset.at(v) + row * From.dim(v) + col;
  }

  // rows of the constraint matrix: F_{target} m_From(a) = m_To(a) F_{source}
  Matrix<K> constraints(FDModule<K> const& From, FDModule<K> const& To) const {
    std::size_t rows = 0;
    for (auto const& a : From.algebra().arrows())
      rows += To.dim(a.target) * From.dim(a.source);
    Matrix<K> sys(rows, unknowns);
    std::size_t r = 0;
    for (auto const& a : From.algebra().arrows()) {
      auto const& mf = From.action(a.name);
      auto const& mt = To.action(a.name);
      for (std::size_t i = 0; i < To.dim(a.target); ++i)
        for (std::size_t j = 0; j < From.dim(a.source); ++j) {
          // sum_k F_tgt(i,k) mf(k,j) - sum_k mt(i,k) F_src(k,j) = 0
          for (std::size_t k = 0; k < From.dim(a.target); ++k)
            if (mf(k, j) != K(0))
              sys(r, cell(From, To, a.target, i, k)) += mf(k, j);
          for (std::size_t k = 0; k < To.dim(a.source); ++k)
            if (mt(i, k) != K(0))
              sys(r, cell(From, To, a.source, k, j)) -= mt(i, k);
          ++r;
        }
    }
    return sys;
  }

  ModuleHom<K> unpack(FDModule<K> const& From, FDModule<K> const& To,
                      std::vector<K> const& sol) const {
    ModuleHom<K> h;
    for (auto const& v : vertices) {
      Matrix<K> b(To.dim(v), From.dim(v));
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
          b(i, j) = sol[cell(From, To, v, i, j)];
      h.blocks[v] = std::move(b);
    }
    return h;
  }
};

}  // namespace detail

template <typename K>
std::vector<ModuleHom<K>> hom_space(FDModule<K> const& From,
                                    FDModule<K> const& To) {
  if (&From.algebra() != &To.algebra())
    throw std::invalid_argument("algebra mismatch");
  detail::HomSystem<K> sys(From, To);
  auto ker = linalg::kernel(sys.constraints(From, To));
  std::vector<ModuleHom<K>> out;
  for (auto const& v : ker.basis()) out.push_back(sys.unpack(From, To, v));
  return out;
}

template <typename K>
std::size_t hom_dimension_oracle(FDModule<K> const& From, FDModule<K> const& To) {
  if (&From.algebra() != &To.algebra())
    throw std::invalid_argument("algebra mismatch");
  detail::HomSystem<K> sys(From, To);
  return linalg::kernel(sys.constraints(From, To)).dim();
}

// Decides whether some homomorphism sends n to m; returns a witness.
template <typename K>
std::optional<ModuleHom<K>> pointed_morphism_exists(FDModule<K> const& N,
                                                    PointedElement<K> const& n,
                                                    FDModule<K> const& M,
                                                    PointedElement<K> const& m) {
  if (&N.algebra() != &M.algebra())
    throw std::invalid_argument("algebra mismatch");
  if (n.vertex != m.vertex)
    throw std::invalid_argument("pointed elements at different vertices");
  detail::HomSystem<K> sys(N, M);
  Matrix<K> hom = sys.constraints(N, M);
  std::size_t extra = M.dim(m.vertex);
  Matrix<K> full(hom.rows() + extra, sys.unknowns);
  for (std::size_t i = 0; i < hom.rows(); ++i)
    for (std::size_t j = 0; j < hom.cols(); ++j) full(i, j) = hom(i, j);
  std::vector<K> rhs(hom.rows() + extra, K(0));
  for (std::size_t i = 0; i < extra; ++i) {
    for (std::size_t k = 0; k < N.dim(n.vertex); ++k)
      if (n.coords[k] != K(0))
        full(hom.rows() + i, sys.cell(N, M, n.vertex, i, k)) = n.coords[k];
    rhs[hom.rows() + i] = m.coords[i];
  }
  auto sol = linalg::solve(full, rhs);
  if (!sol) return std::nullopt;
  return sys.unpack(N, M, *sol);
}

}  // namespace stralg

#endif
