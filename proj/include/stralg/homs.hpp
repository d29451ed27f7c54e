// Graph maps (simple string maps) between string modules: a basis of the
// homomorphism space indexed by common factor words that are quotient-closed
// in the source and submodule-closed in the target, together with the
// pointed-morphism solver used as the independent oracle.

#ifndef STRALG_HOMS_HPP_
#define STRALG_HOMS_HPP_

#include <optional>
#include <vector>

#include "modules.hpp"

namespace stralg {

// A factorization u = u_L c u_R, v = v_L c~ v_R with c~ = c or c^-1.
// Intervals are node ranges: nodes [u_from, u_to] of u map to nodes
// [v_from, v_to] of v (reversed when the orientation flips).
struct FactorTriple {
  std::size_t u_from, u_to;  // u node interval, u_to - u_from = |c|
  std::size_t v_from, v_to;  // v node interval
  bool reversed;             // c occurs inverted in v

  friend bool operator==(FactorTriple const&, FactorTriple const&) = default;
  friend auto operator<=>(FactorTriple const&, FactorTriple const&) = default;
};

// Closure conditions.  Quotient-closed interval of u: the letter entering
// from the left is direct (or absent) and the letter leaving to the right is
// inverse (or absent).  Submodule-closed interval of v: the mirror.
inline bool quotient_closed(FiniteWord const& u, std::size_t from,
                            std::size_t to) {
  if (from > 0 && !u[from - 1].is_direct()) return false;
  if (to < u.size() && u[to].is_direct()) return false;
  return true;
}

inline bool submodule_closed(FiniteWord const& v, std::size_t from,
                             std::size_t to) {
  if (from > 0 && v[from - 1].is_direct()) return false;
  if (to < v.size() && !v[to].is_direct()) return false;
  return true;
}

inline std::vector<FactorTriple> admissible_triples(
    AlgebraPresentation const& A, FiniteWord const& u, FiniteWord const& v) {
  std::vector<FactorTriple> out;
  for (std::size_t from = 0; from <= u.size(); ++from)
    for (std::size_t to = from; to <= u.size(); ++to) {
      if (!quotient_closed(u, from, to)) continue;
      std::size_t len = to - from;
      if (len == 0) {
        // empty common word: a peak of u onto a valley of v, same vertex
        for (std::size_t at = 0; at <= v.size(); ++at) {
          if (!submodule_closed(v, at, at)) continue;
          if (u.vertex_at(A, from) != v.vertex_at(A, at)) continue;
          out.push_back({from, to, at, at, false});
        }
        continue;
      }
      for (std::size_t vf = 0; vf + len <= v.size(); ++vf) {
        if (!submodule_closed(v, vf, vf + len)) continue;
        bool forward = true, backward = true;
        for (std::size_t k = 0; k < len; ++k) {
          if (!(v[vf + k] == u[from + k])) forward = false;
          if (!(v[vf + k] == u[to - 1 - k].inverse())) backward = false;
        }
        if (forward) out.push_back({from, to, vf, vf + len, false});
        if (backward) out.push_back({from, to, vf, vf + len, true});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename K>
struct GraphMap {
  FactorTriple triple;
  ModuleHom<K> hom;
};

template <typename K>
ModuleHom<K> graph_map_hom(AlgebraPresentation const& A,
                           StringModule<K> const& Mu,
                           StringModule<K> const& Mv,
                           FactorTriple const& t) {
  ModuleHom<K> h;
  for (auto const& vx : A.vertices())
    h.blocks[vx.id] =
        Matrix<K>(Mv.module().dim(vx.id), Mu.module().dim(vx.id));
  std::size_t len = t.u_to - t.u_from;
  for (std::size_t k = 0; k <= len; ++k) {
    auto const& [uv, ui] = Mu.node_location(t.u_from + k);
    std::size_t vnode = t.reversed ? t.v_to - k : t.v_from + k;
    auto const& [vv, vi] = Mv.node_location(vnode);
    if (uv != vv) throw std::logic_error("graph map node vertex mismatch");
    h.blocks.at(uv)(vi, ui) = K(1);
  }
  return h;
}

template <typename K>
std::vector<GraphMap<K>> hom_basis(AlgebraPresentation const& A,
                                   StringModule<K> const& Mu,
                                   StringModule<K> const& Mv) {
  std::vector<GraphMap<K>> out;
  for (auto const& t : admissible_triples(A, Mu.word(), Mv.word()))
    out.push_back({t, graph_map_hom(A, Mu, Mv, t)});
  return out;
}

// Whether a hom candidate really intertwines all arrow actions.
template <typename K>
bool is_module_hom(AlgebraPresentation const& A, FDModule<K> const& From,
                   FDModule<K> const& To, ModuleHom<K> const& h) {
  for (auto const& a : A.arrows()) {
    auto lhs = h.blocks.at(a.target) * From.action(a.name);
    auto rhs = To.action(a.name) * h.blocks.at(a.source);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace stralg

#endif
