#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jordan/core/jordan_pair.hpp"
#include "jordan/core/triple_system.hpp"
#include "jordan/errors.hpp"

namespace jordan {

/// Endomorphism α of a triple system, remembering which system (by id) it
/// was verified against: T(αx, y, αz) = αT(x, αy, z).
template <class S>
struct StructuralTransformation {
  LinearOperator<S> alpha;
  std::uint64_t certified_for = 0;

  [[nodiscard]] bool certified_against(const JordanTripleSystem<S>& t) const { return certified_for == t.id; }
};

/// Basis indices (i, j, k) where T(αe_i, e_j, αe_k) ≠ αT(e_i, αe_j, e_k).
template <class S>
std::optional<std::array<std::size_t, 3>> structurality_violation(const JordanTripleSystem<S>& t,
                                                                   const LinearOperator<S>& alpha) {
  if (alpha.domain() != t.shape || alpha.codomain() != t.shape) {
    throw ShapeMismatch("structural candidate must be an endomorphism of " + to_string(t.shape));
  }
  const auto basis = basis_of<S>(t.shape);
  std::vector<Matrix<S>> images;
  images.reserve(basis.size());
  for (const auto& e : basis) images.push_back(alpha(e));
  const std::size_t n = basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = i; k < n; ++k) {
        // Both sides are symmetric in the outer slots, so k >= i suffices.
        const Matrix<S> lhs = t.t(images[i], basis[j], images[k]);
        const Matrix<S> rhs = alpha(t.t(basis[i], images[j], basis[k]));
        if (!matrices_close(lhs, rhs)) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

template <class S>
bool is_structural(const JordanTripleSystem<S>& t, const LinearOperator<S>& alpha) {
  return !structurality_violation(t, alpha).has_value();
}

/// Verifies α against t and records the certificate. Throws NotStructural
/// naming the violating basis triple.
template <class S>
StructuralTransformation<S> certify(const JordanTripleSystem<S>& t, const LinearOperator<S>& alpha) {
  if (const auto w = structurality_violation(t, alpha)) {
    throw NotStructural("T(ax,y,az) != aT(x,ay,z) at basis triple (" + std::to_string((*w)[0]) + "," +
                        std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ") of " + t.name);
  }
  return {alpha, t.id};
}

/// Returns s unchanged if it is certified for t, otherwise re-verifies.
template <class S>
StructuralTransformation<S> ensure_certified(const JordanTripleSystem<S>& t, const StructuralTransformation<S>& s) {
  if (s.certified_against(t)) return s;
  return certify(t, s.alpha);
}

/// T_α(x,y,z) = T(x, αy, z).
template <class S>
JordanTripleSystem<S> alpha_homotope(const JordanTripleSystem<S>& t, const StructuralTransformation<S>& s) {
  const StructuralTransformation<S> c = ensure_certified(t, s);
  const Trilinear<S> base = t.t;
  const LinearOperator<S> alpha = c.alpha;
  return make_jts<S>(t.name + "_alpha", t.shape,
                     [base, alpha](const Matrix<S>& x, const Matrix<S>& y, const Matrix<S>& z) {
                       return base(x, alpha(y), z);
                     });
}

/// λα. Structurality is homogeneous of degree 2 on both sides, so the
/// certificate carries over.
template <class S>
StructuralTransformation<S> scaled(const StructuralTransformation<S>& s, const S& lambda) {
  return {lambda * s.alpha, s.certified_for};
}

/// Which members of the structure variety to emit.
template <class S>
struct StructureVarietyRequest {
  std::vector<S> scalars;                    ///< λ·id
  std::vector<Matrix<S>> quadratic;          ///< Q(a)
  std::vector<Matrix<S>> bergman_diagonal;   ///< B(x,x)
  bool signs = false;                        ///< ±id
};

/// Certified members named in the request, in request order. Each one is
/// verified on basis triples before it is returned.
template <class S>
std::vector<std::pair<std::string, StructuralTransformation<S>>> structure_variety_members(
    const JordanTripleSystem<S>& t, const StructureVarietyRequest<S>& req) {
  std::vector<std::pair<std::string, StructuralTransformation<S>>> out;
  const auto id = LinearOperator<S>::identity(t.shape);
  if (req.signs) {
    out.emplace_back("id", certify(t, id));
    out.emplace_back("-id", certify(t, -id));
  }
  for (const auto& l : req.scalars) out.emplace_back(to_string(l) + "*id", certify(t, l * id));
  for (const auto& a : req.quadratic) out.emplace_back("Q(" + to_string(a) + ")", certify(t, quadratic(t, a)));
  for (const auto& x : req.bergman_diagonal) {
    out.emplace_back("B(" + to_string(x) + "," + to_string(x) + ")", certify(t, bergman(t, x, x)));
  }
  return out;
}

/// Pair of maps f: V⁺ → W⁺, g: W⁻ → V⁻.
template <class S>
struct StructuralPair {
  LinearOperator<S> f;
  LinearOperator<S> g;
};

/// T_W⁺(fx, y, fz) = f T_V⁺(x, gy, z) and T_V⁻(gu, v, gw) = g T_W⁻(u, fv, w)
/// on all basis triples.
template <class S>
bool is_structural_pair(const StructuralPair<S>& fg, const JordanPair<S>& v, const JordanPair<S>& w) {
  const auto& f = fg.f;
  const auto& g = fg.g;
  if (f.domain() != v.plus || f.codomain() != w.plus || g.domain() != w.minus || g.codomain() != v.minus) {
    throw ShapeMismatch("structural pair maps do not match the two Jordan pairs");
  }
  const auto bvp = basis_of<S>(v.plus);
  const auto bwm = basis_of<S>(w.minus);
  for (const auto& x : bvp)
    for (const auto& y : bwm)
      for (const auto& z : bvp)
        if (!matrices_close(w.t_plus(f(x), y, f(z)), f(v.t_plus(x, g(y), z)))) return false;
  for (const auto& u : bwm)
    for (const auto& vv : bvp)
      for (const auto& ww : bwm)
        if (!matrices_close(v.t_minus(g(u), vv, g(ww)), g(w.t_minus(u, f(vv), ww)))) return false;
  return true;
}

/// (h⁺, h⁻) compatible with T± on basis triples.
template <class S>
bool is_pair_homomorphism(const LinearOperator<S>& hp, const LinearOperator<S>& hm, const JordanPair<S>& from,
                          const JordanPair<S>& to) {
  if (hp.domain() != from.plus || hp.codomain() != to.plus || hm.domain() != from.minus ||
      hm.codomain() != to.minus) {
    throw ShapeMismatch("homomorphism maps do not match the two Jordan pairs");
  }
  const auto bp = basis_of<S>(from.plus);
  const auto bm = basis_of<S>(from.minus);
  for (const auto& x : bp)
    for (const auto& y : bm)
      for (const auto& z : bp)
        if (!matrices_close(to.t_plus(hp(x), hm(y), hp(z)), hp(from.t_plus(x, y, z)))) return false;
  for (const auto& a : bm)
    for (const auto& x : bp)
      for (const auto& b : bm)
        if (!matrices_close(to.t_minus(hm(a), hp(x), hm(b)), hm(from.t_minus(a, x, b)))) return false;
  return true;
}

template <class S>
struct MixedPairResult {
  JordanPair<S> pair;     ///< (V⁺, W⁻)
  bool phi_is_homomorphism = false;  ///< (f, id): (V⁺,W⁻) → (W⁺,W⁻)
  bool psi_is_homomorphism = false;  ///< (id, g): (V⁺,W⁻) → (V⁺,V⁻)
};

/// The pair (V⁺, W⁻) with S⁺(a,b,c) = T_V⁺(a, gb, c), S⁻(u,v,w) = T_W⁻(u, fv, w)
/// together with the verification of the two canonical homomorphisms.
template <class S>
MixedPairResult<S> mixed_structural_pair(const StructuralPair<S>& fg, const JordanPair<S>& v, const JordanPair<S>& w) {
  if (!is_structural_pair(fg, v, w)) throw NotStructural("(f, g) is not a structural pair");
  const auto tvp = v.t_plus;
  const auto twm = w.t_minus;
  const auto f = fg.f;
  const auto g = fg.g;
  JordanPair<S> pair{"mixed(" + v.name + "," + w.name + ")", v.plus, w.minus,
                     [tvp, g](const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& c) { return tvp(a, g(b), c); },
                     [twm, f](const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& c) { return twm(a, f(b), c); }};
  MixedPairResult<S> r{pair};
  r.phi_is_homomorphism = is_pair_homomorphism(f, LinearOperator<S>::identity(w.minus), pair, w);
  r.psi_is_homomorphism = is_pair_homomorphism(LinearOperator<S>::identity(v.plus), g, pair, v);
  return r;
}

}  // namespace jordan
