#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jordan/core/differential.hpp"
#include "jordan/scalar/float_scalar.hpp"
#include "jordan/spaces/m_alpha_space.hpp"

namespace jordan {

/// C_x(u,v) = T_α(u, 2τ̃_{−x}(x), v), with τ̃ taken in T_α.
template <class S>
Matrix<S> christoffel(const MAlphaSpace<S>& m, const Matrix<S>& x, const Matrix<S>& u, const Matrix<S>& v) {
  require_m_alpha_member(m, x);
  const Matrix<S> c = S(2) * quasi_inverse_alpha(m, x, -x);
  return triple(m.t_alpha, u, c, v);
}

/// ε₁ε₂-coefficient of σ_x(x + ε₁u + ε₂v).
template <class S>
Matrix<S> christoffel_from_second_differential(const MAlphaSpace<S>& m, const Matrix<S>& x, const Matrix<S>& u,
                                               const Matrix<S>& v) {
  return second_differential_sigma(m, x, u, v).eps12;
}

/// g₀(u,v) = tr T(u,v,·).
template <class S>
S trace_form(const JordanTripleSystem<S>& t, const Matrix<S>& u, const Matrix<S>& v) {
  const LinearOperator<S> op = operator_from<S>(t.shape, t.shape, [&](const Matrix<S>& z) { return t.t(u, v, z); });
  return trace(op);
}

template <class S>
Matrix<S> trace_form_gram(const JordanTripleSystem<S>& t) {
  const auto basis = basis_of<S>(t.shape);
  Matrix<S> g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = trace_form(t, basis[i], basis[j]);
  return g;
}

template <class S>
std::size_t trace_form_rank(const JordanTripleSystem<S>& t) {
  return rank(trace_form_gram(t));
}

/// g_x(u,v) = g₀(u, B(x,−αx)⁻¹v) with g₀ the trace form of T_α.
template <class S>
S metric(const MAlphaSpace<S>& m, const Matrix<S>& x, const Matrix<S>& u, const Matrix<S>& v) {
  require_m_alpha_member(m, x);
  return trace_form(m.t_alpha, u, solve(bergman_alpha(m, x, -x), v));
}

/// γ_x(φ,ψ) = g₀(φ, B(x,−αx)ψ), defined at every x.
template <class S>
S cometric(const MAlphaSpace<S>& m, const Matrix<S>& x, const Matrix<S>& phi, const Matrix<S>& psi) {
  return trace_form(m.t, phi, bergman_alpha(m, x, -x)(psi));
}

inline double to_double(FloatScalar x) { return x.value(); }

/// |det B(x,−αx)|^{−1/2}.
inline double density(const MAlphaSpace<FloatScalar>& m, const Matrix<FloatScalar>& x) {
  require_m_alpha_member(m, x);
  return 1.0 / std::sqrt(std::abs(to_double(determinant(bergman_alpha(m, x, -x)))));
}

/// Central finite-difference Jacobian of f at x.
inline Matrix<FloatScalar> finite_difference_jacobian(
    const std::function<Matrix<FloatScalar>(const Matrix<FloatScalar>&)>& f, const Matrix<FloatScalar>& x,
    double step = 1e-5) {
  const std::size_t n = x.size();
  Matrix<FloatScalar> j;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<FloatScalar> xp = x;
    Matrix<FloatScalar> xm = x;
    xp[c] = xp[c] + FloatScalar(step);
    xm[c] = xm[c] - FloatScalar(step);
    const Matrix<FloatScalar> d = FloatScalar(1.0 / (2.0 * step)) * (f(xp) - f(xm));
    if (c == 0) j = Matrix<FloatScalar>(d.size(), n);
    for (std::size_t r = 0; r < d.size(); ++r) j(r, c) = d[r];
  }
  return j;
}

/// Relative distance ‖a − b‖∞ / max(1, ‖b‖∞).
inline double relative_error(const Matrix<FloatScalar>& a, const Matrix<FloatScalar>& b) {
  double diff = 0.0;
  double norm = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    diff = std::max(diff, std::abs(a[k].value() - b[k].value()));
    norm = std::max(norm, std::abs(b[k].value()));
  }
  return diff / std::max(1.0, norm);
}

/// g = σ_{x₁} ∘ σ_{x₂} ∘ … (last point acts first).
template <class S>
Matrix<S> apply_symmetries(const MAlphaSpace<S>& m, const std::vector<Matrix<S>>& centers, const Matrix<S>& z) {
  Matrix<S> cur = z;
  for (auto it = centers.rbegin(); it != centers.rend(); ++it) cur = m_alpha_mu(m, *it, cur);
  return cur;
}

struct DensityPointError {
  std::vector<std::string> point;
  double analytic = 0.0;
  double finite_difference = 0.0;
};

struct DensityInvarianceReport {
  std::vector<DensityPointError> points;
  double max_analytic = 0.0;
  double max_finite_difference = 0.0;
  std::size_t skipped = 0;
};

inline double max_abs(const Matrix<FloatScalar>& a) {
  double r = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) r = std::max(r, std::abs(a[k].value()));
  return r;
}

/// For each z: ρ(gz)·|det J_g(z)| against ρ(z), with J_g from dual numbers
/// and from central differences. Points where the analytic Jacobian exceeds
/// max_jacobian sit next to a pole and are skipped.
inline DensityInvarianceReport density_invariance_check(const MAlphaSpace<FloatScalar>& m,
                                                        const std::vector<Matrix<FloatScalar>>& centers,
                                                        const std::vector<Matrix<FloatScalar>>& samples,
                                                        double step = 1e-5, double max_jacobian = 1e2) {
  using D = Dual<FloatScalar>;
  const MAlphaSpace<D> md = extend_space<D>(m);
  std::vector<Matrix<D>> centers_d;
  for (const auto& c : centers) centers_d.push_back(embed<D>(c));
  DensityInvarianceReport rep;
  for (const auto& z : samples) {
    double rho_z = 0.0;
    double rho_gz = 0.0;
    Matrix<FloatScalar> jd;
    Matrix<FloatScalar> jf;
    try {
      const Matrix<FloatScalar> gz = apply_symmetries(m, centers, z);
      rho_z = density(m, z);
      rho_gz = density(m, gz);
      jd = differential<FloatScalar>([&](const Matrix<D>& y) { return apply_symmetries(md, centers_d, y); }, z, z.shape())
               .matrix();
      jf = finite_difference_jacobian([&](const Matrix<FloatScalar>& y) { return apply_symmetries(m, centers, y); }, z,
                                      step);
    } catch (const Error&) {
      ++rep.skipped;
      continue;
    }
    if (max_abs(jd) > max_jacobian) {
      ++rep.skipped;
      continue;
    }
    const auto err = [&](const Matrix<FloatScalar>& j) {
      return std::abs(rho_gz * std::abs(to_double(determinant(j))) - rho_z) / rho_z;
    };
    DensityPointError e{coordinate_strings(z), err(jd), err(jf)};
    rep.max_analytic = std::max(rep.max_analytic, e.analytic);
    rep.max_finite_difference = std::max(rep.max_finite_difference, e.finite_difference);
    rep.points.push_back(std::move(e));
  }
  return rep;
}

/// Dσ_x(y) from dual numbers against central differences, relative error;
/// empty when the analytic differential exceeds max_jacobian.
inline std::optional<double> sigma_differential_discrepancy(const MAlphaSpace<FloatScalar>& m,
                                                            const Matrix<FloatScalar>& x, const Matrix<FloatScalar>& y,
                                                            double step = 1e-5, double max_jacobian = 1e2) {
  using D = Dual<FloatScalar>;
  const MAlphaSpace<D> md = extend_space<D>(m);
  const Matrix<D> xd = embed<D>(x);
  const LinearOperator<FloatScalar> analytic =
      differential<FloatScalar>([&](const Matrix<D>& v) { return m_alpha_mu(md, xd, v); }, y, y.shape());
  if (max_abs(analytic.matrix()) > max_jacobian) return std::nullopt;
  const Matrix<FloatScalar> fd =
      finite_difference_jacobian([&](const Matrix<FloatScalar>& v) { return m_alpha_mu(m, x, v); }, y, step);
  return relative_error(analytic.matrix(), fd);
}

}  // namespace jordan
