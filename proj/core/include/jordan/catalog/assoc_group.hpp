#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jordan/core/differential.hpp"
#include "jordan/core/jordan_pair.hpp"
#include "jordan/core/scalar_extend.hpp"
#include "jordan/errors.hpp"
#include "jordan/report.hpp"
#include "jordan/scalar/second_dual.hpp"

namespace jordan {

/// Associative unital algebra on a module shape.
template <class S>
struct AssociativeAlgebra {
  std::string name;
  Shape shape;
  Bilinear<S> product;
  Matrix<S> unit;
};

template <class S>
AssociativeAlgebra<S> matrix_algebra(std::size_t n) {
  if (n == 0) throw InvalidInput("matrix algebra needs n >= 1");
  return {"M(" + std::to_string(n) + ")", {n, n}, [](const Matrix<S>& x, const Matrix<S>& y) { return x * y; },
          Matrix<S>::identity(n)};
}

template <class A>
AssociativeAlgebra<A> scalar_extend(const AssociativeAlgebra<BaseOf<A>>& alg) {
  return {alg.name + "[ext]", alg.shape, extend_bilinear<A>(alg.product), embed<A>(alg.unit)};
}

template <class S>
LinearOperator<S> left_multiplication(const AssociativeAlgebra<S>& alg, const Matrix<S>& x) {
  return operator_from<S>(alg.shape, alg.shape, [&](const Matrix<S>& y) { return alg.product(x, y); });
}

/// G_a = {x : 1 + ax invertible} with x ◇ y = xay + x + y.
template <class S>
struct DeformedGroup {
  AssociativeAlgebra<S> algebra;
  Matrix<S> a;
};

template <class S>
DeformedGroup<S> deformed_group(AssociativeAlgebra<S> alg, Matrix<S> a) {
  detail::expect_shape(a.shape(), alg.shape, "deformation element");
  return {std::move(alg), std::move(a)};
}

template <class A>
DeformedGroup<A> scalar_extend(const DeformedGroup<BaseOf<A>>& g) {
  return {scalar_extend<A>(g.algebra), embed<A>(g.a)};
}

template <class S>
bool group_member(const DeformedGroup<S>& g, const Matrix<S>& x) {
  return is_invertible(left_multiplication(g.algebra, g.algebra.unit + g.algebra.product(g.a, x)));
}

template <class S>
void require_group_member(const DeformedGroup<S>& g, const Matrix<S>& x) {
  if (!group_member(g, x)) throw NotMember("1 + ax is not invertible for x = " + to_string(x));
}

template <class S>
Matrix<S> group_product_unchecked(const DeformedGroup<S>& g, const Matrix<S>& x, const Matrix<S>& y) {
  const auto& m = g.algebra.product;
  return m(m(x, g.a), y) + x + y;
}

template <class S>
Matrix<S> group_product(const DeformedGroup<S>& g, const Matrix<S>& x, const Matrix<S>& y) {
  require_group_member(g, x);
  require_group_member(g, y);
  return group_product_unchecked(g, x, y);
}

/// y with x ◇ y = 0, i.e. (1 + xa)y = −x.
template <class S>
Matrix<S> group_inverse(const DeformedGroup<S>& g, const Matrix<S>& x) {
  require_group_member(g, x);
  const auto& alg = g.algebra;
  return solve(left_multiplication(alg, alg.unit + alg.product(x, g.a)), -x);
}

/// [x,y]_a = xay − yax.
template <class S>
Matrix<S> deformed_assoc_bracket(const AssociativeAlgebra<S>& alg, const Matrix<S>& a, const Matrix<S>& x,
                                 const Matrix<S>& y) {
  const auto& m = alg.product;
  return m(m(x, a), y) - m(m(y, a), x);
}

/// Ad(g) = D(h ↦ g ◇ h ◇ g⁻¹)(0) and det Ad(g).
template <class S>
std::pair<LinearOperator<S>, S> adjoint_and_modular(const DeformedGroup<S>& g, const Matrix<S>& x) {
  using D = Dual<S>;
  const Matrix<S> xi = group_inverse(g, x);
  const DeformedGroup<D> gd = scalar_extend<D>(g);
  const Matrix<D> xd = embed<D>(x);
  const Matrix<D> xid = embed<D>(xi);
  const LinearOperator<S> ad = differential<S>(
      [&](const Matrix<D>& h) { return group_product_unchecked(gd, group_product_unchecked(gd, xd, h), xid); },
      Matrix<S>(g.algebra.shape), g.algebra.shape);
  const S det = determinant(ad);
  return {ad, det};
}

/// Lie bracket of G_a at 0: the ε₁ε₂-part of the group commutator of
/// ε₁x and ε₂y.
template <class S>
Matrix<S> group_bracket_at_identity(const DeformedGroup<S>& g, const Matrix<S>& x, const Matrix<S>& y) {
  using T = SecondDual<S>;
  const DeformedGroup<T> gt = scalar_extend<T>(g);
  Matrix<T> u(x.shape());
  Matrix<T> v(y.shape());
  for (std::size_t k = 0; k < x.size(); ++k) {
    u[k] = T(S(0), x[k], S(0), S(0));
    v[k] = T(S(0), S(0), y[k], S(0));
  }
  const Matrix<T> uv = group_product_unchecked(gt, u, v);
  const Matrix<T> c = group_product_unchecked(gt, group_product_unchecked(gt, uv, group_inverse(gt, u)),
                                              group_inverse(gt, v));
  return components<T>(c)[3];
}

/// Closure, unit, inverses and associativity over a finite member list,
/// the last through the Cayley table so all triples are covered.
template <class S>
std::vector<AxiomResult> group_axiom_sweep(const DeformedGroup<S>& g, const std::vector<Matrix<S>>& members,
                                           std::size_t cap = kDefaultWitnessCap) {
  std::map<std::vector<std::string>, std::size_t> index;
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(coordinate_strings(members[i]), i);
  const std::size_t n = members.size();
  const Matrix<S> zero(g.algebra.shape);
  AxiomResult closure{"closure", true, 0, {}};
  AxiomResult unit{"unit", true, 0, {}};
  AxiomResult inv{"inverse", true, 0, {}};
  AxiomResult assoc{"associativity", true, 0, {}};
  const auto fail = [&](AxiomResult& r, std::vector<Matrix<S>> args, const Matrix<S>& d) {
    r.pass = false;
    if (r.witnesses.size() < cap) {
      Witness w;
      for (const auto& a : args) w.arguments.push_back(coordinate_strings(a));
      w.discrepancy = to_string(d);
      r.witnesses.push_back(std::move(w));
    }
  };
  constexpr std::size_t kOutside = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(n * n, kOutside);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix<S>& x = members[i];
    ++unit.checked;
    const Matrix<S> xu = group_product_unchecked(g, x, zero);
    const Matrix<S> ux = group_product_unchecked(g, zero, x);
    if (xu != x || ux != x) fail(unit, {x}, xu - x);
    ++inv.checked;
    const Matrix<S> y = group_inverse(g, x);
    const Matrix<S> l = group_product_unchecked(g, y, x);
    const Matrix<S> r = group_product_unchecked(g, x, y);
    if (!l.is_zero_matrix() || !r.is_zero_matrix() || !group_member(g, y)) fail(inv, {x, y}, l);
    for (std::size_t j = 0; j < n; ++j) {
      ++closure.checked;
      const Matrix<S> xy = group_product_unchecked(g, x, members[j]);
      const auto it = index.find(coordinate_strings(xy));
      if (it == index.end()) {
        fail(closure, {x, members[j]}, xy);
      } else {
        table[i * n + j] = it->second;
      }
    }
  }
  if (closure.pass) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ij = table[i * n + j];
        for (std::size_t k = 0; k < n; ++k) {
          ++assoc.checked;
          if (table[ij * n + k] != table[i * n + table[j * n + k]]) {
            fail(assoc, {members[i], members[j], members[k]},
                 members[table[ij * n + k]] - members[table[i * n + table[j * n + k]]]);
          }
        }
      }
  } else {
    assoc.pass = false;
  }
  return {assoc, closure, inv, unit};
}

/// e = diag(I_r, 0) in M(n) and the two subgroups of G_e:
///   L = {diag(α, 0)}            (a copy of GL(r) shifted by 1)
///   H = {(0 β; γ δ)}            (Heisenberg type)
template <class S>
Matrix<S> block_idempotent(std::size_t n, std::size_t r) {
  Matrix<S> e(n, n);
  for (std::size_t i = 0; i < r; ++i) e(i, i) = S(1);
  return e;
}

template <class S>
struct SemidirectFactors {
  Matrix<S> l;
  Matrix<S> h;
};

template <class S>
bool in_block_l(const Matrix<S>& x, std::size_t r) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if ((i >= r || j >= r) && !is_zero(x(i, j))) return false;
  return true;
}

template <class S>
bool in_block_h(const Matrix<S>& x, std::size_t r) {
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (!is_zero(x(i, j))) return false;
  return true;
}

/// x = l ◇ h with l ∈ L, h ∈ H: α = x₁₁, β' = (1+α)⁻¹x₁₂, γ' = x₂₁,
/// δ' = x₂₂.
template <class S>
SemidirectFactors<S> semidirect_factor(const DeformedGroup<S>& g, const Matrix<S>& x, std::size_t r) {
  require_group_member(g, x);
  const std::size_t n = x.rows();
  const Matrix<S> alpha = x.block(0, 0, r, r);
  Matrix<S> l(n, n);
  l.set_block(0, 0, alpha);
  Matrix<S> h = x;
  h.set_block(0, 0, Matrix<S>(r, r));
  if (r < n) h.set_block(0, r, solve(Matrix<S>::identity(r) + alpha, x.block(0, r, r, n - r)));
  return {l, h};
}

}  // namespace jordan
