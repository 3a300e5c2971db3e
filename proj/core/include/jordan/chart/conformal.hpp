#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jordan/core/differential.hpp"
#include "jordan/core/jordan_pair.hpp"
#include "jordan/core/scalar_extend.hpp"
#include "jordan/errors.hpp"

namespace jordan {

/// One generator of a partial conformal map on the V⁺ chart, together with
/// its companion action on V⁻ used for paired evaluation:
///
///   Translate(v)       x ↦ x + v      b ↦ b^v
///   QuasiTranslate(a)  x ↦ x^a        b ↦ b + a
///   Linear(h, h')      x ↦ h x        b ↦ h' b
///   Negate             x ↦ −x         b ↦ −b
///   Dilate(r)          x ↦ r x        b ↦ r b
template <class S>
struct Generator {
  enum class Kind { Translate, QuasiTranslate, Linear, Negate, Dilate };

  Kind kind = Kind::Negate;
  Matrix<S> element;
  std::optional<LinearOperator<S>> plus_map;
  std::optional<LinearOperator<S>> minus_map;
  S factor = S(1);

  static Generator translate(Matrix<S> v) { return {Kind::Translate, std::move(v), {}, {}, S(1)}; }
  static Generator quasi_translate(Matrix<S> a) { return {Kind::QuasiTranslate, std::move(a), {}, {}, S(1)}; }
  static Generator linear(LinearOperator<S> h, std::optional<LinearOperator<S>> h_minus = std::nullopt) {
    return {Kind::Linear, Matrix<S>(), std::move(h), std::move(h_minus), S(1)};
  }
  static Generator negate() { return {Kind::Negate, Matrix<S>(), {}, {}, S(1)}; }
  static Generator dilate(S r) {
    if (!is_unit(r)) throw NonUnit("dilation factor must be a unit");
    return {Kind::Dilate, Matrix<S>(), {}, {}, std::move(r)};
  }
};

template <class S>
std::string generator_name(const Generator<S>& g) {
  using K = typename Generator<S>::Kind;
  switch (g.kind) {
    case K::Translate:
      return "translate";
    case K::QuasiTranslate:
      return "quasi_translate";
    case K::Linear:
      return "linear";
    case K::Negate:
      return "negate";
    case K::Dilate:
      return "dilate";
  }
  return "?";
}

/// Generators applied in list order (the first entry acts first).
template <class S>
using ConformalWord = std::vector<Generator<S>>;

template <class S>
ConformalWord<S> concat(ConformalWord<S> a, const ConformalWord<S>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Value of a word at a point, or the generator index where it left the
/// chart together with the point it was applied to.
template <class S>
struct EvaluationOutcome {
  std::optional<Matrix<S>> value;
  std::size_t failed_at = 0;
  Matrix<S> witness_point;
  std::string reason;

  [[nodiscard]] bool defined() const { return value.has_value(); }
};

template <class S>
EvaluationOutcome<S> evaluate(const JordanPair<S>& p, const ConformalWord<S>& w, const Matrix<S>& x) {
  using K = typename Generator<S>::Kind;
  Matrix<S> cur = x;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& g = w[i];
    switch (g.kind) {
      case K::Translate:
        cur = cur + g.element;
        break;
      case K::QuasiTranslate:
        if (!is_quasi_invertible(p, cur, g.element)) {
          return {std::nullopt, i, cur, "B(x,a) singular"};
        }
        cur = quasi_inverse_plus(p, cur, g.element);
        break;
      case K::Linear:
        cur = (*g.plus_map)(cur);
        break;
      case K::Negate:
        cur = -cur;
        break;
      case K::Dilate:
        cur = g.factor * cur;
        break;
    }
  }
  return {cur, 0, Matrix<S>(), ""};
}

/// Companion evaluation on V⁻. Linear generators need their V⁻ map.
template <class S>
EvaluationOutcome<S> evaluate_minus(const JordanPair<S>& p, const ConformalWord<S>& w, const Matrix<S>& b) {
  using K = typename Generator<S>::Kind;
  Matrix<S> cur = b;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& g = w[i];
    switch (g.kind) {
      case K::Translate:
        if (!is_invertible(bergman_minus(p, cur, g.element))) {
          return {std::nullopt, i, cur, "B(b,v) singular"};
        }
        cur = quasi_inverse_minus(p, cur, g.element);
        break;
      case K::QuasiTranslate:
        cur = cur + g.element;
        break;
      case K::Linear:
        if (!g.minus_map) throw InvalidInput("linear generator has no V- component");
        cur = (*g.minus_map)(cur);
        break;
      case K::Negate:
        cur = -cur;
        break;
      case K::Dilate:
        cur = g.factor * cur;
        break;
    }
  }
  return {cur, 0, Matrix<S>(), ""};
}

/// (−1)_{z,b} = τ_z ∘ τ̃_{2τ̃_{−z}(b)} ∘ τ_z ∘ (−1): the point reflection at z
/// whose opposite point is b.
template <class S>
ConformalWord<S> dilation_word(const JordanPair<S>& p, const Matrix<S>& z, const Matrix<S>& b) {
  const Matrix<S> c = S(2) * quasi_inverse_minus(p, b, -z);
  return {Generator<S>::negate(), Generator<S>::translate(z), Generator<S>::quasi_translate(c),
          Generator<S>::translate(z)};
}

/// p(x) = τ̃_{−x}(a/2) on the V⁻ side.
template <class S>
Matrix<S> midpoint(const JordanPair<S>& p, const Matrix<S>& a, const Matrix<S>& x) {
  return quasi_inverse_minus(p, half<S>() * a, -x);
}

/// τ_{−x} ∘ (−1)_{2x,d} ∘ τ_x with d = a/2.
template <class S>
ConformalWord<S> sigma_word(const JordanPair<S>& p, const Matrix<S>& a, const Matrix<S>& x) {
  ConformalWord<S> w{Generator<S>::translate(x)};
  w = concat(w, dilation_word(p, S(2) * x, half<S>() * a));
  w.push_back(Generator<S>::translate(-x));
  return w;
}

/// σ₀ = −τ̃_{−a}.
template <class S>
ConformalWord<S> sigma0_word(const Matrix<S>& a) {
  return {Generator<S>::quasi_translate(-a), Generator<S>::negate()};
}

/// σ_x(y) via the geometric word; undefined outcomes are data.
template <class S>
EvaluationOutcome<S> sigma_geometric(const JordanPair<S>& p, const Matrix<S>& a, const Matrix<S>& x,
                                     const Matrix<S>& y) {
  ConformalWord<S> w;
  try {
    w = sigma_word(p, a, x);
  } catch (const NotQuasiInvertible&) {
    return {std::nullopt, 0, x, "dilation word undefined at x"};
  }
  return evaluate(p, w, y);
}

/// d_g(o) = B(v,w).
template <class S>
LinearOperator<S> denominator(const JordanPair<S>& p, const Matrix<S>& v, const Matrix<S>& w) {
  return bergman_plus(p, v, w);
}

template <class A>
ConformalWord<A> extend_word(const ConformalWord<BaseOf<A>>& w) {
  using S = BaseOf<A>;
  using K = typename Generator<S>::Kind;
  ConformalWord<A> out;
  for (const auto& g : w) {
    Generator<A> h;
    h.kind = static_cast<typename Generator<A>::Kind>(g.kind);
    if (g.kind == K::Translate || g.kind == K::QuasiTranslate) h.element = embed<A>(g.element);
    if (g.plus_map) h.plus_map = embed<A>(*g.plus_map);
    if (g.minus_map) h.minus_map = embed<A>(*g.minus_map);
    h.factor = ExtensionTraits<A>::embed(g.factor);
    out.push_back(std::move(h));
  }
  return out;
}

/// Translation part g(0) and linear part Dg(0) of a word at the origin.
template <class S>
struct AffinePart {
  Matrix<S> translation;
  LinearOperator<S> linear;
};

template <class S>
AffinePart<S> affine_part_at_origin(const JordanPair<S>& p, const ConformalWord<S>& w) {
  const Matrix<S> zero(p.plus);
  const auto at0 = evaluate(p, w, zero);
  if (!at0.defined()) throw OutOfDomain("word is not defined at the origin");
  using D = Dual<S>;
  const JordanPair<D> pd = scalar_extend<D>(p);
  const ConformalWord<D> wd = extend_word<D>(w);
  const LinearOperator<S> lin = differential<S>(
      [&](const Matrix<D>& y) {
        const auto r = evaluate(pd, wd, y);
        if (!r.defined()) throw OutOfDomain("word is not defined near the origin");
        return *r.value;
      },
      zero, p.plus);
  return {*at0.value, lin};
}

}  // namespace jordan
