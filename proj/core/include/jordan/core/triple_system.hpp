#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <utility>

#include "jordan/core/jordan_pair.hpp"

namespace jordan {

namespace detail {
inline std::uint64_t next_instance_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}
}  // namespace detail

/// Linear Jordan triple system: one module V with a trilinear T satisfying
/// the unsigned Jordan pair identities. Copies share the id; every newly
/// constructed system gets a fresh one.
template <class S>
struct JordanTripleSystem {
  std::string name;
  Shape shape;
  Trilinear<S> t;
  std::uint64_t id = detail::next_instance_id();
};

template <class S>
JordanTripleSystem<S> make_jts(std::string name, Shape shape, Trilinear<S> t) {
  return {std::move(name), shape, std::move(t), detail::next_instance_id()};
}

/// The Jordan pair (V, V) with T⁺ = T⁻ = T.
template <class S>
JordanPair<S> as_pair(const JordanTripleSystem<S>& t) {
  return {t.name, t.shape, t.shape, t.t, t.t};
}

template <class S>
Matrix<S> triple(const JordanTripleSystem<S>& t, const Matrix<S>& x, const Matrix<S>& y, const Matrix<S>& z) {
  detail::expect_shape(x.shape(), t.shape, "T first argument");
  detail::expect_shape(y.shape(), t.shape, "T middle argument");
  detail::expect_shape(z.shape(), t.shape, "T last argument");
  return t.t(x, y, z);
}

template <class S>
Matrix<S> q_apply(const JordanTripleSystem<S>& t, const Matrix<S>& x, const Matrix<S>& y) {
  return half<S>() * triple(t, x, y, x);
}

template <class S>
LinearOperator<S> quadratic(const JordanTripleSystem<S>& t, const Matrix<S>& x) {
  return operator_from<S>(t.shape, t.shape, [&](const Matrix<S>& y) { return q_apply(t, x, y); });
}

template <class S>
LinearOperator<S> bergman(const JordanTripleSystem<S>& t, const Matrix<S>& x, const Matrix<S>& y) {
  return bergman_plus(as_pair(t), x, y);
}

template <class S>
Matrix<S> quasi_inverse(const JordanTripleSystem<S>& t, const Matrix<S>& x, const Matrix<S>& y) {
  return quasi_inverse_plus(as_pair(t), x, y);
}

}  // namespace jordan
