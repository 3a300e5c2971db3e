#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "jordan/linalg/matrix.hpp"
#include "jordan/report.hpp"
#include "jordan/scalar/parse.hpp"

namespace jordan {

/// Residual of a multilinear or polynomial identity; zero means it holds.
template <class S>
using IdentityResidual = std::function<Matrix<S>(const std::vector<Matrix<S>>&)>;

namespace detail {

template <class S>
Witness make_witness(const std::vector<Matrix<S>>& args, const Matrix<S>& residual, std::vector<std::size_t> basis) {
  Witness w;
  w.basis = std::move(basis);
  for (const auto& a : args) w.arguments.push_back(coordinate_strings(a));
  w.discrepancy = to_string(residual);
  return w;
}

}  // namespace detail

/// Evaluates the identity on every tuple of basis elements, one slot shape
/// per argument. Sufficient for identities that are multilinear.
template <class S>
AxiomResult check_on_basis(const std::string& name, const IdentityResidual<S>& residual,
                           const std::vector<Shape>& slots, std::size_t cap = kDefaultWitnessCap) {
  AxiomResult r{name, true, 0, {}};
  std::vector<std::size_t> idx(slots.size(), 0);
  for (const auto& s : slots)
    if (s.size() == 0) return r;
  while (true) {
    std::vector<Matrix<S>> args;
    args.reserve(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) args.push_back(Matrix<S>::unit(slots[k], idx[k]));
    const Matrix<S> d = residual(args);
    ++r.checked;
    if (!d.is_zero_matrix()) {
      r.pass = false;
      if (r.witnesses.size() < cap) r.witnesses.push_back(detail::make_witness(args, d, idx));
    }
    std::size_t k = slots.size();
    while (k > 0) {
      --k;
      if (++idx[k] < slots[k].size()) break;
      idx[k] = 0;
      if (k == 0) return r;
    }
    if (slots.empty()) return r;
  }
}

/// Evaluates the identity on the Cartesian product of the given sets.
template <class S>
AxiomResult check_on_elements(const std::string& name, const IdentityResidual<S>& residual,
                              const std::vector<std::vector<Matrix<S>>>& sets, std::size_t cap = kDefaultWitnessCap) {
  AxiomResult r{name, true, 0, {}};
  for (const auto& s : sets)
    if (s.empty()) return r;
  std::vector<std::size_t> idx(sets.size(), 0);
  while (true) {
    std::vector<Matrix<S>> args;
    args.reserve(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k) args.push_back(sets[k][idx[k]]);
    const Matrix<S> d = residual(args);
    ++r.checked;
    if (!d.is_zero_matrix()) {
      r.pass = false;
      if (r.witnesses.size() < cap) r.witnesses.push_back(detail::make_witness(args, d, {}));
    }
    std::size_t k = sets.size();
    while (k > 0) {
      --k;
      if (++idx[k] < sets[k].size()) break;
      idx[k] = 0;
      if (k == 0) return r;
    }
    if (sets.empty()) return r;
  }
}

/// Re-evaluates a recorded witness; the result is nonzero for a genuine one.
template <class S>
Matrix<S> replay(const IdentityResidual<S>& residual, const Witness& w, const std::vector<Shape>& slots) {
  if (w.arguments.size() != slots.size()) throw InvalidInput("witness arity does not match the identity");
  std::vector<Matrix<S>> args;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (w.arguments[k].size() != slots[k].size()) throw ShapeMismatch("witness argument has wrong size");
    Matrix<S> m(slots[k]);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = parse_scalar<S>(w.arguments[k][i]);
    args.push_back(std::move(m));
  }
  return residual(args);
}

}  // namespace jordan
