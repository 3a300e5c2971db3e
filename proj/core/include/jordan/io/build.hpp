#pragma once

#include <optional>
#include <string>

#include "jordan/catalog/grassmann.hpp"
#include "jordan/core/instances.hpp"
#include "jordan/core/jordan_algebra.hpp"
#include "jordan/errors.hpp"
#include "jordan/io/instance_spec.hpp"
#include "jordan/scalar/parse.hpp"

namespace jordan {

template <class S>
Matrix<S> parse_matrix(const ScalarRows& rows) {
  if (rows.empty() || rows.front().empty()) throw ParseError("matrix must be non-empty");
  Matrix<S> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ParseError("matrix rows have different lengths");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      try {
        m(i, j) = parse_scalar<S>(rows[i][j]);
      } catch (const InvalidInput& e) {
        throw ParseError("bad scalar '" + rows[i][j] + "': " + e.what());
      }
    }
  }
  return m;
}

template <class S>
StructureTensor<S> parse_tensor(const std::vector<std::string>& flat, std::size_t outer, std::size_t middle) {
  StructureTensor<S> c{outer, middle, {}};
  c.coefficients.reserve(flat.size());
  for (const auto& s : flat) {
    try {
      c.coefficients.push_back(parse_scalar<S>(s));
    } catch (const InvalidInput& e) {
      throw ParseError("bad tensor entry '" + s + "': " + e.what());
    }
  }
  return c;
}

/// The structures an instance spec yields over S. Every instance has a pair;
/// the triple system and algebra exist when the spec describes one.
template <class S>
struct BuiltInstance {
  JordanPair<S> pair;
  std::optional<JordanTripleSystem<S>> jts;
  std::optional<JordanAlgebra<S>> algebra;
};

template <class S>
BuiltInstance<S> build_instance(const InstanceSpec& spec) {
  const auto dim = [&](const char* key) { return static_cast<std::size_t>(spec_parameter(spec, key)); };
  if (spec.kind == "rectangular") {
    const std::size_t p = dim("p");
    const std::size_t q = dim("q");
    return {rectangular_pair<S>(p, q), rectangular_jts<S>(p, q), std::nullopt};
  }
  if (spec.kind == "tensor") {
    StructureTensor<S> tp = parse_tensor<S>(spec.tensor_plus, spec.plus_shape.size(), spec.minus_shape.size());
    if (spec.tensor_minus.empty()) {
      if (spec.plus_shape != spec.minus_shape) throw ParseError("tensor instance with distinct shapes needs 'minus'");
      const JordanTripleSystem<S> t = tensor_jts<S>(spec.name, spec.plus_shape, std::move(tp));
      return {as_pair(t), t, std::nullopt};
    }
    StructureTensor<S> tm = parse_tensor<S>(spec.tensor_minus, spec.minus_shape.size(), spec.plus_shape.size());
    return {tensor_pair<S>(spec.name, spec.plus_shape, spec.minus_shape, std::move(tp), std::move(tm)), std::nullopt,
            std::nullopt};
  }
  if (spec.kind == "algebra") {
    JordanAlgebra<S> j;
    if (spec.family == "full_matrix") {
      j = full_matrix_algebra<S>(dim("n"));
    } else if (spec.family == "symmetric_matrix") {
      j = symmetric_matrix_algebra<S>(dim("n"));
    } else if (spec.family == "scalar") {
      j = scalar_algebra<S>();
    } else {
      throw UnknownInstance("unknown algebra family '" + spec.family + "'");
    }
    return {pair_from_algebra(j), jts_from_algebra(j), j};
  }
  if (spec.kind == "jts") {
    JordanTripleSystem<S> t;
    if (spec.family == "rectangular") {
      t = rectangular_jts<S>(dim("rows"), dim("cols"));
    } else if (spec.family == "scalar") {
      t = scalar_jts<S>();
    } else {
      throw UnknownInstance("unknown triple system family '" + spec.family + "'");
    }
    return {as_pair(t), t, std::nullopt};
  }
  if (spec.kind == "grassmann") {
    const JordanTripleSystem<S> t = rectangular_jts<S>(dim("q"), dim("p"));
    return {as_pair(t), t, std::nullopt};
  }
  throw UnknownInstance("unknown instance kind '" + spec.kind + "'");
}

/// The deformation element a ∈ V⁻, if the spec has one.
template <class S>
std::optional<Matrix<S>> deformation_element(const InstanceSpec& spec, const JordanPair<S>& p) {
  if (!spec.deformation || spec.deformation->kind != "element") return std::nullopt;
  Matrix<S> a = parse_matrix<S>(spec.deformation->value);
  if (a.shape() != p.minus) {
    if (a.size() != p.minus.size()) throw ParseError("deformation element has the wrong shape");
    a = a.reshaped(p.minus);
  }
  return a;
}

/// The deformation operator α on the triple system's coordinates, if given.
template <class S>
std::optional<LinearOperator<S>> deformation_alpha(const InstanceSpec& spec, const JordanTripleSystem<S>& t) {
  if (!spec.deformation || spec.deformation->kind != "alpha") return std::nullopt;
  const Matrix<S> m = parse_matrix<S>(spec.deformation->value);
  if (m.rows() != t.shape.size() || m.cols() != t.shape.size()) {
    throw ParseError("alpha must be a " + std::to_string(t.shape.size()) + "x" + std::to_string(t.shape.size()) +
                     " matrix");
  }
  return LinearOperator<S>(t.shape, t.shape, m);
}

template <class S>
SplitBilinearForm<S> build_split_form(const InstanceSpec& spec) {
  if (!spec.beta) throw ParseError("instance has no 'beta'");
  try {
    return split_form<S>(parse_matrix<S>(spec.beta->b1), parse_matrix<S>(spec.beta->b2), spec.beta->skew);
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("bad beta: ") + e.what());
  } catch (const ShapeMismatch& e) {
    throw ParseError(std::string("bad beta: ") + e.what());
  }
}

}  // namespace jordan
