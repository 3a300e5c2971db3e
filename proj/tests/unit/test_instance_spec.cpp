#include <gtest/gtest.h>

#include "jordan/io/build.hpp"
#include "jordan/io/instance_spec.hpp"
#include "jordan/lie/validators.hpp"

using namespace jordan;
using Q = Rational;

TEST(InstanceSpec, ParsesRectangularWithElement) {
  const auto spec = parse_instance_spec(R"({
    "name": "r", "kind": "rectangular", "parameters": {"p": 1, "q": 2},
    "deformation": {"kind": "element", "value": [["1"], ["-2/3"]]}})");
  EXPECT_EQ(spec.kind, "rectangular");
  EXPECT_EQ(spec_parameter(spec, "q"), 2);
  const auto b = build_instance<Q>(spec);
  EXPECT_EQ(b.pair.minus, (Shape{2, 1}));
  EXPECT_EQ(*deformation_element<Q>(spec, b.pair), (Matrix<Q>{{Q(1)}, {Q(-2, 3)}}));
}

TEST(InstanceSpec, TensorInstanceValidates) {
  // Scalar triple system T(x,y,z) = 2xyz as a 1x1 tensor.
  const auto spec = parse_instance_spec(R"({
    "name": "line", "kind": "tensor",
    "structure_tensor": {"plus_shape": [1, 1], "minus_shape": [1, 1], "plus": [[[["2"]]]]}})");
  const auto b = build_instance<Q>(spec);
  ASSERT_TRUE(b.jts.has_value());
  EXPECT_TRUE(validate_jts(*b.jts).all_pass());
  EXPECT_EQ(triple(*b.jts, Matrix<Q>(1, 1, {Q(3)}), Matrix<Q>(1, 1, {Q(1)}), Matrix<Q>(1, 1, {Q(1)})),
            Matrix<Q>(1, 1, {Q(6)}));
}

TEST(InstanceSpec, Errors) {
  EXPECT_THROW(parse_instance_spec("{"), ParseError);
  EXPECT_THROW(parse_instance_spec(R"({"name": "x"})"), ParseError);
  EXPECT_THROW(parse_instance_spec(R"({"kind": "octonion"})"), UnknownInstance);
  EXPECT_THROW(parse_instance_spec(R"({"kind": "grassmann", "parameters": {"p": 2, "q": 2}})"), ParseError);
  const auto spec = parse_instance_spec(R"({"kind": "rectangular", "parameters": {"p": 1}})");
  EXPECT_THROW(build_instance<Q>(spec), ParseError);
  const auto bad = parse_instance_spec(R"({"kind": "algebra", "parameters": {"family": "octonion"}})");
  EXPECT_THROW(build_instance<Q>(bad), UnknownInstance);
}

TEST(InstanceSpec, BadScalarIsParseError) {
  const auto spec = parse_instance_spec(R"({
    "kind": "rectangular", "parameters": {"p": 1, "q": 1},
    "deformation": {"kind": "element", "value": [["one"]]}})");
  const auto b = build_instance<Q>(spec);
  EXPECT_THROW(deformation_element<Q>(spec, b.pair), ParseError);
}

TEST(RingSelector, Parses) {
  EXPECT_EQ(parse_ring_selector("q").kind, RingSelector::Kind::Rational);
  EXPECT_EQ(parse_ring_selector("f64").kind, RingSelector::Kind::Float);
  const auto g = parse_ring_selector("gf:7");
  EXPECT_EQ(g.kind, RingSelector::Kind::PrimeField);
  EXPECT_EQ(g.modulus, 7U);
  EXPECT_EQ(to_string(g), "gf:7");
  EXPECT_THROW(parse_ring_selector("gf:3"), ParseError);
  EXPECT_THROW(parse_ring_selector("gf:2"), ParseError);
  EXPECT_THROW(parse_ring_selector("gf:15"), ParseError);
  EXPECT_THROW(parse_ring_selector("z"), ParseError);
}
