#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jordan/errors.hpp"
#include "jordan/report.hpp"

namespace jordan {

/// Set with a (partial) multiplication μ(x,y) = σ_x(y).
template <class P>
struct ReflectionSpace {
  std::string name;
  std::function<bool(const P&)> member;
  std::function<P(const P&, const P&)> mu;
  std::function<bool(const P&, const P&)> equal;
  std::function<std::string(const P&)> describe;
};

/// Base point o, quadratic representation 𝒬(x)y and inversion σ_o.
template <class P>
struct PointedSpaceData {
  std::string name;
  P base;
  std::function<bool(const P&)> member;
  std::function<P(const P&, const P&)> quad;
  std::function<P(const P&)> inversion;
  std::function<bool(const P&, const P&)> equal;
  std::function<std::string(const P&)> describe;
};

/// μ(x,y) = 𝒬(x)σ_o(y).
template <class P>
P mu_from_pointed(const PointedSpaceData<P>& d, const P& x, const P& y) {
  if (!d.member(x) || !d.member(y)) throw OutOfDomain("point outside the pointed space " + d.name);
  return d.quad(x, d.inversion(y));
}

template <class P>
ReflectionSpace<P> reflection_from_pointed(const PointedSpaceData<P>& d) {
  return {d.name, d.member, [d](const P& x, const P& y) { return mu_from_pointed(d, x, y); }, d.equal, d.describe};
}

/// Inverse construction at base point o: 𝒬(x) = σ_x σ_o and σ_o(y) = μ(o,y).
template <class P>
PointedSpaceData<P> pointed_from_reflection(const ReflectionSpace<P>& m, const P& o) {
  if (!m.member(o)) throw OutOfDomain("base point outside " + m.name);
  auto mu = m.mu;
  return {m.name, o, m.member, [mu, o](const P& x, const P& y) { return mu(x, mu(o, y)); },
          [mu, o](const P& y) { return mu(o, y); }, m.equal, m.describe};
}

/// The same space pointed at a: 𝒬_a(x) = 𝒬(x)𝒬(a)⁻¹ and σ_a(y) = μ(a,y),
/// using 𝒬(a)⁻¹ = σ_o σ_a.
template <class P>
PointedSpaceData<P> isotopy_quadratic(const PointedSpaceData<P>& d, const P& a) {
  if (!d.member(a)) throw OutOfDomain("new base point outside " + d.name);
  auto quad = d.quad;
  auto inv = d.inversion;
  auto mu = [quad, inv](const P& x, const P& y) { return quad(x, inv(y)); };
  return {d.name + "@a", a, d.member, [quad, inv, mu, a](const P& x, const P& y) { return quad(x, inv(mu(a, y))); },
          [mu, a](const P& y) { return mu(a, y); }, d.equal, d.describe};
}

namespace detail {

template <class P>
void record(AxiomResult& r, bool ok, std::vector<std::string> args, const std::string& what) {
  ++r.checked;
  if (ok) return;
  r.pass = false;
  if (r.witnesses.size() < kDefaultWitnessCap) {
    Witness w;
    for (auto& a : args) w.arguments.push_back({std::move(a)});
    w.discrepancy = what;
    r.witnesses.push_back(std::move(w));
  }
}

}  // namespace detail

/// S1 σ_x(x) = x, S2 σ_x σ_x = id, S3 σ_x σ_y σ_x = σ_{σ_x(y)} on all
/// pairs/triples of the given member points.
template <class P>
std::vector<AxiomResult> check_reflection_axioms(const ReflectionSpace<P>& m, const std::vector<P>& pts) {
  AxiomResult s1{"S1", true, 0, {}}, s2{"S2", true, 0, {}}, s3{"S3", true, 0, {}};
  for (const auto& x : pts) {
    detail::record<P>(s1, m.equal(m.mu(x, x), x), {m.describe(x)}, "mu(x,x) != x");
    for (const auto& y : pts) {
      const P sxy = m.mu(x, y);
      detail::record<P>(s2, m.equal(m.mu(x, sxy), y), {m.describe(x), m.describe(y)}, "mu(x,mu(x,y)) != y");
      for (const auto& z : pts) {
        const P lhs = m.mu(x, m.mu(y, m.mu(x, z)));
        const P rhs = m.mu(sxy, z);
        detail::record<P>(s3, m.equal(lhs, rhs), {m.describe(x), m.describe(y), m.describe(z)},
                          "sxsysx(z) != s_{sx(y)}(z)");
      }
    }
  }
  return {s1, s2, s3};
}

/// SB1 𝒬(𝒬(x)y) = 𝒬(x)𝒬(y)𝒬(x), SB2 𝒬(x⁻¹) = 𝒬(x)⁻¹, SB3 x⁻¹ = 𝒬(x)⁻¹x,
/// with maps compared pointwise on the same point set.
template <class P>
std::vector<AxiomResult> check_pointed_axioms(const PointedSpaceData<P>& d, const std::vector<P>& pts) {
  AxiomResult b1{"SB1", true, 0, {}}, b2{"SB2", true, 0, {}}, b3{"SB3", true, 0, {}};
  for (const auto& x : pts) {
    const P xinv = d.inversion(x);
    detail::record<P>(b3, d.equal(d.quad(x, xinv), x), {d.describe(x)}, "Q(x)x^-1 != x");
    for (const auto& z : pts) {
      detail::record<P>(b2, d.equal(d.quad(xinv, d.quad(x, z)), z), {d.describe(x), d.describe(z)},
                        "Q(x^-1)Q(x)z != z");
    }
    for (const auto& y : pts) {
      const P qxy = d.quad(x, y);
      for (const auto& z : pts) {
        const P lhs = d.quad(qxy, z);
        const P rhs = d.quad(x, d.quad(y, d.quad(x, z)));
        detail::record<P>(b1, d.equal(lhs, rhs), {d.describe(x), d.describe(y), d.describe(z)},
                          "Q(Q(x)y)z != Q(x)Q(y)Q(x)z");
      }
    }
  }
  return {b1, b2, b3};
}

/// Round trip on sample points: rebuilding (𝒬, σ_o) from μ
/// reproduces the original maps.
template <class P>
AxiomResult check_round_trip(const PointedSpaceData<P>& d, const std::vector<P>& pts) {
  AxiomResult r{"pointed_round_trip", true, 0, {}};
  const PointedSpaceData<P> back = pointed_from_reflection(reflection_from_pointed(d), d.base);
  for (const auto& x : pts) {
    detail::record<P>(r, d.equal(back.inversion(x), d.inversion(x)), {d.describe(x)}, "inversion differs");
    for (const auto& y : pts) {
      detail::record<P>(r, d.equal(back.quad(x, y), d.quad(x, y)), {d.describe(x), d.describe(y)},
                        "quadratic map differs");
    }
  }
  return r;
}

}  // namespace jordan
