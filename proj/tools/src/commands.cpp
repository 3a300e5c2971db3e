#include "jordan_tools/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "jordan/catalog/assoc_group.hpp"
#include "jordan/catalog/grassmann.hpp"
#include "jordan/chart/conformal.hpp"
#include "jordan/geometry/tensors.hpp"
#include "jordan/io/build.hpp"
#include "jordan/io/instance_spec.hpp"
#include "jordan/lie/validators.hpp"
#include "jordan/scalar/random.hpp"
#include "jordan/spaces/m_alpha_space.hpp"
#include "jordan/spaces/u_a_space.hpp"

namespace jordan::tools {
namespace {

using nlohmann::ordered_json;

struct Check {
  std::string name;
  std::string formula;
  bool pass = true;
  std::size_t checked = 0;
  ordered_json detail = ordered_json::object();
};

struct Outcome {
  std::vector<Check> checks;
  ordered_json outputs = ordered_json::object();
};

const std::map<std::string, std::string>& formulas() {
  static const std::map<std::string, std::string> f{
      {"LJP1+", "T+(x,a,y) = T+(y,a,x)"},
      {"LJP1-", "T-(a,x,b) = T-(b,x,a)"},
      {"LJP2+", "T(u,v,T(x,y,z)) = T(T(u,v,x),y,z) - T(x,T'(v,u,y),z) + T(x,y,T(u,v,z))"},
      {"LJP2-", "T(u,v,T(x,y,z)) = T(T(u,v,x),y,z) - T(x,T'(v,u,y),z) + T(x,y,T(u,v,z))"},
      {"LJT1", "T(x,y,z) = T(z,y,x)"},
      {"LJT2", "T(u,v,T(x,y,z)) = T(T(u,v,x),y,z) - T(x,T(v,u,y),z) + T(x,y,T(u,v,z))"},
      {"LT1", "[x,y,z] + [y,x,z] = 0"},
      {"LT2", "[x,y,z] + [y,z,x] + [z,x,y] = 0"},
      {"LT3", "[x,y,[u,v,w]] = [[x,y,u],v,w] + [u,[x,y,v],w] + [u,v,[x,y,w]]"},
      {"commutativity", "x.y = y.x"},
      {"J2", "x.(x^2.y) = x^2.(x.y)"},
      {"S1", "mu(x,x) = x"},
      {"S2", "mu(x,mu(x,y)) = y"},
      {"S3", "mu(x,mu(y,z)) = mu(mu(x,y),mu(x,z))"},
      {"associativity", "(x<>y)<>z = x<>(y<>z), x<>y = xay + x + y"},
      {"closure", "1 + a(x<>y) invertible"},
      {"inverse", "x<>y = 0 = y<>x for y = -(1+xa)^-1 x"},
      {"unit", "x<>0 = x = 0<>x"},
  };
  return f;
}

std::string formula_of(const std::string& axiom) {
  const auto it = formulas().find(axiom);
  return it == formulas().end() ? std::string() : it->second;
}

ordered_json witnesses_json(const std::vector<Witness>& ws) {
  ordered_json out = ordered_json::array();
  for (const auto& w : ws) {
    ordered_json j;
    if (!w.basis.empty()) j["basis"] = w.basis;
    j["arguments"] = w.arguments;
    j["discrepancy"] = w.discrepancy;
    out.push_back(std::move(j));
  }
  return out;
}

Check from_axiom(const std::string& prefix, const AxiomResult& a, ordered_json extra = ordered_json::object()) {
  Check c{prefix + a.name, formula_of(a.name), a.pass, a.checked, std::move(extra)};
  if (!a.witnesses.empty()) c.detail["witnesses"] = witnesses_json(a.witnesses);
  return c;
}

void add_axioms(Outcome& o, const std::string& prefix, const std::vector<AxiomResult>& axioms,
                const ordered_json& extra = ordered_json::object()) {
  for (const auto& a : axioms) o.checks.push_back(from_axiom(prefix, a, extra));
}

template <class S>
ordered_json points_json(const std::vector<Matrix<S>>& pts) {
  ordered_json out = ordered_json::array();
  for (const auto& p : pts) out.push_back(coordinate_strings(p));
  return out;
}

template <class S>
void record_failure(Check& c, std::vector<Matrix<S>> args, const std::string& discrepancy) {
  c.pass = false;
  if (!c.detail.contains("witnesses")) c.detail["witnesses"] = ordered_json::array();
  if (c.detail["witnesses"].size() >= kDefaultWitnessCap) return;
  ordered_json w;
  w["arguments"] = points_json(args);
  w["discrepancy"] = discrepancy;
  c.detail["witnesses"].push_back(std::move(w));
}

/// Every element of the module when the ring is finite and there are at
/// most `limit` of them.
template <class S>
std::optional<std::vector<Matrix<S>>> all_elements(Shape s, std::size_t limit) {
  if constexpr (std::is_same_v<S, PrimeFieldElement>) {
    const auto p = PrimeFieldElement::ambient_modulus();
    std::size_t total = 1;
    for (std::size_t k = 0; k < s.size(); ++k) {
      total *= p;
      if (total > limit) return std::nullopt;
    }
    return enumerate_elements(s);
  } else {
    (void)s;
    (void)limit;
    return std::nullopt;
  }
}

template <class S>
std::vector<Matrix<S>> sample_points(Shape s, Rng& rng, std::size_t n) {
  std::vector<Matrix<S>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_matrix<S>(s, rng));
  return out;
}

template <class S>
bool scalar_equal(const S& a, const S& b) {
  return is_zero(a - b);
}

template <class S>
ordered_json tensor_json(const StructureTensor<S>& c) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < c.outer; ++i)
    for (std::size_t j = 0; j < c.middle; ++j)
      for (std::size_t k = 0; k < c.outer; ++k)
        for (std::size_t l = 0; l < c.outer; ++l) {
          const S& v = c.coefficients[c.index(i, j, k, l)];
          if (!is_zero(v)) out.push_back(ordered_json::array({i, j, k, l, to_string(v)}));
        }
  return out;
}

// Stream ids for the per-check generators.
enum Stream : std::uint64_t {
  kStreamAlgebra = 1,
  kStreamMembers,
  kStreamGeometric,
  kStreamReflection,
  kStreamGroup,
  kStreamBracket,
  kStreamModular,
  kStreamGrassmann,
  kStreamGeometry,
  kStreamDensity,
};

constexpr std::size_t kElementSweepLimit = 16;
constexpr std::size_t kMembershipLimit = 100000;
constexpr std::size_t kReflectionPoints = 6;
constexpr std::size_t kReflectionAll = 12;

// ---------------------------------------------------------------------------

template <class S>
Outcome cmd_validate(const InstanceSpec& spec, const RunConfig& cfg) {
  const BuiltInstance<S> b = build_instance<S>(spec);
  Outcome o;
  add_axioms(o, "pair.", validate_jordan_pair(b.pair).axioms, {{"sweep", "basis"}});
  const auto plus = all_elements<S>(b.pair.plus, kElementSweepLimit);
  const auto minus = all_elements<S>(b.pair.minus, kElementSweepLimit);
  if (plus && minus) {
    add_axioms(o, "pair_elements.", validate_jordan_pair_on(b.pair, *plus, *minus).axioms, {{"sweep", "all elements"}});
  }
  if (b.jts) add_axioms(o, "jts.", validate_jts(*b.jts).axioms, {{"sweep", "basis"}});
  if (b.algebra) {
    AlgebraValidationOptions opt;
    opt.samples = cfg.samples;
    opt.seed = Rng(cfg.seed).split(kStreamAlgebra).seed();
    add_axioms(o, "algebra.", validate_jordan_algebra(*b.algebra, opt).axioms);
  }
  return o;
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<Matrix<S>> pick(const std::vector<Matrix<S>>& from, Rng& rng, std::size_t n) {
  std::vector<Matrix<S>> out;
  if (from.empty()) return out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(from[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(from.size()) - 1))]);
  return out;
}

/// Reflection points: all members when few, otherwise distinct seeded picks.
template <class S>
std::vector<Matrix<S>> reflection_points(const std::vector<Matrix<S>>& members, Rng& rng) {
  if (members.size() <= kReflectionAll) return members;
  std::vector<std::size_t> idx(members.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<Matrix<S>> out;
  for (std::size_t i = 0; i < kReflectionPoints; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(idx.size() - i) - 1));
    std::swap(idx[i], idx[j]);
    out.push_back(members[idx[i]]);
  }
  return out;
}

/// Members of a space: every element when finite and small, otherwise the
/// members among `samples` seeded draws.
template <class S, class Member>
std::vector<Matrix<S>> collect_members(Shape s, const Member& member, const RunConfig& cfg, ordered_json& out) {
  std::vector<Matrix<S>> candidates;
  bool exhaustive = false;
  if (auto all = all_elements<S>(s, kMembershipLimit)) {
    candidates = std::move(*all);
    exhaustive = true;
  } else {
    Rng rng = Rng(cfg.seed).split(kStreamMembers);
    candidates = sample_points<S>(s, rng, cfg.samples);
  }
  std::vector<Matrix<S>> members;
  for (const auto& x : candidates)
    if (member(x)) members.push_back(x);
  out = {{"exhaustive", exhaustive}, {"candidates", candidates.size()}, {"members", members.size()}};
  if (!exhaustive) out["sampled"] = points_json(candidates);
  return members;
}

template <class S>
void deform_element(Outcome& o, const BuiltInstance<S>& b, const Matrix<S>& a, const RunConfig& cfg) {
  const UaSpace<S> u = u_a_space(b.pair, a);
  ordered_json membership;
  const auto members =
      collect_members<S>(b.pair.plus, [&](const Matrix<S>& x) { return ua_member(u, x); }, cfg, membership);
  o.outputs["membership"] = membership;

  const LieTripleSystem<S> l = lts_of_u_a(b.pair, a);
  const StructureTensor<S> bt = bracket_tensor(l);
  o.outputs["bracket"] = {{"zero", is_zero_tensor(bt)}, {"nonzero_entries", tensor_json(bt)}};
  add_axioms(o, "ua_lts.", validate_lts(l).axioms);

  Check geo{"ua.sigma_geometric", "tau_{-x} o (-1)_{2x,a/2} o tau_x (y) = 2x + Q(x)a + B(x,-a) sigma_0(y)"};
  std::size_t undefined = 0;
  Rng rng = Rng(cfg.seed).split(kStreamGeometric);
  const auto xs = pick(members, rng, cfg.samples);
  const auto ys = pick(members, rng, cfg.samples);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto g = sigma_geometric(b.pair, a, xs[i], ys[i]);
    if (!g.defined()) {
      ++undefined;
      continue;
    }
    ++geo.checked;
    const Matrix<S> mu = ua_mu(u, xs[i], ys[i]);
    if (!points_equal(*g.value, mu)) record_failure<S>(geo, {xs[i], ys[i]}, to_string(*g.value - mu));
  }
  geo.detail["undefined"] = undefined;
  o.checks.push_back(std::move(geo));

  Rng rr = Rng(cfg.seed).split(kStreamReflection);
  const auto pts = reflection_points(members, rr);
  add_axioms(o, "ua.", check_reflection_axioms(ua_reflection(u), pts), {{"points", points_json(pts)}});
}

template <class S>
void deform_alpha(Outcome& o, const BuiltInstance<S>& b, const LinearOperator<S>& alpha, const RunConfig& cfg) {
  const JordanTripleSystem<S>& t = *b.jts;
  Check st{"alpha.structural", "T(ax,y,az) = aT(x,ay,z)"};
  st.checked = 1;
  if (const auto w = structurality_violation(t, alpha)) {
    st.pass = false;
    st.detail["witnesses"] = ordered_json::array({{{"basis", *w}, {"discrepancy", "T(ax,y,az) != aT(x,ay,z)"}}});
    o.checks.push_back(std::move(st));
    return;
  }
  o.checks.push_back(std::move(st));
  const StructuralTransformation<S> c = certify(t, alpha);
  const JordanTripleSystem<S> ta = alpha_homotope(t, c);
  add_axioms(o, "homotope.", validate_jts(ta).axioms);

  const StructureTensor<S> deformed = bracket_tensor(deformed_bracket(t, c));
  Check jl{"bracket.jordan_lie", "T(x,ay,z) - T(y,ax,z) = [x,y,z] of T_a", deformed == bracket_tensor(jordan_lie(ta)), 1};
  o.checks.push_back(std::move(jl));
  Check cd{"bracket.c_duality", "[x,y,z]_{-a} = -[x,y,z]_a",
           bracket_tensor(deformed_bracket(t, scaled(c, S(-1)))) == negated(deformed), 1};
  o.checks.push_back(std::move(cd));
  o.outputs["bracket"] = {{"zero", is_zero_tensor(deformed)}, {"nonzero_entries", tensor_json(deformed)}};

  const MAlphaSpace<S> m = m_alpha_space(t, c);
  ordered_json membership;
  const auto members =
      collect_members<S>(t.shape, [&](const Matrix<S>& x) { return m_alpha_member(m, x); }, cfg, membership);
  o.outputs["membership"] = membership;
  Rng rr = Rng(cfg.seed).split(kStreamReflection);
  const auto pts = reflection_points(members, rr);
  add_axioms(o, "m_alpha.", check_reflection_axioms(m_alpha_reflection(m), pts), {{"points", points_json(pts)}});
}

template <class S>
Outcome cmd_deform(const InstanceSpec& spec, const RunConfig& cfg) {
  if (!spec.deformation) throw ParseError("deform needs a 'deformation' in the instance spec");
  const BuiltInstance<S> b = build_instance<S>(spec);
  Outcome o;
  if (const auto a = deformation_element<S>(spec, b.pair)) {
    o.outputs["deformation"] = {{"kind", "element"}, {"value", coordinate_strings(*a)}};
    deform_element(o, b, *a, cfg);
  } else {
    if (!b.jts) throw ParseError("an alpha deformation needs a triple system instance");
    const auto alpha = deformation_alpha<S>(spec, *b.jts);
    o.outputs["deformation"] = {{"kind", "alpha"}, {"value", coordinate_strings(alpha->matrix())}};
    deform_alpha(o, b, *alpha, cfg);
  }
  return o;
}

// ---------------------------------------------------------------------------

template <class S>
std::optional<std::size_t> idempotent_rank(const Matrix<S>& a) {
  for (std::size_t r = 1; r < a.rows(); ++r)
    if (a == block_idempotent<S>(a.rows(), r)) return r;
  return std::nullopt;
}

template <class S>
Outcome cmd_group(const InstanceSpec& spec, const RunConfig& cfg) {
  const auto n = static_cast<std::size_t>(spec_parameter(spec, "n"));
  const AssociativeAlgebra<S> alg = matrix_algebra<S>(n);
  Matrix<S> a(n, n);
  if (spec.deformation) {
    if (spec.deformation->kind != "element") throw ParseError("group deformation must be an element");
    a = parse_matrix<S>(spec.deformation->value);
    if (a.shape() != alg.shape) throw ParseError("group deformation must be n x n");
  }
  const DeformedGroup<S> g = deformed_group(alg, a);
  Outcome o;
  o.outputs["deformation"] = coordinate_strings(a);

  std::vector<Matrix<S>> members;
  if (auto all = all_elements<S>(alg.shape, 1000)) {
    for (const auto& x : *all)
      if (group_member(g, x)) members.push_back(x);
    o.outputs["group_order"] = members.size();
    add_axioms(o, "group.", group_axiom_sweep(g, members), {{"sweep", "all members"}});
  } else {
    Rng rng = Rng(cfg.seed).split(kStreamGroup);
    for (const auto& x : sample_points<S>(alg.shape, rng, cfg.samples))
      if (group_member(g, x)) members.push_back(x);
    Check assoc{"group.associativity", formula_of("associativity")};
    Check inv{"group.inverse", formula_of("inverse")};
    Check unit{"group.unit", formula_of("unit")};
    const Matrix<S> zero(alg.shape);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& x = members[i];
      const auto& y = members[(i + 1) % members.size()];
      const auto& z = members[(i + 2) % members.size()];
      ++assoc.checked;
      const Matrix<S> d = group_product_unchecked(g, group_product_unchecked(g, x, y), z) -
                          group_product_unchecked(g, x, group_product_unchecked(g, y, z));
      if (!matrices_close(d, zero)) record_failure<S>(assoc, {x, y, z}, to_string(d));
      ++inv.checked;
      const Matrix<S> xi = group_inverse(g, x);
      const Matrix<S> e = group_product_unchecked(g, x, xi);
      if (!matrices_close(e, zero) || !matrices_close(group_product_unchecked(g, xi, x), zero)) {
        record_failure<S>(inv, {x}, to_string(e));
      }
      ++unit.checked;
      if (!matrices_close(group_product_unchecked(g, x, zero), x)) record_failure<S>(unit, {x}, "x<>0 != x");
    }
    for (Check* c : {&assoc, &inv, &unit}) {
      c->detail["sweep"] = "sampled members";
      c->detail["points"] = points_json(members);
      o.checks.push_back(std::move(*c));
    }
  }

  Check br{"group.bracket", "d/ds d/dt (sx)<>(ty)<>(sx)^-1<>(ty)^-1 = xay - yax"};
  Rng rb = Rng(cfg.seed).split(kStreamBracket);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const Matrix<S> x = random_matrix<S>(alg.shape, rb);
    const Matrix<S> y = random_matrix<S>(alg.shape, rb);
    ++br.checked;
    const Matrix<S> d = group_bracket_at_identity(g, x, y) - deformed_assoc_bracket(alg, a, x, y);
    if (!matrices_close(d, Matrix<S>(alg.shape))) record_failure<S>(br, {x, y}, to_string(d));
  }
  o.checks.push_back(std::move(br));

  Check um{"group.unimodular", "det Ad(g) = 1, Ad(g) = D(h -> g<>h<>g^-1)(0)"};
  Rng rm = Rng(cfg.seed).split(kStreamModular);
  const auto gs = pick(members, rm, cfg.samples);
  for (const auto& x : gs) {
    ++um.checked;
    const S det = adjoint_and_modular(g, x).second;
    if (!scalar_equal(det, S(1))) record_failure<S>(um, {x}, "det Ad(g) = " + to_string(det));
  }
  um.detail["points"] = points_json(gs);
  o.checks.push_back(std::move(um));

  if (const auto r = idempotent_rank(a)) {
    Check sd{"group.semidirect", "x = l<>h, l = diag(alpha,0), h = (0 b; c d), uniquely"};
    std::map<std::vector<std::string>, std::size_t> hits;
    for (const auto& x : members) {
      ++sd.checked;
      const auto f = semidirect_factor(g, x, *r);
      if (!in_block_l(f.l, *r) || !in_block_h(f.h, *r) || !group_member(g, f.l) ||
          !matrices_close(group_product_unchecked(g, f.l, f.h), x)) {
        record_failure<S>(sd, {x}, "factorization does not reproduce x");
      }
    }
    if (all_elements<S>(alg.shape, 1000)) {
      std::vector<Matrix<S>> ls;
      std::vector<Matrix<S>> hs;
      for (const auto& x : members) {
        if (in_block_l(x, *r)) ls.push_back(x);
        if (in_block_h(x, *r)) hs.push_back(x);
      }
      for (const auto& l : ls)
        for (const auto& h : hs) ++hits[coordinate_strings(group_product_unchecked(g, l, h))];
      bool unique = hits.size() == members.size();
      for (const auto& [k, v] : hits) unique = unique && v == 1;
      if (!unique) record_failure<S>(sd, {}, "L x H -> G is not a bijection");
      sd.detail["l_order"] = ls.size();
      sd.detail["h_order"] = hs.size();
      sd.detail["uniqueness"] = unique;
    }
    o.checks.push_back(std::move(sd));
  }
  return o;
}

// ---------------------------------------------------------------------------

template <class S>
bool subspaces_equal(const GrassmannPoint<S>& a, const GrassmannPoint<S>& b) {
  return a.basis().shape() == b.basis().shape() && points_equal(a.basis(), b.basis());
}

template <class S>
Outcome cmd_grassmann(const InstanceSpec& spec, const RunConfig& cfg) {
  const SplitBilinearForm<S> beta = build_split_form<S>(spec);
  const auto p = static_cast<std::size_t>(spec_parameter(spec, "p", static_cast<long>(beta.p())));
  const auto q = static_cast<std::size_t>(spec_parameter(spec, "q", static_cast<long>(beta.q())));
  if (p != beta.p() || q != beta.q()) throw ParseError("beta blocks do not match p and q");
  Outcome o;
  Check st{"grassmann.alpha_structural", "alpha(X) = B2 X B1^-1 structural for XY^tZ + ZY^tX", true, 1};
  std::optional<StructuralTransformation<S>> alpha;
  try {
    alpha = grassmann_alpha(beta);
  } catch (const NotStructural& e) {
    st.pass = false;
    st.detail["error"] = e.what();
  }
  o.checks.push_back(std::move(st));
  if (!alpha) return o;
  const MAlphaSpace<S> m = m_alpha_space(rectangular_jts<S>(q, p), *alpha);
  const Matrix<S> b1i = inverse(beta.b1);

  Rng rng = Rng(cfg.seed).split(kStreamGrassmann);
  Check comp{"grassmann.complement", "graph(X)^beta = cograph(-B1^-1 X^t B2)"};
  Check sig{"grassmann.sigma_chart", "sigma_E(F) via E + E^beta = graph(mu_alpha(X,Y))"};
  Check inv{"grassmann.involution", "sigma_E(sigma_E(F)) = F"};
  std::size_t attempts = 0;
  std::size_t off_chart = 0;
  std::vector<Matrix<S>> used;
  while (sig.checked < cfg.samples && attempts < 20 * cfg.samples) {
    ++attempts;
    const Matrix<S> x = random_matrix<S>({q, p}, rng);
    const Matrix<S> y = random_matrix<S>({q, p}, rng);
    ++comp.checked;
    if (!subspaces_equal(grassmann_complement(beta, graph(x)), cograph<S>(S(-1) * b1i * x.transpose() * beta.b2))) {
      record_failure<S>(comp, {x}, "complement differs from the cograph formula");
    }
    if (!m_alpha_member(m, x) || !m_alpha_member(m, y)) {
      ++off_chart;
      continue;
    }
    Matrix<S> mu;
    try {
      mu = m_alpha_mu(m, x, y);
    } catch (const NotMember&) {
      ++off_chart;
      continue;
    }
    ++sig.checked;
    used.push_back(x);
    used.push_back(y);
    const GrassmannPoint<S> s = grassmann_sigma(beta, graph(x), graph(y));
    if (!subspaces_equal(s, graph(mu))) record_failure<S>(sig, {x, y}, "subspace reflection leaves the chart value");
    ++inv.checked;
    if (!subspaces_equal(grassmann_sigma(beta, graph(x), s), graph(y))) {
      record_failure<S>(inv, {x, y}, "sigma_E is not an involution");
    }
  }
  if (sig.checked < cfg.samples) record_failure<S>(sig, {}, "too few transversal samples");
  sig.detail["compared"] = sig.checked;
  sig.detail["off_chart"] = off_chart;
  sig.detail["points"] = points_json(used);
  o.checks.push_back(std::move(comp));
  o.checks.push_back(std::move(sig));
  o.checks.push_back(std::move(inv));
  return o;
}

// ---------------------------------------------------------------------------

template <class S>
Outcome cmd_geometry(const InstanceSpec& spec, const RunConfig& cfg) {
  const BuiltInstance<S> b = build_instance<S>(spec);
  if (!b.jts) throw ParseError("geometry needs a triple system instance");
  const JordanTripleSystem<S>& t = *b.jts;
  LinearOperator<S> alpha = LinearOperator<S>::identity(t.shape);
  if (spec.deformation) {
    if (auto a = deformation_alpha<S>(spec, t)) {
      alpha = *a;
    } else {
      throw ParseError("geometry deformation must be an alpha");
    }
  }
  Outcome o;
  const StructuralTransformation<S> c = certify(t, alpha);
  const MAlphaSpace<S> m = m_alpha_space(t, c);
  o.outputs["trace_form_rank"] = trace_form_rank(t);
  o.outputs["deformed_trace_form_rank"] = trace_form_rank(m.t_alpha);
  o.outputs["dimension"] = t.shape.size();

  Rng rng = Rng(cfg.seed).split(kStreamGeometry);
  std::vector<Matrix<S>> xs;
  for (std::size_t i = 0; i < 20 * cfg.samples && xs.size() < cfg.samples; ++i) {
    Matrix<S> x = random_matrix<S>(t.shape, rng);
    if (m_alpha_member(m, x)) xs.push_back(std::move(x));
  }

  if constexpr (ScalarTraits<S>::is_approximate) {
    // Numeric samples stay in [-1/2, 1/2]^n, away from the singular set.
    for (auto& x : xs) x = S(0.5) * x;
    Check fd{"geometry.first_differential", "D sigma_x(y) by dual numbers = central differences (rel 1e-6)"};
    double worst = 0.0;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Matrix<S>& x = xs[i];
      const Matrix<S>& y = xs[(i + 1) % xs.size()];
      std::optional<double> err;
      try {
        err = sigma_differential_discrepancy(m, x, y);
      } catch (const Error&) {
        err.reset();
      }
      if (!err) {
        ++skipped;
        continue;
      }
      ++fd.checked;
      worst = std::max(worst, *err);
      if (*err > 1e-6) record_failure<S>(fd, {x, y}, std::to_string(*err));
    }
    fd.detail["max_relative_error"] = worst;
    fd.detail["skipped"] = skipped;
    o.checks.push_back(std::move(fd));

    Check origin{"geometry.density_origin", "density(0) = 1", true, 1};
    const double d0 = density(m, Matrix<S>(t.shape));
    origin.pass = std::abs(d0 - 1.0) < 1e-12;
    o.checks.push_back(std::move(origin));

    Rng rd = Rng(cfg.seed).split(kStreamDensity);
    Matrix<S> center = t.shape.size() == 1 ? Matrix<S>(1, 1, {S(0.5)}) : S(0.25) * random_matrix<S>(t.shape, rd);
    const std::vector<Matrix<S>> centers{center, Matrix<S>(t.shape)};
    std::vector<Matrix<S>> pts;
    const S spread = t.shape.size() == 1 ? S(2.0) : S(0.5);
    for (std::size_t i = 0; i < cfg.samples; ++i) pts.push_back(spread * random_matrix<S>(t.shape, rd));
    const DensityInvarianceReport rep = density_invariance_check(m, centers, pts);
    Check da{"geometry.density_invariance_analytic", "density(gz)|det Dg(z)| = density(z), g = s_c s_0 (rel 1e-8)",
             rep.max_analytic < 1e-8, rep.points.size()};
    Check df{"geometry.density_invariance_finite_difference",
             "density(gz)|det Jg(z)| = density(z), central differences (rel 1e-6)", rep.max_finite_difference < 1e-6,
             rep.points.size()};
    ordered_json per = ordered_json::array();
    for (const auto& e : rep.points) per.push_back({{"point", e.point}, {"analytic", e.analytic}, {"finite_difference", e.finite_difference}});
    da.detail = {{"max_relative_error", rep.max_analytic}, {"skipped", rep.skipped}, {"centers", points_json(centers)}};
    df.detail = {{"max_relative_error", rep.max_finite_difference}, {"skipped", rep.skipped}, {"per_point", per}};
    o.checks.push_back(std::move(da));
    o.checks.push_back(std::move(df));
  } else {
    Check ch{"geometry.christoffel", "T_a(u, 2 x^{-x}, v) = eps1 eps2 part of sigma_x(x + eps1 u + eps2 v)"};
    Check sym{"geometry.christoffel_symmetry", "C_x(u,v) = C_x(v,u)"};
    for (const auto& x : xs) {
      const Matrix<S> u = random_matrix<S>(t.shape, rng);
      const Matrix<S> v = random_matrix<S>(t.shape, rng);
      Matrix<S> lhs;
      Matrix<S> rhs;
      try {
        lhs = christoffel(m, x, u, v);
        rhs = christoffel_from_second_differential(m, x, u, v);
      } catch (const Error&) {
        continue;
      }
      ++ch.checked;
      if (lhs != rhs) record_failure<S>(ch, {x, u, v}, to_string(lhs - rhs));
      ++sym.checked;
      if (lhs != christoffel(m, x, v, u)) record_failure<S>(sym, {x, u, v}, "C_x(u,v) != C_x(v,u)");
    }
    ch.detail["points"] = points_json(xs);
    o.checks.push_back(std::move(ch));
    o.checks.push_back(std::move(sym));
  }
  return o;
}

// ---------------------------------------------------------------------------

template <class F>
Outcome with_ring(const RingSelector& r, F&& f) {
  switch (r.kind) {
    case RingSelector::Kind::Rational:
      return f.template operator()<Rational>();
    case RingSelector::Kind::Float:
      return f.template operator()<FloatScalar>();
    case RingSelector::Kind::PrimeField: {
      const PrimeFieldElement::ModulusScope scope(r.modulus);
      return f.template operator()<PrimeFieldElement>();
    }
  }
  throw ParseError("unknown ring");
}

std::pair<std::string, bool> render(const RunConfig& cfg, const InstanceSpec& spec, const std::string& ring, Outcome o) {
  std::sort(o.checks.begin(), o.checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  bool all = true;
  for (const auto& c : o.checks) all = all && c.pass;
  ordered_json doc;
  doc["command"] = cfg.command;
  doc["config"] = {{"ring", ring}, {"seed", cfg.seed}, {"samples", cfg.samples}, {"instance", spec.name}};
  doc["pass"] = all;
  doc["checks"] = ordered_json::array();
  for (auto& c : o.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["formula"] = c.formula;
    j["pass"] = c.pass;
    j["checked"] = c.checked;
    for (auto& [k, v] : c.detail.items()) j[k] = v;
    doc["checks"].push_back(std::move(j));
  }
  doc["outputs"] = std::move(o.outputs);
  return {doc.dump(2) + "\n", all};
}

}  // namespace

RunResult run_command(const RunConfig& config, const std::string& instance_json) {
  RunResult res;
  try {
    if (config.samples < 1) throw ParseError("--samples must be at least 1");
    const RingSelector ring = parse_ring_selector(config.ring);
    const InstanceSpec spec = parse_instance_spec(instance_json);
    Outcome o;
    if (config.command == "validate") {
      o = with_ring(ring, [&]<class S>() { return cmd_validate<S>(spec, config); });
    } else if (config.command == "deform") {
      o = with_ring(ring, [&]<class S>() { return cmd_deform<S>(spec, config); });
    } else if (config.command == "group") {
      o = with_ring(ring, [&]<class S>() { return cmd_group<S>(spec, config); });
    } else if (config.command == "grassmann") {
      o = with_ring(ring, [&]<class S>() { return cmd_grassmann<S>(spec, config); });
    } else if (config.command == "geometry") {
      o = with_ring(ring, [&]<class S>() { return cmd_geometry<S>(spec, config); });
    } else {
      throw ParseError("unknown command '" + config.command + "'");
    }
    auto [json, pass] = render(config, spec, to_string(ring), std::move(o));
    res.json = std::move(json);
    res.exit_code = pass ? kExitPass : kExitCheckFailed;
  } catch (const ParseError& e) {
    res = {kExitUsage, "", std::string("parse error: ") + e.what()};
  } catch (const UnknownInstance& e) {
    res = {kExitUsage, "", std::string("unknown instance: ") + e.what()};
  } catch (const Error& e) {
    res = {kExitUsage, "", std::string("error: ") + e.what()};
  }
  return res;
}

RunResult run_command(const RunConfig& config) {
  std::ifstream in(config.instance);
  if (!in) return {kExitUsage, "", "cannot read instance spec '" + config.instance + "'"};
  std::ostringstream os;
  os << in.rdbuf();
  return run_command(config, os.str());
}

}  // namespace jordan::tools
