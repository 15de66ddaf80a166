#include <gtest/gtest.h>

#include <cmath>

#include "contact/potential.hpp"
#include "contact/sampling.hpp"
#include "contact/symmetry.hpp"

using namespace contact;
using namespace contact::potential;
using geometry::Atlas;
using geometry::Interval;
using geometry::OneForm;

namespace {

Chart r3(double r = 1) { return Chart("R3", {"x", "y", "z"}, std::vector<Interval>(3, Interval::closed(-r, r))); }

std::shared_ptr<const complexify::TubeComplexification> tube_of(const Atlas& m, double r,
                                                                 const std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::string>>>& declared = {}) {
  return std::make_shared<const complexify::TubeComplexification>(complexify::complexify_atlas(m, r, {}, declared));
}

std::vector<Point> on_chart(const Chart& c, std::size_t per_axis, std::uint64_t seed, std::size_t chart = 0) {
  std::vector<Point> out;
  for (auto& x : sampling::lattice(c.box(), std::vector<std::size_t>(c.dim(), per_axis), seed)) out.push_back({chart, x});
  return out;
}

// Two stereographic charts of S¹ with u' = 1/u, and η = dθ written in each.
struct Circle {
  Atlas atlas;
  OneForm eta;
  std::shared_ptr<const complexify::TubeComplexification> tube;
};

Circle stereographic_circle() {
  const Chart n("N", {"u"}, {Interval::closed(-3, 3)});
  const Chart s("S", {"p"}, {Interval::closed(-3, 3)});
  Atlas atlas({n, s}, {{0, 1, {n.parse("1/u")}}, {1, 0, {s.parse("1/p")}}});
  OneForm eta({{n.parse("2/(1 + u^2)")}, {s.parse("-2/(1 + p^2)")}});
  auto tube = tube_of(atlas, 0.25,
                      {{0, 1, {"u/(u^2 + im_u^2)", "-im_u/(u^2 + im_u^2)"}}, {1, 0, {"p/(p^2 + im_p^2)", "-im_p/(p^2 + im_p^2)"}}});
  return {atlas, eta, tube};
}

symmetry::Action circle_rotation(const Chart& base, const Chart& tube) {
  symmetry::GroupModel g(symmetry::GroupKind::Torus, {"a"});
  symmetry::ChartAction ca{{expr::parse("theta + a", symmetry::action_scope(base, g))},
                           {expr::parse("theta + a", symmetry::action_scope(tube, g)), expr::parse("im_theta", symmetry::action_scope(tube, g))},
                           {}};
  return symmetry::Action(g, {base}, {tube}, {{ca}});
}

}  // namespace

TEST(LocalPotential, Examples) {
  const Chart plane("R2", {"x", "y"}, std::vector<Interval>(2, Interval::closed(-1, 1)));
  const auto t = tube_of(Atlas::single(plane), 0.5);
  const auto rho1 = local_potential(t->chart(0), std::vector<Expression>{plane.parse("1"), plane.parse("0")});
  const auto rho2 = local_potential(t->chart(0), std::vector<Expression>{plane.parse("0"), plane.parse("x")});
  for (const auto& p : on_chart(t->chart(0), 3, 5)) {
    EXPECT_DOUBLE_EQ(expr::evaluate(rho1, p.coords), p.coords[2]);
    EXPECT_DOUBLE_EQ(expr::evaluate(rho2, p.coords), p.coords[0] * p.coords[3]);
  }
  // η = dz + x dy gives ρ = w + x·v in tube coordinates (x, y, z, u, v, w).
  const auto t3 = tube_of(Atlas::single(r3()), 0.5);
  const auto eta = OneForm::on_chart(r3(), {"0", "x", "1"});
  const auto rho = local_potential(t3->chart(0), eta.coefficients(0));
  for (const auto& p : on_chart(t3->chart(0), 2, 6)) {
    const auto& z = p.coords;
    EXPECT_NEAR(expr::evaluate(rho, z), z[5] + z[0] * z[4], 1e-15);
  }
  const auto field = complexify::make_expr_field({rho});
  const auto r = extension_residual(*field, *t3, eta, on_chart(r3(), 10, 7));
  EXPECT_EQ(r.samples, 1000u);
  EXPECT_LT(r.vanishing, 1e-12);
  EXPECT_LT(r.pullback, 1e-12);
}

TEST(Patch, SingleChartTrivialPartitionIsIdentity) {
  const auto t = tube_of(Atlas::single(r3()), 0.5);
  const auto eta = OneForm::on_chart(r3(), {"0", "x", "1"});
  const auto patched = patch(t, PartitionOfUnity::trivial(t->base()), eta);
  const auto local = local_potential(t->chart(0), eta.coefficients(0));
  for (const auto& p : on_chart(t->chart(0), 2, 8)) EXPECT_DOUBLE_EQ(patched->value(0, p.coords), expr::evaluate(local, p.coords));
}

TEST(Patch, TwoChartCircle) {
  const auto c = stereographic_circle();
  const auto partition = PartitionOfUnity::boxes(c.atlas);
  const auto rho = patch(c.tube, partition, c.eta);
  std::vector<Point> samples;
  for (std::size_t chart = 0; chart < 2; ++chart)
    for (auto& x : sampling::lattice(c.atlas.chart(chart).box(), {256}, 9)) samples.push_back({chart, x});
  ASSERT_EQ(samples.size(), 512u);
  const auto part = check_partition(*rho, samples, true);
  EXPECT_LT(part.max_sum_defect, 1e-10);
  EXPECT_GE(part.min_value, 0.0);
  const auto r = extension_residual(*rho, *c.tube, c.eta, samples);
  EXPECT_LT(r.vanishing, 1e-12);
  EXPECT_LT(r.pullback, 1e-8);

  // Locality: near u = 0 the southern image 1/w leaves the southern tube, so
  // only the northern term contributes and ρ equals ρ_N.
  const auto local = local_potential(c.tube->chart(0), c.eta.coefficients(0));
  for (double v : {-0.2, 0.05, 0.2}) {
    const std::vector<double> z{0.0, v};
    EXPECT_DOUBLE_EQ(rho->value(0, z), expr::evaluate(local, z));
  }
}

TEST(Patch, CoverGapIsAnError) {
  const auto t = tube_of(Atlas::single(r3()), 0.5);
  PartitionOfUnity short_sum{{r3().parse("0.9")}, false};
  const auto rho = patch(t, short_sum, OneForm::on_chart(r3(), {"0", "x", "1"}));
  EXPECT_THROW(check_partition(*rho, on_chart(r3(), 2, 1), false), CoverGap);

  const auto c = stereographic_circle();
  PartitionOfUnity empty{{c.atlas.chart(0).parse("0"), c.atlas.chart(1).parse("0")}, true};
  const auto none = patch(c.tube, empty, c.eta);
  EXPECT_THROW(none->value(0, std::vector<double>{0.5, 0.0}), CoverGap);
}

TEST(Convexify, Examples) {
  const auto t = tube_of(Atlas::single(r3()), 0.5);
  const auto eta = OneForm::on_chart(r3(), {"0", "x", "1"});
  const auto partition = PartitionOfUnity::trivial(t->base());
  const FieldPtr rho = patch(t, partition, eta);
  const FieldPtr nu = convexifier(t, partition);
  EXPECT_EQ(convexify(rho, nu, 0.0), rho);
  EXPECT_THROW(convexify(rho, nu, -1.0), std::invalid_argument);

  const auto nu_only = extension_residual(*nu, *t, OneForm::on_chart(r3(), {"0", "0", "0"}), on_chart(r3(), 10, 2));
  EXPECT_LT(nu_only.vanishing, 1e-12);
  EXPECT_LT(nu_only.pullback, 1e-12);

  const auto f = convexify(rho, nu, 1.0);
  const auto tube_pts = on_chart(t->chart(0), 3, 3);
  EXPECT_GT(complexify::spsh_check(*f, tube_pts).min_eigenvalue, 0.0);
  EXPECT_LE(complexify::spsh_check(*rho, tube_pts).min_eigenvalue, 0.0);
  EXPECT_LT(extension_residual(*f, *t, eta, on_chart(r3(), 6, 4)).pullback, 1e-12);
}

TEST(Convexify, SweepFindsLambda) {
  const auto t = tube_of(Atlas::single(r3(2)), 1.0);
  // x^3 dy makes the mixed term of ρ large, so λ = 1 is not enough.
  const auto eta = OneForm::on_chart(r3(2), {"0", "3*x^3", "1"});
  const auto partition = PartitionOfUnity::trivial(t->base());
  const FieldPtr rho = patch(t, partition, eta);
  const FieldPtr nu = convexifier(t, partition);
  const auto samples = [&](double r) {
    std::vector<Interval> box = r3(2).box();
    for (int i = 0; i < 3; ++i) box.push_back(Interval::closed(-r, r));
    std::vector<Point> out;
    for (auto& x : sampling::lattice(box, std::vector<std::size_t>(6, 2), 11)) out.push_back({0, x});
    return out;
  };
  const auto result = sweep_lambda(rho, nu, 1.0, samples);
  EXPECT_TRUE(result.pass);
  EXPECT_GT(result.lambda, 1.0);
  EXPECT_GT(result.spsh.min_eigenvalue, 0.0);
}

TEST(Average, Examples) {
  const Chart circle("S1", {"theta"}, {Interval::angle()});
  const auto t = tube_of(Atlas::single(circle), 0.5);
  const auto action = circle_rotation(circle, t->chart(0));

  const auto constant = average(complexify::make_expr_field({t->chart(0).parse("2.5")}), action);
  EXPECT_DOUBLE_EQ(constant->value(0, std::vector<double>{1.0, 0.1}), 2.5);

  const auto cos2 = average(complexify::make_expr_field({t->chart(0).parse("cos(theta)^2")}), action);
  for (double theta : {0.0, 0.4, 2.0, 5.5}) EXPECT_NEAR(cos2->value(0, std::vector<double>{theta, 0.0}), 0.5, 1e-12);

  // Z₂ symmetrization of a non-invariant E5-style potential.
  const auto tube3 = tube_of(Atlas::single(r3(2)), 0.5);
  const auto& tc = tube3->chart(0);
  symmetry::GroupModel z2(symmetry::GroupKind::Finite, {}, 2);
  const auto ident = [&](const Chart& c, std::vector<std::string> texts) {
    std::vector<Expression> out;
    for (auto& s : texts) out.push_back(c.parse(s));
    return out;
  };
  std::vector<std::vector<symmetry::ChartAction>> maps(2);
  maps[0].push_back({ident(r3(2), {"x", "y", "z"}), ident(tc, {"x", "y", "z", "im_x", "im_y", "im_z"}), {}});
  maps[1].push_back({ident(r3(2), {"-x", "-y", "z"}), ident(tc, {"-x", "-y", "z", "-im_x", "-im_y", "im_z"}), {}});
  const symmetry::Action flip(z2, {r3(2)}, {tc}, maps);
  const auto raw = complexify::make_expr_field({tc.parse("im_z + x*im_y + (1 + 0.25*x)*(im_x^2 + im_y^2 + im_z^2)")});
  const auto pts = on_chart(tc, 3, 12);
  const auto elems = z2.sample_elements();
  EXPECT_GT(symmetry::invariance_residual(flip, *raw, pts, elems).max, 1e-3);
  const auto avg = average(raw, flip);
  EXPECT_LT(symmetry::invariance_residual(flip, *avg, pts, elems).max, 1e-14);

  EXPECT_THROW(haar_nodes(symmetry::GroupModel(symmetry::GroupKind::Translation, {"a"})), NonCompactGroup);
}

TEST(Frame, Examples) {
  const auto eta = OneForm::on_chart(r3(), {"0", "x", "1"});
  const auto present = [](std::vector<std::string> coords, std::vector<std::string> to_m, std::size_t k) {
    std::vector<Interval> box(coords.size(), Interval::closed(-1, 1));
    ProductPresentation p{Chart("GxS", std::move(coords), std::move(box)), k, 0, {}};
    for (auto& s : to_m) p.to_m.push_back(p.product.parse(s));
    return p;
  };
  const auto check = [](const Expression& e, std::span<const double> s, double expected) { EXPECT_NEAR(expr::evaluate(e, s), expected, 1e-15); };

  // G = z-translations, S = (x, y).
  const auto fz = frame_decompose(eta, present({"g", "x", "y"}, {"x", "y", "g"}, 1));
  // G = y-translations, S = (x, z).
  const auto fy = frame_decompose(eta, present({"g", "x", "z"}, {"x", "g", "z"}, 1));
  for (const auto& s : sampling::lattice(std::vector<Interval>(2, Interval::closed(-1, 1)), {4, 4}, 13)) {
    check(fz.f[0], s, 1.0);
    check(fz.sigma[0], s, 0.0);
    check(fz.sigma[1], s, s[0]);
    check(fy.f[0], s, s[0]);
    check(fy.sigma[0], s, 0.0);
    check(fy.sigma[1], s, 1.0);
  }
  const auto prod_samples = sampling::lattice(fy.presentation.product.box(), {10, 10, 10}, 14);
  EXPECT_LT(reconstruction_residual(fz, prod_samples), 1e-12);
  EXPECT_LT(reconstruction_residual(fy, prod_samples), 1e-12);

  // G = S¹ acting on itself, S a point.
  const Chart circle("T1", {"theta"}, {Interval::angle()});
  const auto ft = frame_decompose(OneForm::on_chart(circle, {"1"}), ProductPresentation{circle, 1, 0, {circle.parse("theta")}});
  EXPECT_EQ(ft.sigma.size(), 0u);
  EXPECT_EQ(expr::evaluate(ft.f[0], std::span<const double>{}), 1.0);
  const auto tt = tube_of(Atlas::single(circle), 0.5);
  const auto theta = product_potential(ft, tt->chart(0)).total();
  for (const auto& p : on_chart(tt->chart(0), 4, 15)) EXPECT_DOUBLE_EQ(expr::evaluate(theta, p.coords), p.coords[1]);
  const auto field = complexify::make_expr_field({theta});
  EXPECT_LT(extension_residual(*field, *tt, OneForm::on_chart(circle, {"1"}), on_chart(circle, 32, 16)).pullback, 1e-14);
}

TEST(Frame, ProductPotentialE4) {
  const auto eta = OneForm::on_chart(r3(), {"0", "x", "1"});
  const Chart prod("GxS", {"g", "x", "z"}, std::vector<Interval>(3, Interval::closed(-1, 1)));
  const auto fd = frame_decompose(eta, ProductPresentation{prod, 1, 0, {prod.parse("x"), prod.parse("g"), prod.parse("z")}});
  const auto ptube = tube_of(Atlas::single(prod), 0.5);
  const auto pp = product_potential(fd, ptube->chart(0));
  for (const auto& p : on_chart(ptube->chart(0), 2, 17)) {
    const auto& z = p.coords;  // (g, x, z, im_g, im_x, im_z)
    EXPECT_DOUBLE_EQ(expr::evaluate(pp.group_part, z), z[1] * z[3]);
    EXPECT_DOUBLE_EQ(expr::evaluate(pp.slice_part, z), z[5]);
  }
  // f ≡ 0 leaves only the slice part.
  auto zero = fd;
  zero.f[0] = expr::constant(fd.s_scope, 0.0);
  EXPECT_EQ(expr::evaluate(product_potential(zero, ptube->chart(0)).group_part, std::vector<double>(6, 0.3)), 0.0);

  // Pull Θ + θ + λν back to M^c through (x, y, z) ↦ (g, x, z) = (y, x, z) and
  // check the extension identities there.
  const auto mtube = tube_of(Atlas::single(r3()), 0.5);
  const auto& mc = mtube->chart(0);
  std::vector<Expression> inverse;
  for (const auto* s : {"y", "x", "z", "im_y", "im_x", "im_z"}) inverse.push_back(mc.parse(s));
  const auto on_product = complexify::make_expr_field({pp.total()});
  const auto nu = convexifier(ptube, PartitionOfUnity::trivial(ptube->base()));
  const auto rho = complexify::make_pullback(convexify(on_product, nu, 1.0), {{0, inverse}});
  const auto m_samples = on_chart(r3(), 10, 18);
  const auto r = extension_residual(*rho, *mtube, eta, m_samples);
  EXPECT_EQ(r.samples, 1000u);
  EXPECT_LT(r.vanishing, 1e-12);
  EXPECT_LT(r.pullback, 1e-8);
  EXPECT_GT(complexify::spsh_check(*rho, on_chart(mc, 3, 19)).min_eigenvalue, 0.0);
}

TEST(Properties, AveragingIsIdempotent) {
  const Chart circle("S1", {"theta"}, {Interval::angle()});
  const auto t = tube_of(Atlas::single(circle), 0.5);
  const auto action = circle_rotation(circle, t->chart(0));
  const auto f = complexify::make_expr_field({t->chart(0).parse("cos(theta)^2*(1 + im_theta^2) + sin(theta)*im_theta + exp(cos(theta))")});
  const auto once = average(f, action);
  const auto twice = average(once, action);
  for (const auto& p : on_chart(t->chart(0), 3, 20)) EXPECT_NEAR(twice->value(0, p.coords), once->value(0, p.coords), 1e-12);
}

TEST(Properties, ExtensionIdentitiesOnRandomForms) {
  // For random coefficient functions the patched potential has ρ|_M = 0 and
  // ι* d^cρ = η regardless of λ.
  const auto t = tube_of(Atlas::single(r3()), 0.5);
  const auto partition = PartitionOfUnity::trivial(t->base());
  const FieldPtr nu = convexifier(t, partition);
  const std::vector<std::vector<std::string>> forms{
      {"sin(y)", "x*z", "1 + x^2"}, {"exp(z)", "cos(x + y)", "y"}, {"x*y*z", "1", "sin(x)*cos(z)"}};
  const auto samples = on_chart(r3(), 6, 21);
  for (const auto& texts : forms) {
    const auto eta = OneForm::on_chart(r3(), texts);
    const FieldPtr rho = patch(t, partition, eta);
    for (double lambda : {0.0, 1.0, 7.5}) {
      const auto r = extension_residual(*convexify(rho, nu, lambda), *t, eta, samples);
      EXPECT_LT(r.vanishing, 1e-12);
      EXPECT_LT(r.pullback, 1e-10);
    }
  }
}
