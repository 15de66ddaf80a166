#include <gtest/gtest.h>

#include <cmath>

#include "contact/complexify.hpp"
#include "contact/sampling.hpp"
#include "contact/symmetry.hpp"

using namespace contact;
using namespace contact::symmetry;
using geometry::Interval;
using geometry::OneForm;
using geometry::Point;

namespace {

Chart r3(double r = 3) { return Chart("R3", {"x", "y", "z"}, std::vector<Interval>(3, Interval::closed(-r, r))); }

std::vector<Expression> parse_all(const expr::ScopePtr& s, const std::vector<std::string>& texts) {
  std::vector<Expression> out;
  for (const auto& t : texts) out.push_back(expr::parse(t, s));
  return out;
}

Action continuous(GroupKind kind, std::vector<std::string> params, const Chart& c, const std::vector<std::string>& base,
                  const std::vector<std::string>& tube = {}, const Chart* tube_chart = nullptr) {
  GroupModel g(kind, std::move(params));
  ChartAction ca{parse_all(action_scope(c, g), base), {}, {}};
  std::vector<Chart> tubes;
  if (tube_chart) {
    ca.tube = parse_all(action_scope(*tube_chart, g), tube);
    tubes.push_back(*tube_chart);
  }
  return Action(g, {c}, tubes, {{ca}});
}

Action finite(const Chart& c, const std::vector<std::vector<std::string>>& elements) {
  std::vector<std::vector<ChartAction>> maps;
  for (const auto& e : elements) maps.push_back({ChartAction{parse_all(c.scope(), e), {}, {}}});
  return Action(GroupModel(GroupKind::Finite, {}, elements.size()), {c}, {}, maps);
}

Action z2(const Chart& c) { return finite(c, {{"x", "y", "z"}, {"-x", "-y", "z"}}); }

// The stereographic chart of S³ with the S¹ action rotating (u1, u2).
Chart s3_chart() { return Chart("N", {"u1", "u2", "u3"}, std::vector<Interval>(3, Interval::closed(-2, 2))); }
Action s3_rotation() {
  return continuous(GroupKind::CircleMatrix, {"a"}, s3_chart(), {"cos(a)*u1 - sin(a)*u2", "sin(a)*u1 + cos(a)*u2", "u3"});
}

std::vector<Point> points(const Chart& c, std::size_t per_axis, std::uint64_t seed) {
  std::vector<Point> out;
  for (auto& x : sampling::lattice(c.box(), std::vector<std::size_t>(c.dim(), per_axis), seed)) out.push_back({0, x});
  return out;
}

}  // namespace

TEST(Generator, Examples) {
  const auto ty = continuous(GroupKind::Translation, {"a"}, r3(), {"x", "y + a", "z"});
  const std::vector<double> one{1.0};
  for (const auto& p : points(r3(), 3, 1)) {
    EXPECT_EQ(ty.generator(0, p.coords, one).value, Vec::Unit(3, 1));
  }
  const Chart plane("R2", {"x", "y"}, std::vector<Interval>(2, Interval::closed(-2, 2)));
  const auto rot = continuous(GroupKind::CircleMatrix, {"a"}, plane, {"cos(a)*x - sin(a)*y", "sin(a)*x + cos(a)*y"});
  const auto g = rot.generator(0, std::vector<double>{0.7, -1.2}, one);
  EXPECT_DOUBLE_EQ(g.value(0), 1.2);
  EXPECT_DOUBLE_EQ(g.value(1), 0.7);
  Mat expected(2, 2);
  expected << 0, -1, 1, 0;
  EXPECT_EQ(g.jacobian, expected);

  const Chart t3("T3", {"x", "y", "z"}, std::vector<Interval>(3, Interval::angle()));
  const auto t2 = continuous(GroupKind::Torus, {"a", "b"}, t3, {"x + a", "y + b", "z"});
  EXPECT_EQ(t2.generator(0, std::vector<double>{1, 2, 3}, std::vector<double>{1, 0}).value, Vec::Unit(3, 0));
  EXPECT_THROW(z2(r3()).generator(0, std::vector<double>{1, 2, 3}, one), std::logic_error);
}

TEST(GroupModel, ExponentialLaws) {
  const auto rot = s3_rotation();
  const auto pts = points(s3_chart(), 4, 2);
  const auto laws = rot.law_residual(pts);
  EXPECT_LT(laws.identity, 1e-12);
  EXPECT_LT(laws.composition, 1e-10);
  const auto& g = rot.group();
  const std::vector<double> xi{1.0};
  for (double t : {0.3, -1.1})
    for (double s : {0.7, 2.5}) {
      const auto lhs = rot.move(0, rot.move(0, pts[5].coords, g.exp(xi, s)), g.exp(xi, t));
      const auto rhs = rot.move(0, pts[5].coords, g.exp(xi, t + s));
      for (int i = 0; i < 3; ++i) EXPECT_NEAR(lhs[static_cast<std::size_t>(i)], rhs[static_cast<std::size_t>(i)], 1e-10);
    }
  EXPECT_EQ(g.sample_elements().size(), 16u);
  EXPECT_EQ(continuous(GroupKind::Translation, {"a"}, r3(), {"x", "y + a", "z"}).group().sample_elements().size(), 8u);
}

TEST(GroupModel, FiniteTableAndClosure) {
  const auto a = z2(r3());
  EXPECT_EQ(a.group().identity_index(), 0u);
  EXPECT_EQ(a.group().multiply(1, 1), 0u);
  EXPECT_EQ(a.group().inverse(1), 1u);
  const auto laws = a.law_residual(points(r3(), 3, 3));
  EXPECT_EQ(laws.identity, 0.0);
  EXPECT_EQ(laws.composition, 0.0);
  EXPECT_THROW(finite(r3(), {{"x", "y", "z"}, {"y", "z", "x"}}), std::invalid_argument);  // Z3 generator without its square
}

TEST(Invariance, Examples) {
  const auto ty = continuous(GroupKind::Translation, {"a"}, r3(), {"x", "y + a", "z"});
  const auto eta = OneForm::on_chart(r3(), {"0", "x", "1"});
  const auto pts = points(r3(), 5, 4);
  const auto elems = ty.group().sample_elements();
  EXPECT_LT(invariance_residual(ty, eta, pts, elems).max, 1e-12);

  const Chart t3("T3", {"x", "y", "z"}, std::vector<Interval>(3, Interval::angle()));
  const auto tz = continuous(GroupKind::Torus, {"a"}, t3, {"x", "y", "z + a"});
  const auto twisted = OneForm::on_chart(t3, {"cos(z)", "sin(z)", "0"});
  const std::vector<Element> a1{{1.0}};
  EXPECT_GT(invariance_residual(tz, twisted, points(t3, 4, 1), a1).max, 0.1);

  const Action trivial(GroupModel(GroupKind::Trivial, {}), {r3()}, {}, {});
  const auto f = complexify::make_expr_field({r3().parse("x*y + sin(z)")});
  EXPECT_EQ(invariance_residual(trivial, *f, pts, trivial.group().sample_elements(), false).max, 0.0);
}

TEST(Isotropy, Examples) {
  const auto a = z2(r3(6));
  EXPECT_EQ(isotropy(a, Point{0, {0, 0, 5}}).elements, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(isotropy(a, Point{0, {1, 0, 0}}).elements, (std::vector<std::size_t>{0}));
  const auto rot = s3_rotation();
  EXPECT_EQ(isotropy(rot, Point{0, {0, 0, 0.7}}).kind, Isotropy::Kind::Full);
  EXPECT_EQ(isotropy(rot, Point{0, {0.1, 0, 0.7}}).kind, Isotropy::Kind::Trivial);

  const Chart t2("T2", {"x", "y"}, std::vector<Interval>(2, Interval::angle()));
  const Chart plane4("R4", {"p", "q", "r", "s"}, std::vector<Interval>(4, Interval::closed(-2, 2)));
  // T² rotating (p, q) and (r, s) separately: the point (0, 0, 1, 0) is fixed
  // by one factor only, which the classification does not support.
  const auto torus = continuous(GroupKind::Torus, {"a", "b"}, plane4,
                                {"cos(a)*p - sin(a)*q", "sin(a)*p + cos(a)*q", "cos(b)*r - sin(b)*s", "sin(b)*r + cos(b)*s"});
  EXPECT_THROW(isotropy(torus, Point{0, {0, 0, 1, 0}}), UnsupportedIsotropy);
}

TEST(Stratify, Z2GridHasAxisAndComplement) {
  const auto a = z2(r3(2));
  std::vector<Point> grid;
  for (auto& x : sampling::grid(r3(2).box(), {21, 21, 21})) grid.push_back({0, x});
  const auto strata = stratify(a, grid);
  ASSERT_EQ(strata.size(), 2u);
  std::size_t axis = 0;
  for (const auto& s : strata) {
    for (auto i : s.members) {
      const bool on_axis = grid[i].coords[0] == 0.0 && grid[i].coords[1] == 0.0;
      EXPECT_EQ(on_axis, s.label == "{0,1}");
    }
    if (s.label == "{0,1}") axis = s.members.size();
  }
  EXPECT_EQ(axis, 21u);

  const Action trivial(GroupModel(GroupKind::Trivial, {}), {r3()}, {}, {});
  EXPECT_EQ(stratify(trivial, grid).size(), 1u);
}

TEST(Stratify, CircleOnSphere) {
  const auto rot = s3_rotation();
  std::vector<Point> grid;
  for (auto& x : sampling::grid(s3_chart().box(), {9, 9, 9})) grid.push_back({0, x});
  const auto strata = stratify(rot, grid);
  ASSERT_EQ(strata.size(), 2u);
  for (const auto& s : strata)
    for (auto i : s.members) EXPECT_EQ(grid[i].coords[0] == 0.0 && grid[i].coords[1] == 0.0, s.label == "full");
}

TEST(Properties, StabilizerConjugationEquivariance) {
  // S3 permuting coordinates is non-abelian, so conjugation is visible.
  const auto s3 = finite(r3(), {{"x", "y", "z"}, {"y", "x", "z"}, {"z", "y", "x"}, {"x", "z", "y"}, {"y", "z", "x"}, {"z", "x", "y"}});
  const auto& g = s3.group();
  std::vector<Point> pts{{0, {1, 1, 2}}, {0, {1, 2, 2}}, {0, {0.5, 0.5, 0.5}}, {0, {1, 2, 3}}, {0, {2, 1, 2}}};
  for (const auto& p : pts) {
    const auto h = isotropy(s3, p);
    for (std::size_t k = 0; k < g.order(); ++k) {
      const Point q{0, s3.move(0, p.coords, {static_cast<double>(k)})};
      EXPECT_EQ(isotropy(s3, q).elements, conjugate(g, k, h.elements));
    }
  }
  // Stratification is action-invariant: moved samples keep their label.
  const auto strata = stratify(s3, pts);
  for (const auto& s : strata)
    for (auto i : s.members)
      for (std::size_t k = 0; k < g.order(); ++k)
        EXPECT_EQ(conjugacy_label(g, isotropy(s3, Point{0, s3.move(0, pts[i].coords, {static_cast<double>(k)})})), s.label);
}

TEST(Properties, GeneratorsAnnihilateInvariantFunctions) {
  const auto rot = s3_rotation();
  const auto f = s3_chart().parse("(u1^2 + u2^2)*exp(u3) + u3^3");
  for (const auto& p : points(s3_chart(), 5, 8)) {
    const auto j = expr::evaluate_jet(f, p.coords);
    const auto xi = rot.generator(0, p.coords, std::vector<double>{1.0}).value;
    EXPECT_LT(std::abs(gradient_of(j, 3).dot(xi)), 1e-8);
  }
}
