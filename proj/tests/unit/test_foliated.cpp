#include <doctest.h>

#include "helpers.hpp"
#include "orbq/errors.hpp"
#include "orbq/foliated/foliated.hpp"

using namespace orbq;
using namespace orbq::test;

namespace {

struct Chart12 {
  ChartPtr chart = make_chart(1, 2);
  Poly m1 = Poly::variable(chart->vars(), "m1");
  Poly y1 = Poly::variable(chart->vars(), "y1");
  Poly y2 = Poly::variable(chart->vars(), "y2");
  Poly zero = Poly(chart->vars());
  Poly one = Poly(chart->vars(), Scalar(1));
};

}  // namespace

TEST_SUITE("foliated") {

TEST_CASE("foliated functions do not depend on leaf coordinates") {
  Chart12 c;
  CHECK_NOTHROW(make_foliated_function(c.chart, c.y1 * c.y1));
  CHECK_NOTHROW(make_foliated_function(c.chart, c.y1 * c.y2 + Scalar(3) * c.one));
  try {
    make_foliated_function(c.chart, c.m1 * c.y1);
    FAIL("m-dependent function accepted");
  } catch (const NotFoliated& e) {
    CHECK(std::string(e.what()).find("m1") != std::string::npos);
  }
}

TEST_CASE("foliated class of adapted fields") {
  Chart12 c;
  const AdaptedVectorField x(c.chart, {c.m1}, {c.y2, c.zero});
  const auto cls = foliated_class(x);
  CHECK(cls.components()[0] == c.y2);
  CHECK(cls.components()[1].is_zero());
  const auto leaf = AdaptedVectorField::leafwise(c.chart, {c.m1 * c.y1});
  CHECK(leaf.is_leafwise());
  for (const auto& p : foliated_class(leaf).components()) CHECK(p.is_zero());
  CHECK_THROWS_AS(AdaptedVectorField(c.chart, {c.zero}, {c.m1, c.zero}), NotFoliated);
}

TEST_CASE("foliated bracket") {
  Chart12 c;
  const FoliatedVectorField euler(c.chart, {c.y1, c.y2});
  const FoliatedVectorField e1(c.chart, {c.one, c.zero});
  for (const auto& p : foliated_bracket(euler, euler).components()) CHECK(p.is_zero());
  const auto br = foliated_bracket(euler, e1);
  CHECK(br.components()[0] == -c.one);
  CHECK(br.components()[1].is_zero());
}

TEST_CASE("leafwise fields form an ideal") {
  Chart12 c;
  const auto leaf = AdaptedVectorField::leafwise(c.chart, {c.m1 * c.y2});
  const AdaptedVectorField x(c.chart, {c.m1 * c.m1}, {c.y2, c.y1 * c.y1});
  CHECK(adapted_bracket(x, leaf).is_leafwise());
  CHECK(adapted_bracket(leaf, x).is_leafwise());
}

TEST_CASE("vector fields are order-1 operators") {
  Chart12 c;
  const FoliatedVectorField x(c.chart, {c.y2, -c.y1});
  const FoliatedVectorField y(c.chart, {c.y1 * c.y1, c.zero});
  const auto dx = as_operator(x), dy = as_operator(y);
  CHECK(as_vector_field(dx) == x);
  CHECK(as_operator(foliated_bracket(x, y)) == commutator(dx, dy));
  CHECK(as_vector_field(as_symbol(x)) == x);
  const auto f = make_foliated_function(c.chart, c.y1 * c.y2);
  CHECK(apply_field(x, f) == apply_diffop(dx, f));
}

TEST_CASE("foliated connections") {
  Chart12 c;
  const auto flat = FoliatedConnection::flat(c.chart);
  const FoliatedVectorField euler(c.chart, {c.y1, c.y2});
  CHECK(foliated_connection_apply(flat, euler, euler) == euler);
  CHECK(foliated_projective_shift(flat, FoliatedOneForm(c.chart, {c.zero, c.zero})) == flat);
  const FoliatedOneForm theta(c.chart, {c.y1, c.y2 * c.y2});
  const FoliatedOneForm minus(c.chart, {-c.y1, -(c.y2 * c.y2)});
  CHECK(foliated_projective_shift(foliated_projective_shift(flat, theta), minus) == flat);

  Christoffel g(c.chart->transverse());
  g(0, 0, 0) = c.m1;
  CHECK_THROWS_AS(FoliatedConnection(c.chart, g), NotFoliated);
}

TEST_CASE("1-form characterization") {
  Chart12 c;
  // theta = y2 dy1: no dm part and m-free.
  const Components good{c.zero, c.y2, c.zero};
  CHECK(is_syntactically_foliated(*c.chart, good));
  CHECK(satisfies_foliated_conditions(*c.chart, good));
  const Components leafy{c.y1, c.zero, c.zero};
  CHECK_FALSE(is_syntactically_foliated(*c.chart, leafy));
  CHECK_FALSE(satisfies_foliated_conditions(*c.chart, leafy));
  const Components mdep{c.zero, c.m1, c.zero};
  CHECK_FALSE(is_syntactically_foliated(*c.chart, mdep));
  CHECK_FALSE(satisfies_foliated_conditions(*c.chart, mdep));
  CHECK_THROWS_AS(FoliatedOneForm::from_full(c.chart, leafy), NotFoliated);
  CHECK(FoliatedOneForm::from_full(c.chart, good).components()[0] == c.y2);
}

}  // TEST_SUITE
