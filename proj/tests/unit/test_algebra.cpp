#include <doctest.h>

#include "helpers.hpp"
#include "orbq/algebra/calculus.hpp"
#include "orbq/algebra/diffop.hpp"
#include "orbq/algebra/symtensor.hpp"
#include "orbq/errors.hpp"
#include "orbq/random.hpp"

using namespace orbq;
using namespace orbq::test;

TEST_SUITE("algebra") {

TEST_CASE("scalars parse as exact rationals") {
  CHECK(parse_scalar("3/6") == ratio(1, 2));
  CHECK(parse_scalar("-4") == Scalar(-4));
  CHECK(to_string(ratio(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(parse_scalar("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_scalar("x"), SchemaError);
}

TEST_CASE("partial derivatives") {
  const Variables v({"x", "y"});
  const Poly x = Poly::variable(v, "x"), y = Poly::variable(v, "y");
  CHECK(differentiate(x * x * y, "x") == Scalar(2) * x * y);
  CHECK(differentiate(x * x, "y").is_zero());
  CHECK(differentiate(x.pow(3) + Scalar(3) * x, "x") == Scalar(3) * x * x + Poly(v, Scalar(3)));
  CHECK_THROWS_AS(differentiate(x, "z"), UnknownVariable);
}

TEST_CASE("poly arithmetic and evaluation") {
  const Variables v = Variables::numbered("x", 2);
  const Poly x1 = Poly::variable(v, 0), x2 = Poly::variable(v, 1);
  const Poly f = (x1 + x2) * (x1 - x2);
  CHECK(f == x1 * x1 - x2 * x2);
  CHECK(f.total_degree() == 2);
  const std::vector<Scalar> pt{ratio(1, 2), Scalar(3)};
  CHECK(f.evaluate(pt) == ratio(1, 4) - Scalar(9));
  CHECK((f - f).is_zero());
  CHECK(Poly(v).total_degree() < 0);
}

TEST_CASE("act_linear substitutes the inverse matrix") {
  const Variables v = Variables::numbered("x", 2);
  const Poly x1 = Poly::variable(v, 0), x2 = Poly::variable(v, 1);
  CHECK(act_linear(x1, orth(2, {-1, 0, 0, -1})) == -x1);
  const OrthMatrix pyth(Matrix(2, 2, {ratio(3, 5), ratio(-4, 5), ratio(4, 5), ratio(3, 5)}));
  CHECK(act_linear(x1 * x1 + x2 * x2, pyth) == x1 * x1 + x2 * x2);

  const OrthMatrix rot = orth(2, {0, -1, 1, 0});
  const Poly f = x1 * x2;
  const Poly g = act_linear(f, rot);
  CHECK(g == -(x1 * x2));
  Rng rng(11);
  for (int t = 0; t < 5; ++t) {
    const std::vector<Scalar> p{rng.scalar(5, 4), rng.scalar(5, 4)};
    const std::vector<Scalar> q = rot.inverse().matrix().apply(p);
    CHECK(g.evaluate(p) == f.evaluate(q));
  }
}

TEST_CASE("generate_group closes the generators") {
  const std::vector<OrthMatrix> pm{orth(2, {-1, 0, 0, -1})};
  CHECK(generate_group(pm).order() == 2);
  const std::vector<OrthMatrix> z4{orth(2, {0, -1, 1, 0})};
  CHECK(generate_group(z4).order() == 4);
  const std::vector<OrthMatrix> d4{orth(2, {0, 1, 1, 0}), orth(2, {-1, 0, 0, 1})};
  const FiniteIsometryGroup g = generate_group(d4);
  CHECK(g.order() == 8);
  CHECK(g.contains(orth(2, {0, -1, 1, 0})));
  CHECK(g.contains(OrthMatrix::identity(2)));
  CHECK(generate_group(2, {}).order() == 1);
  CHECK_THROWS_AS(generate_group(d4, 4), GroupTooLarge);
  const OrthMatrix ir(Matrix(2, 2, {ratio(3, 5), ratio(-4, 5), ratio(4, 5), ratio(3, 5)}));
  const std::vector<OrthMatrix> infinite{ir};
  CHECK_THROWS_AS(generate_group(infinite), GroupTooLarge);
}

TEST_CASE("orthogonality is checked exactly") {
  CHECK(is_orthogonal(mat(2, {0, 1, 1, 0})));
  CHECK_FALSE(is_orthogonal(mat(2, {2, 0, 0, 1})));
  CHECK_THROWS_AS(OrthMatrix(mat(2, {1, 1, 0, 1})), NotOrthogonal);
}

TEST_CASE("reynolds averages over the group") {
  const Variables v = Variables::numbered("x", 2);
  const Poly x1 = Poly::variable(v, 0), x2 = Poly::variable(v, 1);
  const std::vector<OrthMatrix> pm{orth(2, {-1, 0, 0, -1})};
  const FiniteIsometryGroup gpm = generate_group(pm);
  CHECK(reynolds(x1, gpm).is_zero());
  CHECK(reynolds(x1 * x1, gpm) == x1 * x1);

  const std::vector<OrthMatrix> z4{orth(2, {0, -1, 1, 0})};
  const FiniteIsometryGroup g4 = generate_group(z4);
  const Poly r = reynolds(x1.pow(4), g4);
  CHECK(r == ratio(1, 2) * (x1.pow(4) + x2.pow(4)));
  for (const auto& g : g4.elements()) CHECK(act_linear(r, g) == r);
}

TEST_CASE("matrix inverse and nullspace") {
  const Matrix m = mat(2, {2, 1, 1, 1});
  CHECK(m * m.inverse() == Matrix::identity(2));
  CHECK_THROWS(mat(2, {1, 2, 2, 4}).inverse());
  const auto ns = nullspace(mat(2, {1, 2, 2, 4}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + Scalar(2) * ns[0][1] == 0);
}

TEST_CASE("linear system") {
  LinearSystem sys(2);
  sys.add_equation({Scalar(1), Scalar(1)}, Scalar(3));
  sys.add_equation({Scalar(2), Scalar(2)}, Scalar(6));
  CHECK(sys.rank() == 1);
  CHECK(sys.free_unknowns().size() == 1);
  sys.add_equation({Scalar(1), Scalar(-1)}, Scalar(1));
  const auto s = sys.solve();
  REQUIRE(s);
  CHECK((*s)[0] == Scalar(2));
  CHECK((*s)[1] == Scalar(1));
  sys.add_equation({Scalar(1), Scalar(0)}, Scalar(5));
  CHECK_FALSE(sys.consistent());
  CHECK_FALSE(sys.solve());
}

TEST_CASE("differential operators compose by Leibniz") {
  const Coords co = Coords::all(Variables::numbered("x", 2));
  const Poly x1 = Poly::variable(co.vars, 0), x2 = Poly::variable(co.vars, 1);
  const DiffOp d1 = DiffOp::partial(co, 0);
  const DiffOp mult = DiffOp::multiplication(co, x1);
  CHECK(commutator(d1, mult) == DiffOp::identity(co));
  CHECK(commutator(d1, d1).is_zero());

  const DiffOp lap = d1.partial_then(0) + DiffOp::partial(co, 1).partial_then(1);
  const DiffOp r2 = DiffOp::multiplication(co, x1 * x1 + x2 * x2);
  DiffOp expect = Scalar(4) * DiffOp::identity(co);
  expect += Scalar(4) * (x1 * d1);
  expect += Scalar(4) * (x2 * DiffOp::partial(co, 1));
  CHECK(commutator(lap, r2) == expect);
  CHECK(compose(lap, r2).apply(Poly(co.vars, Scalar(1))) == Poly(co.vars, Scalar(4)));
  CHECK(lap.order() == 2);
  CHECK(DiffOp(co).order() < 0);
}

TEST_CASE("symbol tensors") {
  const Coords co = Coords::all(Variables::numbered("x", 2));
  const Poly x1 = Poly::variable(co.vars, 0), x2 = Poly::variable(co.vars, 1);
  SymTensor s(co, 2);
  const std::size_t i12[] = {0, 1}, i21[] = {1, 0};
  s.set(i12, x1);
  CHECK(s.component(i21) == x1);
  CHECK(s.to_operator().coefficient(alpha({1, 1})) == Scalar(2) * x1);
  CHECK(SymTensor::leading(s.to_operator(), 2) == s);

  SymTensor a(co, 1), b(co, 1);
  a.set(alpha({1, 0}), x2);
  b.set(alpha({0, 1}), x1);
  // Degree-1 Poisson bracket of vector fields is their Lie bracket XY - YX.
  const SymTensor br = poisson_bracket(a, b);
  CHECK(br.component(alpha({1, 0})) == -x1);
  CHECK(br.component(alpha({0, 1})) == x2);
  CHECK(br.to_operator() == commutator(a.to_operator(), b.to_operator()));
}

TEST_CASE("vector fields and connections in a chart") {
  const Coords co = Coords::all(Variables::numbered("x", 2));
  const Poly x1 = Poly::variable(co.vars, 0), x2 = Poly::variable(co.vars, 1);
  const Components euler{x1, x2}, rot{x2, -x1};
  for (const auto& p : bracket(co, euler, rot)) CHECK(p.is_zero());
  const Christoffel flat(co);
  CHECK(covariant(co, flat, euler, euler) == euler);

  Christoffel g(co);
  g.set_symmetric(0, 0, 1, x1);
  const Components theta{x2, Poly(co.vars)};
  const Christoffel s = shift_projectively(g, theta);
  // Gamma^k_ij + delta^k_i theta_j + delta^k_j theta_i.
  CHECK(s(0, 0, 0) == Scalar(2) * x2);
  CHECK(s(0, 0, 1) == x1);
  CHECK(s(1, 1, 0) == x2);
  CHECK(s(1, 1, 1).is_zero());
  const Components minus{-x2, Poly(co.vars)};
  CHECK(shift_projectively(s, minus) == g);
}

TEST_CASE("affine pullbacks") {
  const Coords co = Coords::all(Variables::numbered("x", 2));
  const Poly x1 = Poly::variable(co.vars, 0), x2 = Poly::variable(co.vars, 1);
  const AffineMap rot{mat(2, {0, -1, 1, 0}), {Scalar(0), Scalar(0)}};
  CHECK(pull_function(co, rot, x1 * x1) == x2 * x2);
  const DiffOp lap = DiffOp::partial(co, 0).partial_then(0) + DiffOp::partial(co, 1).partial_then(1);
  CHECK(pull_operator(rot, lap) == lap);
  const AffineMap shift{Matrix::identity(2), {Scalar(1), Scalar(0)}};
  CHECK(pull_function(co, shift, x1) == x1 + Poly(co.vars, Scalar(1)));
  CHECK(shift.after(shift.inverse()) == AffineMap::identity(2));
}

}  // TEST_SUITE
