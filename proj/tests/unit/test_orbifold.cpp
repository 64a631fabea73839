#include <doctest.h>

#include "helpers.hpp"
#include "orbq/errors.hpp"

using namespace orbq;
using namespace orbq::test;

TEST_SUITE("orbifold") {

TEST_CASE("functions must be invariant") {
  const auto pm = r2_pm();
  const Poly x1 = x(pm, 0), x2 = x(pm, 1);
  CHECK_NOTHROW(make_function(pm, x1 * x1 + x2 * x2));
  try {
    make_function(pm, x1);
    FAIL("odd function accepted");
  } catch (const InvarianceViolation& e) {
    CHECK(e.witness() == "[[-1, 0], [0, -1]]");
  }
  const auto z4 = r2_z4();
  CHECK_NOTHROW(make_function(z4, x(z4, 0).pow(2) * x(z4, 1).pow(2)));
  CHECK_THROWS_AS(make_function(z4, x(z4, 0) * x(z4, 1)), InvarianceViolation);
}

TEST_CASE("degree bound applies to inputs") {
  const std::vector<OrthMatrix> gens{orth(1, {-1})};
  const auto orb = make_orbifold(1, gens, kDefaultGroupCap, 2);
  CHECK_NOTHROW(make_function(orb, x(orb, 0).pow(2)));
  CHECK_THROWS_AS(make_function(orb, x(orb, 0).pow(4)), ValidationError);
}

TEST_CASE("apply_diffop") {
  const auto pm = r2_pm();
  const Poly x1 = x(pm, 0), x2 = x(pm, 1);
  const Coords& co = pm->coords();
  CHECK(apply_diffop(laplacian(pm), make_function(pm, x1 * x1 + x2 * x2)).rep() == c(pm->vars(), 4));

  const auto mult = make_diffop(pm, DiffOp::multiplication(co, x1 * x1 + x2 * x2));
  CHECK(apply_diffop(mult, make_function(pm, c(pm->vars(), 1))).rep() == x1 * x1 + x2 * x2);

  const auto rot = make_diffop(pm, x2 * DiffOp::partial(co, 0) - x1 * DiffOp::partial(co, 1));
  CHECK(apply_diffop(rot, make_function(pm, x1 * x2)).rep() == x2 * x2 - x1 * x1);
  CHECK_THROWS_AS(make_diffop(pm, DiffOp::partial(co, 0)), InvarianceViolation);
}

TEST_CASE("commutator lowers the order") {
  const auto r1 = r1_z2();
  const Coords& co = r1->coords();
  const Poly t = x(r1, 0);
  const auto d2 = make_diffop(r1, DiffOp::partial(co, 0).partial_then(0));
  const auto m2 = make_diffop(r1, DiffOp::multiplication(co, t * t));
  const auto br = commutator(d2, m2);
  DiffOp expect = Scalar(2) * DiffOp::identity(co);
  expect += Scalar(4) * (t * DiffOp::partial(co, 0));
  CHECK(br.op() == expect);
  CHECK(br.order() == 1);

  const auto pm = r2_pm();
  const Poly x1 = x(pm, 0), x2 = x(pm, 1);
  const auto lap = laplacian(pm);
  CHECK(commutator(lap, lap).op().is_zero());
  const auto r2 = make_diffop(pm, DiffOp::multiplication(pm->coords(), x1 * x1 + x2 * x2));
  const auto b = commutator(lap, r2);
  CHECK(b.order() == 1);
  DiffOp e = Scalar(4) * DiffOp::identity(pm->coords());
  e += Scalar(4) * (x1 * DiffOp::partial(pm->coords(), 0));
  e += Scalar(4) * (x2 * DiffOp::partial(pm->coords(), 1));
  CHECK(b.op() == e);
  const Poly test = x1.pow(2) * x2.pow(2);
  CHECK(b.op().apply(test) == lap.op().apply((x1 * x1 + x2 * x2) * test) - (x1 * x1 + x2 * x2) * lap.op().apply(test));
}

TEST_CASE("symbol_of") {
  const auto pm = r2_pm();
  const Poly x1 = x(pm, 0), x2 = x(pm, 1);
  const Coords& co = pm->coords();
  const SingularSymbol s = symbol_of(laplacian(pm), 2);
  const std::size_t i11[] = {0, 0}, i22[] = {1, 1}, i12[] = {0, 1};
  CHECK(s.tensor().component(i11) == c(pm->vars(), 1));
  CHECK(s.tensor().component(i22) == c(pm->vars(), 1));
  CHECK(s.tensor().component(i12).is_zero());

  const auto mult = make_diffop(pm, DiffOp::multiplication(co, x1 * x2), 1);
  CHECK(symbol_of(mult, 1).tensor().is_zero());

  const auto d = make_diffop(pm, x2 * DiffOp::partial(co, 0) - x1 * DiffOp::partial(co, 1) +
                                     DiffOp::multiplication(co, x1 * x2));
  const auto v = symbol_of(d, 1);
  CHECK(v.tensor().component(alpha({1, 0})) == x2);
  CHECK(v.tensor().component(alpha({0, 1})) == -x1);
  CHECK_THROWS_AS(symbol_of(d, 0), OrderError);
}

TEST_CASE("vector field brackets") {
  const auto pm = r2_pm();
  const Poly x1 = x(pm, 0), x2 = x(pm, 1), z(pm->vars());
  const auto euler = make_vector_field(pm, {x1, x2});
  const auto rot = make_vector_field(pm, {x2, -x1});
  for (const auto& p : vect_bracket(euler, euler).components()) CHECK(p.is_zero());
  for (const auto& p : vect_bracket(euler, rot).components()) CHECK(p.is_zero());
  const auto a = make_vector_field(pm, {x2, z}), b = make_vector_field(pm, {z, x1});
  // XY - YX, checked against the operator commutator.
  const auto br = vect_bracket(a, b);
  CHECK(br.components()[0] == -x1);
  CHECK(br.components()[1] == x2);
  CHECK(as_operator(br) == commutator(as_operator(a), as_operator(b)));
  CHECK_THROWS_AS(make_vector_field(pm, {c(pm->vars(), 1), z}), InvarianceViolation);
}

TEST_CASE("connections") {
  const auto pm = r2_pm();
  const Poly x1 = x(pm, 0), x2 = x(pm, 1);
  const auto flat = SingularConnection::flat(pm);
  const auto euler = make_vector_field(pm, {x1, x2});
  CHECK(connection_apply(flat, euler, euler) == euler);

  Christoffel g(pm->coords());
  g.set_symmetric(0, 0, 1, x1);
  g(1, 1, 1) = -x2;
  const auto nabla = make_connection(pm, g);
  const auto y = make_vector_field(pm, {x2, -x1});
  const auto lhs = connection_apply(nabla, euler, y).components();
  const auto rhs = connection_apply(nabla, y, euler).components();
  const auto br = vect_bracket(euler, y).components();
  for (std::size_t k = 0; k < 2; ++k) CHECK((lhs[k] - rhs[k] - br[k]).is_zero());

  Christoffel even(pm->coords());
  even(0, 0, 0) = x1 * x1;
  CHECK_THROWS_AS(make_connection(pm, even), InvarianceViolation);
  Christoffel torsion(pm->coords());
  torsion(0, 0, 1) = x1;
  CHECK_THROWS_AS(make_connection(pm, torsion), ValidationError);
}

TEST_CASE("projective shift") {
  const auto pm = r2_pm();
  const Poly x1 = x(pm, 0), x2 = x(pm, 1), z(pm->vars());
  const auto flat = SingularConnection::flat(pm);
  CHECK(projective_shift(flat, make_one_form(pm, {z, z})) == flat);
  const auto a = make_one_form(pm, {x1, x2});
  const auto s = projective_shift(flat, a);
  CHECK(s.christoffel()(0, 0, 0) == Scalar(2) * x1);
  CHECK(s.christoffel()(0, 0, 1) == x2);
  CHECK(s.christoffel()(1, 0, 1) == x1);
  CHECK(s.christoffel()(1, 1, 1) == Scalar(2) * x2);
  CHECK(s.christoffel()(0, 1, 1).is_zero());
  CHECK(projective_shift(s, make_one_form(pm, {-x1, -x2})) == flat);
}

TEST_CASE("local isometries") {
  const auto pm = r2_pm();
  const Poly x1 = x(pm, 0), x2 = x(pm, 1);
  const auto id = LocalIsometry::identity(pm);
  const auto f = make_function(pm, x1 * x2);
  CHECK(pullback(id, f) == f);
  CHECK(pullback(id, laplacian(pm)) == laplacian(pm));

  const LocalIsometry rot(pm, pm, AffineMap{mat(2, {0, -1, 1, 0}), {Scalar(0), Scalar(0)}});
  CHECK(pullback(rot, make_function(pm, x1 * x1)).rep() == x2 * x2);
  CHECK(pullback(rot, laplacian(pm)) == laplacian(pm));
  const OrthMatrix pyth(Matrix(2, 2, {ratio(3, 5), ratio(-4, 5), ratio(4, 5), ratio(3, 5)}));
  const LocalIsometry p(pm, pm, AffineMap{pyth.matrix(), {Scalar(0), Scalar(0)}});
  CHECK(pullback(p, laplacian(pm)) == laplacian(pm));
  CHECK(pullback(p.inverse(), pullback(p, f)) == f);

  CHECK_THROWS_AS(LocalIsometry(pm, pm, AffineMap{mat(2, {2, 0, 0, 1}), {Scalar(0), Scalar(0)}}), InvalidIsometry);
  // The translation must be fixed by the target group.
  CHECK_THROWS_AS(LocalIsometry(pm, pm, AffineMap{Matrix::identity(2), {Scalar(1), Scalar(0)}}), InvalidIsometry);
  CHECK_THROWS_AS(LocalIsometry(pm, r2_z4(), AffineMap::identity(2)), InvalidIsometry);
}

}  // TEST_SUITE
