#include <doctest.h>

#include "helpers.hpp"
#include "orbq/errors.hpp"
#include "orbq/resolution/resolution.hpp"

using namespace orbq;
using namespace orbq::test;

TEST_SUITE("resolution") {

TEST_CASE("dimensions") {
  const Resolution r1 = resolve(r1_z2());
  CHECK(r1.total_dim() == 1);
  CHECK(r1.leaf_dim() == 0);
  CHECK(r1.transverse_dim() == 1);
  const Resolution r2 = resolve(r2_pm());
  CHECK(r2.total_dim() == 3);
  CHECK(r2.leaf_dim() == 1);
  CHECK(r2.transverse_dim() == 2);
  const Resolution r3 = resolve(orbifold(3, {orth(3, {-1, 0, 0, 0, -1, 0, 0, 0, -1})}));
  CHECK(r3.total_dim() == 6);
  CHECK(r3.leaf_dim() == 3);
  CHECK(r3.transverse_dim() == 3);
}

TEST_CASE("function pullback renames coordinates") {
  const auto pm = r2_pm();
  const Resolution res = resolve(pm);
  const Variables& v = res.chart()->vars();
  const Poly y1 = Poly::variable(v, "y1"), y2 = Poly::variable(v, "y2");
  const auto f = make_function(pm, x(pm, 0) * x(pm, 0) + x(pm, 1) * x(pm, 1));
  const auto pf = pullback(res, f);
  CHECK(pf.rep() == y1 * y1 + y2 * y2);
  CHECK(pullback_inverse(res, pf) == f);
  const auto g = make_function(pm, x(pm, 0) * x(pm, 1));
  CHECK(pullback(res, f * g) == pullback(res, f) * pullback(res, g));
  const Poly m1 = Poly::variable(v, "m1");
  CHECK_THROWS_AS(res.down(m1), NotFoliated);
}

TEST_CASE("operator and symbol pullbacks") {
  const auto pm = r2_pm();
  const Resolution res = resolve(pm);
  const Coords& t = res.chart()->transverse();
  const auto lap = pullback(res, laplacian(pm));
  CHECK(lap.order() == 2);
  CHECK(lap.op() == DiffOp::partial(t, 0).partial_then(0) + DiffOp::partial(t, 1).partial_then(1));

  const Poly q = x(pm, 0) * x(pm, 1);
  const auto mult = pullback(res, make_diffop(pm, DiffOp::multiplication(pm->coords(), q)));
  CHECK(mult.op() == DiffOp::multiplication(t, res.up(q)));

  const auto id = symbol_of(laplacian(pm), 2);
  const auto pid = pullback(res, id);
  const std::size_t i11[] = {0, 0}, i12[] = {0, 1};
  CHECK(pid.tensor().component(i11) == Poly(res.chart()->vars(), Scalar(1)));
  CHECK(pid.tensor().component(i12).is_zero());

  const auto rot = make_vector_field(pm, {x(pm, 1), -x(pm, 0)});
  const auto prot = pullback(res, rot);
  const Poly y1 = Poly::variable(res.chart()->vars(), "y1"), y2 = Poly::variable(res.chart()->vars(), "y2");
  CHECK(prot.components()[0] == y2);
  CHECK(prot.components()[1] == -y1);
}

TEST_CASE("one-forms and connections") {
  const auto pm = r2_pm();
  const Resolution res = resolve(pm);
  const Poly y1 = Poly::variable(res.chart()->vars(), "y1"), y2 = Poly::variable(res.chart()->vars(), "y2");
  const Poly z(pm->vars());
  const auto zero = pullback(res, make_one_form(pm, {z, z}));
  for (const auto& p : zero.components()) CHECK(p.is_zero());
  const auto a = make_one_form(pm, {x(pm, 0), x(pm, 1)});
  const auto theta = pullback(res, a);
  CHECK(theta.components()[0] == y1);
  CHECK(theta.components()[1] == y2);
  const auto rot = make_vector_field(pm, {x(pm, 1), -x(pm, 0)});
  CHECK(pair(theta, pullback(res, rot)).rep().is_zero());

  const auto flat = SingularConnection::flat(pm);
  CHECK(pullback(res, flat) == FoliatedConnection::flat(res.chart()));
  CHECK(pullback(res, projective_shift(flat, a)) ==
        foliated_projective_shift(FoliatedConnection::flat(res.chart()), theta));
}

TEST_CASE("lifted isometries") {
  const auto pm = r2_pm();
  const Resolution res = resolve(pm);
  const LocalIsometry rot(pm, pm, AffineMap{mat(2, {0, -1, 1, 0}), {Scalar(0), Scalar(0)}});
  const auto lift = lift_isometry(res, res, rot);
  CHECK(lift.transverse_action().linear == mat(2, {0, -1, 1, 0}));
  const auto f = make_function(pm, x(pm, 0) * x(pm, 0));
  const Poly y2 = Poly::variable(res.chart()->vars(), "y2");
  CHECK(pullback(res, pullback(rot, f)).rep() == y2 * y2);
  CHECK(lift.pullback(pullback(res, f)).rep() == y2 * y2);
  const auto report = check_commutation(lift, f, symbol_of(laplacian(pm), 2), SingularConnection::flat(pm));
  CHECK(report.ok());

  const auto id = lift_isometry(res, res, LocalIsometry::identity(pm));
  const auto pf = pullback(res, f);
  CHECK(id.pullback(pf) == pf);
}

}  // TEST_SUITE
