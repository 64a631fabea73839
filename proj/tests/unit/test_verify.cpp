#include <doctest.h>

#include "helpers.hpp"
#include "orbq/random.hpp"
#include "orbq/verify/generators.hpp"
#include "orbq/verify/verify.hpp"

using namespace orbq;
using namespace orbq::test;

TEST_SUITE("verify") {

TEST_CASE("rng is reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 20; ++i) CHECK(a.next() == b.next());
  Rng r(1);
  for (int i = 0; i < 200; ++i) {
    const long v = r.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    CHECK(r.below(7) < 7);
    CHECK(!is_zero(r.nonzero_scalar(2, 3)));
  }
  CHECK(derive_seed(7, 0) != derive_seed(7, 1));
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
}

TEST_CASE("generators produce valid objects") {
  Rng rng(5);
  for (const auto& orb : {r2_pm(), r2_z4(), r2_d4()}) {
    CHECK_NOTHROW(random_function(rng, orb));
    CHECK_NOTHROW(random_operator(rng, orb, 2));
    CHECK_NOTHROW(random_symbol(rng, orb, 2));
    CHECK_NOTHROW(random_connection(rng, orb));
    const LocalIsometry phi = random_isometry(rng, orb);
    CHECK(phi.target()->group().order() == orb->group().order());
  }
}

TEST_CASE("suites pass and do not depend on thread count") {
  const SuiteReport one = run_suite("pullbacks", builtin_catalog(), 4, 3, 1);
  const SuiteReport many = run_suite("pullbacks", builtin_catalog(), 4, 3, 3);
  CHECK(one.ok());
  CHECK(to_json(one) == to_json(many));
  CHECK_THROWS(run_suite("missing", builtin_catalog(), 1, 1));
}

TEST_CASE("report lists counterexample seeds") {
  SuiteReport r;
  r.suite = "all";
  r.trials = 1;
  r.seed = 9;
  r.properties.push_back({"p", 1, 1});
  r.failures.push_back({"p", 0, 123, Failure{"differs", "x1", "x2", "x1: 1 != 0"}});
  const auto j = to_json(r);
  CHECK(j["ok"] == false);
  CHECK(j["failures"][0]["seed"] == 123);
  CHECK(j["failures"][0]["first-diff"] == "x1: 1 != 0");
}

}  // TEST_SUITE
