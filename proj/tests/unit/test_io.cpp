#include <doctest.h>

#include "helpers.hpp"
#include "orbq/errors.hpp"
#include "orbq/io/json.hpp"
#include "orbq/verify/verify.hpp"

using namespace orbq;
using namespace orbq::test;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("scalars and polynomials") {
  CHECK(io::scalar_from_json(json("-2/4"), "s") == ratio(-1, 2));
  CHECK(io::scalar_from_json(json(3), "s") == Scalar(3));
  CHECK(io::to_json(ratio(1, 3)) == json("1/3"));
  const Variables v = Variables::numbered("x", 2);
  const Poly p = Poly::variable(v, 0) * Poly::variable(v, 1) + Poly(v, ratio(1, 2));
  CHECK(io::poly_from_json(io::to_json(p), v, "p") == p);
  try {
    io::poly_from_json(json::parse(R"([{"exponents": [1], "coeff": "1"}])"), v, "/poly");
    FAIL("short exponent vector accepted");
  } catch (const SchemaError& e) {
    CHECK(e.location().rfind("/poly", 0) == 0);
  }
}

TEST_CASE("orbifolds") {
  const json j = json::parse(R"({"dim": 2, "generators": [[["0", "-1"], ["1", "0"]]]})");
  const auto orb = io::orbifold_from_json(j, "");
  CHECK(orb->group().order() == 4);
  CHECK(io::to_json(*orb)["order"] == 4);
  CHECK(io::orbifold_from_json(io::to_json(*orb), "")->same_as(*orb));
  CHECK_THROWS_AS(io::orbifold_from_json(json::parse(R"({"generators": []})"), ""), SchemaError);
  CHECK_THROWS_AS(io::orbifold_from_json(json::parse(R"({"dim": 2, "generators": [[["2", "0"], ["0", "1"]]]})"), ""),
                  NotOrthogonal);
  // Flat arrays are read as square matrices.
  const auto flat = io::orbifold_from_json(json::parse(R"({"dim": 2, "generators": [["-1", "0", "0", "-1"]]})"), "");
  CHECK(flat->group().order() == 2);
}

TEST_CASE("symbols use 1-based indices") {
  const auto pm = r2_pm();
  const json j = json::parse(R"({"degree": 2, "components": [
      {"indices": [1, 2], "poly": [{"exponents": [1, 1], "coeff": "1"}]}]})");
  const auto s = io::symbol_from_json(pm, j, "");
  const std::size_t i10[] = {1, 0};
  CHECK(s.tensor().component(i10) == x(pm, 0) * x(pm, 1));
  CHECK(io::symbol_from_json(pm, io::to_json(s), "") == s);
  CHECK_THROWS_AS(io::symbol_from_json(pm, json::parse(R"({"degree": 1, "components": [
      {"indices": [3], "poly": []}]})"), ""), SchemaError);
  CHECK_THROWS_AS(io::symbol_from_json(pm, json::parse(R"({"degree": 1, "components": [
      {"indices": [1], "poly": [{"exponents": [0, 0], "coeff": "1"}]}]})"), ""), InvarianceViolation);
}

TEST_CASE("connections fill the mirror entry") {
  const auto pm = r2_pm();
  const json j = json::parse(R"({"christoffel": [{"k": 1, "i": 1, "j": 2, "poly": [{"exponents": [1, 0], "coeff": "1"}]}]})");
  const auto nabla = io::connection_from_json(pm, j, "");
  CHECK(nabla.christoffel()(0, 1, 0) == x(pm, 0));
  CHECK(io::connection_from_json(pm, io::to_json(nabla), "") == nabla);
  const json dup = json::parse(R"({"christoffel": [
      {"k": 1, "i": 1, "j": 1, "poly": []}, {"k": 1, "i": 1, "j": 1, "poly": []}]})");
  CHECK_THROWS_AS(io::connection_from_json(pm, dup, ""), SchemaError);
}

TEST_CASE("operators, fields and isometries") {
  const auto pm = r2_pm();
  const auto lap = laplacian(pm);
  CHECK(io::diffop_from_json(pm, io::to_json(lap), "") == lap);
  const auto v = make_vector_field(pm, {x(pm, 1), -x(pm, 0)});
  CHECK(io::vector_field_from_json(pm, io::to_json(v), "") == v);
  const LocalIsometry rot(pm, pm, AffineMap{mat(2, {0, -1, 1, 0}), {Scalar(0), Scalar(0)}});
  const auto back = io::isometry_from_json(pm, pm, io::to_json(rot), "");
  CHECK(back.lift() == rot.lift());
}

TEST_CASE("foliated objects") {
  const json j = json::parse(R"({"chart": {"p": 1, "q": 2}, "poly": [{"exponents": [0, 2, 0], "coeff": "1"}]})");
  const auto f = io::foliated_function_from_json(j, "");
  CHECK(f.rep() == Poly::variable(f.chart()->vars(), "y1").pow(2));
  CHECK(io::foliated_function_from_json(io::to_json(f), "") == f);
  const json bad = json::parse(R"({"chart": {"p": 1, "q": 2}, "poly": [{"exponents": [1, 0, 0], "coeff": "1"}]})");
  CHECK_THROWS_AS(io::foliated_function_from_json(bad, ""), NotFoliated);
}

TEST_CASE("resolution report") {
  const json r = io::to_json(resolve(r2_pm()));
  CHECK(r == json{{"n", 2}, {"leaf_dim", 1}, {"transverse_dim", 2}, {"total_dim", 3}});
}

TEST_CASE("quantization table round-trip") {
  const QuantizationTable t = QuantizationTable::solve(3, 2);
  const json j = io::to_json(t);
  CHECK(j["q"] == 3);
  CHECK(j["degrees"][2]["terms"][1]["pattern-id"] == "DS.Df");
  CHECK(j["degrees"][2]["terms"][1]["coeff"] == "1/3");
  const QuantizationTable back = io::table_from_json(j, "");
  CHECK(io::to_json(back) == j);
  json bad = j;
  bad["degrees"][1]["terms"][0]["pattern-id"] = "nope";
  CHECK_THROWS_AS(io::table_from_json(bad, ""), SchemaError);
}

TEST_CASE("catalogs") {
  const json j = json::parse(R"({
    "orbifolds": [{"name": "a", "dim": 1, "generators": [[["-1"]]]}],
    "isometries": [{"name": "flip", "source": "a", "target": "a", "linear": [["-1"]], "translation": ["0"]}]})");
  const Catalog c = catalog_from_json(j, "");
  CHECK(c.orbifolds.size() == 1);
  CHECK(c.isometries.size() == 1);
  CHECK(c.find("a").orbifold->dim() == 1);
  json bad = j;
  bad["isometries"][0]["target"] = "b";
  CHECK_THROWS_AS(catalog_from_json(bad, ""), SchemaError);
}

TEST_CASE("read_file reports the path") {
  try {
    io::read_file("/nonexistent/file.json");
    FAIL("missing file accepted");
  } catch (const SchemaError& e) {
    CHECK(e.location() == "/nonexistent/file.json");
  }
}

}  // TEST_SUITE
