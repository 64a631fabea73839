// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "../oracles/theta_oracle.hpp"
#include "cli.hpp"
#include "orbq/verify/generators.hpp"
#include "orbq/verify/verify.hpp"

using namespace orbq;

namespace {

constexpr std::uint64_t kRoot = 20261014;

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no limit
  std::function<std::string()> body;  // empty string on success
};

std::string describe(const Failure& f) {
  std::string s = f.message;
  if (!f.first_diff.empty()) s += " [" + f.first_diff + "]";
  return s;
}

// Runs `trials` draws of check; returns the first failure with its trial and seed.
std::string trials(const std::string& name, std::size_t n, const std::function<Outcome(std::size_t, Rng&)>& check) {
  const std::uint64_t base = derive_seed(kRoot, fnv1a(name));
  for (std::size_t t = 0; t < n; ++t) {
    const std::uint64_t seed = derive_seed(base, t);
    Rng rng(seed);
    Outcome o;
    try {
      o = check(t, rng);
    } catch (const std::exception& e) {
      o = Failure{std::string("exception: ") + e.what(), {}, {}, {}};
    }
    if (o) return name + " trial " + std::to_string(t) + " seed " + std::to_string(seed) + ": " + describe(*o);
  }
  return {};
}

std::vector<Resolution> resolutions(const std::vector<std::string>& names) {
  std::vector<Resolution> out;
  for (const auto& n : names) out.push_back(resolve(builtin_catalog().find(n).orbifold));
  return out;
}

std::string c1() {
  const char* files[] = {"r1_z2.json", "r2_pm.json", "r3_pm.json"};
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::string path = std::string(ORBQ_DATA_DIR) + "/" + files[n - 1];
    const char* argv[] = {"orbq", "resolve", "--config", path.c_str()};
    std::ostringstream out, err;
    const int code = cli::main(4, argv, out, err);
    if (code != 0) return "resolve exited " + std::to_string(code) + ": " + err.str();
    const auto j = nlohmann::json::parse(out.str());
    if (j["n"] != n || j["total_dim"] != n * (n + 1) / 2 || j["transverse_dim"] != n)
      return "n = " + std::to_string(n) + ": " + j.dump();
  }
  return {};
}

std::string c2() {
  const auto res = resolutions({"R2/Z2", "R2/Z4", "R2/D4"});
  for (const auto& r : res) {
    const std::string tag = " on R" + std::to_string(r.n()) + "/G(order " + std::to_string(r.orbifold()->group().order()) + ")";
    if (auto e = trials("function round-trip" + tag, 100, [&](std::size_t, Rng& g) { return checks::function_roundtrip(r, g); }); !e.empty())
      return e;
    if (auto e = trials("operator round-trip" + tag, 100, [&](std::size_t, Rng& g) { return checks::operator_roundtrip(r, g, 3); }); !e.empty())
      return e;
    if (auto e = trials("symbol round-trip" + tag, 100, [&](std::size_t, Rng& g) { return checks::symbol_roundtrip(r, g, 3); }); !e.empty())
      return e;
  }
  return trials("operator bracket", 50, [&](std::size_t t, Rng& g) { return checks::operator_bracket(res[t % 3], g, 2); });
}

std::string c3() {
  const auto res = resolutions({"R2/Z2", "R2/Z4", "R2/D4", "R3/Z2"});
  return trials("module relations", 50, [&](std::size_t t, Rng& g) { return checks::module_relations(res[t % res.size()], g); });
}

std::string c4() {
  const auto res = resolutions({"R2/Z2", "R2/Z4", "R2/D4", "R3/Z2"});
  if (auto e = trials("pairing identity", 50, [&](std::size_t t, Rng& g) { return checks::pairing_identity(res[t % res.size()], g); });
      !e.empty())
    return e;
  return trials("projective compatibility", 50,
                [&](std::size_t t, Rng& g) { return checks::projective_compatibility(res[t % res.size()], g); });
}

std::string c5() {
  const auto res = resolutions({"R2/Z2", "R2/Z4", "R2/D4", "R1/Z2", "R3/Z2"});
  for (unsigned k = 0; k <= 2; ++k)
    if (auto e = trials("normalization k=" + std::to_string(k), 50,
                        [&](std::size_t t, Rng& g) { return checks::normalization(res[t % res.size()], k, g); });
        !e.empty())
      return e;
  return {};
}

std::string c6() {
  const auto res = resolutions({"R2/Z2", "R2/Z4", "R2/D4", "R1/Z2", "R3/Z2"});
  for (unsigned k = 0; k <= 2; ++k)
    if (auto e = trials("projective invariance k=" + std::to_string(k), 50,
                        [&](std::size_t t, Rng& g) { return checks::projective_invariance(res[t % res.size()], k, g); });
        !e.empty())
      return e;
  return {};
}

std::string c7() {
  for (std::size_t q : {2u, 3u}) {
    const std::string tag = " (q=" + std::to_string(q) + ")";
    // The oracle has to accept the expected value and reject perturbations
    // before the solver output is compared to it.
    const Scalar div(0);
    if (!oracle::degree1_invariant(q, div, 20, 700 + q)) return "oracle rejects divergence coefficient 0" + tag;
    if (oracle::degree1_invariant(q, div + ratio(1, 5), 20, 700 + q)) return "oracle accepts a perturbed divergence coefficient" + tag;
    const Scalar a = ratio(2, static_cast<long>(q) + 3);
    if (!oracle::degree2_invariant(q, a, Scalar(0), 10, 800 + q)) return "oracle rejects 2/(q+3)" + tag;
    if (oracle::degree2_invariant(q, a + ratio(1, 11), Scalar(0), 10, 800 + q)) return "oracle accepts a perturbed gradient coefficient" + tag;

    const auto t1 = solve_coefficients(1, q).coefficient("DS.f");
    if (!t1 || *t1 != div) return "solver divergence coefficient " + (t1 ? to_string(*t1) : "missing") + tag;
    const auto t2 = solve_coefficients(2, q).coefficient("DS.Df");
    if (!t2 || *t2 != a) return "solver gradient coefficient " + (t2 ? to_string(*t2) : "missing") + tag;
  }
  return {};
}

std::string c8() {
  const Catalog& cat = builtin_catalog();
  bool distinct = false;
  for (const auto& iso : cat.isometries) {
    const bool identity = iso.phi.lift() == AffineMap::identity(iso.phi.source()->dim());
    if (!identity && iso.source != iso.target) distinct = true;
    if (auto e = trials("naturality " + iso.name, 50,
                        [&](std::size_t t, Rng& g) { return checks::naturality(iso.phi, static_cast<unsigned>(t % 3), g); });
        !e.empty())
      return e;
  }
  if (!distinct) return "catalog has no non-identity isometry between distinct presentations";
  return {};
}

std::string c9() {
  const Catalog& cat = builtin_catalog();
  return trials("commutation", 50, [&](std::size_t t, Rng& g) {
    // Alternate catalog isometries with random ones.
    if (t % 2 == 0) return checks::commutation(cat.isometries[(t / 2) % cat.isometries.size()].phi, g);
    const auto& orb = cat.orbifolds[(t / 2) % cat.orbifolds.size()].orbifold;
    return checks::commutation(random_isometry(g, orb), g);
  });
}

std::string c10() {
  std::vector<ChartPtr> charts{make_chart(0, 1), make_chart(1, 2), make_chart(3, 3), make_chart(2, 1), make_chart(1, 3),
                               make_chart(3, 2)};
  return trials("foliated instance", 100, [&](std::size_t t, Rng& g) -> Outcome {
    const ChartPtr& chart = charts[t % charts.size()];
    if (auto o = checks::field_operator_isomorphism(chart, g)) return o;
    if (auto o = checks::leafwise_ideal(chart, g)) return o;
    if (auto o = checks::oneform_characterization(chart, g)) return o;
    return checks::foliated_connection_axioms(chart, g);
  });
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "resolution dimensions", 1, c1},
      {2, "pullback isomorphism suite", 30, c2},
      {3, "module-relation identities", 0, c3},
      {4, "pairing identity and projective-class compatibility", 0, c4},
      {5, "quantization normalization", 0, c5},
      {6, "projective invariance", 60, c6},
      {7, "solver checkpoints", 0, c7},
      {8, "naturality", 60, c8},
      {9, "commutation relations", 0, c9},
      {10, "foliated structure suite", 10, c10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.body();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && c.limit_s > 0 && secs >= c.limit_s)
      why = "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_s) + " s";
    const bool ok = why.empty();
    if (!ok) ++failed;
    std::printf("%s C%d %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs, ok ? "" : ": ",
                why.c_str());
    std::fflush(stdout);
  }
  return failed;
}
