#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbq/quantization/quantization.hpp"
#include "orbq/random.hpp"

namespace orbq {

struct CatalogOrbifold {
  std::string name;
  OrbifoldPtr orbifold;
};

struct CatalogIsometry {
  std::string name;
  std::size_t source;
  std::size_t target;
  LocalIsometry phi;
};

// Example set the suites draw from.
struct Catalog {
  std::vector<CatalogOrbifold> orbifolds;
  std::vector<CatalogIsometry> isometries;

  const CatalogOrbifold& find(const std::string& name) const;
};

// R1/{+-1}, R2/{+-I}, R2/Z4 in two presentations, R2/D4, the two coordinate
// reflections of R2, R3/{+-I}, with identity and non-identity isometries.
const Catalog& builtin_catalog();

// {orbifolds: [{name, dim, generators}], isometries: [{name, source, target, linear, translation}]};
// source and target are orbifold names.
Catalog catalog_from_json(const nlohmann::json& j, const std::string& loc);

struct Failure {
  std::string message;
  std::string lhs;
  std::string rhs;
  std::string first_diff;
};

using Outcome = std::optional<Failure>;

// Solved once per q and shared; thread-safe.
const QuantizationTable& quantization_table(std::size_t q);
// Highest degree the shared table for q supports.
unsigned supported_degree(std::size_t q);

// Individual properties; each draws its random data from rng.
namespace checks {

// Orbifold calculus.
Outcome function_validation(const OrbifoldPtr& orb, Rng& rng);
Outcome operator_calculus(const OrbifoldPtr& orb, Rng& rng);
Outcome vector_calculus(const OrbifoldPtr& orb, Rng& rng);
Outcome isometry_pullbacks(const LocalIsometry& phi, Rng& rng);

// Resolution pullbacks.
Outcome function_roundtrip(const Resolution& res, Rng& rng);
Outcome operator_roundtrip(const Resolution& res, Rng& rng, unsigned max_order = 3);
Outcome symbol_roundtrip(const Resolution& res, Rng& rng, unsigned max_degree = 3);
Outcome operator_bracket(const Resolution& res, Rng& rng, unsigned max_order = 2);
Outcome symbol_extraction(const Resolution& res, Rng& rng);
Outcome module_relations(const Resolution& res, Rng& rng);
Outcome pairing_identity(const Resolution& res, Rng& rng);
Outcome projective_compatibility(const Resolution& res, Rng& rng);
Outcome connection_identity(const Resolution& res, Rng& rng);
Outcome commutation(const LocalIsometry& phi, Rng& rng);

// Quantization.
Outcome normalization(const Resolution& res, unsigned k, Rng& rng);
Outcome projective_invariance(const Resolution& res, unsigned k, Rng& rng);
Outcome bijectivity(const Resolution& res, unsigned k, Rng& rng);
Outcome naturality(const LocalIsometry& phi, unsigned k, Rng& rng);

// Foliated calculus.
Outcome field_operator_isomorphism(const ChartPtr& chart, Rng& rng);
Outcome leafwise_ideal(const ChartPtr& chart, Rng& rng);
Outcome oneform_characterization(const ChartPtr& chart, Rng& rng);
Outcome foliated_connection_axioms(const ChartPtr& chart, Rng& rng);

}  // namespace checks

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
};

struct TrialFailure {
  std::string property;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Failure failure;
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  std::vector<TrialFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

// Runs every property of the suite ("pullbacks", "projective", "naturality",
// "foliated" or "all") for `trials` trials. Trial t of property p uses the seed
// derive_seed(derive_seed(seed, p), t) and picks its example from the catalog
// round-robin, so reports do not depend on the number of threads.
SuiteReport run_suite(const std::string& suite, const Catalog& catalog, std::size_t trials, std::uint64_t seed,
                      unsigned threads = 1);

nlohmann::json to_json(const SuiteReport& report);

}  // namespace orbq
