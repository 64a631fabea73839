#pragma once

#include "orbq/quantization/quantization.hpp"
#include "orbq/random.hpp"

namespace orbq {

// Random data for the property suites. Orbifold objects are Reynolds/group
// averages of random data, so they are invariant by construction.
Poly random_poly(Rng& rng, const Coords& coords, unsigned max_degree);
SingularFunction random_function(Rng& rng, const OrbifoldPtr& orb, unsigned max_degree = 3);
SingularDiffOp random_operator(Rng& rng, const OrbifoldPtr& orb, unsigned order, unsigned coeff_degree = 2);
SingularSymbol random_symbol(Rng& rng, const OrbifoldPtr& orb, unsigned degree, unsigned coeff_degree = 2);
SingularVectorField random_vector_field(Rng& rng, const OrbifoldPtr& orb, unsigned max_degree = 2);
SingularOneForm random_one_form(Rng& rng, const OrbifoldPtr& orb, unsigned max_degree = 2);
SingularConnection random_connection(Rng& rng, const OrbifoldPtr& orb, unsigned max_degree = 1);

// Isometry from orb onto the conjugated orbifold A orb A^-1: A is a signed
// permutation, possibly composed with a rational (3/5, 4/5) plane rotation,
// and the translation is a random point fixed by the target group.
LocalIsometry random_isometry(Rng& rng, const OrbifoldPtr& orb);

// Foliated data on a chart.
FoliatedVectorField random_foliated_field(Rng& rng, const ChartPtr& chart, unsigned max_degree = 2);
AdaptedVectorField random_adapted_field(Rng& rng, const ChartPtr& chart, unsigned max_degree = 2);
AdaptedVectorField random_leafwise_field(Rng& rng, const ChartPtr& chart, unsigned max_degree = 2);
FoliatedFunction random_foliated_function(Rng& rng, const ChartPtr& chart, unsigned max_degree = 2);
FoliatedOneForm random_foliated_form(Rng& rng, const ChartPtr& chart, unsigned max_degree = 2);
FoliatedConnection random_foliated_connection(Rng& rng, const ChartPtr& chart, unsigned max_degree = 1);
// Raw 1-form on the full chart; about half of the draws satisfy the foliated
// conditions.
Components random_chart_form(Rng& rng, const FoliatedChart& chart, unsigned max_degree = 2);

}  // namespace orbq
