#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "orbq/quantization/quantization.hpp"

// JSON schemas. Rationals are strings "p/q" (integers may also be plain
// numbers); matrices are arrays of rows; polynomials are arrays of
// {exponents, coeff}; tensor and Christoffel indices are 1-based. Malformed
// input throws SchemaError carrying a JSON-pointer-like location.
namespace orbq::io {

using nlohmann::json;

Scalar scalar_from_json(const json& j, const std::string& loc);
json to_json(const Scalar& s);

Matrix matrix_from_json(const json& j, const std::string& loc);
json to_json(const Matrix& m);

Poly poly_from_json(const json& j, const Variables& vars, const std::string& loc);
json to_json(const Poly& p);

// {dim, generators, cap?, degree_bound?}
OrbifoldPtr orbifold_from_json(const json& j, const std::string& loc);
json to_json(const Orbifold& orb);

// {poly}
SingularFunction function_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc);
json to_json(const SingularFunction& f);

// {order, coeffs: [{alpha, poly}]}
SingularDiffOp diffop_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc);
json to_json(const DiffOp& d, unsigned order);
json to_json(const SingularDiffOp& d);

// {degree, components: [{indices, poly}]}; "alpha" (multiplicities) is
// accepted instead of "indices".
SingularSymbol symbol_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc);
json to_json(const SymTensor& s);
json to_json(const SingularSymbol& s);

// {components: [poly]}
SingularVectorField vector_field_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc);
SingularOneForm one_form_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc);
json to_json(const SingularVectorField& x);
json to_json(const SingularOneForm& a);

// {christoffel: [{k, i, j, poly}]}; an entry also sets its (j, i) mirror
// unless the mirror is listed explicitly.
SingularConnection connection_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc);
json to_json(const Christoffel& g);
json to_json(const SingularConnection& c);

// {linear, translation}
LocalIsometry isometry_from_json(const OrbifoldPtr& source, const OrbifoldPtr& target, const json& j,
                                 const std::string& loc);
json to_json(const LocalIsometry& phi);

// {p, q}
ChartPtr chart_from_json(const json& j, const std::string& loc);
json to_json(const FoliatedChart& chart);
// {chart: {p, q}, poly} with exponents over m1..mp, y1..yq.
FoliatedFunction foliated_function_from_json(const json& j, const std::string& loc);
json to_json(const FoliatedFunction& f);

// {n, leaf_dim, transverse_dim, total_dim}
json to_json(const Resolution& res);

// {q, degrees: [{k, terms: [{pattern-id, coeff}]}]}
QuantizationTable table_from_json(const json& j, const std::string& loc);
json to_json(const QuantizationTable& table);

// Reads and parses a file; parse errors become SchemaError at "<path>".
json read_file(const std::string& path);

}  // namespace orbq::io
