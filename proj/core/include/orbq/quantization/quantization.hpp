#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbq/resolution/resolution.hpp"

namespace orbq {

#ifdef ORBQ_ENABLE_DEGREE3
inline constexpr unsigned kMaxQuantizationDegree = 3;
#else
inline constexpr unsigned kMaxQuantizationDegree = 2;
#endif

enum class Curvature { None, Ricci, RicciDerivative };

// One full contraction: the upper indices of nabla^d S are contracted, in
// order, with its own d derivative slots, then with the curvature tensor's
// slots, then with the r slots of nabla^r f. Requires d + curvature rank + r = k.
struct AnsatzTerm {
  unsigned symbol_derivatives = 0;
  unsigned function_derivatives = 0;
  Curvature curvature = Curvature::None;

  unsigned degree() const noexcept;
  std::string id() const;
  bool is_leading() const noexcept { return symbol_derivatives == 0 && curvature == Curvature::None; }
  friend bool operator==(const AnsatzTerm&, const AnsatzTerm&) = default;
};

AnsatzTerm parse_pattern_id(const std::string& id);

// Leading term first. Throws UnsupportedDegree outside 0..kMaxQuantizationDegree.
std::vector<AnsatzTerm> build_ansatz(unsigned k, std::size_t q);

// The operator of one term for the connection and degree-k symbol on coords.
DiffOp evaluate_term(const AnsatzTerm& term, const Coords& coords, const Christoffel& gamma, const SymTensor& s);

struct SolveInfo {
  std::size_t samples = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  // Unknowns left undetermined by the constraints (set to 0).
  std::vector<std::string> free_terms;
};

struct DegreeTable {
  unsigned k = 0;
  std::vector<AnsatzTerm> terms;
  std::vector<Scalar> coefficients;
  SolveInfo info;

  std::optional<Scalar> coefficient(const std::string& id) const;
};

// Enforces Q(nabla_theta)(S) = Q(nabla_0)(S) for the flat connection nabla_0 on
// R^q and its projective shifts by polynomial 1-forms theta, with the leading
// coefficient fixed to 1. Throws NoInvariantQuantization if inconsistent.
DegreeTable solve_coefficients(unsigned k, std::size_t q);

class QuantizationTable {
 public:
  QuantizationTable(std::size_t q, std::vector<DegreeTable> degrees);
  // Degrees 0..max_degree.
  static QuantizationTable solve(std::size_t q, unsigned max_degree);

  std::size_t q() const noexcept { return q_; }
  const std::vector<DegreeTable>& degrees() const noexcept { return degrees_; }
  const DegreeTable& degree(unsigned k) const;
  bool supports(unsigned k) const noexcept { return k < degrees_.size(); }
  unsigned max_degree() const noexcept { return static_cast<unsigned>(degrees_.size()) - 1; }

 private:
  std::size_t q_;
  std::vector<DegreeTable> degrees_;
};

DiffOp assemble(const DegreeTable& table, const Coords& coords, const Christoffel& gamma, const SymTensor& s);

FoliatedDiffOp foliated_quantize(const QuantizationTable& table, const FoliatedConnection& nabla,
                                 const FoliatedSymbol& s);
// Linear extension to sums of homogeneous symbols.
FoliatedDiffOp foliated_quantize(const QuantizationTable& table, const FoliatedConnection& nabla,
                                 const std::vector<FoliatedSymbol>& parts);

// p_D^-1 (Q(p_C nabla)(p_S S)).
SingularDiffOp singular_quantize(const Resolution& res, const QuantizationTable& table,
                                 const SingularConnection& nabla, const SingularSymbol& s);
SingularDiffOp singular_quantize(const Resolution& res, const QuantizationTable& table,
                                 const SingularConnection& nabla, const std::vector<SingularSymbol>& parts);

// Left inverse: symbols S_0..S_k with sum_j Q(S_j) = D, peeled off from the
// top order down.
std::vector<SingularSymbol> dequantize(const Resolution& res, const QuantizationTable& table,
                                       const SingularConnection& nabla, const SingularDiffOp& d);

struct NaturalityReport {
  bool equal = false;
  std::string lhs;
  std::string rhs;
  std::string first_diff;
};

// Q_V(phi_C nabla)(phi_S S)(phi f) against phi(Q_V'(nabla)(S)(f)).
NaturalityReport verify_naturality(const Resolution& source, const Resolution& target, const LocalIsometry& phi,
                                   const QuantizationTable& table, const SingularConnection& nabla,
                                   const SingularSymbol& s, const SingularFunction& f);

// First monomial where a and b differ, rendered as "monomial: a != b".
std::string first_difference(const Poly& a, const Poly& b);

}  // namespace orbq
