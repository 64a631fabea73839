#include "orbq/quantization/quantization.hpp"

#include <set>

#include "orbq/errors.hpp"
#include "orbq/quantization/tensor.hpp"
#include "orbq/random.hpp"

namespace orbq {

namespace {

constexpr std::uint64_t kSolverSeed = 0x6f7262715f736f6cULL;
constexpr std::size_t kMaxSamples = 12;

unsigned curvature_rank(Curvature c) {
  switch (c) {
    case Curvature::None: return 0;
    case Curvature::Ricci: return 2;
    case Curvature::RicciDerivative: return 3;
  }
  return 0;
}

void require_degree(unsigned k) {
  if (k > kMaxQuantizationDegree) {
    throw UnsupportedDegree("symbol degree " + std::to_string(k) + " is not supported (maximum " +
                            std::to_string(kMaxQuantizationDegree) + ")");
  }
}

SymTensor random_symbol(Rng& rng, const Coords& coords, unsigned k) {
  SymTensor s(coords, k);
  for (const Monomial& alpha : monomials_of_degree(coords.dim(), k))
    s.set(alpha, rng.poly(coords.vars, coords.active, 2, 4, 2, 3));
  return s;
}

Components random_form(Rng& rng, const Coords& coords) {
  Components theta;
  for (std::size_t i = 0; i < coords.dim(); ++i) theta.push_back(rng.poly(coords.vars, coords.active, 2, 4, 2, 3));
  return theta;
}

// Sorted keys (alpha, monomial) of the coefficient tables.
using Key = std::pair<Monomial, Monomial>;

void collect_keys(const DiffOp& d, std::set<Key>& keys) {
  for (const auto& [alpha, c] : d.coefficients())
    for (const auto& [m, v] : c.terms()) keys.emplace(alpha, m);
}

Scalar lookup(const DiffOp& d, const Key& key) {
  const auto it = d.coefficients().find(key.first);
  if (it == d.coefficients().end()) return Scalar(0);
  return it->second.coeff(key.second);
}

}  // namespace

unsigned AnsatzTerm::degree() const noexcept {
  return symbol_derivatives + function_derivatives + curvature_rank(curvature);
}

std::string AnsatzTerm::id() const {
  std::string out(symbol_derivatives, 'D');
  out += "S.";
  if (curvature == Curvature::Ricci) out += "Ric.";
  if (curvature == Curvature::RicciDerivative) out += "DRic.";
  out += std::string(function_derivatives, 'D');
  out += "f";
  return out;
}

AnsatzTerm parse_pattern_id(const std::string& id) {
  auto fail = [&]() -> AnsatzTerm { throw SchemaError("pattern-id", "unknown ansatz pattern '" + id + "'"); };
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = id.find('.', start);
    parts.push_back(id.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) return fail();
  auto count_d = [](const std::string& s, char tail, unsigned& n) {
    if (s.empty() || s.back() != tail) return false;
    n = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] != 'D') return false;
      ++n;
    }
    return true;
  };
  AnsatzTerm t;
  if (!count_d(parts.front(), 'S', t.symbol_derivatives) || !count_d(parts.back(), 'f', t.function_derivatives))
    return fail();
  if (parts.size() == 3) {
    if (parts[1] == "Ric") t.curvature = Curvature::Ricci;
    else if (parts[1] == "DRic") t.curvature = Curvature::RicciDerivative;
    else return fail();
  }
  return t;
}

std::vector<AnsatzTerm> build_ansatz(unsigned k, std::size_t q) {
  require_degree(k);
  if (q == 0) throw DimensionMismatch("transverse dimension must be at least 1");
  using C = Curvature;
  switch (k) {
    case 0: return {{0, 0, C::None}};
    case 1: return {{0, 1, C::None}, {1, 0, C::None}};
    case 2: return {{0, 2, C::None}, {1, 1, C::None}, {2, 0, C::None}, {0, 0, C::Ricci}};
    default:
      return {{0, 3, C::None}, {1, 2, C::None}, {2, 1, C::None}, {3, 0, C::None},
              {1, 0, C::Ricci}, {0, 1, C::Ricci}, {0, 0, C::RicciDerivative}};
  }
}

DiffOp evaluate_term(const AnsatzTerm& term, const Coords& coords, const Christoffel& gamma, const SymTensor& s) {
  const unsigned k = s.degree();
  if (term.degree() != k) throw DimensionMismatch("ansatz term " + term.id() + " does not match symbol degree");
  if (!(s.coords() == coords)) throw DimensionMismatch("symbol is not expressed in the quantization coordinates");
  const std::size_t q = coords.dim();
  const unsigned d = term.symbol_derivatives;
  const unsigned c = curvature_rank(term.curvature);

  PolyTensor sd = from_symbol(s);
  for (unsigned i = 0; i < d; ++i) sd = covariant_derivative(coords, gamma, sd);
  std::optional<PolyTensor> curv;
  if (term.curvature != Curvature::None) {
    curv = ricci(coords, gamma);
    if (term.curvature == Curvature::RicciDerivative) curv = covariant_derivative(coords, gamma, *curv);
  }
  const OpTensor fd = function_derivatives(coords, gamma, term.function_derivatives);

  DiffOp out(coords);
  std::vector<std::size_t> sidx(k + d);
  for_each_index(q, k, [&](std::span<const std::size_t> idx) {
    std::copy(idx.begin(), idx.end(), sidx.begin());
    std::copy(idx.begin(), idx.begin() + d, sidx.begin() + k);
    Poly coeff = sd(sidx);
    if (coeff.is_zero()) return;
    if (curv) {
      const Poly& r = (*curv)(idx.subspan(d, c));
      if (r.is_zero()) return;
      coeff *= r;
    }
    out += coeff * fd(idx.subspan(d + c));
  });
  return out;
}

std::optional<Scalar> DegreeTable::coefficient(const std::string& id) const {
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].id() == id) return coefficients[i];
  return std::nullopt;
}

DegreeTable solve_coefficients(unsigned k, std::size_t q) {
  DegreeTable table;
  table.k = k;
  table.terms = build_ansatz(k, q);
  const std::size_t unknowns = table.terms.size() - 1;
  const Coords coords = Coords::all(Variables::numbered("y", q));
  const Christoffel flat(coords);

  LinearSystem system(unknowns);
  std::size_t stable = 0;
  std::vector<Scalar> solution;
  for (std::size_t sample = 0; sample < kMaxSamples; ++sample) {
    Rng rng(derive_seed(kSolverSeed + 1000 * k + q, sample));
    const SymTensor s = random_symbol(rng, coords, k);
    const Christoffel shifted = shift_projectively(flat, random_form(rng, coords));
    std::vector<DiffOp> delta;
    std::set<Key> keys;
    for (const auto& term : table.terms) {
      delta.push_back(evaluate_term(term, coords, shifted, s) - evaluate_term(term, coords, flat, s));
      collect_keys(delta.back(), keys);
    }
    const std::size_t before = system.rank();
    for (const Key& key : keys) {
      std::vector<Scalar> row(unknowns);
      for (std::size_t t = 0; t < unknowns; ++t) row[t] = lookup(delta[t + 1], key);
      system.add_equation(std::move(row), -lookup(delta[0], key));
    }
    table.info.samples = sample + 1;
    if (!system.consistent()) {
      throw NoInvariantQuantization("no projectively invariant quantization in the degree-" + std::to_string(k) +
                                    " ansatz for q = " + std::to_string(q));
    }
    stable = system.rank() == before ? stable + 1 : 0;
    if (system.rank() == unknowns || (sample >= 1 && stable >= 2)) break;
  }
  solution = *system.solve();
  table.coefficients.push_back(Scalar(1));
  table.coefficients.insert(table.coefficients.end(), solution.begin(), solution.end());
  table.info.equations = system.equations_seen();
  table.info.rank = system.rank();
  for (std::size_t u : system.free_unknowns()) table.info.free_terms.push_back(table.terms[u + 1].id());
  return table;
}

QuantizationTable::QuantizationTable(std::size_t q, std::vector<DegreeTable> degrees)
    : q_(q), degrees_(std::move(degrees)) {
  if (q_ == 0) throw DimensionMismatch("transverse dimension must be at least 1");
  if (degrees_.empty()) throw ValidationError("quantization table has no degrees");
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    const DegreeTable& d = degrees_[i];
    if (d.k != i) throw ValidationError("quantization table degrees must be 0, 1, ... in order");
    require_degree(d.k);
    if (d.terms.size() != d.coefficients.size() || d.terms.empty())
      throw ValidationError("degree " + std::to_string(d.k) + ": terms and coefficients differ in length");
    if (!d.terms.front().is_leading() || d.terms.front().degree() != d.k || d.coefficients.front() != 1)
      throw ValidationError("degree " + std::to_string(d.k) + ": leading term must come first with coefficient 1");
    for (const auto& t : d.terms)
      if (t.degree() != d.k) throw ValidationError("term " + t.id() + " does not have degree " + std::to_string(d.k));
  }
}

QuantizationTable QuantizationTable::solve(std::size_t q, unsigned max_degree) {
  require_degree(max_degree);
  std::vector<DegreeTable> degrees;
  for (unsigned k = 0; k <= max_degree; ++k) degrees.push_back(solve_coefficients(k, q));
  return QuantizationTable(q, std::move(degrees));
}

const DegreeTable& QuantizationTable::degree(unsigned k) const {
  if (!supports(k))
    throw UnsupportedDegree("quantization table has no degree " + std::to_string(k) + " entry");
  return degrees_[k];
}

DiffOp assemble(const DegreeTable& table, const Coords& coords, const Christoffel& gamma, const SymTensor& s) {
  DiffOp out(coords);
  for (std::size_t t = 0; t < table.terms.size(); ++t) {
    if (is_zero(table.coefficients[t])) continue;
    out += table.coefficients[t] * evaluate_term(table.terms[t], coords, gamma, s);
  }
  return out;
}

FoliatedDiffOp foliated_quantize(const QuantizationTable& table, const FoliatedConnection& nabla,
                                 const FoliatedSymbol& s) {
  if (nabla.chart() != s.chart() && !nabla.chart()->same_as(*s.chart()))
    throw DimensionMismatch("connection and symbol live on different charts");
  if (table.q() != s.chart()->transverse_dim())
    throw DimensionMismatch("quantization table was solved for q = " + std::to_string(table.q()));
  const DegreeTable& d = table.degree(s.degree());
  return FoliatedDiffOp(s.chart(), assemble(d, s.chart()->transverse(), nabla.christoffel(), s.tensor()), s.degree());
}

FoliatedDiffOp foliated_quantize(const QuantizationTable& table, const FoliatedConnection& nabla,
                                 const std::vector<FoliatedSymbol>& parts) {
  DiffOp sum(nabla.chart()->transverse());
  unsigned order = 0;
  for (const auto& s : parts) {
    sum += foliated_quantize(table, nabla, s).op();
    order = std::max(order, s.degree());
  }
  return FoliatedDiffOp(nabla.chart(), sum, order);
}

SingularDiffOp singular_quantize(const Resolution& res, const QuantizationTable& table,
                                 const SingularConnection& nabla, const SingularSymbol& s) {
  return pullback_inverse(res, foliated_quantize(table, pullback(res, nabla), pullback(res, s)));
}

SingularDiffOp singular_quantize(const Resolution& res, const QuantizationTable& table,
                                 const SingularConnection& nabla, const std::vector<SingularSymbol>& parts) {
  std::vector<FoliatedSymbol> lifted;
  lifted.reserve(parts.size());
  for (const auto& s : parts) lifted.push_back(pullback(res, s));
  return pullback_inverse(res, foliated_quantize(table, pullback(res, nabla), lifted));
}

std::vector<SingularSymbol> dequantize(const Resolution& res, const QuantizationTable& table,
                                       const SingularConnection& nabla, const SingularDiffOp& d) {
  const int order = d.op().order();
  const unsigned top = order < 0 ? 0u : static_cast<unsigned>(order);
  table.degree(top);
  std::vector<SingularSymbol> parts;
  DiffOp rest = d.op();
  for (unsigned j = top + 1; j-- > 0;) {
    SingularSymbol s(d.orbifold(), SymTensor::leading(rest, j));
    rest -= singular_quantize(res, table, nabla, s).op();
    parts.push_back(std::move(s));
  }
  if (!rest.is_zero()) throw std::logic_error("dequantize: remainder after peeling all orders");
  std::reverse(parts.begin(), parts.end());
  return parts;
}

std::string first_difference(const Poly& a, const Poly& b) {
  const Poly diff = a - b;
  if (diff.is_zero()) return {};
  // Highest differing monomial in the term order.
  const Monomial& m = diff.terms().rbegin()->first;
  return Poly::term(diff.vars(), m, Scalar(1)).to_string() + ": " + to_string(a.coeff(m)) + " != " +
         to_string(b.coeff(m));
}

NaturalityReport verify_naturality(const Resolution& source, const Resolution& target, const LocalIsometry& phi,
                                   const QuantizationTable& table, const SingularConnection& nabla,
                                   const SingularSymbol& s, const SingularFunction& f) {
  const SingularDiffOp q_source = singular_quantize(source, table, pullback(phi, nabla), pullback(phi, s));
  const SingularFunction lhs = apply_diffop(q_source, pullback(phi, f));
  const SingularDiffOp q_target = singular_quantize(target, table, nabla, s);
  const SingularFunction rhs = pullback(phi, apply_diffop(q_target, f));
  NaturalityReport report;
  report.equal = lhs == rhs;
  report.lhs = lhs.rep().to_string();
  report.rhs = rhs.rep().to_string();
  report.first_diff = first_difference(lhs.rep(), rhs.rep());
  return report;
}

}  // namespace orbq
