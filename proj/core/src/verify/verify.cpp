#include "orbq/verify/verify.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "orbq/errors.hpp"
#include "orbq/io/json.hpp"
#include "orbq/verify/generators.hpp"

namespace orbq {

namespace {

std::string describe(const Components& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + c[i].to_string();
  return out + ")";
}

std::string describe(const Monomial& alpha) {
  std::string out = "[";
  for (std::size_t i = 0; i < alpha.size(); ++i) out += (i ? "," : "") + std::to_string(alpha[i]);
  return out + "]";
}

std::string describe(const DiffOp& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (auto it = d.coefficients().rbegin(); it != d.coefficients().rend(); ++it)
    out += (out.empty() ? "" : "; ") + describe(it->first) + ": " + it->second.to_string();
  return out;
}

std::string describe(const SymTensor& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (auto it = s.components().rbegin(); it != s.components().rend(); ++it)
    out += (out.empty() ? "" : "; ") + describe(it->first) + ": " + it->second.to_string();
  return out;
}

std::string describe(const Christoffel& g) {
  std::string out;
  const std::size_t n = g.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!g(k, i, j).is_zero())
          out += (out.empty() ? "" : "; ") + std::to_string(k + 1) + std::to_string(i + 1) + std::to_string(j + 1) +
                 ": " + g(k, i, j).to_string();
  return out.empty() ? "0" : out;
}

std::string diff(const Poly& a, const Poly& b) { return first_difference(a, b); }

std::string diff(const Components& a, const Components& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (!(a[i] == b[i])) return "component " + std::to_string(i + 1) + ": " + first_difference(a[i], b[i]);
  return a.size() == b.size() ? std::string() : "component counts differ";
}

std::string diff(const DiffOp& a, const DiffOp& b) {
  const DiffOp d = a - b;
  if (d.is_zero()) return {};
  const Monomial& alpha = d.coefficients().rbegin()->first;
  return "alpha " + describe(alpha) + ": " + first_difference(a.coefficient(alpha), b.coefficient(alpha));
}

std::string diff(const SymTensor& a, const SymTensor& b) {
  for (const SymTensor* s : {&a, &b})
    for (const auto& [alpha, c] : s->components())
      if (!(a.component(alpha) == b.component(alpha)))
        return "component " + describe(alpha) + ": " + first_difference(a.component(alpha), b.component(alpha));
  return a.degree() == b.degree() ? std::string() : "degrees differ";
}

std::string diff(const Christoffel& a, const Christoffel& b) {
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(a(k, i, j) == b(k, i, j)))
          return "Gamma^" + std::to_string(k + 1) + "_" + std::to_string(i + 1) + std::to_string(j + 1) + ": " +
                 first_difference(a(k, i, j), b(k, i, j));
  return {};
}

template <class T>
Outcome expect_equal(const std::string& what, const T& lhs, const T& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Failure{what, describe(lhs), describe(rhs), diff(lhs, rhs)};
}

template <>
Outcome expect_equal(const std::string& what, const Poly& lhs, const Poly& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Failure{what, lhs.to_string(), rhs.to_string(), diff(lhs, rhs)};
}

Outcome expect(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return Failure{what, {}, {}, {}};
}

// Runs checks in order and returns the first failure.
#define ORBQ_CHECK(expr)             \
  do {                               \
    if (Outcome o_ = (expr)) return o_; \
  } while (false)

Matrix mat(std::size_t n, std::initializer_list<long> entries) {
  std::vector<Scalar> v;
  for (long e : entries) v.emplace_back(e);
  return Matrix(n, n, std::move(v));
}

OrbifoldPtr orbifold(std::size_t n, std::vector<Matrix> gens) {
  std::vector<OrthMatrix> g;
  for (auto& m : gens) g.emplace_back(std::move(m));
  return make_orbifold(n, g);
}

}  // namespace

const CatalogOrbifold& Catalog::find(const std::string& name) const {
  for (const auto& o : orbifolds)
    if (o.name == name) return o;
  throw SchemaError("catalog", "no orbifold named '" + name + "'");
}

const Catalog& builtin_catalog() {
  static const Catalog catalog = [] {
    Catalog c;
    const Matrix rot90 = mat(2, {0, -1, 1, 0});
    Matrix pyth(2, 2);
    pyth(0, 0) = ratio(3, 5);
    pyth(0, 1) = ratio(-4, 5);
    pyth(1, 0) = ratio(4, 5);
    pyth(1, 1) = ratio(3, 5);
    const OrthMatrix p(pyth);
    const OrthMatrix d1(mat(2, {0, 1, 1, 0}));
    const OrthMatrix d2(mat(2, {-1, 0, 0, 1}));
    c.orbifolds = {
        {"R1/Z2", orbifold(1, {mat(1, {-1})})},
        {"R2/Z2", orbifold(2, {mat(2, {-1, 0, 0, -1})})},
        {"R2/Z4", orbifold(2, {rot90})},
        {"R2/Z4-inverse-generator", orbifold(2, {mat(2, {0, 1, -1, 0})})},
        {"R2/D4", orbifold(2, {d1.matrix(), d2.matrix()})},
        {"R2/D4-rotated", orbifold(2, {(p * d1 * p.inverse()).matrix(), (p * d2 * p.inverse()).matrix()})},
        {"R2/reflect-y", orbifold(2, {mat(2, {1, 0, 0, -1})})},
        {"R2/reflect-x", orbifold(2, {mat(2, {-1, 0, 0, 1})})},
        {"R3/Z2", orbifold(3, {mat(3, {-1, 0, 0, 0, -1, 0, 0, 0, -1})})},
    };
    auto idx = [&](const std::string& name) {
      for (std::size_t i = 0; i < c.orbifolds.size(); ++i)
        if (c.orbifolds[i].name == name) return i;
      throw std::logic_error("catalog: " + name);
    };
    auto add = [&](const std::string& name, const std::string& src, const std::string& dst, Matrix a,
                   std::vector<Scalar> b) {
      const std::size_t s = idx(src), t = idx(dst);
      c.isometries.push_back({name, s, t,
                              LocalIsometry(c.orbifolds[s].orbifold, c.orbifolds[t].orbifold,
                                            AffineMap{std::move(a), std::move(b)})});
    };
    add("R1/Z2 reflection", "R1/Z2", "R1/Z2", mat(1, {-1}), {0});
    add("R2/Z2 identity", "R2/Z2", "R2/Z2", Matrix::identity(2), {0, 0});
    add("R2/Z2 rotation", "R2/Z2", "R2/Z2", rot90, {0, 0});
    add("R2/Z4 presentations", "R2/Z4", "R2/Z4-inverse-generator", mat(2, {1, 0, 0, -1}), {0, 0});
    add("R2/D4 rational rotation", "R2/D4", "R2/D4-rotated", pyth, {0, 0});
    add("R2 reflections", "R2/reflect-y", "R2/reflect-x", rot90, {0, ratio(1, 2)});
    add("R3/Z2 signed permutation", "R3/Z2", "R3/Z2", mat(3, {0, 1, 0, 0, 0, -1, 1, 0, 0}), {0, 0, 0});
    return c;
  }();
  return catalog;
}

Catalog catalog_from_json(const nlohmann::json& j, const std::string& loc) {
  Catalog c;
  if (!j.is_object() || !j.contains("orbifolds") || !j["orbifolds"].is_array())
    throw SchemaError(loc, "expected an object with an 'orbifolds' array");
  const auto& orbs = j["orbifolds"];
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    const std::string l = loc + "/orbifolds/" + std::to_string(i);
    std::string name = "orbifold-" + std::to_string(i + 1);
    if (orbs[i].contains("name")) {
      if (!orbs[i]["name"].is_string()) throw SchemaError(l + "/name", "expected a string");
      name = orbs[i]["name"].get<std::string>();
    }
    c.orbifolds.push_back({name, io::orbifold_from_json(orbs[i], l)});
  }
  if (c.orbifolds.empty()) throw SchemaError(loc + "/orbifolds", "at least one orbifold is required");
  if (j.contains("isometries")) {
    const auto& isos = j["isometries"];
    if (!isos.is_array()) throw SchemaError(loc + "/isometries", "expected an array");
    for (std::size_t i = 0; i < isos.size(); ++i) {
      const std::string l = loc + "/isometries/" + std::to_string(i);
      auto lookup = [&](const char* key) {
        if (!isos[i].contains(key) || !isos[i][key].is_string())
          throw SchemaError(l + "/" + key, "expected an orbifold name");
        const std::string name = isos[i][key].get<std::string>();
        for (std::size_t k = 0; k < c.orbifolds.size(); ++k)
          if (c.orbifolds[k].name == name) return k;
        throw SchemaError(l + "/" + key, "no orbifold named '" + name + "'");
      };
      const std::size_t s = lookup("source"), t = lookup("target");
      std::string name = isos[i].value("name", "isometry-" + std::to_string(i + 1));
      c.isometries.push_back(
          {name, s, t, io::isometry_from_json(c.orbifolds[s].orbifold, c.orbifolds[t].orbifold, isos[i], l)});
    }
  }
  return c;
}

const QuantizationTable& quantization_table(std::size_t q) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<QuantizationTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<QuantizationTable>(QuantizationTable::solve(q, supported_degree(q)));
  return *slot;
}

unsigned supported_degree(std::size_t q) {
  // In one dimension the Ricci terms vanish and the degree-3 ansatz has no
  // invariant solution.
  return q == 1 ? std::min(2u, kMaxQuantizationDegree) : kMaxQuantizationDegree;
}

namespace checks {

Outcome function_validation(const OrbifoldPtr& orb, Rng& rng) {
  const Poly f = random_poly(rng, orb->coords(), 4);
  const bool invariant = reynolds(f, orb->group()) == f;
  bool accepted = true;
  try {
    SingularFunction checked(orb, f);
  } catch (const InvarianceViolation&) {
    accepted = false;
  }
  ORBQ_CHECK(expect(accepted == invariant, "make_function acceptance disagrees with the Reynolds fixed-point test"));
  const SingularFunction g = random_function(rng, orb, 3);
  const SingularFunction h = random_function(rng, orb, 2);
  const SingularDiffOp d = random_operator(rng, orb, static_cast<unsigned>(rng.below(3)));
  // Throws InvarianceViolation if the result is not invariant.
  apply_diffop(d, g * h);
  return std::nullopt;
}

Outcome operator_calculus(const OrbifoldPtr& orb, Rng& rng) {
  const unsigned o1 = static_cast<unsigned>(rng.below(4));
  const unsigned o2 = static_cast<unsigned>(rng.below(4));
  const SingularDiffOp a = random_operator(rng, orb, o1);
  const SingularDiffOp b = random_operator(rng, orb, o2);
  const SingularDiffOp c = commutator(a, b);
  const int bound = static_cast<int>(o1 + o2) - 1;
  ORBQ_CHECK(expect(c.op().order() <= std::max(bound, 0) && (o1 + o2 > 0 || c.op().is_zero()),
                    "commutator order did not drop"));
  ORBQ_CHECK(expect(commutator(a, a).op().is_zero(), "[D, D] is not zero"));
  if (o1 + o2 > 0) {
    const SymTensor lhs = SymTensor::leading(c.op(), o1 + o2 - 1);
    const SymTensor rhs = poisson_bracket(symbol_of(a, o1).tensor(), symbol_of(b, o2).tensor());
    ORBQ_CHECK(expect_equal("symbol of the commutator differs from the bracket of symbols", lhs, rhs));
  }
  return std::nullopt;
}

Outcome vector_calculus(const OrbifoldPtr& orb, Rng& rng) {
  const auto x = random_vector_field(rng, orb);
  const auto y = random_vector_field(rng, orb);
  const auto z = random_vector_field(rng, orb);
  const Coords& c = orb->coords();
  Components jac = zero_components(c);
  for (const auto& part : {vect_bracket(x, vect_bracket(y, z)), vect_bracket(y, vect_bracket(z, x)),
                           vect_bracket(z, vect_bracket(x, y))})
    for (std::size_t i = 0; i < jac.size(); ++i) jac[i] += part.components()[i];
  ORBQ_CHECK(expect_equal("Jacobi identity", jac, zero_components(c)));
  ORBQ_CHECK(expect_equal("bracket against commutator", as_operator(vect_bracket(x, y)).op(),
                          commutator(as_operator(x), as_operator(y)).op()));
  const auto nabla = random_connection(rng, orb);
  Components torsion = connection_apply(nabla, x, y).components();
  const Components yx = connection_apply(nabla, y, x).components();
  const Components br = vect_bracket(x, y).components();
  for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] -= yx[i] + br[i];
  ORBQ_CHECK(expect_equal("torsion identity", torsion, zero_components(c)));
  const auto alpha = random_one_form(rng, orb);
  Components neg = alpha.components();
  for (auto& p : neg) p = -p;
  const SingularConnection back = projective_shift(projective_shift(nabla, alpha), SingularOneForm(orb, neg));
  ORBQ_CHECK(expect_equal("shift by alpha and -alpha", back.christoffel(), nabla.christoffel()));
  return std::nullopt;
}

Outcome isometry_pullbacks(const LocalIsometry& phi, Rng& rng) {
  const OrbifoldPtr& v = phi.target();
  const auto d1 = random_operator(rng, v, static_cast<unsigned>(rng.below(3)));
  const auto d2 = random_operator(rng, v, static_cast<unsigned>(rng.below(3)));
  ORBQ_CHECK(expect_equal("phi_D preserves commutators", pullback(phi, commutator(d1, d2)).op(),
                          commutator(pullback(phi, d1), pullback(phi, d2)).op()));
  const auto f = random_function(rng, v);
  const auto x = random_vector_field(rng, v);
  const auto y = random_vector_field(rng, v);
  ORBQ_CHECK(expect_equal("phi_Vect(f X) = (phi f)(phi_Vect X)", pullback(phi, scale(f, x)).components(),
                          scale(pullback(phi, f), pullback(phi, x)).components()));
  ORBQ_CHECK(expect_equal("(phi_Vect X)(phi f) = phi(X f)", apply_field(pullback(phi, x), pullback(phi, f)).rep(),
                          pullback(phi, apply_field(x, f)).rep()));
  const auto nabla = random_connection(rng, v);
  const auto pulled = pullback(phi, nabla);
  ORBQ_CHECK(expect(pulled.christoffel().symmetric(), "pulled-back connection has torsion"));
  ORBQ_CHECK(expect_equal("phi_C definition", connection_apply(pulled, pullback(phi, x), pullback(phi, y)).components(),
                          pullback(phi, connection_apply(nabla, x, y)).components()));
  const auto s = random_symbol(rng, v, static_cast<unsigned>(rng.below(3)));
  ORBQ_CHECK(expect_equal("phi_S is the symbol of phi_D", pullback(phi, s).tensor(),
                          symbol_of(pullback(phi, SingularDiffOp(v, s.tensor().to_operator(), s.degree())), s.degree())
                              .tensor()));
  return std::nullopt;
}

Outcome function_roundtrip(const Resolution& res, Rng& rng) {
  const auto f = random_function(rng, res.orbifold());
  const auto g = random_function(rng, res.orbifold());
  ORBQ_CHECK(expect_equal("p^-1 p f = f", pullback_inverse(res, pullback(res, f)).rep(), f.rep()));
  ORBQ_CHECK(expect_equal("p(f g) = p f p g", pullback(res, f * g).rep(), (pullback(res, f) * pullback(res, g)).rep()));
  ORBQ_CHECK(expect_equal("p(f + g) = p f + p g", pullback(res, f + g).rep(),
                          (pullback(res, f) + pullback(res, g)).rep()));
  return std::nullopt;
}

Outcome operator_roundtrip(const Resolution& res, Rng& rng, unsigned max_order) {
  const auto d = random_operator(rng, res.orbifold(), static_cast<unsigned>(rng.below(max_order + 1)));
  const auto up = pullback(res, d);
  ORBQ_CHECK(expect(up.order() == d.order(), "p_D changed the order"));
  ORBQ_CHECK(expect_equal("p_D^-1 p_D D = D", pullback_inverse(res, up).op(), d.op()));
  const auto f = random_function(rng, res.orbifold());
  ORBQ_CHECK(expect_equal("p_D D = p D p^-1", apply_diffop(up, pullback(res, f)).rep(),
                          pullback(res, apply_diffop(d, f)).rep()));
  return std::nullopt;
}

Outcome symbol_roundtrip(const Resolution& res, Rng& rng, unsigned max_degree) {
  const auto s = random_symbol(rng, res.orbifold(), static_cast<unsigned>(rng.below(max_degree + 1)));
  return expect_equal("p_S^-1 p_S S = S", pullback_inverse(res, pullback(res, s)).tensor(), s.tensor());
}

Outcome operator_bracket(const Resolution& res, Rng& rng, unsigned max_order) {
  const auto a = random_operator(rng, res.orbifold(), static_cast<unsigned>(rng.below(max_order + 1)));
  const auto b = random_operator(rng, res.orbifold(), static_cast<unsigned>(rng.below(max_order + 1)));
  return expect_equal("p_D[D1, D2] = [p_D D1, p_D D2]", pullback(res, commutator(a, b)).op(),
                      commutator(pullback(res, a), pullback(res, b)).op());
}

Outcome symbol_extraction(const Resolution& res, Rng& rng) {
  const unsigned k = static_cast<unsigned>(rng.below(4));
  const auto d = random_operator(rng, res.orbifold(), k);
  return expect_equal("p_S symbol_of = symbol_of p_D", pullback(res, symbol_of(d, k)).tensor(),
                      symbol_of(pullback(res, d), k).tensor());
}

Outcome module_relations(const Resolution& res, Rng& rng) {
  const auto f = random_function(rng, res.orbifold());
  const auto x = random_vector_field(rng, res.orbifold());
  const auto y = random_vector_field(rng, res.orbifold());
  ORBQ_CHECK(expect_equal("p_Vect(f X) = (p f)(p_Vect X)", pullback(res, scale(f, x)).components(),
                          scale(pullback(res, f), pullback(res, x)).components()));
  ORBQ_CHECK(expect_equal("(p_Vect X)(p f) = p(X f)", apply_field(pullback(res, x), pullback(res, f)).rep(),
                          pullback(res, apply_field(x, f)).rep()));
  ORBQ_CHECK(expect_equal("p_Vect preserves brackets", pullback(res, vect_bracket(x, y)).components(),
                          foliated_bracket(pullback(res, x), pullback(res, y)).components()));
  return std::nullopt;
}

Outcome pairing_identity(const Resolution& res, Rng& rng) {
  const auto alpha = random_one_form(rng, res.orbifold());
  const FoliatedVectorField x = pullback(res, random_vector_field(rng, res.orbifold()));
  return expect_equal("(p_Omega alpha)(X) = p(alpha(p_Vect^-1 X))", pair(pullback(res, alpha), x).rep(),
                      pullback(res, pair(alpha, pullback_inverse(res, x))).rep());
}

Outcome projective_compatibility(const Resolution& res, Rng& rng) {
  const auto nabla = random_connection(rng, res.orbifold());
  const auto alpha = random_one_form(rng, res.orbifold());
  return expect_equal("p_C shift = foliated shift p_C", pullback(res, projective_shift(nabla, alpha)).christoffel(),
                      foliated_projective_shift(pullback(res, nabla), pullback(res, alpha)).christoffel());
}

Outcome connection_identity(const Resolution& res, Rng& rng) {
  const auto nabla = random_connection(rng, res.orbifold());
  const auto x = random_vector_field(rng, res.orbifold());
  const auto y = random_vector_field(rng, res.orbifold());
  return expect_equal("(p_C nabla)_X Y = p_Vect(nabla_{p^-1 X} p^-1 Y)",
                      foliated_connection_apply(pullback(res, nabla), pullback(res, x), pullback(res, y)).components(),
                      pullback(res, connection_apply(nabla, x, y)).components());
}

Outcome commutation(const LocalIsometry& phi, Rng& rng) {
  const Resolution src = resolve(phi.source());
  const Resolution dst = resolve(phi.target());
  const ResolvedIsometry lift = lift_isometry(src, dst, phi);
  const auto f = random_function(rng, phi.target());
  const auto s = random_symbol(rng, phi.target(), static_cast<unsigned>(rng.below(4)));
  const auto nabla = random_connection(rng, phi.target());
  const CommutationReport r = check_commutation(lift, f, s, nabla);
  if (r.ok()) return std::nullopt;
  std::string which = !r.functions ? "p phi = Phi p'" : !r.symbols ? "p_S phi_S = Phi_S p'_S" : "p_C phi_C = Phi_C p'_C";
  return Failure{"commutation relation " + which + " fails", {}, {}, r.first_diff};
}

Outcome normalization(const Resolution& res, unsigned k, Rng& rng) {
  const auto& table = quantization_table(res.transverse_dim());
  const auto nabla = random_connection(rng, res.orbifold());
  const auto s = random_symbol(rng, res.orbifold(), k);
  const auto q = singular_quantize(res, table, nabla, s);
  ORBQ_CHECK(expect(q.op().order() <= static_cast<int>(k), "quantized operator exceeds the symbol degree"));
  return expect_equal("[Q(nabla)(S)] = S", symbol_of(q, k).tensor(), s.tensor());
}

Outcome projective_invariance(const Resolution& res, unsigned k, Rng& rng) {
  const auto& table = quantization_table(res.transverse_dim());
  const auto nabla = random_connection(rng, res.orbifold());
  const auto alpha = random_one_form(rng, res.orbifold(), 3);
  const auto s = random_symbol(rng, res.orbifold(), k);
  return expect_equal("Q(nabla) = Q(nabla + alpha)", singular_quantize(res, table, nabla, s).op(),
                      singular_quantize(res, table, projective_shift(nabla, alpha), s).op());
}

Outcome bijectivity(const Resolution& res, unsigned k, Rng& rng) {
  const auto& table = quantization_table(res.transverse_dim());
  const auto nabla = random_connection(rng, res.orbifold());
  std::vector<SingularSymbol> parts;
  for (unsigned j = 0; j <= k; ++j) parts.push_back(random_symbol(rng, res.orbifold(), j));
  const auto d = singular_quantize(res, table, nabla, parts);
  const auto back = dequantize(res, table, nabla, d);
  for (unsigned j = 0; j <= k; ++j) {
    const SymTensor got = j < back.size() ? back[j].tensor() : SymTensor(res.orbifold()->coords(), j);
    ORBQ_CHECK(expect_equal("dequantize recovers the degree-" + std::to_string(j) + " part", got, parts[j].tensor()));
  }
  for (std::size_t j = k + 1; j < back.size(); ++j)
    ORBQ_CHECK(expect(back[j].tensor().is_zero(), "dequantize produced a spurious top-degree part"));
  return std::nullopt;
}

Outcome naturality(const LocalIsometry& phi, unsigned k, Rng& rng) {
  const Resolution src = resolve(phi.source());
  const Resolution dst = resolve(phi.target());
  const auto& table = quantization_table(src.transverse_dim());
  const auto nabla = random_connection(rng, phi.target());
  const auto s = random_symbol(rng, phi.target(), k);
  const auto f = random_function(rng, phi.target());
  const NaturalityReport r = verify_naturality(src, dst, phi, table, nabla, s, f);
  if (r.equal) return std::nullopt;
  return Failure{"Q(phi nabla)(phi S)(phi f) != phi(Q(nabla)(S) f)", r.lhs, r.rhs, r.first_diff};
}

Outcome field_operator_isomorphism(const ChartPtr& chart, Rng& rng) {
  const auto x = random_foliated_field(rng, chart);
  const auto y = random_foliated_field(rng, chart);
  ORBQ_CHECK(expect_equal("bracket corresponds to the commutator", as_operator(foliated_bracket(x, y)).op(),
                          commutator(as_operator(x), as_operator(y)).op()));
  ORBQ_CHECK(expect_equal("operator round trip", as_vector_field(as_operator(x)).components(), x.components()));
  ORBQ_CHECK(expect_equal("symbol round trip", as_vector_field(as_symbol(x)).components(), x.components()));
  ORBQ_CHECK(expect_equal("symbol of the operator", symbol_of(as_operator(x), 1).tensor(), as_symbol(x).tensor()));
  const auto f = random_foliated_function(rng, chart);
  const auto g = random_foliated_function(rng, chart);
  ORBQ_CHECK(expect_equal("fields act as derivations", apply_field(x, f * g).rep(),
                          (apply_field(x, f) * g + f * apply_field(x, g)).rep()));
  return std::nullopt;
}

Outcome leafwise_ideal(const ChartPtr& chart, Rng& rng) {
  const auto x = random_adapted_field(rng, chart);
  const auto y = random_adapted_field(rng, chart);
  const auto l = random_leafwise_field(rng, chart);
  ORBQ_CHECK(expect(adapted_bracket(x, l).is_leafwise(), "[adapted, leafwise] is not leafwise"));
  ORBQ_CHECK(expect_equal("class of the bracket", foliated_class(adapted_bracket(x, y)).components(),
                          foliated_bracket(foliated_class(x), foliated_class(y)).components()));
  return std::nullopt;
}

Outcome oneform_characterization(const ChartPtr& chart, Rng& rng) {
  const Components form = random_chart_form(rng, *chart);
  const bool semantic = satisfies_foliated_conditions(*chart, form);
  const bool syntactic = is_syntactically_foliated(*chart, form);
  ORBQ_CHECK(expect(semantic == syntactic, "syntactic and defining conditions disagree"));
  if (syntactic) {
    const FoliatedOneForm theta = FoliatedOneForm::from_full(chart, form);
    // Validated as a foliated function on construction.
    pair(theta, random_foliated_field(rng, chart));
  } else {
    try {
      FoliatedOneForm::from_full(chart, form);
      return Failure{"non-foliated 1-form was accepted", describe(form), {}, {}};
    } catch (const NotFoliated&) {
    }
  }
  return std::nullopt;
}

Outcome foliated_connection_axioms(const ChartPtr& chart, Rng& rng) {
  const auto nabla = random_foliated_connection(rng, chart);
  const auto x = random_foliated_field(rng, chart);
  const auto y = random_foliated_field(rng, chart);
  const auto f = random_foliated_function(rng, chart);
  const Coords& t = chart->transverse();
  auto comps = [&](const FoliatedVectorField& v) { return v.components(); };
  Components leibniz = comps(foliated_connection_apply(nabla, x, scale(f, y)));
  const Components a = comps(scale(apply_field(x, f), y));
  const Components b = comps(scale(f, foliated_connection_apply(nabla, x, y)));
  for (std::size_t i = 0; i < leibniz.size(); ++i) leibniz[i] -= a[i] + b[i];
  ORBQ_CHECK(expect_equal("Leibniz rule", leibniz, zero_components(t)));
  ORBQ_CHECK(expect_equal("linearity in X", comps(foliated_connection_apply(nabla, scale(f, x), y)),
                          comps(scale(f, foliated_connection_apply(nabla, x, y)))));
  Components torsion = comps(foliated_connection_apply(nabla, x, y));
  const Components yx = comps(foliated_connection_apply(nabla, y, x));
  const Components br = comps(foliated_bracket(x, y));
  for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] -= yx[i] + br[i];
  ORBQ_CHECK(expect_equal("torsion identity", torsion, zero_components(t)));
  const auto theta = random_foliated_form(rng, chart);
  Components neg = theta.components();
  for (auto& p : neg) p = -p;
  ORBQ_CHECK(expect_equal("shift and unshift",
                          foliated_projective_shift(foliated_projective_shift(nabla, theta),
                                                    FoliatedOneForm(chart, neg))
                              .christoffel(),
                          nabla.christoffel()));
  // The defining difference of projectively equivalent connections.
  Components delta = comps(foliated_connection_apply(foliated_projective_shift(nabla, theta), x, y));
  const Components base = comps(foliated_connection_apply(nabla, x, y));
  const Components tx = comps(scale(pair(theta, x), y));
  const Components ty = comps(scale(pair(theta, y), x));
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] -= base[i] + tx[i] + ty[i];
  ORBQ_CHECK(expect_equal("projective difference", delta, zero_components(t)));
  return std::nullopt;
}

}  // namespace checks

namespace {

struct Property {
  std::string name;
  std::string suite;
  std::function<Outcome(const Catalog&, std::size_t, Rng&)> run;
};

const OrbifoldPtr& pick_orbifold(const Catalog& c, std::size_t trial) {
  return c.orbifolds[trial % c.orbifolds.size()].orbifold;
}

// Catalog isometries on even trials, random conjugations on odd ones.
LocalIsometry pick_isometry(const Catalog& c, std::size_t trial, Rng& rng) {
  if (!c.isometries.empty() && trial % 2 == 0) return c.isometries[(trial / 2) % c.isometries.size()].phi;
  return random_isometry(rng, pick_orbifold(c, trial / 2));
}

ChartPtr pick_chart(const Catalog& c, std::size_t trial) {
  static const std::vector<ChartPtr> extra = {make_chart(2, 1), make_chart(1, 3), make_chart(3, 2)};
  const std::size_t total = c.orbifolds.size() + extra.size();
  const std::size_t i = trial % total;
  if (i < c.orbifolds.size()) return resolve(c.orbifolds[i].orbifold).chart();
  return extra[i - c.orbifolds.size()];
}

unsigned pick_degree(const Resolution& res, std::size_t trial, unsigned cap) {
  return static_cast<unsigned>(trial % (std::min(cap, supported_degree(res.transverse_dim())) + 1));
}

const std::vector<Property>& properties() {
  using C = const Catalog&;
  static const std::vector<Property> props = {
      {"function-validation", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::function_validation(pick_orbifold(c, t), r); }},
      {"operator-calculus", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::operator_calculus(pick_orbifold(c, t), r); }},
      {"vector-calculus", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::vector_calculus(pick_orbifold(c, t), r); }},
      {"isometry-pullbacks", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::isometry_pullbacks(pick_isometry(c, t, r), r); }},
      {"function-roundtrip", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::function_roundtrip(resolve(pick_orbifold(c, t)), r); }},
      {"operator-roundtrip", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::operator_roundtrip(resolve(pick_orbifold(c, t)), r); }},
      {"symbol-roundtrip", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::symbol_roundtrip(resolve(pick_orbifold(c, t)), r); }},
      {"operator-bracket", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::operator_bracket(resolve(pick_orbifold(c, t)), r); }},
      {"symbol-extraction", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::symbol_extraction(resolve(pick_orbifold(c, t)), r); }},
      {"module-relations", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::module_relations(resolve(pick_orbifold(c, t)), r); }},
      {"pairing-identity", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::pairing_identity(resolve(pick_orbifold(c, t)), r); }},
      {"projective-compatibility", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::projective_compatibility(resolve(pick_orbifold(c, t)), r); }},
      {"connection-identity", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::connection_identity(resolve(pick_orbifold(c, t)), r); }},
      {"commutation", "pullbacks", [](C c, std::size_t t, Rng& r) { return checks::commutation(pick_isometry(c, t, r), r); }},
      {"normalization", "projective", [](C c, std::size_t t, Rng& r) {
         const Resolution res = resolve(pick_orbifold(c, t));
         return checks::normalization(res, pick_degree(res, t / c.orbifolds.size(), kMaxQuantizationDegree), r);
       }},
      {"projective-invariance", "projective", [](C c, std::size_t t, Rng& r) {
         const Resolution res = resolve(pick_orbifold(c, t));
         return checks::projective_invariance(res, pick_degree(res, t / c.orbifolds.size(), kMaxQuantizationDegree), r);
       }},
      {"bijectivity", "projective", [](C c, std::size_t t, Rng& r) {
         const Resolution res = resolve(pick_orbifold(c, t));
         return checks::bijectivity(res, pick_degree(res, t / c.orbifolds.size(), 2), r);
       }},
      {"naturality", "naturality", [](C c, std::size_t t, Rng& r) {
         const LocalIsometry phi = pick_isometry(c, t, r);
         return checks::naturality(phi, static_cast<unsigned>(t % 3), r);
       }},
      {"field-operator-isomorphism", "foliated", [](C c, std::size_t t, Rng& r) { return checks::field_operator_isomorphism(pick_chart(c, t), r); }},
      {"leafwise-ideal", "foliated", [](C c, std::size_t t, Rng& r) { return checks::leafwise_ideal(pick_chart(c, t), r); }},
      {"oneform-characterization", "foliated", [](C c, std::size_t t, Rng& r) { return checks::oneform_characterization(pick_chart(c, t), r); }},
      {"foliated-connection", "foliated", [](C c, std::size_t t, Rng& r) { return checks::foliated_connection_axioms(pick_chart(c, t), r); }},
  };
  return props;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"pullbacks", "projective", "naturality", "foliated", "all"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const Catalog& catalog, std::size_t trials, std::uint64_t seed,
                      unsigned threads) {
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == suite;
  if (!known) throw SchemaError("suite", "unknown suite '" + suite + "'");
  if (catalog.orbifolds.empty()) throw SchemaError("catalog", "no orbifolds to test");

  std::vector<const Property*> selected;
  for (const auto& p : properties())
    if (suite == "all" || p.suite == suite) selected.push_back(&p);

  struct Task {
    const Property* prop;
    std::size_t trial;
    std::uint64_t seed;
    Outcome outcome;
  };
  std::vector<Task> tasks;
  for (const Property* p : selected)
    for (std::size_t t = 0; t < trials; ++t) tasks.push_back({p, t, derive_seed(derive_seed(seed, fnv1a(p->name)), t), {}});

  auto run_task = [&](Task& task) {
    Rng rng(task.seed);
    try {
      task.outcome = task.prop->run(catalog, task.trial, rng);
    } catch (const std::exception& e) {
      task.outcome = Failure{std::string("exception: ") + e.what(), {}, {}, {}};
    }
  };
  if (threads <= 1) {
    for (auto& task : tasks) run_task(task);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) run_task(tasks[i]);
      });
    for (auto& th : pool) th.join();
  }

  SuiteReport report;
  report.suite = suite;
  report.trials = trials;
  report.seed = seed;
  for (const Property* p : selected) report.properties.push_back({p->name, trials, 0});
  for (const auto& task : tasks) {
    if (!task.outcome) continue;
    for (auto& pr : report.properties)
      if (pr.name == task.prop->name) ++pr.failures;
    report.failures.push_back({task.prop->name, task.trial, task.seed, *task.outcome});
  }
  return report;
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : report.properties)
    props.push_back({{"name", p.name}, {"trials", p.trials}, {"failures", p.failures}});
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"property", f.property},
                        {"trial", f.trial},
                        {"seed", f.seed},
                        {"message", f.failure.message},
                        {"lhs", f.failure.lhs},
                        {"rhs", f.failure.rhs},
                        {"first-diff", f.failure.first_diff}});
  return {{"suite", report.suite}, {"trials", report.trials}, {"seed", report.seed}, {"ok", report.ok()},
          {"properties", props}, {"failures", failures}};
}

}  // namespace orbq
