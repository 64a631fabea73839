#include "orbq/io/json.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "orbq/errors.hpp"

namespace orbq::io {

namespace {

std::string at(const std::string& loc, const std::string& key) { return loc + "/" + key; }
std::string at(const std::string& loc, std::size_t i) { return loc + "/" + std::to_string(i); }

const json& require(const json& j, const std::string& key, const std::string& loc) {
  if (!j.is_object()) throw SchemaError(loc, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(loc, "missing field '" + key + "'");
  return *it;
}

const json& require_array(const json& j, const std::string& loc) {
  if (!j.is_array()) throw SchemaError(loc, "expected an array");
  return j;
}

long long as_int(const json& j, const std::string& loc) {
  if (!j.is_number_integer()) throw SchemaError(loc, "expected an integer");
  return j.get<long long>();
}

std::size_t as_index(const json& j, std::size_t bound, const std::string& loc) {
  const long long v = as_int(j, loc);
  if (v < 1 || static_cast<std::size_t>(v) > bound)
    throw SchemaError(loc, "index " + std::to_string(v) + " outside 1.." + std::to_string(bound));
  return static_cast<std::size_t>(v - 1);
}

unsigned as_unsigned(const json& j, const std::string& loc) {
  const long long v = as_int(j, loc);
  if (v < 0 || v > 1000000) throw SchemaError(loc, "expected a small nonnegative integer");
  return static_cast<unsigned>(v);
}

Monomial monomial_from_json(const json& j, std::size_t n, const std::string& loc) {
  require_array(j, loc);
  if (j.size() != n) throw SchemaError(loc, "expected " + std::to_string(n) + " exponents, got " + std::to_string(j.size()));
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, as_unsigned(j[i], at(loc, i)));
  return m;
}

json monomial_to_json(const Monomial& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) out.push_back(m[i]);
  return out;
}

Components components_from_json(const json& j, const Variables& vars, const std::string& loc) {
  const json& arr = require_array(require(j, "components", loc), at(loc, "components"));
  Components out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(poly_from_json(arr[i], vars, at(at(loc, "components"), i)));
  return out;
}

json components_to_json(const Components& c) {
  json arr = json::array();
  for (const auto& p : c) arr.push_back(to_json(p));
  return json{{"components", arr}};
}

}  // namespace

Scalar scalar_from_json(const json& j, const std::string& loc) {
  if (j.is_number_integer()) return Scalar(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_scalar(j.get<std::string>(), loc);
  throw SchemaError(loc, "expected a rational as a string \"p/q\" or an integer");
}

json to_json(const Scalar& s) { return to_string(s); }

Matrix matrix_from_json(const json& j, const std::string& loc) {
  require_array(j, loc);
  if (j.empty()) throw SchemaError(loc, "empty matrix");
  if (j[0].is_array()) {
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const json& row = require_array(j[r], at(loc, r));
      if (row.size() != cols) throw SchemaError(at(loc, r), "ragged matrix row");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(row[c], at(at(loc, r), c));
    }
    return m;
  }
  // Flat row-major square matrix.
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(j.size()))));
  if (n * n != j.size()) throw SchemaError(loc, "flat matrix length is not a perfect square");
  Matrix m(n, n);
  for (std::size_t i = 0; i < j.size(); ++i) m(i / n, i % n) = scalar_from_json(j[i], at(loc, i));
  return m;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Poly poly_from_json(const json& j, const Variables& vars, const std::string& loc) {
  require_array(j, loc);
  Poly p(vars);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tl = at(loc, t);
    const Monomial m = monomial_from_json(require(j[t], "exponents", tl), vars.size(), at(tl, "exponents"));
    p.add_term(m, scalar_from_json(require(j[t], "coeff", tl), at(tl, "coeff")));
  }
  return p;
}

json to_json(const Poly& p) {
  json out = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back(json{{"exponents", monomial_to_json(it->first)}, {"coeff", to_string(it->second)}});
  return out;
}

OrbifoldPtr orbifold_from_json(const json& j, const std::string& loc) {
  const long long dim = as_int(require(j, "dim", loc), at(loc, "dim"));
  if (dim < 1 || dim > 16) throw SchemaError(at(loc, "dim"), "dimension must be between 1 and 16");
  const auto n = static_cast<std::size_t>(dim);
  std::vector<OrthMatrix> gens;
  if (j.contains("generators")) {
    const json& arr = require_array(j["generators"], at(loc, "generators"));
    for (std::size_t g = 0; g < arr.size(); ++g) {
      const std::string gl = at(at(loc, "generators"), g);
      Matrix m = matrix_from_json(arr[g], gl);
      if (m.rows() != n || m.cols() != n) throw SchemaError(gl, "generator is not " + std::to_string(n) + "x" + std::to_string(n));
      gens.emplace_back(std::move(m));
    }
  }
  std::size_t cap = kDefaultGroupCap;
  unsigned bound = kDefaultDegreeBound;
  if (j.contains("cap")) cap = as_unsigned(j["cap"], at(loc, "cap"));
  if (j.contains("degree_bound")) bound = as_unsigned(j["degree_bound"], at(loc, "degree_bound"));
  return make_orbifold(n, gens, cap, bound);
}

json to_json(const Orbifold& orb) {
  json gens = json::array();
  for (const auto& g : orb.group().generators()) gens.push_back(to_json(g.matrix()));
  return json{{"dim", orb.dim()}, {"generators", gens}, {"order", orb.group().order()}};
}

SingularFunction function_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc) {
  return make_function(orb, poly_from_json(require(j, "poly", loc), orb->vars(), at(loc, "poly")));
}

json to_json(const SingularFunction& f) { return json{{"poly", to_json(f.rep())}}; }

SingularDiffOp diffop_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc) {
  const unsigned order = as_unsigned(require(j, "order", loc), at(loc, "order"));
  const json& arr = require_array(require(j, "coeffs", loc), at(loc, "coeffs"));
  DiffOp d(orb->coords());
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const std::string tl = at(at(loc, "coeffs"), t);
    const Monomial alpha = monomial_from_json(require(arr[t], "alpha", tl), orb->dim(), at(tl, "alpha"));
    if (alpha.degree() > order) throw SchemaError(at(tl, "alpha"), "multi-index exceeds the declared order");
    d.add_term(alpha, poly_from_json(require(arr[t], "poly", tl), orb->vars(), at(tl, "poly")));
  }
  return make_diffop(orb, d, order);
}

json to_json(const DiffOp& d, unsigned order) {
  json coeffs = json::array();
  for (auto it = d.coefficients().rbegin(); it != d.coefficients().rend(); ++it)
    coeffs.push_back(json{{"alpha", monomial_to_json(it->first)}, {"poly", to_json(it->second)}});
  return json{{"order", order}, {"coeffs", coeffs}};
}

json to_json(const SingularDiffOp& d) { return to_json(d.op(), d.order()); }

SingularSymbol symbol_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc) {
  const unsigned degree = as_unsigned(require(j, "degree", loc), at(loc, "degree"));
  const json& arr = require_array(require(j, "components", loc), at(loc, "components"));
  SymTensor s(orb->coords(), degree);
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const std::string tl = at(at(loc, "components"), t);
    const Poly value = poly_from_json(require(arr[t], "poly", tl), orb->vars(), at(tl, "poly"));
    if (arr[t].contains("indices")) {
      const json& idx = require_array(arr[t]["indices"], at(tl, "indices"));
      if (idx.size() != degree) throw SchemaError(at(tl, "indices"), "expected " + std::to_string(degree) + " indices");
      std::vector<std::size_t> ix;
      for (std::size_t i = 0; i < idx.size(); ++i) ix.push_back(as_index(idx[i], orb->dim(), at(at(tl, "indices"), i)));
      s.set(ix, value);
    } else {
      const Monomial alpha = monomial_from_json(require(arr[t], "alpha", tl), orb->dim(), at(tl, "alpha"));
      if (alpha.degree() != degree) throw SchemaError(at(tl, "alpha"), "multiplicities must sum to the degree");
      s.set(alpha, value);
    }
  }
  return make_symbol(orb, s);
}

json to_json(const SymTensor& s) {
  json comps = json::array();
  for (auto it = s.components().rbegin(); it != s.components().rend(); ++it) {
    json idx = json::array();
    for (std::size_t i = 0; i < it->first.size(); ++i)
      for (unsigned e = 0; e < it->first[i]; ++e) idx.push_back(i + 1);
    comps.push_back(json{{"indices", idx}, {"poly", to_json(it->second)}});
  }
  return json{{"degree", s.degree()}, {"components", comps}};
}

json to_json(const SingularSymbol& s) { return to_json(s.tensor()); }

SingularVectorField vector_field_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc) {
  return make_vector_field(orb, components_from_json(j, orb->vars(), loc));
}

SingularOneForm one_form_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc) {
  return make_one_form(orb, components_from_json(j, orb->vars(), loc));
}

json to_json(const SingularVectorField& x) { return components_to_json(x.components()); }
json to_json(const SingularOneForm& a) { return components_to_json(a.components()); }

SingularConnection connection_from_json(const OrbifoldPtr& orb, const json& j, const std::string& loc) {
  const json& arr = require_array(require(j, "christoffel", loc), at(loc, "christoffel"));
  const std::size_t n = orb->dim();
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Poly> given;
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const std::string tl = at(at(loc, "christoffel"), t);
    const auto key = std::make_tuple(as_index(require(arr[t], "k", tl), n, at(tl, "k")),
                                     as_index(require(arr[t], "i", tl), n, at(tl, "i")),
                                     as_index(require(arr[t], "j", tl), n, at(tl, "j")));
    if (given.count(key)) throw SchemaError(tl, "duplicate Christoffel entry");
    given.emplace(key, poly_from_json(require(arr[t], "poly", tl), orb->vars(), at(tl, "poly")));
  }
  Christoffel g(orb->coords());
  for (const auto& [key, p] : given) {
    const auto [k, i, jj] = key;
    g(k, i, jj) = p;
    if (!given.count(std::make_tuple(k, jj, i))) g(k, jj, i) = p;
  }
  return make_connection(orb, g);
}

json to_json(const Christoffel& g) {
  json arr = json::array();
  const std::size_t n = g.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!g(k, i, j).is_zero())
          arr.push_back(json{{"k", k + 1}, {"i", i + 1}, {"j", j + 1}, {"poly", to_json(g(k, i, j))}});
  return json{{"christoffel", arr}};
}

json to_json(const SingularConnection& c) { return to_json(c.christoffel()); }

LocalIsometry isometry_from_json(const OrbifoldPtr& source, const OrbifoldPtr& target, const json& j,
                                 const std::string& loc) {
  const std::size_t n = source->dim();
  AffineMap lift = AffineMap::identity(n);
  lift.linear = matrix_from_json(require(j, "linear", loc), at(loc, "linear"));
  if (lift.linear.rows() != n || lift.linear.cols() != n)
    throw SchemaError(at(loc, "linear"), "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  if (j.contains("translation")) {
    const json& tr = require_array(j["translation"], at(loc, "translation"));
    if (tr.size() != n) throw SchemaError(at(loc, "translation"), "expected " + std::to_string(n) + " entries");
    for (std::size_t i = 0; i < n; ++i) lift.translation[i] = scalar_from_json(tr[i], at(at(loc, "translation"), i));
  }
  return LocalIsometry(source, target, std::move(lift));
}

json to_json(const LocalIsometry& phi) {
  json tr = json::array();
  for (const auto& t : phi.lift().translation) tr.push_back(to_string(t));
  return json{{"linear", to_json(phi.lift().linear)}, {"translation", tr}};
}

ChartPtr chart_from_json(const json& j, const std::string& loc) {
  const unsigned p = as_unsigned(require(j, "p", loc), at(loc, "p"));
  const unsigned q = as_unsigned(require(j, "q", loc), at(loc, "q"));
  if (q == 0) throw SchemaError(at(loc, "q"), "transverse dimension must be at least 1");
  return make_chart(p, q);
}

json to_json(const FoliatedChart& chart) { return json{{"p", chart.leaf_dim()}, {"q", chart.transverse_dim()}}; }

FoliatedFunction foliated_function_from_json(const json& j, const std::string& loc) {
  const ChartPtr chart = chart_from_json(require(j, "chart", loc), at(loc, "chart"));
  return make_foliated_function(chart, poly_from_json(require(j, "poly", loc), chart->vars(), at(loc, "poly")));
}

json to_json(const FoliatedFunction& f) { return json{{"chart", to_json(*f.chart())}, {"poly", to_json(f.rep())}}; }

json to_json(const Resolution& res) {
  return json{{"n", res.n()},
              {"leaf_dim", res.leaf_dim()},
              {"transverse_dim", res.transverse_dim()},
              {"total_dim", res.total_dim()}};
}

QuantizationTable table_from_json(const json& j, const std::string& loc) {
  const long long q = as_int(require(j, "q", loc), at(loc, "q"));
  if (q < 1) throw SchemaError(at(loc, "q"), "transverse dimension must be at least 1");
  const json& arr = require_array(require(j, "degrees", loc), at(loc, "degrees"));
  std::vector<DegreeTable> degrees;
  for (std::size_t d = 0; d < arr.size(); ++d) {
    const std::string dl = at(at(loc, "degrees"), d);
    DegreeTable table;
    table.k = as_unsigned(require(arr[d], "k", dl), at(dl, "k"));
    const json& terms = require_array(require(arr[d], "terms", dl), at(dl, "terms"));
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tl = at(at(dl, "terms"), t);
      const json& id = require(terms[t], "pattern-id", tl);
      if (!id.is_string()) throw SchemaError(at(tl, "pattern-id"), "expected a string");
      try {
        table.terms.push_back(parse_pattern_id(id.get<std::string>()));
      } catch (const SchemaError& e) {
        throw SchemaError(at(tl, "pattern-id"), e.what());
      }
      table.coefficients.push_back(scalar_from_json(require(terms[t], "coeff", tl), at(tl, "coeff")));
    }
    if (arr[d].contains("solver")) {
      const json& s = arr[d]["solver"];
      const std::string sl = at(dl, "solver");
      table.info.samples = as_unsigned(require(s, "samples", sl), at(sl, "samples"));
      table.info.equations = as_unsigned(require(s, "equations", sl), at(sl, "equations"));
      table.info.rank = as_unsigned(require(s, "rank", sl), at(sl, "rank"));
      const json& free = require_array(require(s, "free_terms", sl), at(sl, "free_terms"));
      for (std::size_t f = 0; f < free.size(); ++f) {
        if (!free[f].is_string()) throw SchemaError(at(at(sl, "free_terms"), f), "expected a pattern id");
        table.info.free_terms.push_back(free[f].get<std::string>());
      }
    }
    degrees.push_back(std::move(table));
  }
  try {
    return QuantizationTable(static_cast<std::size_t>(q), std::move(degrees));
  } catch (const ValidationError& e) {
    throw SchemaError(at(loc, "degrees"), e.what());
  }
}

json to_json(const QuantizationTable& table) {
  json degrees = json::array();
  for (const auto& d : table.degrees()) {
    json terms = json::array();
    for (std::size_t t = 0; t < d.terms.size(); ++t)
      terms.push_back(json{{"pattern-id", d.terms[t].id()}, {"coeff", to_string(d.coefficients[t])}});
    json free = json::array();
    for (const auto& f : d.info.free_terms) free.push_back(f);
    degrees.push_back(json{{"k", d.k},
                           {"terms", terms},
                           {"solver", json{{"samples", d.info.samples},
                                           {"equations", d.info.equations},
                                           {"rank", d.info.rank},
                                           {"free_terms", free}}}});
  }
  return json{{"q", table.q()}, {"degrees", degrees}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw SchemaError(path, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace orbq::io
