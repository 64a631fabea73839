#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orbq/errors.hpp"
#include "orbq/io/json.hpp"
#include "orbq/random.hpp"
#include "orbq/verify/verify.hpp"
#include "orbq/version.hpp"

namespace orbq::cli {
namespace {

using nlohmann::json;

// Bad flag combinations; reported like schema errors.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Inputs {
  json config;  // null when absent
  json symbol;
  json connection;
  std::string config_loc;
  std::string symbol_loc;
  std::string connection_loc;
};

Inputs load_inputs(const RunConfig& rc) {
  Inputs in;
  if (!rc.config_path.empty()) {
    in.config = io::read_file(rc.config_path);
    in.config_loc = rc.config_path + ":";
    if (!in.config.is_object()) throw SchemaError(in.config_loc, "expected an object");
  }
  if (!rc.symbol_path.empty()) {
    in.symbol = io::read_file(rc.symbol_path);
    in.symbol_loc = rc.symbol_path + ":";
  } else if (in.config.is_object() && in.config.contains("symbol")) {
    in.symbol = in.config["symbol"];
    in.symbol_loc = in.config_loc + "/symbol";
  }
  if (!rc.connection_path.empty()) {
    in.connection = io::read_file(rc.connection_path);
    in.connection_loc = rc.connection_path + ":";
  } else if (in.config.is_object() && in.config.contains("connection")) {
    in.connection = in.config["connection"];
    in.connection_loc = in.config_loc + "/connection";
  }
  return in;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Hash of everything that determines the report: command, parameters and the
// parsed input documents. Output path and thread count are excluded.
std::string config_hash(const RunConfig& rc, const Inputs& in) {
  json h{{"command", rc.command}, {"config", in.config}, {"symbol", in.symbol}, {"connection", in.connection}};
  if (rc.degree) h["degree"] = *rc.degree;
  if (rc.q) h["q"] = *rc.q;
  if (rc.command == "verify") {
    h["suite"] = rc.suite;
    h["trials"] = rc.trials;
    h["seed"] = rc.seed;
  }
  return hex64(fnv1a(h.dump()));
}

OrbifoldPtr load_orbifold(const Inputs& in) {
  if (in.config.is_null()) throw UsageError("--config with an orbifold is required");
  if (in.config.contains("orbifold")) return io::orbifold_from_json(in.config["orbifold"], in.config_loc + "/orbifold");
  if (in.config.contains("dim")) return io::orbifold_from_json(in.config, in.config_loc);
  throw SchemaError(in.config_loc, "expected an orbifold ('dim') or an 'orbifold' object");
}

json report_header(const RunConfig& rc, const Inputs& in) {
  return json{{"tool", "orbq"}, {"version", kVersion}, {"command", rc.command}, {"config_hash", config_hash(rc, in)}};
}

void merge(json& into, const json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

json cmd_resolve(const RunConfig& rc, const Inputs& in) {
  const OrbifoldPtr orb = load_orbifold(in);
  const Resolution res = resolve(orb);
  json r = report_header(rc, in);
  r["orbifold"] = io::to_json(*orb);
  merge(r, io::to_json(res));
  return r;
}

json cmd_solve(const RunConfig& rc, const Inputs& in) {
  std::size_t q = 0;
  if (rc.q) {
    q = *rc.q;
  } else if (!in.config.is_null()) {
    q = load_orbifold(in)->dim();
  } else {
    throw UsageError("--q or --config is required");
  }
  if (q < 1) throw UsageError("--q must be at least 1");
  const unsigned k = rc.degree.value_or(2);
  const QuantizationTable table = QuantizationTable::solve(q, k);
  json r = report_header(rc, in);
  merge(r, io::to_json(table));
  return r;
}

json cmd_quantize(const RunConfig& rc, const Inputs& in) {
  const OrbifoldPtr orb = load_orbifold(in);
  if (rc.q && *rc.q != orb->dim())
    throw UsageError("--q " + std::to_string(*rc.q) + " does not match the orbifold dimension " +
                     std::to_string(orb->dim()));
  if (in.symbol.is_null()) throw UsageError("--symbol is required");

  std::vector<SingularSymbol> parts;
  if (in.symbol.is_array()) {
    for (std::size_t i = 0; i < in.symbol.size(); ++i)
      parts.push_back(io::symbol_from_json(orb, in.symbol[i], in.symbol_loc + "/" + std::to_string(i)));
    if (parts.empty()) throw SchemaError(in.symbol_loc, "expected at least one symbol");
  } else {
    parts.push_back(io::symbol_from_json(orb, in.symbol, in.symbol_loc));
  }
  unsigned top = 0;
  for (const auto& s : parts) top = std::max(top, s.degree());
  if (rc.degree && top > *rc.degree)
    throw UnsupportedDegree("symbol degree " + std::to_string(top) + " exceeds --degree " +
                            std::to_string(*rc.degree));

  const SingularConnection nabla = in.connection.is_null()
                                       ? SingularConnection::flat(orb)
                                       : io::connection_from_json(orb, in.connection, in.connection_loc);
  const Resolution res = resolve(orb);
  const QuantizationTable table = QuantizationTable::solve(orb->dim(), top);
  const SingularDiffOp op = singular_quantize(res, table, nabla, parts);
  json r = report_header(rc, in);
  merge(r, io::to_json(op));
  return r;
}

json cmd_verify(const RunConfig& rc, const Inputs& in, bool& ok) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), rc.suite) == names.end())
    throw UsageError("unknown suite '" + rc.suite + "'");
  if (rc.trials < 1) throw UsageError("--trials must be at least 1");

  Catalog custom;
  const Catalog* catalog = &builtin_catalog();
  if (!in.config.is_null()) {
    if (in.config.contains("orbifolds")) {
      custom = catalog_from_json(in.config, in.config_loc);
    } else if (in.config.contains("catalog")) {
      custom = catalog_from_json(in.config["catalog"], in.config_loc + "/catalog");
    } else {
      custom.orbifolds.push_back({"config", load_orbifold(in)});
    }
    catalog = &custom;
  }
  const SuiteReport report = run_suite(rc.suite, *catalog, rc.trials, rc.seed, rc.threads);
  ok = report.ok();
  json r = report_header(rc, in);
  merge(r, to_json(report));
  return r;
}

std::string kind_of(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) return "usage";
  if (dynamic_cast<const SchemaError*>(&e)) return "schema";
  if (dynamic_cast<const UnsupportedDegree*>(&e)) return "unsupported-degree";
  if (dynamic_cast<const NotOrthogonal*>(&e)) return "not-orthogonal";
  if (dynamic_cast<const GroupTooLarge*>(&e)) return "group-too-large";
  if (dynamic_cast<const InvarianceViolation*>(&e)) return "invariance-violation";
  if (dynamic_cast<const NotFoliated*>(&e)) return "not-foliated";
  if (dynamic_cast<const InvalidIsometry*>(&e)) return "invalid-isometry";
  if (dynamic_cast<const OrderError*>(&e)) return "order-error";
  if (dynamic_cast<const NoInvariantQuantization*>(&e)) return "no-invariant-quantization";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  if (dynamic_cast<const UnknownVariable*>(&e)) return "unknown-variable";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension-mismatch";
  return "internal";
}

int code_of(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const SchemaError*>(&e) ||
      dynamic_cast<const UnsupportedDegree*>(&e))
    return kSchema;
  return kValidation;
}

int report_error(const std::exception& e, std::ostream& err) {
  const int code = code_of(e);
  json body{{"message", e.what()}, {"kind", kind_of(e)}};
  if (const auto* s = dynamic_cast<const SchemaError*>(&e)) body["location"] = s->location();
  if (const auto* v = dynamic_cast<const ValidationError*>(&e); v && !v->witness().empty())
    body["witness"] = v->witness();
  err << json{{"error", body}, {"exit_code", code}, {"tool", "orbq"}, {"version", kVersion}}.dump(2) << '\n';
  return code;
}

void emit(const RunConfig& rc, const json& report, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (rc.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(rc.out_path, std::ios::binary);
  if (!f) throw SchemaError(rc.out_path, "cannot write output file");
  f << text;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Inputs in = load_inputs(config);
    bool ok = true;
    json report;
    if (config.command == "resolve") {
      report = cmd_resolve(config, in);
    } else if (config.command == "solve-coeffs") {
      report = cmd_solve(config, in);
    } else if (config.command == "quantize") {
      report = cmd_quantize(config, in);
    } else if (config.command == "verify") {
      report = cmd_verify(config, in, ok);
    } else {
      throw UsageError("unknown command '" + config.command + "'");
    }
    emit(config, report, out);
    return ok ? kOk : kPropertyFailure;
  } catch (const std::exception& e) {
    return report_error(e, err);
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant quantization of orbifolds by foliated resolution", "orbq"};
  app.set_version_flag("--version", std::string("orbq ") + kVersion);
  app.require_subcommand(1);

  RunConfig rc;
  unsigned degree = 0;
  std::size_t q = 0;

  auto add_config = [&](CLI::App* sub) { sub->add_option("--config", rc.config_path, "Input JSON")->check(CLI::ExistingFile); };
  auto add_degree = [&](CLI::App* sub, const char* help) {
    sub->add_option("--degree", degree, help)->check(CLI::Range(0u, 3u));
  };
  auto add_q = [&](CLI::App* sub) { sub->add_option("--q", q, "Transverse dimension")->check(CLI::PositiveNumber); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", rc.out_path, "Report path (default stdout)"); };

  CLI::App* resolve_cmd = app.add_subcommand("resolve", "Report the dimensions of the foliated resolution");
  add_config(resolve_cmd);
  add_out(resolve_cmd);

  CLI::App* solve_cmd = app.add_subcommand("solve-coeffs", "Solve the quantization coefficients for degrees 0..k");
  add_config(solve_cmd);
  add_degree(solve_cmd, "Highest degree (default 2)");
  add_q(solve_cmd);
  add_out(solve_cmd);

  CLI::App* quantize_cmd = app.add_subcommand("quantize", "Quantize a symbol on an orbifold");
  add_config(quantize_cmd);
  quantize_cmd->add_option("--symbol", rc.symbol_path, "Symbol JSON (object or array of homogeneous parts)")
      ->check(CLI::ExistingFile);
  quantize_cmd->add_option("--connection", rc.connection_path, "Connection JSON (default flat)")
      ->check(CLI::ExistingFile);
  add_degree(quantize_cmd, "Degree bound for the symbol");
  add_q(quantize_cmd);
  add_out(quantize_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a randomized property suite");
  add_config(verify_cmd);
  verify_cmd->add_option("--suite", rc.suite, "pullbacks | projective | naturality | foliated | all")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--trials", rc.trials, "Trials per property")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", rc.seed, "Root seed");
  verify_cmd->add_option("--threads", rc.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  add_out(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << "orbq " << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error(UsageError(e.what()), err);
  }

  for (CLI::App* sub : app.get_subcommands()) {
    rc.command = sub->get_name();
    if (auto* opt = sub->get_option_no_throw("--degree"); opt && opt->count() > 0) rc.degree = degree;
    if (auto* opt = sub->get_option_no_throw("--q"); opt && opt->count() > 0) rc.q = q;
  }
  return run(rc, out, err);
}

}  // namespace orbq::cli
