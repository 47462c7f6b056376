#include "gjl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "gjl/analysis.hpp"
#include "gjl/errors.hpp"
#include "gjl/gauss.hpp"
#include "gjl/integrands.hpp"
#include "gjl/lobatto.hpp"
#include "gjl/verify.hpp"

namespace gjl {

using nlohmann::ordered_json;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_field(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw DomainError("CSV field '" + s + "' is not a number");
  return v;
}

ordered_json json_number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

}  // namespace

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool have_header = false;
  for (const auto& line : split(text, '\n')) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      table.comments.push_back(line);
      continue;
    }
    const auto fields = split(line, ',');
    if (!have_header) {
      table.header = fields;
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) throw DomainError("CSV row width mismatch");
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_field(f));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string emit_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  for (const auto& c : table.comments) out += c + '\n';
  return out;
}

namespace {

struct Options {
  double alpha = 0.0;
  double beta = 0.0;
  int n = 1;
  int n_max = 64;
  std::string n_list = "8,16,32,64,128,256,512";
  std::string kind = "lobatto";
  std::string integrand;
  std::vector<std::string> params;
  int r = 1;
  double q_pred = 0.0;
  std::string format = "csv";
  std::uint64_t seed = 0;
  std::string out_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    int v = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size() || v < 1) {
      throw UsageError("--n-list entry '" + item + "' is not a positive integer");
    }
    out.push_back(v);
  }
  return out;
}

QuadratureRule build_rule(const JacobiExponents& e, const Options& o) {
  return o.kind == "gauss" ? gauss_rule(e, o.n) : lobatto_rule(e, o.n);
}

int cmd_nodes(const Options& o, std::ostream& out) {
  const JacobiExponents e(o.alpha, o.beta);
  const auto rule = build_rule(e, o);
  if (o.format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["alpha"] = o.alpha;
    j["beta"] = o.beta;
    j["n"] = o.n;
    j["kind"] = std::string(to_string(rule.kind()));
    j["exactness_degree"] = rule.exactness_degree();
    j["nodes"] = std::vector<double>(rule.nodes().begin(), rule.nodes().end());
    j["weights"] = std::vector<double>(rule.weights().begin(), rule.weights().end());
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  CsvTable table{{"index", "node", "weight"}, {}, {}};
  for (std::size_t k = 0; k < rule.size(); ++k) {
    table.rows.push_back({static_cast<double>(k), rule.nodes()[k], rule.weights()[k]});
  }
  out << emit_csv(table);
  return kExitOk;
}

int cmd_integrate(const Options& o, std::ostream& out) {
  const JacobiExponents e(o.alpha, o.beta);
  const auto spec = parse_integrand(o.integrand, o.params);
  const auto family = make_family(spec, e, o.seed);
  const auto rule = build_rule(e, o);
  const double value = integrate(rule, family.at(o.n));
  const auto reference = family.reference(o.n);
  const double error = std::fabs(value - reference.value);
  if (o.format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["alpha"] = o.alpha;
    j["beta"] = o.beta;
    j["n"] = o.n;
    j["kind"] = std::string(to_string(rule.kind()));
    j["integrand"] = family.id;
    j["value"] = json_number(value);
    j["reference"] = json_number(reference.value);
    j["reference_method"] = std::string(to_string(reference.method));
    j["reference_accuracy"] = json_number(reference.estimated_accuracy);
    j["abs_error"] = json_number(error);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  CsvTable table{{"n", "value", "reference", "abs_error"},
                 {{static_cast<double>(o.n), value, reference.value, error}},
                 {}};
  out << emit_csv(table);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const JacobiExponents e(o.alpha, o.beta);
  if (o.n_max < 1) throw UsageError("--n-max must be >= 1");
  const auto results = run_verify_suite(e, o.n_max, o.seed);
  bool all = true;
  if (o.format == "json") {
    ordered_json checks = ordered_json::array();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      all = all && r.passed;
    }
    ordered_json j;
    j["schema_version"] = 1;
    j["alpha"] = o.alpha;
    j["beta"] = o.beta;
    j["n_max"] = o.n_max;
    j["seed"] = o.seed;
    j["checks"] = checks;
    j["all_passed"] = all;
    out << j.dump(2) << '\n';
    return all ? kExitOk : kExitCheckFailed;
  }
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ' ' << r.detail << '\n';
    all = all && r.passed;
  }
  out << (all ? "ALL PASS" : "SOME CHECKS FAILED") << " alpha=" << format_double(o.alpha)
      << " beta=" << format_double(o.beta) << " n_max=" << o.n_max << '\n';
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_converge(const Options& o, std::ostream& out) {
  const JacobiExponents e(o.alpha, o.beta);
  const auto spec = parse_integrand(o.integrand, o.params);
  const auto n_values = parse_n_list(o.n_list);
  if (n_values.size() < 4) throw UsageError("--n-list needs at least 4 entries");
  if (o.r < 1) throw UsageError("--r must be >= 1");
  const auto family = make_family(spec, e, o.seed);
  const auto report = convergence_study(e, family, n_values, o.r, o.q_pred);
  const auto scaled = report.scaled_errors();
  const bool stable = report.bound_is_stable();
  const char* status = report.exact ? "EXACT" : (stable ? "BOUNDED" : "INFLATING");

  if (o.format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["alpha"] = o.alpha;
    j["beta"] = o.beta;
    j["integrand_id"] = report.integrand_id;
    j["smoothness_r"] = report.smoothness_r;
    j["predicted_exponent"] = report.predicted_exponent;
    j["n_values"] = report.n_values;
    ordered_json errors = ordered_json::array();
    ordered_json scaled_json = ordered_json::array();
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      errors.push_back(json_number(report.abs_errors[i]));
      scaled_json.push_back(json_number(scaled[i]));
    }
    j["abs_errors"] = errors;
    j["scaled_errors"] = scaled_json;
    j["excluded"] = report.excluded;
    j["fitted_exponent"] = json_number(report.fitted_exponent);
    j["bound_constant"] = json_number(report.bound_constant);
    j["exact"] = report.exact;
    j["bound_stable"] = stable;
    j["status"] = status;
    out << j.dump(2) << '\n';
  } else {
    CsvTable table{{"n", "abs_error", "scaled_error"}, {}, {}};
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      table.rows.push_back({static_cast<double>(report.n_values[i]), report.abs_errors[i], scaled[i]});
    }
    table.comments.push_back("# summary integrand=" + report.integrand_id +
                             " fitted_exponent=" + format_double(report.fitted_exponent) +
                             " bound_constant=" + format_double(report.bound_constant) +
                             " status=" + status);
    out << emit_csv(table);
  }
  return stable ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss-Jacobi-Lobatto quadrature: rules, integration and verification", "gjl"};
  app.require_subcommand(1);
  Options o;

  const auto add_weight = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", o.alpha, "exponent of (1-t), > -1")->required();
    cmd->add_option("--beta", o.beta, "exponent of (1+t), > -1")->required();
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", o.seed, "seed for random test polynomials");
    cmd->add_option("--out", o.out_path, "output file (default: standard output)");
  };

  auto* nodes = app.add_subcommand("nodes", "print nodes and weights");
  add_weight(nodes);
  nodes->add_option("--n", o.n, "interior nodes (lobatto) or points (gauss)")->required();
  nodes->add_option("--kind", o.kind, "gauss or lobatto")->check(CLI::IsMember({"gauss", "lobatto"}));

  auto* integ = app.add_subcommand("integrate", "apply a rule to a built-in integrand");
  add_weight(integ);
  integ->add_option("--n", o.n, "interior nodes (lobatto) or points (gauss)")->required();
  integ->add_option("--kind", o.kind, "gauss or lobatto")->check(CLI::IsMember({"gauss", "lobatto"}));
  integ->add_option("--integrand", o.integrand, "registry name")->required();
  integ->add_option("--param", o.params, "key=value, repeatable");

  auto* verify = app.add_subcommand("verify", "run the rule invariant suite");
  add_weight(verify);
  verify->add_option("--n-max", o.n_max, "largest rule size in the sweeps");

  auto* converge = app.add_subcommand("converge", "error decay study for a built-in integrand");
  add_weight(converge);
  converge->add_option("--integrand", o.integrand, "registry name")->required();
  converge->add_option("--param", o.params, "key=value, repeatable");
  converge->add_option("--r", o.r, "smoothness order of the integrand");
  converge->add_option("--q-pred", o.q_pred, "predicted decay exponent");
  converge->add_option("--n-list", o.n_list, "comma-separated rule sizes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (o.n < 1) throw UsageError("--n must be >= 1");
    if (*nodes) code = cmd_nodes(o, buffer);
    else if (*integ) code = cmd_integrate(o, buffer);
    else if (*verify) code = cmd_verify(o, buffer);
    else code = cmd_converge(o, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    code = kExitCheckFailed;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_path << " for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace gjl
