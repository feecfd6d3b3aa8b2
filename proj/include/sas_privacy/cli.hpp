// Copyright 2026 The SaS Privacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand writes either CSV (one header row)
// or a single JSON object with a fixed key order.
//
// Exit codes: 0 success, 2 usage or validation error, 3 numerical failure.

#ifndef SAS_PRIVACY_CLI_HPP_
#define SAS_PRIVACY_CLI_HPP_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sas_privacy/adversary.hpp"
#include "sas_privacy/config.hpp"
#include "sas_privacy/dataset.hpp"
#include "sas_privacy/error.hpp"
#include "sas_privacy/figures.hpp"
#include "sas_privacy/mechanisms.hpp"
#include "sas_privacy/privacy_loss.hpp"
#include "sas_privacy/sampling.hpp"
#include "sas_privacy/stable.hpp"

namespace sas_privacy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

enum class Format { kCsv, kJson };

struct OutputSpec {
  Format format = Format::kCsv;
  std::optional<std::string> path;
  int precision = 9;

  void validate() const {
    if (precision < 1 || precision > 17) throw DomainError("precision must lie in [1, 17]");
  }
};

using Json = nlohmann::ordered_json;

inline std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

// JSON has no infinities; non-finite values become null.
inline Json json_number(double v, int precision) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_number(v, precision));
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;

  std::vector<double> points() const {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = (i + 1 == n) ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    }
    return out;
  }
};

// "lo:hi:n", inclusive of both endpoints.
inline Grid parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) throw DomainError("grid must look like lo:hi:n");
  Grid g;
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, first);
    const std::string hi = text.substr(first + 1, second - first - 1);
    const std::string n = text.substr(second + 1);
    g.lo = std::stod(lo, &used);
    if (used != lo.size()) throw DomainError("bad grid lower bound");
    g.hi = std::stod(hi, &used);
    if (used != hi.size()) throw DomainError("bad grid upper bound");
    const long long count = std::stoll(n, &used);
    if (used != n.size() || count < 0) throw DomainError("bad grid point count");
    g.n = static_cast<std::size_t>(count);
  } catch (const std::logic_error&) {
    throw DomainError("grid must look like lo:hi:n, got '" + text + "'");
  }
  if (!(g.lo < g.hi) || g.n < 2) {
    throw DomainError("grid needs lo < hi and at least 2 points");
  }
  return g;
}

// A table of numeric columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

inline std::string render_table(const Table& t, const OutputSpec& spec,
                                 const std::optional<Json>& extra = std::nullopt) {
  std::ostringstream s;
  if (spec.format == Format::kCsv) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      s << (c ? "," : "") << csv_field(t.columns[c]);
    }
    s << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        s << (c ? "," : "") << format_number(row[c], spec.precision);
      }
      s << '\n';
    }
    if (extra) s << "# " << extra->dump() << '\n';
    return s.str();
  }
  Json doc = Json::object();
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    Json col = Json::array();
    for (const auto& row : t.rows) col.push_back(json_number(row[c], spec.precision));
    doc[t.columns[c]] = std::move(col);
  }
  if (extra) {
    for (const auto& [key, value] : extra->items()) doc[key] = value;
  }
  return doc.dump() + "\n";
}

// A single record rendered as a JSON object or as a two-line CSV.
inline std::string render_record(const Json& record, const OutputSpec& spec) {
  if (spec.format == Format::kJson) return record.dump() + "\n";
  std::ostringstream header;
  std::ostringstream values;
  bool first = true;
  for (const auto& [key, value] : record.items()) {
    header << (first ? "" : ",") << csv_field(key);
    std::string text;
    if (value.is_null()) {
      text = "";
    } else if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_number()) {
      text = format_number(value.get<double>(), spec.precision);
    } else if (value.is_array()) {
      std::ostringstream joined;
      for (std::size_t i = 0; i < value.size(); ++i) {
        joined << (i ? ";" : "")
               << (value[i].is_number() ? format_number(value[i].get<double>(), spec.precision)
                                        : value[i].dump());
      }
      text = joined.str();
    } else {
      text = value.dump();
    }
    values << (first ? "" : ",") << csv_field(text);
    first = false;
  }
  return header.str() + "\n" + values.str() + "\n";
}

struct MechanismOptions {
  std::string mech = "sas";
  double alpha = 1.5;
  std::optional<double> gamma;
  double mu = 0.0;
  std::optional<double> b;
  std::optional<double> sigma;
};

inline void add_mechanism_options(CLI::App* cmd, MechanismOptions& m) {
  cmd->add_option("--mech", m.mech, "Noise family")
      ->check(CLI::IsMember({"sas", "laplace", "gaussian"}));
  cmd->add_option("--alpha", m.alpha, "SaS stability exponent in [1, 2]");
  cmd->add_option("--gamma", m.gamma, "SaS scale");
  cmd->add_option("--b", m.b, "Laplace scale");
  cmd->add_option("--sigma", m.sigma, "Gaussian standard deviation");
}

inline double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw DomainError(std::string("missing required option ") + flag);
  return *v;
}

inline std::string run_density(double alpha, double gamma, double mu,
                               const std::optional<double>& x,
                               const std::optional<std::string>& grid, const EvalConfig& cfg,
                               const OutputSpec& spec) {
  const StableParams params(alpha, gamma, mu);
  std::vector<double> xs;
  if (x && grid) throw DomainError("give either --x or --grid, not both");
  if (x) {
    xs.push_back(*x);
  } else if (grid) {
    xs = parse_grid(*grid).points();
  } else {
    throw DomainError("density needs --x or --grid");
  }
  Table t{{"x", "pdf"}, {}};
  for (double v : xs) t.rows.push_back({v, density(params, v, cfg)});
  return render_table(t, spec);
}

inline std::string run_losscurve(double alpha, double gamma, double sensitivity,
                                 const std::string& grid_text, const EvalConfig& cfg,
                                 const OutputSpec& spec) {
  if (!(sensitivity > 0.0)) throw DomainError("--sensitivity must be positive");
  const Grid grid = parse_grid(grid_text);
  const auto curve = loss_curve(StableParams(alpha, gamma), sensitivity, grid.lo, grid.hi,
                                grid.n, cfg);
  Table t{{"x", "loss"}, {}};
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    t.rows.push_back({curve.grid[i], curve.loss[i]});
  }
  Json footer = Json::object();
  footer["argmax"] = json_number(curve.argmax_x, spec.precision);
  footer["max"] = json_number(curve.max_loss, spec.precision);
  return render_table(t, spec, footer);
}

inline std::string run_epsilon(double alpha, double gamma, double sensitivity,
                               const EvalConfig& cfg, const OutputSpec& spec) {
  const auto m = max_privacy_loss(StableParams(alpha, gamma), sensitivity, cfg);
  Json doc = Json::object();
  doc["epsilon"] = json_number(m.epsilon, spec.precision);
  doc["argmax_x"] = json_number(m.argmax_x, spec.precision);
  return render_record(doc, spec);
}

inline std::string run_calibrate(double alpha, double epsilon, double sensitivity,
                                 const EvalConfig& cfg, const OutputSpec& spec) {
  if (!(epsilon > 0.0)) throw DomainError("--epsilon must be positive");
  const double gamma = calibrate_gamma(alpha, {epsilon, 0.0}, sensitivity, cfg);
  Json doc = Json::object();
  doc["gamma"] = json_number(gamma, spec.precision);
  return render_record(doc, spec);
}

inline MechanismKind make_mechanism(const MechanismOptions& m) {
  if (m.mech == "sas") return SasMechanism{StableParams(m.alpha, require(m.gamma, "--gamma"))};
  if (m.mech == "laplace") return LaplaceMechanism{require(m.b, "--b")};
  return GaussianMechanism{require(m.sigma, "--sigma")};
}

inline std::string run_sample(const MechanismOptions& m, std::size_t n, std::uint64_t seed,
                              const OutputSpec& spec) {
  std::vector<double> values;
  if (m.mech == "sas") {
    values = sample_sas(StableParams(m.alpha, require(m.gamma, "--gamma"), m.mu), n, {seed});
  } else if (m.mech == "laplace") {
    values = sample_laplace(require(m.b, "--b"), n, {seed});
  } else {
    values = sample_gaussian(require(m.sigma, "--sigma"), n, {seed});
  }
  if (spec.format == Format::kJson) {
    Json doc = Json::object();
    Json arr = Json::array();
    for (double v : values) arr.push_back(json_number(v, spec.precision));
    doc["samples"] = std::move(arr);
    return doc.dump() + "\n";
  }
  std::string out;
  for (double v : values) {
    out += format_number(v, spec.precision);
    out += '\n';
  }
  return out;
}

inline std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw DomainError("bad number '" + item + "'");
    } catch (const std::logic_error&) {
      throw DomainError("bad number '" + item + "'");
    }
  }
  if (out.empty()) throw DomainError("empty number list");
  return out;
}

inline std::string run_distortion(const std::string& alpha_list, double gamma,
                                  const OutputSpec& spec) {
  const auto alphas = parse_number_list(alpha_list);
  Table t{{"alpha", "distortion"}, {}};
  for (const auto& row : distortion_table(alphas, gamma)) {
    t.rows.push_back({row.alpha, row.distortion});
  }
  return render_table(t, spec);
}

inline std::string run_bounds(double epsilon, const std::optional<double>& prior,
                              const OutputSpec& spec) {
  const auto test = tradeoff_bound(epsilon);
  Json doc = Json::object();
  doc["min_error_sum"] = json_number(test.min_error_sum, spec.precision);
  if (prior) {
    const auto post = posterior_bounds(*prior, epsilon);
    doc["posterior_lo"] = json_number(post.lo, spec.precision);
    doc["posterior_hi"] = json_number(post.hi, spec.precision);
  }
  return render_record(doc, spec);
}

struct QueryOptions {
  std::string data;
  std::string query = "count";
  std::vector<std::string> columns;
  double lo = 0.0;
  std::optional<double> hi;
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
};

inline std::string run_private_query(const QueryOptions& qo, MechanismOptions m,
                                     const EvalConfig& cfg, const OutputSpec& spec) {
  const Dataset data = read_csv_file(qo.data);
  QuerySpec q;
  if (qo.query == "count") {
    q.kind = QueryKind::kCount;
  } else if (qo.query == "sum") {
    q.kind = QueryKind::kSum;
  } else {
    q.kind = QueryKind::kMean;
  }
  q.columns = qo.columns;
  if (q.kind != QueryKind::kCount && q.columns.empty()) {
    throw DomainError("--column is required for sum and mean queries");
  }
  q.range_lo = qo.lo;
  // Without --hi a count is left effectively unclipped.
  q.range_hi = qo.hi ? *qo.hi
                     : (q.kind == QueryKind::kCount ? std::numeric_limits<double>::max()
                                                    : qo.lo + 1.0);
  const auto answer = run_query(data, q);
  const auto sens = query_sensitivity(q, data.size());

  if (qo.epsilon) {
    const double eps = *qo.epsilon;
    if (!(eps > 0.0)) throw DomainError("--epsilon must be positive");
    const double per_coordinate = eps / static_cast<double>(q.dimension());
    if (m.mech == "sas") {
      m.gamma = calibrate_gamma(m.alpha, {per_coordinate, 0.0}, sens.coordinate, cfg);
    } else if (m.mech == "laplace") {
      m.b = sens.l1 / eps;
    } else {
      throw DomainError("the Gaussian mechanism cannot be calibrated to a pure-DP epsilon");
    }
  }
  const MechanismKind mech = make_mechanism(m);
  const auto released = apply_mechanism(answer, mech, {qo.seed});
  const auto spent = mechanism_epsilon(mech, sens, q.dimension(), cfg);

  Json doc = Json::object();
  doc["true_value_suppressed"] = true;
  if (released.size() == 1) {
    doc["private_value"] = json_number(released[0], spec.precision);
  } else {
    Json arr = Json::array();
    for (double v : released) arr.push_back(json_number(v, spec.precision));
    doc["private_value"] = std::move(arr);
  }
  doc["epsilon"] = spent ? json_number(*spent, spec.precision) : Json(nullptr);
  return render_record(doc, spec);
}

inline std::string run_figure(const std::string& name, const EvalConfig& cfg,
                              const OutputSpec& spec) {
  const auto data = figure(name, cfg);
  std::ostringstream s;
  if (spec.format == Format::kCsv) {
    s << "series,x,y\n";
    for (const auto& p : data) {
      s << csv_field(p.series) << ',' << format_number(p.x, spec.precision) << ','
        << format_number(p.y, spec.precision) << '\n';
    }
    return s.str();
  }
  Json series = Json::array();
  Json xs = Json::array();
  Json ys = Json::array();
  for (const auto& p : data) {
    series.push_back(p.series);
    xs.push_back(json_number(p.x, spec.precision));
    ys.push_back(json_number(p.y, spec.precision));
  }
  Json doc = Json::object();
  doc["figure"] = name;
  doc["series"] = std::move(series);
  doc["x"] = std::move(xs);
  doc["y"] = std::move(ys);
  return doc.dump() + "\n";
}

// Entry point shared by the executable and the tests. args excludes the
// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric alpha-stable differential privacy toolkit", "sas_privacy"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> format_text;
  std::optional<std::string> output_path;
  int precision = 9;
  std::optional<std::string> config_path;
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output_path, "Write to this file instead of standard output");
  app.add_option("--precision", precision, "Significant digits in numeric output [1, 17]");
  app.add_option("--config", config_path, "key=value file with evaluation defaults");

  // density
  double d_alpha = 0.0, d_gamma = 1.0, d_mu = 0.0;
  std::optional<double> d_x;
  std::optional<std::string> d_grid;
  auto* density_cmd = app.add_subcommand("density", "Evaluate the SaS density");
  density_cmd->add_option("--alpha", d_alpha)->required();
  density_cmd->add_option("--gamma", d_gamma);
  density_cmd->add_option("--mu", d_mu);
  density_cmd->add_option("--x", d_x);
  density_cmd->add_option("--grid", d_grid, "lo:hi:n");

  // losscurve
  double l_alpha = 0.0, l_gamma = 1.0, l_sens = 1.0;
  std::string l_grid = "-20:20:401";
  auto* loss_cmd = app.add_subcommand("losscurve", "Privacy loss over a grid of observations");
  loss_cmd->add_option("--alpha", l_alpha)->required();
  loss_cmd->add_option("--gamma", l_gamma);
  loss_cmd->add_option("--sensitivity", l_sens);
  loss_cmd->add_option("--grid", l_grid, "lo:hi:n");

  // epsilon
  double e_alpha = 0.0, e_gamma = 1.0, e_sens = 1.0;
  auto* eps_cmd = app.add_subcommand("epsilon", "Pure-DP budget of the SaS mechanism");
  eps_cmd->add_option("--alpha", e_alpha)->required();
  eps_cmd->add_option("--gamma", e_gamma)->required();
  eps_cmd->add_option("--sensitivity", e_sens);

  // calibrate
  double c_alpha = 0.0, c_eps = 0.0, c_sens = 1.0;
  auto* cal_cmd = app.add_subcommand("calibrate", "Scale that achieves a target epsilon");
  cal_cmd->add_option("--alpha", c_alpha)->required();
  cal_cmd->add_option("--epsilon", c_eps)->required();
  cal_cmd->add_option("--sensitivity", c_sens);

  // sample
  MechanismOptions s_mech;
  std::size_t s_n = 1;
  std::uint64_t s_seed = 0;
  auto* sample_cmd = app.add_subcommand("sample", "Draw noise samples");
  add_mechanism_options(sample_cmd, s_mech);
  sample_cmd->add_option("--mu", s_mech.mu, "SaS location");
  sample_cmd->add_option("--n", s_n)->required();
  sample_cmd->add_option("--seed", s_seed)->required();

  // distortion
  std::string t_alphas = "2,1.999,1.99,1.95,1.9,1.8,1.0";
  double t_gamma = 1.0;
  auto* dist_cmd = app.add_subcommand("distortion", "Expected absolute distortion table");
  dist_cmd->add_option("--alpha-list", t_alphas, "Comma-separated alpha values");
  dist_cmd->add_option("--gamma", t_gamma);

  // bounds
  double b_eps = 0.0;
  std::optional<double> b_prior;
  auto* bounds_cmd = app.add_subcommand("bounds", "Adversary hypothesis-testing bounds");
  bounds_cmd->add_option("--epsilon", b_eps)->required();
  bounds_cmd->add_option("--prior", b_prior);

  // private-query
  QueryOptions q_opts;
  MechanismOptions q_mech;
  auto* query_cmd = app.add_subcommand("private-query", "Answer a query on a CSV dataset privately");
  query_cmd->add_option("--data", q_opts.data)->required();
  query_cmd->add_option("--query", q_opts.query)
      ->check(CLI::IsMember({"count", "sum", "mean"}));
  query_cmd->add_option("--column", q_opts.columns, "Column(s) for sum and mean")
      ->delimiter(',');
  query_cmd->add_option("--lo", q_opts.lo, "Clipping range lower bound");
  query_cmd->add_option("--hi", q_opts.hi, "Clipping range upper bound");
  query_cmd->add_option("--epsilon", q_opts.epsilon, "Calibrate the noise to this budget");
  query_cmd->add_option("--seed", q_opts.seed)->required();
  add_mechanism_options(query_cmd, q_mech);

  // figure
  std::string f_name;
  auto* fig_cmd = app.add_subcommand("figure", "Data series for a figure");
  fig_cmd->add_option("--name", f_name)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    OutputSpec spec;
    spec.precision = precision;
    spec.path = output_path;
    spec.validate();
    const bool table_command = density_cmd->parsed() || loss_cmd->parsed() ||
                               sample_cmd->parsed() || dist_cmd->parsed() ||
                               fig_cmd->parsed();
    spec.format = format_text ? (*format_text == "json" ? Format::kJson : Format::kCsv)
                              : (table_command ? Format::kCsv : Format::kJson);

    EvalConfig cfg;
    if (config_path) cfg = load_eval_config(*config_path, cfg);
    cfg = apply_environment(cfg);

    std::string text;
    if (density_cmd->parsed()) {
      text = run_density(d_alpha, d_gamma, d_mu, d_x, d_grid, cfg, spec);
    } else if (loss_cmd->parsed()) {
      text = run_losscurve(l_alpha, l_gamma, l_sens, l_grid, cfg, spec);
    } else if (eps_cmd->parsed()) {
      text = run_epsilon(e_alpha, e_gamma, e_sens, cfg, spec);
    } else if (cal_cmd->parsed()) {
      text = run_calibrate(c_alpha, c_eps, c_sens, cfg, spec);
    } else if (sample_cmd->parsed()) {
      text = run_sample(s_mech, s_n, s_seed, spec);
    } else if (dist_cmd->parsed()) {
      text = run_distortion(t_alphas, t_gamma, spec);
    } else if (bounds_cmd->parsed()) {
      text = run_bounds(b_eps, b_prior, spec);
    } else if (query_cmd->parsed()) {
      text = run_private_query(q_opts, q_mech, cfg, spec);
    } else if (fig_cmd->parsed()) {
      text = run_figure(f_name, cfg, spec);
    }

    if (spec.path) {
      std::ofstream file(*spec.path, std::ios::binary);
      if (!file) throw DomainError("cannot open output file '" + *spec.path + "'");
      file << text;
    } else {
      out << text;
    }
  } catch (const NumericError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace sas_privacy::cli

#endif  // SAS_PRIVACY_CLI_HPP_
