#include "fmean/scenario.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fmean/conditional.hpp"
#include "fmean/errors.hpp"
#include "fmean/markov.hpp"
#include "fmean/means.hpp"
#include "fmean/pricing.hpp"
#include "fmean/sampling.hpp"
#include "fmean/stats.hpp"

namespace fmean {

namespace {

using json = nlohmann::json;

int log_threshold() {
  const char* env = std::getenv("FMEAN_LOG");
  if (env == nullptr) return 0;
  const std::string v = env;
  if (v == "debug") return 2;
  if (v == "info") return 1;
  return 0;
}

// %.12g for tables (readable), %.17g for CSV (round-trips exactly).
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string kv_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::ostringstream out;
  for (const auto& r : rows)
    out << r.first << std::string(w - r.first.size() + 2, ' ') << r.second << "\n";
  return out.str();
}

// rows[0] is the header; every cell is right-aligned to its column width.
std::string grid_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows) {
    if (w.size() < r.size()) w.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i > 0) out << "  ";
      out << std::string(w[i] - r[i].size(), ' ') << r[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string csv_render(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i > 0) out << ",";
      out << r[i];
    }
    out << "\n";
  }
  return out.str();
}

const json& require(const json& j, const std::string& key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw validation_error(what + " requires field '" + key + "'");
  return j.at(key);
}

double as_double(const json& j, const std::string& what) {
  if (!j.is_number()) throw validation_error("field '" + what + "' must be a number");
  return j.get<double>();
}

std::size_t as_size(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw validation_error("field '" + what + "' must be a nonnegative integer");
  return static_cast<std::size_t>(j.get<unsigned long long>());
}

std::uint64_t as_u64(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw validation_error("field '" + what + "' must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw validation_error("field '" + what + "' must be a string");
  return j.get<std::string>();
}

std::vector<double> as_double_vec(const json& j, const std::string& what) {
  if (!j.is_array()) throw validation_error("field '" + what + "' must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(as_double(e, what));
  return out;
}

// Options helpers: `options` is the scenario's option object (possibly
// empty); defaults are applied per command.
double opt_double(const json& options, const std::string& key, double fallback) {
  return options.contains(key) ? as_double(options.at(key), "options." + key) : fallback;
}

std::size_t opt_size(const json& options, const std::string& key, std::size_t fallback) {
  return options.contains(key) ? as_size(options.at(key), "options." + key) : fallback;
}

std::uint64_t opt_u64(const json& options, const std::string& key, std::uint64_t fallback) {
  return options.contains(key) ? as_u64(options.at(key), "options." + key) : fallback;
}

std::string opt_string(const json& options, const std::string& key, const std::string& fallback) {
  return options.contains(key) ? as_string(options.at(key), "options." + key) : fallback;
}

std::size_t need_size(const json& options, const std::string& key, const std::string& command) {
  if (!options.contains(key))
    throw validation_error("command '" + command + "' requires options." + key);
  return as_size(options.at(key), "options." + key);
}

double need_double(const json& options, const std::string& key, const std::string& command) {
  if (!options.contains(key))
    throw validation_error("command '" + command + "' requires options." + key);
  return as_double(options.at(key), "options." + key);
}

MeanFunction parse_mean_function(const json& cfg) {
  const json& mf = require(cfg, "mean_function", "scenario");
  const std::string name = as_string(require(mf, "name", "mean_function"), "mean_function.name");
  std::vector<double> params;
  if (mf.contains("params")) params = as_double_vec(mf.at("params"), "mean_function.params");
  return MeanFunction::make(name, params);
}

FiniteProbSpace parse_space(const json& cfg) {
  const json& sp = require(cfg, "space", "scenario");
  return FiniteProbSpace(as_double_vec(require(sp, "probs", "space"), "space.probs"));
}

RandomVariable parse_variable(const json& cfg, const std::string& name, std::size_t n_outcomes) {
  const json& vars = require(cfg, "variables", "scenario");
  if (!vars.is_object() || !vars.contains(name))
    throw validation_error("unresolved variable name '" + name + "'");
  std::vector<double> values = as_double_vec(vars.at(name), "variables." + name);
  if (values.size() != n_outcomes) {
    std::ostringstream os;
    os << "variable '" << name << "' has " << values.size() << " values for " << n_outcomes
       << " outcomes";
    throw validation_error(os.str());
  }
  return RandomVariable(std::move(values), Interval::real_line());
}

Partition parse_partition(const json& cfg, const std::string& name, std::size_t n_outcomes) {
  const json& parts = require(cfg, "partitions", "scenario");
  if (!parts.is_object() || !parts.contains(name))
    throw validation_error("unresolved partition name '" + name + "'");
  const json& blocks_json = parts.at(name);
  if (!blocks_json.is_array())
    throw validation_error("partition '" + name + "' must be an array of outcome-index arrays");
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& b : blocks_json) {
    if (!b.is_array())
      throw validation_error("partition '" + name + "' must be an array of outcome-index arrays");
    std::vector<std::size_t> block;
    for (const auto& e : b) block.push_back(as_size(e, "partitions." + name));
    blocks.push_back(std::move(block));
  }
  return Partition(n_outcomes, std::move(blocks));
}

Filtration parse_filtration(const json& cfg, std::size_t n_outcomes) {
  const json& names = require(cfg, "filtration", "scenario");
  if (!names.is_array() || names.empty())
    throw validation_error("filtration must be a nonempty array of partition names");
  std::vector<Partition> levels;
  for (const auto& n : names)
    levels.push_back(parse_partition(cfg, as_string(n, "filtration"), n_outcomes));
  return Filtration(std::move(levels));
}

MarkovChainModel parse_chain(const json& cfg) {
  const json& ch = require(cfg, "chain", "scenario");
  const json& tj = require(ch, "transition", "chain");
  if (!tj.is_array()) throw validation_error("chain.transition must be a matrix");
  std::vector<std::vector<double>> transition;
  for (const auto& row : tj) transition.push_back(as_double_vec(row, "chain.transition"));
  std::vector<double> values =
      as_double_vec(require(ch, "state_values", "chain"), "chain.state_values");
  const std::size_t initial =
      ch.contains("initial_state") ? as_size(ch.at("initial_state"), "chain.initial_state") : 0;
  return MarkovChainModel(std::move(transition), std::move(values), initial);
}

// Points accepted either as scalars ([1, 4]) or as d-vectors ([[1,2],[4,3]]).
PointSet parse_points(const json& cfg) {
  const json& pj = require(cfg, "points", "scenario");
  if (!pj.is_array() || pj.empty())
    throw validation_error("points must be a nonempty array");
  std::vector<std::vector<double>> pts;
  for (const auto& p : pj) {
    if (p.is_number())
      pts.push_back({as_double(p, "points")});
    else
      pts.push_back(as_double_vec(p, "points"));
  }
  return PointSet(std::move(pts));
}

const char* preference_label(Preference p) {
  switch (p) {
    case Preference::first_preferred: return "X_preferred";
    case Preference::second_preferred: return "Y_preferred";
    default: return "indifferent";
  }
}

struct Handler {
  json result;
  std::string table;
  std::string csv;
};

Handler cmd_mean(const json& cfg, const json&) {
  const MeanFunction f = parse_mean_function(cfg);
  const PointSet pts = parse_points(cfg);
  const std::vector<double> m = f_mean_points(f, pts);

  Handler h;
  h.result = {{"mean", m}, {"dim", pts.dim}, {"n_points", pts.points.size()}};
  std::vector<std::pair<std::string, std::string>> rows = {
      {"command", "mean"},
      {"mean_function", f.label()},
      {"n_points", std::to_string(pts.points.size())},
      {"dim", std::to_string(pts.dim)},
  };
  for (std::size_t k = 0; k < m.size(); ++k)
    rows.push_back({m.size() == 1 ? "mean" : "mean[" + std::to_string(k) + "]", fmt(m[k])});
  h.table = kv_table(rows);
  std::vector<std::vector<std::string>> csv_rows = {{"component", "value"}};
  for (std::size_t k = 0; k < m.size(); ++k)
    csv_rows.push_back({std::to_string(k), fmt_full(m[k])});
  h.csv = csv_render(csv_rows);
  return h;
}

Handler cmd_wmean(const json& cfg, const json&) {
  const MeanFunction f = parse_mean_function(cfg);
  const std::vector<double> values =
      as_double_vec(require(cfg, "points", "scenario"), "points");
  const std::vector<double> weights =
      as_double_vec(require(cfg, "weights", "scenario"), "weights");
  if (values.size() != weights.size())
    throw validation_error("points and weights must have the same length");
  const double m = weighted_f_mean(f, values, weights);

  Handler h;
  h.result = {{"mean", m}, {"n_points", values.size()}};
  h.table = kv_table({{"command", "wmean"},
                      {"mean_function", f.label()},
                      {"n_points", std::to_string(values.size())},
                      {"mean", fmt(m)}});
  h.csv = csv_render({{"key", "value"}, {"mean", fmt_full(m)}});
  return h;
}

Handler cmd_cond_mean(const json& cfg, const json& options) {
  const MeanFunction f = parse_mean_function(cfg);
  const FiniteProbSpace space = parse_space(cfg);
  const RandomVariable X = parse_variable(cfg, opt_string(options, "variable", "X"),
                                          space.n_outcomes());
  const Partition G = parse_partition(cfg, opt_string(options, "partition", "G"),
                                      space.n_outcomes());
  const RandomVariable pred = f_cond_expectation(f, space, X, G);

  Handler h;
  h.result = {{"values", pred.values}};
  std::vector<std::vector<std::string>> rows = {{"outcome", "block", "value"}};
  std::vector<std::vector<std::string>> csv_rows = {{"outcome", "block", "value"}};
  for (std::size_t i = 0; i < pred.size(); ++i) {
    rows.push_back({std::to_string(i), std::to_string(G.block_of(i)), fmt(pred[i])});
    csv_rows.push_back({std::to_string(i), std::to_string(G.block_of(i)), fmt_full(pred[i])});
  }
  h.table = grid_table(rows);
  h.csv = csv_render(csv_rows);
  return h;
}

Handler cmd_var_decomp(const json& cfg, const json& options) {
  const MeanFunction f = parse_mean_function(cfg);
  const FiniteProbSpace space = parse_space(cfg);
  const RandomVariable X = parse_variable(cfg, opt_string(options, "variable", "X"),
                                          space.n_outcomes());
  const Partition G = parse_partition(cfg, opt_string(options, "partition", "G"),
                                      space.n_outcomes());
  const double tol = opt_double(options, "tol", 1e-10);
  const VarianceDecomposition d = total_variance_check(f, space, X, G);
  const double residual = std::abs(d.lhs - d.rhs);
  const bool passed = residual <= tol;

  Handler h;
  h.result = {{"lhs", d.lhs}, {"rhs", d.rhs}, {"residual", residual},
              {"tol", tol}, {"passed", passed}};
  h.table = kv_table({{"command", "var-decomp"},
                      {"mean_function", f.label()},
                      {"lhs", fmt(d.lhs)},
                      {"rhs", fmt(d.rhs)},
                      {"residual", fmt(residual)},
                      {"tol", fmt(tol)},
                      {"status", passed ? "PASS" : "FAIL"}});
  h.csv = csv_render({{"key", "value"},
                      {"lhs", fmt_full(d.lhs)},
                      {"rhs", fmt_full(d.rhs)},
                      {"residual", fmt_full(residual)},
                      {"passed", passed ? "1" : "0"}});
  return h;
}

Handler cmd_prefer(const json& cfg, const json& options) {
  const MeanFunction u = parse_mean_function(cfg);
  const FiniteProbSpace space = parse_space(cfg);
  const std::string x_name = opt_string(options, "variable", "X");
  const std::string y_name = opt_string(options, "versus", "Y");
  const RandomVariable X = parse_variable(cfg, x_name, space.n_outcomes());
  const RandomVariable Y = parse_variable(cfg, y_name, space.n_outcomes());
  const Partition G = parse_partition(cfg, opt_string(options, "partition", "G"),
                                      space.n_outcomes());
  const double tol = opt_double(options, "tol", 1e-12);
  const std::vector<Preference> labels = prefer(u, space, X, Y, G, tol);

  Handler h;
  json label_array = json::array();
  for (Preference p : labels) label_array.push_back(preference_label(p));
  h.result = {{"labels", label_array}, {"variable", x_name}, {"versus", y_name}};
  std::vector<std::vector<std::string>> rows = {{"outcome", "block", "label"}};
  for (std::size_t i = 0; i < labels.size(); ++i)
    rows.push_back({std::to_string(i), std::to_string(G.block_of(i)),
                    preference_label(labels[i])});
  h.table = grid_table(rows);
  h.csv = csv_render(rows);
  return h;
}

Handler cmd_ce(const json& cfg, const json& options) {
  const MeanFunction u = parse_mean_function(cfg);
  const FiniteProbSpace space = parse_space(cfg);
  const RandomVariable X = parse_variable(cfg, opt_string(options, "variable", "X"),
                                          space.n_outcomes());
  const double ce = certainty_equivalent(u, space, X);

  Handler h;
  h.result = {{"certainty_equivalent", ce}};
  h.table = kv_table({{"command", "ce"},
                      {"mean_function", u.label()},
                      {"certainty_equivalent", fmt(ce)}});
  h.csv = csv_render({{"key", "value"}, {"certainty_equivalent", fmt_full(ce)}});
  return h;
}

Handler cmd_ce_schedule(const json& cfg, const json& options) {
  const MeanFunction u = parse_mean_function(cfg);
  const MarkovChainModel chain = parse_chain(cfg);
  const std::size_t N = need_size(options, "N", "ce-schedule");
  const auto schedule = markov_ce_schedule(u, chain, N);

  Handler h;
  h.result = {{"schedule", schedule}, {"N", N}, {"n_states", chain.n_states()}};
  std::vector<std::string> header = {"k"};
  for (std::size_t s = 0; s < chain.n_states(); ++s)
    header.push_back("state_" + std::to_string(s));
  std::vector<std::vector<std::string>> rows = {header};
  std::vector<std::vector<std::string>> csv_rows = {header};
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    std::vector<std::string> row = {std::to_string(k)};
    std::vector<std::string> csv_row = {std::to_string(k)};
    for (double v : schedule[k]) {
      row.push_back(fmt(v));
      csv_row.push_back(fmt_full(v));
    }
    rows.push_back(std::move(row));
    csv_rows.push_back(std::move(csv_row));
  }
  h.table = grid_table(rows);
  h.csv = csv_render(csv_rows);
  return h;
}

Handler cmd_martingale_check(const json& cfg, const json& options) {
  const MeanFunction u = parse_mean_function(cfg);
  const FiniteProbSpace space = parse_space(cfg);
  const RandomVariable X_T = parse_variable(cfg, opt_string(options, "variable", "X"),
                                            space.n_outcomes());
  const Filtration filtration = parse_filtration(cfg, space.n_outcomes());
  const double tol = opt_double(options, "tol", 1e-10);
  const MartingaleReport report = u_martingale_check(u, space, filtration, X_T, tol);

  Handler h;
  json pi = json::array();
  for (const auto& level : report.pi) pi.push_back(level.values);
  h.result = {{"passed", report.passed},
              {"max_residual", report.max_residual},
              {"initial_value", report.initial_value},
              {"certainty_equivalent", report.ce},
              {"pi", pi},
              {"tol", tol}};
  h.table = kv_table({{"command", "martingale-check"},
                      {"mean_function", u.label()},
                      {"levels", std::to_string(report.pi.size())},
                      {"initial_value", fmt(report.initial_value)},
                      {"certainty_equivalent", fmt(report.ce)},
                      {"max_residual", fmt(report.max_residual)},
                      {"tol", fmt(tol)},
                      {"status", report.passed ? "PASS" : "FAIL"}});
  h.csv = csv_render({{"key", "value"},
                      {"passed", report.passed ? "1" : "0"},
                      {"max_residual", fmt_full(report.max_residual)},
                      {"initial_value", fmt_full(report.initial_value)},
                      {"certainty_equivalent", fmt_full(report.ce)}});
  return h;
}

Handler cmd_exit_time(const json& cfg, const json& options) {
  const MeanFunction u = parse_mean_function(cfg);
  const MarkovChainModel chain = parse_chain(cfg);
  const std::size_t N = need_size(options, "N", "exit-time");
  const double L = need_double(options, "L", "exit-time");
  const std::size_t horizon = opt_size(options, "horizon", N);
  const std::size_t n_paths = opt_size(options, "n_paths", 10000);
  const std::uint64_t seed = opt_u64(options, "seed", 0);
  const auto workers = static_cast<unsigned>(opt_size(options, "workers", 1));
  const ExitTimeResult r = exit_time_analysis(u, chain, N, L, horizon, n_paths, seed, workers);

  Handler h;
  h.result = {{"exact_prob", r.exact_prob},   {"mc_prob", r.mc_prob},
              {"ci_halfwidth", r.ci_halfwidth}, {"agree", r.agree},
              {"short_circuit", r.short_circuit}, {"N", N},
              {"L", L},                          {"horizon", horizon},
              {"n_paths", n_paths},              {"seed", seed}};
  h.table = kv_table({{"command", "exit-time"},
                      {"mean_function", u.label()},
                      {"level", fmt(L)},
                      {"horizon", std::to_string(horizon)},
                      {"exact_prob", fmt(r.exact_prob)},
                      {"mc_prob", fmt(r.mc_prob)},
                      {"ci_halfwidth", fmt(r.ci_halfwidth)},
                      {"agree", r.agree ? "yes" : "no"},
                      {"short_circuit", r.short_circuit ? "yes" : "no"}});
  h.csv = csv_render({{"key", "value"},
                      {"exact_prob", fmt_full(r.exact_prob)},
                      {"mc_prob", fmt_full(r.mc_prob)},
                      {"ci_halfwidth", fmt_full(r.ci_halfwidth)},
                      {"agree", r.agree ? "1" : "0"}});
  return h;
}

Handler cmd_estimate(const json& cfg, const json& options) {
  const MeanFunction f = parse_mean_function(cfg);
  const FiniteProbSpace space = parse_space(cfg);
  const RandomVariable X = parse_variable(cfg, opt_string(options, "variable", "X"),
                                          space.n_outcomes());
  const std::size_t n = need_size(options, "n", "estimate");
  const std::uint64_t seed = opt_u64(options, "seed", 0);
  const SamplerSpec spec{space, X, seed, n};
  const std::vector<double> draws = sample(spec);
  const double estimate = empirical_f_mean(f, draws);
  const double mu_f = f_expectation(f, space, X);

  Handler h;
  h.result = {{"estimate", estimate}, {"population_f_mean", mu_f}, {"n", n}, {"seed", seed}};
  h.table = kv_table({{"command", "estimate"},
                      {"mean_function", f.label()},
                      {"n", std::to_string(n)},
                      {"seed", std::to_string(seed)},
                      {"estimate", fmt(estimate)},
                      {"population_f_mean", fmt(mu_f)}});
  h.csv = csv_render({{"key", "value"},
                      {"estimate", fmt_full(estimate)},
                      {"population_f_mean", fmt_full(mu_f)}});
  return h;
}

Handler cmd_lln(const json& cfg, const json& options) {
  const MeanFunction f = parse_mean_function(cfg);
  const FiniteProbSpace space = parse_space(cfg);
  const RandomVariable X = parse_variable(cfg, opt_string(options, "variable", "X"),
                                          space.n_outcomes());
  if (!options.contains("checkpoints"))
    throw validation_error("command 'lln' requires options.checkpoints");
  const json& cj = options.at("checkpoints");
  if (!cj.is_array() || cj.empty())
    throw validation_error("options.checkpoints must be a nonempty array");
  std::vector<std::size_t> checkpoints;
  for (const auto& e : cj) checkpoints.push_back(as_size(e, "options.checkpoints"));
  const std::uint64_t seed = opt_u64(options, "seed", 0);
  const std::size_t n = opt_size(options, "n", checkpoints.back());
  const SamplerSpec spec{space, X, seed, n};
  const LlnReport report = lln_diagnostic(f, spec, checkpoints);

  Handler h;
  json rows_json = json::array();
  for (const auto& row : report.rows)
    rows_json.push_back({{"n", row.n}, {"abs_error", row.error}});
  h.result = {{"rows", rows_json},  {"mu_f", report.mu_f},     {"sigma_f", report.sigma_f},
              {"bound", report.bound}, {"passed", report.passed}, {"seed", seed}};
  std::vector<std::vector<std::string>> grid = {{"n", "abs_error"}};
  std::vector<std::vector<std::string>> csv_rows = {{"n", "abs_error"}};
  for (const auto& row : report.rows) {
    grid.push_back({std::to_string(row.n), fmt(row.error)});
    csv_rows.push_back({std::to_string(row.n), fmt_full(row.error)});
  }
  h.table = grid_table(grid) +
            kv_table({{"mu_f", fmt(report.mu_f)},
                      {"sigma_f", fmt(report.sigma_f)},
                      {"bound", fmt(report.bound)},
                      {"status", report.passed ? "PASS" : "FAIL"}});
  h.csv = csv_render(csv_rows);
  return h;
}

Handler cmd_clt(const json& cfg, const json& options) {
  const MeanFunction f = parse_mean_function(cfg);
  const FiniteProbSpace space = parse_space(cfg);
  const RandomVariable X = parse_variable(cfg, opt_string(options, "variable", "X"),
                                          space.n_outcomes());
  const std::size_t n_replicates = need_size(options, "n_replicates", "clt");
  const std::size_t n_per_replicate = need_size(options, "n_per_replicate", "clt");
  const std::uint64_t seed = opt_u64(options, "seed", 0);
  const SamplerSpec spec{space, X, seed, n_per_replicate};
  const CltReport report = clt_check(f, spec, n_replicates, n_per_replicate);

  static constexpr double kProbs[9] = {0.0, 0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99, 1.0};
  Handler h;
  h.result = {{"n_replicates", report.n_replicates},
              {"n_per_replicate", report.n_per_replicate},
              {"mu_f", report.mu_f},
              {"sigma_f", report.sigma_f},
              {"ks_statistic", report.ks_statistic},
              {"threshold", report.threshold},
              {"quantile_probs", std::vector<double>(kProbs, kProbs + 9)},
              {"quantile_values",
               std::vector<double>(report.quantiles.begin(), report.quantiles.end())},
              {"passed", report.passed},
              {"seed", seed}};
  std::vector<std::vector<std::string>> grid = {{"quantile", "z"}};
  for (std::size_t q = 0; q < 9; ++q) grid.push_back({fmt(kProbs[q]), fmt(report.quantiles[q])});
  h.table = kv_table({{"command", "clt"},
                      {"mean_function", f.label()},
                      {"n_replicates", std::to_string(report.n_replicates)},
                      {"n_per_replicate", std::to_string(report.n_per_replicate)},
                      {"ks_statistic", fmt(report.ks_statistic)},
                      {"threshold", fmt(report.threshold)},
                      {"status", report.passed ? "PASS" : "FAIL"}}) +
            grid_table(grid);
  std::vector<std::vector<std::string>> csv_rows = {{"key", "value"},
                                                    {"ks_statistic", fmt_full(report.ks_statistic)},
                                                    {"threshold", fmt_full(report.threshold)},
                                                    {"passed", report.passed ? "1" : "0"}};
  for (std::size_t q = 0; q < 9; ++q)
    csv_rows.push_back({"quantile_" + fmt(kProbs[q]), fmt_full(report.quantiles[q])});
  h.csv = csv_render(csv_rows);
  return h;
}

}  // namespace

void log_info(const std::string& message) {
  if (log_threshold() >= 1) std::cerr << "[info] " << message << "\n";
}

void log_debug(const std::string& message) {
  if (log_threshold() >= 2) std::cerr << "[debug] " << message << "\n";
}

const std::vector<std::string>& scenario_commands() {
  static const std::vector<std::string> commands = {
      "mean",        "wmean",     "cond-mean",        "var-decomp",
      "prefer",      "ce",        "ce-schedule",      "martingale-check",
      "exit-time",   "estimate",  "lln",              "clt"};
  return commands;
}

RunResult run_scenario(const nlohmann::json& config, const CliOverrides& overrides) {
  json resolved = config;
  if (!resolved.is_object()) throw validation_error("scenario config must be a JSON object");
  if (!resolved.contains("options") || resolved.at("options").is_null())
    resolved["options"] = json::object();
  if (!resolved.at("options").is_object())
    throw validation_error("scenario options must be a JSON object");
  if (overrides.seed) resolved["options"]["seed"] = *overrides.seed;
  if (overrides.workers) resolved["options"]["workers"] = *overrides.workers;
  if (overrides.tol) resolved["options"]["tol"] = *overrides.tol;

  const std::string command =
      as_string(require(resolved, "command", "scenario"), "command");
  log_info("running command '" + command + "'");

  Handler h;
  try {
    const json& options = resolved.at("options");
    if (command == "mean") h = cmd_mean(resolved, options);
    else if (command == "wmean") h = cmd_wmean(resolved, options);
    else if (command == "cond-mean") h = cmd_cond_mean(resolved, options);
    else if (command == "var-decomp") h = cmd_var_decomp(resolved, options);
    else if (command == "prefer") h = cmd_prefer(resolved, options);
    else if (command == "ce") h = cmd_ce(resolved, options);
    else if (command == "ce-schedule") h = cmd_ce_schedule(resolved, options);
    else if (command == "martingale-check") h = cmd_martingale_check(resolved, options);
    else if (command == "exit-time") h = cmd_exit_time(resolved, options);
    else if (command == "estimate") h = cmd_estimate(resolved, options);
    else if (command == "lln") h = cmd_lln(resolved, options);
    else if (command == "clt") h = cmd_clt(resolved, options);
    else {
      std::string known;
      for (const auto& c : scenario_commands()) known += (known.empty() ? "" : ", ") + c;
      throw validation_error("unknown command '" + command + "' (known: " + known + ")");
    }
  } catch (const json::exception& e) {
    throw validation_error(std::string("malformed scenario config: ") + e.what());
  }

  // Worker count tunes execution, not the scenario; keep it out of the
  // record so any worker count serializes identically.
  json echo = resolved;
  echo["options"].erase("workers");

  RunResult out;
  out.structured = json{{"command", command}, {"config", std::move(echo)},
                        {"result", std::move(h.result)}};
  out.table = std::move(h.table);
  out.csv = std::move(h.csv);
  log_debug("command '" + command + "' finished");
  return out;
}

RunResult run_scenario_file(const std::string& path, const CliOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open config file '" + path + "'");
  json config;
  try {
    config = json::parse(in);
  } catch (const json::exception& e) {
    throw validation_error("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return run_scenario(config, overrides);
}

}  // namespace fmean
