#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fmean/conditional.hpp"
#include "fmean/errors.hpp"
#include "fmean/markov.hpp"
#include "fmean/means.hpp"
#include "fmean/pricing.hpp"
#include "fmean/sampling.hpp"
#include "fmean/scenario.hpp"
#include "fmean/stats.hpp"

namespace py = pybind11;

using namespace fmean;

namespace {

RandomVariable make_variable(std::vector<double> values) {
  return RandomVariable(std::move(values), Interval::real_line());
}

SamplerSpec make_spec(const FiniteProbSpace& space, const RandomVariable& X, std::uint64_t seed,
                      std::size_t n) {
  return SamplerSpec{space, X, seed, n};
}

}  // namespace

PYBIND11_MODULE(_fmean, m) {
  m.doc() = "Quasi-arithmetic f-means, conditional f-expectations, and"
            " certainty-equivalent pricing on finite probability spaces";

  py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<MeanFunction>(m, "MeanFunction")
      .def_static("make", &MeanFunction::make, py::arg("name"),
                  py::arg("params") = std::vector<double>{})
      .def("value", &MeanFunction::value, py::arg("x"))
      .def("invert", &MeanFunction::invert, py::arg("y"))
      .def_property_readonly("name", &MeanFunction::name)
      .def_property_readonly("params", &MeanFunction::params)
      .def_property_readonly("domain", [](const MeanFunction& f) { return f.domain().str(); })
      .def_property_readonly("codomain", [](const MeanFunction& f) { return f.codomain().str(); })
      .def_property_readonly("convexity",
                             [](const MeanFunction& f) { return to_string(f.convexity()); })
      .def("label", &MeanFunction::label)
      .def("__repr__", [](const MeanFunction& f) { return "MeanFunction(" + f.label() + ")"; });

  m.def("mean_function_names", [] { return mean_function_names(); });

  py::class_<FiniteProbSpace>(m, "FiniteProbSpace")
      .def(py::init<std::vector<double>>(), py::arg("probs"))
      .def_static("uniform", &FiniteProbSpace::uniform, py::arg("n_outcomes"))
      .def_property_readonly("probs", &FiniteProbSpace::probs)
      .def_property_readonly("n_outcomes", &FiniteProbSpace::n_outcomes)
      .def("expectation", [](const FiniteProbSpace& s, std::vector<double> v) {
        return s.expectation(v);
      }, py::arg("values"));

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::size_t, std::vector<std::vector<std::size_t>>>(),
           py::arg("n_outcomes"), py::arg("blocks"))
      .def_static("trivial", &Partition::trivial, py::arg("n_outcomes"))
      .def_static("singletons", &Partition::singletons, py::arg("n_outcomes"))
      .def_property_readonly("blocks", &Partition::blocks)
      .def("block_of", &Partition::block_of, py::arg("outcome"));

  py::class_<RandomVariable>(m, "RandomVariable")
      .def(py::init(&make_variable), py::arg("values"))
      .def_readonly("values", &RandomVariable::values)
      .def("__len__", &RandomVariable::size)
      .def("__getitem__",
           [](const RandomVariable& X, std::size_t i) {
             if (i >= X.size()) throw py::index_error();
             return X[i];
           });

  py::class_<Filtration>(m, "Filtration")
      .def(py::init<std::vector<Partition>>(), py::arg("levels"))
      .def("__len__", &Filtration::size)
      .def("level", &Filtration::level, py::arg("k"));

  m.def("refine_check", &refine_check, py::arg("coarse"), py::arg("fine"));
  m.def("is_measurable", &is_measurable, py::arg("X"), py::arg("G"));

  // Means on point sets.
  m.def("f_distance",
        [](const MeanFunction& f, std::vector<double> x, std::vector<double> y) {
          return f_distance(f, x, y);
        },
        py::arg("f"), py::arg("x"), py::arg("y"));
  m.def("f_mean_points",
        [](const MeanFunction& f, std::vector<std::vector<double>> points) {
          return f_mean_points(f, PointSet(std::move(points)));
        },
        py::arg("f"), py::arg("points"));
  m.def("weighted_f_mean",
        [](const MeanFunction& f, std::vector<double> values, std::vector<double> weights) {
          return weighted_f_mean(f, values, weights);
        },
        py::arg("f"), py::arg("values"), py::arg("weights"));

  // Conditional calculus.
  m.def("cond_expectation", &cond_expectation, py::arg("space"), py::arg("X"), py::arg("G"));
  m.def("f_cond_expectation", &f_cond_expectation, py::arg("f"), py::arg("space"), py::arg("X"),
        py::arg("G"));
  m.def("f_expectation", &f_expectation, py::arg("f"), py::arg("space"), py::arg("X"));
  m.def("f_variance", &f_variance, py::arg("f"), py::arg("space"), py::arg("X"));
  m.def("f_cond_variance", &f_cond_variance, py::arg("f"), py::arg("space"), py::arg("X"),
        py::arg("G"));
  m.def("f_distance_rv", &f_distance_rv, py::arg("f"), py::arg("space"), py::arg("X"),
        py::arg("Y"));
  m.def("f_independent", &f_independent, py::arg("f"), py::arg("space"), py::arg("X"),
        py::arg("G"), py::arg("tol") = 1e-12);
  m.def("f_moment", &f_moment, py::arg("f"), py::arg("space"), py::arg("X"), py::arg("p"));

  py::class_<VarianceDecomposition>(m, "VarianceDecomposition")
      .def_readonly("lhs", &VarianceDecomposition::lhs)
      .def_readonly("rhs", &VarianceDecomposition::rhs);
  m.def("total_variance_check", &total_variance_check, py::arg("f"), py::arg("space"),
        py::arg("X"), py::arg("G"));

  py::class_<JensenTriple>(m, "JensenTriple")
      .def_readonly("f_predictor", &JensenTriple::f_predictor)
      .def_readonly("classical", &JensenTriple::classical)
      .def_readonly("inverse_predictor", &JensenTriple::inverse_predictor);
  m.def("jensen_order_check", &jensen_order_check, py::arg("f"), py::arg("space"), py::arg("X"),
        py::arg("G"));

  // Pricing.
  py::enum_<Preference>(m, "Preference")
      .value("X_preferred", Preference::first_preferred)
      .value("Y_preferred", Preference::second_preferred)
      .value("indifferent", Preference::indifferent);

  m.def("prefer", &prefer, py::arg("u"), py::arg("space"), py::arg("X"), py::arg("Y"),
        py::arg("G"), py::arg("tol") = 1e-12);

  py::class_<PreferenceConsistency>(m, "PreferenceConsistency")
      .def_readonly("hypothesis_holds", &PreferenceConsistency::hypothesis_holds)
      .def_readonly("consistent", &PreferenceConsistency::consistent);
  m.def("preference_consistency_check", &preference_consistency_check, py::arg("u"),
        py::arg("space"), py::arg("X"), py::arg("Y"), py::arg("G1"), py::arg("G2"),
        py::arg("tol") = 1e-12);

  m.def("certainty_equivalent", &certainty_equivalent, py::arg("u"), py::arg("space"),
        py::arg("X_T"));
  m.def("conditional_certainty_equivalent", &conditional_certainty_equivalent, py::arg("u"),
        py::arg("space"), py::arg("X_T"), py::arg("G"));
  m.def("pratt_premium", &pratt_premium, py::arg("u"), py::arg("space"), py::arg("X_T"),
        py::arg("G"));
  m.def("wealth_adjusted_ce", &wealth_adjusted_ce, py::arg("u"), py::arg("space"),
        py::arg("W_n"), py::arg("W_T"), py::arg("X_T"), py::arg("G_n"));

  py::class_<MartingaleReport>(m, "MartingaleReport")
      .def_readonly("pi", &MartingaleReport::pi)
      .def_readonly("initial_value", &MartingaleReport::initial_value)
      .def_readonly("ce", &MartingaleReport::ce)
      .def_readonly("max_residual", &MartingaleReport::max_residual)
      .def_readonly("passed", &MartingaleReport::passed);
  m.def("u_martingale_check", &u_martingale_check, py::arg("u"), py::arg("space"),
        py::arg("filtration"), py::arg("X_T"), py::arg("tol") = 1e-10);

  // Markov pricing.
  py::class_<MarkovChainModel>(m, "MarkovChainModel")
      .def(py::init<std::vector<std::vector<double>>, std::vector<double>, std::size_t>(),
           py::arg("transition"), py::arg("state_values"), py::arg("initial_state") = 0)
      .def_property_readonly("n_states", &MarkovChainModel::n_states)
      .def_property_readonly("transition", &MarkovChainModel::transition)
      .def_property_readonly("state_values", &MarkovChainModel::state_values)
      .def_property_readonly("initial_state", &MarkovChainModel::initial_state);

  m.def("markov_ce_schedule", &markov_ce_schedule, py::arg("u"), py::arg("chain"), py::arg("N"));
  m.def("exit_time_probability_exact", &exit_time_probability_exact, py::arg("u"),
        py::arg("chain"), py::arg("N"), py::arg("level"), py::arg("horizon"));

  py::class_<ExitTimeResult>(m, "ExitTimeResult")
      .def_readonly("exact_prob", &ExitTimeResult::exact_prob)
      .def_readonly("mc_prob", &ExitTimeResult::mc_prob)
      .def_readonly("ci_halfwidth", &ExitTimeResult::ci_halfwidth)
      .def_readonly("agree", &ExitTimeResult::agree)
      .def_readonly("short_circuit", &ExitTimeResult::short_circuit);
  m.def("exit_time_analysis", &exit_time_analysis, py::arg("u"), py::arg("chain"), py::arg("N"),
        py::arg("level"), py::arg("horizon"), py::arg("n_paths"), py::arg("seed"),
        py::arg("n_workers") = 1);

  // Sampling and statistics.
  m.def("sample",
        [](const FiniteProbSpace& space, const RandomVariable& X, std::uint64_t seed,
           std::size_t n) { return sample(make_spec(space, X, seed, n)); },
        py::arg("space"), py::arg("X"), py::arg("seed"), py::arg("n"));
  m.def("empirical_f_mean",
        [](const MeanFunction& f, std::vector<double> s) { return empirical_f_mean(f, s); },
        py::arg("f"), py::arg("sample"));

  py::class_<UnbiasednessPair>(m, "UnbiasednessPair")
      .def_readonly("lhs", &UnbiasednessPair::lhs)
      .def_readonly("rhs", &UnbiasednessPair::rhs);
  m.def("f_unbiasedness_check", &f_unbiasedness_check, py::arg("f"), py::arg("space"),
        py::arg("X"), py::arg("N"));

  py::class_<LlnRow>(m, "LlnRow")
      .def_readonly("n", &LlnRow::n)
      .def_readonly("error", &LlnRow::error);
  py::class_<LlnReport>(m, "LlnReport")
      .def_readonly("rows", &LlnReport::rows)
      .def_readonly("mu_f", &LlnReport::mu_f)
      .def_readonly("sigma_f", &LlnReport::sigma_f)
      .def_readonly("bound", &LlnReport::bound)
      .def_readonly("passed", &LlnReport::passed);
  m.def("lln_diagnostic",
        [](const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X,
           std::uint64_t seed, std::size_t n, std::vector<std::size_t> checkpoints) {
          return lln_diagnostic(f, make_spec(space, X, seed, n), checkpoints);
        },
        py::arg("f"), py::arg("space"), py::arg("X"), py::arg("seed"), py::arg("n"),
        py::arg("checkpoints"));

  py::class_<CltReport>(m, "CltReport")
      .def_readonly("n_replicates", &CltReport::n_replicates)
      .def_readonly("n_per_replicate", &CltReport::n_per_replicate)
      .def_readonly("mu_f", &CltReport::mu_f)
      .def_readonly("sigma_f", &CltReport::sigma_f)
      .def_readonly("ks_statistic", &CltReport::ks_statistic)
      .def_readonly("threshold", &CltReport::threshold)
      .def_readonly("quantiles", &CltReport::quantiles)
      .def_readonly("passed", &CltReport::passed);
  m.def("clt_check",
        [](const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X,
           std::uint64_t seed, std::size_t n_replicates, std::size_t n_per_replicate) {
          return clt_check(f, make_spec(space, X, seed, n_per_replicate), n_replicates,
                           n_per_replicate);
        },
        py::arg("f"), py::arg("space"), py::arg("X"), py::arg("seed"), py::arg("n_replicates"),
        py::arg("n_per_replicate"));

  m.def("ks_statistic_vs_normal",
        [](std::vector<double> samples) { return ks_statistic_vs_normal(std::move(samples)); },
        py::arg("samples"));
  m.def("standard_normal_cdf", &standard_normal_cdf, py::arg("x"));

  // Scenario front end: JSON in, structured JSON record out.
  m.def("run_scenario_json",
        [](const std::string& config, std::optional<std::uint64_t> seed,
           std::optional<unsigned> workers, std::optional<double> tol) {
          nlohmann::json parsed;
          try {
            parsed = nlohmann::json::parse(config);
          } catch (const nlohmann::json::exception& e) {
            throw validation_error(std::string("config is not valid JSON: ") + e.what());
          }
          CliOverrides overrides;
          overrides.seed = seed;
          overrides.workers = workers;
          overrides.tol = tol;
          return run_scenario(parsed, overrides).structured.dump(2);
        },
        py::arg("config"), py::arg("seed") = std::nullopt, py::arg("workers") = std::nullopt,
        py::arg("tol") = std::nullopt);
}
