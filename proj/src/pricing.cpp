#include "fmean/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fmean/errors.hpp"

namespace fmean {

namespace {

// Conditional expectation of raw values, null blocks falling back to the
// unconditional mean. Shared by the preference comparisons.
std::vector<double> cond_mean_values(const FiniteProbSpace& space, const std::vector<double>& values,
                                     const Partition& G) {
  const double unconditional = space.expectation(values);
  std::vector<double> out(values.size());
  for (const auto& block : G.blocks()) {
    double mass = 0.0, acc = 0.0;
    for (std::size_t outcome : block) {
      mass += space.prob(outcome);
      acc += space.prob(outcome) * values[outcome];
    }
    const double mean = mass > 0.0 ? acc / mass : unconditional;
    for (std::size_t outcome : block) out[outcome] = mean;
  }
  return out;
}

std::vector<double> utilities(const MeanFunction& u, const RandomVariable& X) {
  std::vector<double> ux(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) ux[i] = u.value(X[i]);
  return ux;
}

bool weakly_preferred_everywhere(const FiniteProbSpace& space, const std::vector<double>& ux_cond,
                                 const std::vector<double>& uy_cond, const Partition& G,
                                 double tol) {
  for (const auto& block : G.blocks()) {
    const std::size_t head = block.front();
    const double slack =
        tol * std::max({1.0, std::abs(ux_cond[head]), std::abs(uy_cond[head])});
    if (uy_cond[head] < ux_cond[head] - slack) return false;
  }
  return true;
}

}  // namespace

Filtration::Filtration(std::vector<Partition> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw validation_error("filtration needs at least one level");
  for (std::size_t k = 0; k + 1 < levels_.size(); ++k) {
    if (!refine_check(levels_[k], levels_[k + 1])) {
      std::ostringstream os;
      os << "filtration level " << (k + 2) << " does not refine level " << (k + 1);
      throw validation_error(os.str());
    }
  }
}

AdaptedProcess::AdaptedProcess(const Filtration& filtration, std::vector<RandomVariable> variables)
    : variables_(std::move(variables)) {
  if (variables_.size() != filtration.size()) {
    throw validation_error("adapted process needs one variable per filtration level");
  }
  for (std::size_t k = 0; k < variables_.size(); ++k) {
    if (!is_measurable(variables_[k], filtration.level(k))) {
      std::ostringstream os;
      os << "process variable " << (k + 1) << " is not measurable at its filtration level";
      throw validation_error(os.str());
    }
  }
}

std::vector<Preference> prefer(const MeanFunction& u, const FiniteProbSpace& space,
                               const RandomVariable& X, const RandomVariable& Y, const Partition& G,
                               double tol) {
  const std::vector<double> ux = cond_mean_values(space, utilities(u, X), G);
  const std::vector<double> uy = cond_mean_values(space, utilities(u, Y), G);
  std::vector<Preference> out(X.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double slack = tol * std::max({1.0, std::abs(ux[i]), std::abs(uy[i])});
    if (std::abs(ux[i] - uy[i]) <= slack) out[i] = Preference::indifferent;
    else out[i] = ux[i] < uy[i] ? Preference::second_preferred : Preference::first_preferred;
  }
  return out;
}

PreferenceConsistency preference_consistency_check(const MeanFunction& u,
                                                   const FiniteProbSpace& space,
                                                   const RandomVariable& X,
                                                   const RandomVariable& Y, const Partition& G1,
                                                   const Partition& G2, double tol) {
  if (!refine_check(G1, G2)) {
    throw validation_error("preference_consistency_check: G2 must refine G1");
  }
  const std::vector<double> ux = utilities(u, X);
  const std::vector<double> uy = utilities(u, Y);
  PreferenceConsistency result;
  result.hypothesis_holds = weakly_preferred_everywhere(
      space, cond_mean_values(space, ux, G2), cond_mean_values(space, uy, G2), G2, tol);
  result.consistent = weakly_preferred_everywhere(
      space, cond_mean_values(space, ux, G1), cond_mean_values(space, uy, G1), G1, tol);
  return result;
}

double certainty_equivalent(const MeanFunction& u, const FiniteProbSpace& space,
                            const RandomVariable& X_T) {
  return f_expectation(u, space, X_T);
}

RandomVariable conditional_certainty_equivalent(const MeanFunction& u,
                                                const FiniteProbSpace& space,
                                                const RandomVariable& X_T, const Partition& G) {
  return f_cond_expectation(u, space, X_T, G);
}

RandomVariable pratt_premium(const MeanFunction& u, const FiniteProbSpace& space,
                             const RandomVariable& X_T, const Partition& G) {
  if (u.convexity() != Convexity::concave) {
    throw validation_error("pratt_premium requires a concave utility");
  }
  const RandomVariable cm = cond_expectation(space, X_T, G);
  const RandomVariable ce = conditional_certainty_equivalent(u, space, X_T, G);
  std::vector<double> premium(cm.size());
  for (std::size_t i = 0; i < premium.size(); ++i) premium[i] = cm[i] - ce[i];
  return RandomVariable(std::move(premium), Interval::real_line());
}

MartingaleReport u_martingale_check(const MeanFunction& u, const FiniteProbSpace& space,
                                    const Filtration& filtration, const RandomVariable& X_T,
                                    double tol) {
  if (X_T.size() != filtration.n_outcomes()) {
    throw validation_error("u_martingale_check: variable and filtration sizes differ");
  }
  MartingaleReport report;
  report.ce = certainty_equivalent(u, space, X_T);

  // pi_0 conditions on the trivial algebra; pi_k on G_k for k = 1..m.
  const Partition trivial = Partition::trivial(space.n_outcomes());
  report.pi.push_back(conditional_certainty_equivalent(u, space, X_T, trivial));
  for (std::size_t k = 0; k < filtration.size(); ++k) {
    report.pi.push_back(conditional_certainty_equivalent(u, space, X_T, filtration.level(k)));
  }
  report.initial_value = report.pi.front()[0];

  report.max_residual = std::abs(report.initial_value - report.ce);
  for (std::size_t k = 0; k + 1 < report.pi.size(); ++k) {
    const Partition& G_k = k == 0 ? trivial : filtration.level(k - 1);
    const RandomVariable pulled = f_cond_expectation(u, space, report.pi[k + 1], G_k);
    for (std::size_t i = 0; i < pulled.size(); ++i) {
      report.max_residual = std::max(report.max_residual, std::abs(pulled[i] - report.pi[k][i]));
    }
  }
  report.passed = report.max_residual <= tol;
  return report;
}

RandomVariable wealth_adjusted_ce(const MeanFunction& u, const FiniteProbSpace& space,
                                  const RandomVariable& W_n, const RandomVariable& W_T,
                                  const RandomVariable& X_T, const Partition& G_n) {
  if (W_n.size() != W_T.size() || W_n.size() != X_T.size()) {
    throw validation_error("wealth_adjusted_ce: variables must share one outcome set");
  }
  if (!is_measurable(W_n, G_n)) {
    throw validation_error("wealth_adjusted_ce: current wealth must be G_n-measurable");
  }
  std::vector<double> terminal(W_T.size());
  for (std::size_t i = 0; i < terminal.size(); ++i) {
    terminal[i] = W_T[i] + X_T[i];
    if (!u.domain().contains(terminal[i])) {
      std::ostringstream os;
      os << "wealth_adjusted_ce: W_T + X_T = " << terminal[i] << " at outcome " << i
         << " leaves " << u.domain().str();
      throw validation_error(os.str());
    }
  }
  const RandomVariable total(std::move(terminal), u.domain());
  const RandomVariable eu = f_cond_expectation(u, space, total, G_n);
  std::vector<double> ce(eu.size());
  for (std::size_t i = 0; i < ce.size(); ++i) ce[i] = eu[i] - W_n[i];
  return RandomVariable(std::move(ce), Interval::real_line());
}

}  // namespace fmean
