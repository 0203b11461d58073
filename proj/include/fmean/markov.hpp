#ifndef FMEAN_MARKOV_HPP
#define FMEAN_MARKOV_HPP

#include <cstdint>
#include <vector>

#include "fmean/mean_function.hpp"

namespace fmean {

// A finite-state Markov chain with a payoff value per state. Transition rows
// must be nonnegative and sum to 1 within 1e-12.
class MarkovChainModel {
 public:
  MarkovChainModel(std::vector<std::vector<double>> transition, std::vector<double> state_values,
                   std::size_t initial_state);

  std::size_t n_states() const { return state_values_.size(); }
  const std::vector<std::vector<double>>& transition() const { return transition_; }
  const std::vector<double>& state_values() const { return state_values_; }
  std::size_t initial_state() const { return initial_state_; }

 private:
  std::vector<std::vector<double>> transition_;
  std::vector<double> state_values_;
  std::size_t initial_state_;
};

// Conditional certainty equivalents of the terminal payoff v(S_N) as a
// function of the state at each monitoring time: row k holds
// u^{-1}( (P^{N-k} u(v))(s) ) for k = 0..N, with row N equal to v itself.
std::vector<std::vector<double>> markov_ce_schedule(const MeanFunction& u,
                                                    const MarkovChainModel& chain, std::size_t N);

// P(T_L <= horizon) for the exit time T_L = min{ k : C(N|G_k) < L } (infinite
// when the level is never breached), by dynamic programming over
// (state, time, absorbed) on the chain. horizon must not exceed N.
double exit_time_probability_exact(const MeanFunction& u, const MarkovChainModel& chain,
                                   std::size_t N, double level, std::size_t horizon);

struct ExitTimeResult {
  double exact_prob;    // dynamic-programming value
  double mc_prob;       // Monte Carlo estimate
  double ci_halfwidth;  // 95% normal-approximation half-width
  bool agree;           // |exact - mc| <= max(3 * ci_halfwidth, 1e-3)
  bool short_circuit;   // level outside the schedule's range; no paths sampled
};

// Exact exit probability plus a seeded Monte Carlo estimate over n_paths
// chain paths. Paths are driven by per-path Philox streams keyed on
// (seed, path index), so splitting the index range across workers cannot
// change the result. Levels below the smallest or above the largest schedule
// value short-circuit to probability 0 or 1 without sampling.
ExitTimeResult exit_time_analysis(const MeanFunction& u, const MarkovChainModel& chain,
                                  std::size_t N, double level, std::size_t horizon,
                                  std::size_t n_paths, std::uint64_t seed, unsigned n_workers = 1);

}  // namespace fmean

#endif  // FMEAN_MARKOV_HPP
