#include "fmean/markov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "fmean/errors.hpp"
#include "fmean/philox.hpp"

namespace fmean {

namespace {

// Row-wise cumulative probabilities for inverse-CDF stepping; the last entry
// is forced to 1 so a uniform draw in [0,1) always lands.
std::vector<std::vector<double>> cumulative_rows(const std::vector<std::vector<double>>& transition) {
  std::vector<std::vector<double>> cum(transition.size());
  for (std::size_t s = 0; s < transition.size(); ++s) {
    cum[s].resize(transition[s].size());
    double acc = 0.0;
    for (std::size_t t = 0; t < transition[s].size(); ++t) {
      acc += transition[s][t];
      cum[s][t] = acc;
    }
    cum[s].back() = 1.0;
  }
  return cum;
}

std::size_t step_state(const std::vector<double>& cum_row, double uniform) {
  return static_cast<std::size_t>(
      std::upper_bound(cum_row.begin(), cum_row.end(), uniform) - cum_row.begin());
}

}  // namespace

MarkovChainModel::MarkovChainModel(std::vector<std::vector<double>> transition,
                                   std::vector<double> state_values, std::size_t initial_state)
    : transition_(std::move(transition)),
      state_values_(std::move(state_values)),
      initial_state_(initial_state) {
  const std::size_t n = state_values_.size();
  if (n == 0) throw validation_error("chain needs at least one state");
  if (transition_.size() != n) throw validation_error("transition matrix must be n_states x n_states");
  for (std::size_t s = 0; s < n; ++s) {
    if (transition_[s].size() != n) {
      throw validation_error("transition matrix must be n_states x n_states");
    }
    double row = 0.0;
    for (double p : transition_[s]) {
      if (!(p >= 0.0)) throw validation_error("transition probabilities must be nonnegative");
      row += p;
    }
    if (std::abs(row - 1.0) > 1e-12) {
      std::ostringstream os;
      os << "transition row " << s << " sums to " << row << ", expected 1 within 1e-12";
      throw validation_error(os.str());
    }
  }
  for (double v : state_values_) {
    if (!std::isfinite(v)) throw validation_error("state values must be finite");
  }
  if (initial_state_ >= n) throw validation_error("initial state out of range");
}

std::vector<std::vector<double>> markov_ce_schedule(const MeanFunction& u,
                                                    const MarkovChainModel& chain, std::size_t N) {
  if (N == 0) throw validation_error("markov_ce_schedule requires N >= 1");
  const std::size_t n = chain.n_states();
  std::vector<double> uv(n);
  for (std::size_t s = 0; s < n; ++s) uv[s] = u.value(chain.state_values()[s]);

  std::vector<std::vector<double>> schedule(N + 1, std::vector<double>(n));
  schedule[N] = chain.state_values();
  std::vector<double> w = uv;  // holds P^{N-k} u(v) while k walks down
  for (std::size_t back = 1; back <= N; ++back) {
    std::vector<double> next(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) next[s] += chain.transition()[s][t] * w[t];
    }
    w = std::move(next);
    const std::size_t k = N - back;
    for (std::size_t s = 0; s < n; ++s) schedule[k][s] = u.invert(w[s]);
  }
  return schedule;
}

double exit_time_probability_exact(const MeanFunction& u, const MarkovChainModel& chain,
                                   std::size_t N, double level, std::size_t horizon) {
  if (horizon > N) throw validation_error("exit-time horizon must not exceed N");
  const auto schedule = markov_ce_schedule(u, chain, N);
  const std::size_t n = chain.n_states();

  std::vector<double> alive(n, 0.0);
  alive[chain.initial_state()] = 1.0;
  double absorbed = 0.0;
  for (std::size_t k = 0; k <= horizon; ++k) {
    for (std::size_t s = 0; s < n; ++s) {
      if (schedule[k][s] < level) {
        absorbed += alive[s];
        alive[s] = 0.0;
      }
    }
    if (k == horizon) break;
    std::vector<double> next(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
      if (alive[s] == 0.0) continue;
      for (std::size_t t = 0; t < n; ++t) next[t] += alive[s] * chain.transition()[s][t];
    }
    alive = std::move(next);
  }
  return absorbed;
}

ExitTimeResult exit_time_analysis(const MeanFunction& u, const MarkovChainModel& chain,
                                  std::size_t N, double level, std::size_t horizon,
                                  std::size_t n_paths, std::uint64_t seed, unsigned n_workers) {
  if (horizon > N) throw validation_error("exit-time horizon must not exceed N");
  if (n_paths == 0) throw validation_error("exit-time analysis requires n_paths > 0");
  const auto schedule = markov_ce_schedule(u, chain, N);

  double lo = schedule[0][0], hi = schedule[0][0];
  for (std::size_t k = 0; k <= horizon; ++k) {
    for (double c : schedule[k]) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  if (level <= lo) return {0.0, 0.0, 0.0, true, true};
  if (level > hi) return {1.0, 1.0, 0.0, true, true};

  const double exact = exit_time_probability_exact(u, chain, N, level, horizon);

  const auto cum = cumulative_rows(chain.transition());
  const auto simulate_range = [&](std::size_t first, std::size_t last) {
    std::size_t breached = 0;
    for (std::size_t path = first; path < last; ++path) {
      std::size_t state = chain.initial_state();
      if (schedule[0][state] < level) {
        ++breached;
        continue;
      }
      for (std::size_t k = 1; k <= horizon; ++k) {
        state = step_state(cum[state], philox_uniform(seed, path, k - 1));
        if (schedule[k][state] < level) {
          ++breached;
          break;
        }
      }
    }
    return breached;
  };

  std::size_t breached = 0;
  if (n_workers <= 1) {
    breached = simulate_range(0, n_paths);
  } else {
    const std::size_t chunk = (n_paths + n_workers - 1) / n_workers;
    std::vector<std::size_t> counts(n_workers, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n_workers; ++w) {
      const std::size_t first = std::min<std::size_t>(w * chunk, n_paths);
      const std::size_t last = std::min<std::size_t>(first + chunk, n_paths);
      pool.emplace_back([&, w, first, last] { counts[w] = simulate_range(first, last); });
    }
    for (auto& t : pool) t.join();
    for (std::size_t c : counts) breached += c;  // order-independent merge
  }

  ExitTimeResult result;
  result.exact_prob = exact;
  result.mc_prob = static_cast<double>(breached) / static_cast<double>(n_paths);
  result.ci_halfwidth =
      1.96 * std::sqrt(result.mc_prob * (1.0 - result.mc_prob) / static_cast<double>(n_paths));
  result.agree = std::abs(result.exact_prob - result.mc_prob) <=
                 std::max(3.0 * result.ci_halfwidth, 1e-3);
  result.short_circuit = false;
  return result;
}

}  // namespace fmean
