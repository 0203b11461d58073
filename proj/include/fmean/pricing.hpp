#ifndef FMEAN_PRICING_HPP
#define FMEAN_PRICING_HPP

#include <cstdint>
#include <vector>

#include "fmean/conditional.hpp"
#include "fmean/prob_space.hpp"

namespace fmean {

// An increasing sequence of partitions G_1, ..., G_m over one space; each
// level must refine the previous one.
class Filtration {
 public:
  explicit Filtration(std::vector<Partition> levels);

  std::size_t size() const { return levels_.size(); }
  std::size_t n_outcomes() const { return levels_.front().n_outcomes(); }
  const Partition& level(std::size_t k) const { return levels_[k]; }
  const std::vector<Partition>& levels() const { return levels_; }

 private:
  std::vector<Partition> levels_;
};

// Variables X_1, ..., X_m with X_k constant on every block of G_k.
class AdaptedProcess {
 public:
  AdaptedProcess(const Filtration& filtration, std::vector<RandomVariable> variables);

  std::size_t size() const { return variables_.size(); }
  const RandomVariable& at(std::size_t k) const { return variables_[k]; }

 private:
  std::vector<RandomVariable> variables_;
};

enum class Preference { first_preferred, second_preferred, indifferent };

// Blockwise choice between X and Y under utility u and information G:
// Y is preferred on a block when E_u[Y|G] exceeds E_u[X|G] there, which is
// equivalent to comparing E[u(X)|G] with E[u(Y)|G]. The comparison runs on
// the u-scale; `tol` is the relative indifference width there. Blocks of
// probability zero compare the unconditional expected utilities.
std::vector<Preference> prefer(const MeanFunction& u, const FiniteProbSpace& space,
                               const RandomVariable& X, const RandomVariable& Y, const Partition& G,
                               double tol = 1e-12);

struct PreferenceConsistency {
  bool hypothesis_holds;  // Y weakly preferred to X on every block of G2
  bool consistent;        // Y weakly preferred to X on every block of G1
};

// Tower consistency of conditional preference: if Y is weakly preferred under
// the finer G2, it stays weakly preferred under the coarser G1. A failed
// hypothesis is reported, not treated as an error.
PreferenceConsistency preference_consistency_check(const MeanFunction& u,
                                                   const FiniteProbSpace& space,
                                                   const RandomVariable& X,
                                                   const RandomVariable& Y, const Partition& G1,
                                                   const Partition& G2, double tol = 1e-12);

// u^{-1}(E[u(X_T)]), the sure amount valued equally to the random payoff.
double certainty_equivalent(const MeanFunction& u, const FiniteProbSpace& space,
                            const RandomVariable& X_T);

// C(T|G) = E_u[X_T|G], the certainty equivalent updated by the information G.
RandomVariable conditional_certainty_equivalent(const MeanFunction& u,
                                                const FiniteProbSpace& space,
                                                const RandomVariable& X_T, const Partition& G);

// E[X_T|G] - E_u[X_T|G]. Requires concave u, which makes it nonnegative.
RandomVariable pratt_premium(const MeanFunction& u, const FiniteProbSpace& space,
                             const RandomVariable& X_T, const Partition& G);

struct MartingaleReport {
  std::vector<RandomVariable> pi;  // pi_k = C(T|G_k) for k = 0..m; pi_0 is constant
  double initial_value;            // pi_0
  double ce;                       // certainty_equivalent(u, X_T)
  double max_residual;             // max over k, outcomes of |E_u[pi_{k+1}|G_k] - pi_k|
  bool passed;
};

// Verifies that the conditional certainty equivalents along the filtration
// form a u-martingale: E_u[pi_{k+1}|G_k] = pi_k for all k, with pi_0 = C(T).
MartingaleReport u_martingale_check(const MeanFunction& u, const FiniteProbSpace& space,
                                    const Filtration& filtration, const RandomVariable& X_T,
                                    double tol = 1e-10);

// Wealth-adjusted certainty equivalent: the G_n-measurable C solving
// u(W_n + C) = E[u(W_T + X_T)|G_n], i.e. E_u[W_T + X_T|G_n] - W_n.
RandomVariable wealth_adjusted_ce(const MeanFunction& u, const FiniteProbSpace& space,
                                  const RandomVariable& W_n, const RandomVariable& W_T,
                                  const RandomVariable& X_T, const Partition& G_n);

}  // namespace fmean

#endif  // FMEAN_PRICING_HPP
