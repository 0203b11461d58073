#ifndef FMEAN_CONDITIONAL_HPP
#define FMEAN_CONDITIONAL_HPP

#include "fmean/mean_function.hpp"
#include "fmean/prob_space.hpp"

namespace fmean {

// Classical conditional expectation E[X|G]: on each block of positive
// probability, the probability-weighted block average. Blocks of probability
// zero carry the unconditional mean; conditional expectations are defined
// only up to null sets, and this choice keeps iterated conditioning exact.
RandomVariable cond_expectation(const FiniteProbSpace& space, const RandomVariable& X,
                                const Partition& G);

// sqrt( E[(f(X) - f(Y))^2] ), the distance under which the f-conditional
// expectation is the best predictor. Zero iff X = Y off null sets.
double f_distance_rv(const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X,
                     const RandomVariable& Y);

// Best G-measurable predictor of X in the f-distance: f^{-1}(E[f(X)|G]).
RandomVariable f_cond_expectation(const MeanFunction& f, const FiniteProbSpace& space,
                                  const RandomVariable& X, const Partition& G);

// f^{-1}(E[f(X)]), the generalized arithmetic f-mean of X.
double f_expectation(const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X);

// E[(f(X) - E[f(X)])^2], the squared f-distance prediction error of the f-mean.
double f_variance(const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X);

// Blockwise conditional variance of f(X); zero-probability blocks carry the
// unconditional variance of f(X).
RandomVariable f_cond_variance(const MeanFunction& f, const FiniteProbSpace& space,
                               const RandomVariable& X, const Partition& G);

struct VarianceDecomposition {
  double lhs;  // f-variance of X
  double rhs;  // E[conditional f-variance] + f-variance of the best predictor
};

// Both sides of the total variance identity, for assertion |lhs - rhs| <= tol.
VarianceDecomposition total_variance_check(const MeanFunction& f, const FiniteProbSpace& space,
                                           const RandomVariable& X, const Partition& G);

// True iff the best predictor ignores G: E_f[X|G] = E_f[X] within tol on every
// positive-probability block.
bool f_independent(const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X,
                   const Partition& G, double tol);

struct JensenTriple {
  RandomVariable f_predictor;        // E_f[X|G]
  RandomVariable classical;          // E[X|G]
  RandomVariable inverse_predictor;  // E_{f^{-1}}[X|G]
};

// The three predictors of X given G, ordered by Jensen's inequality:
// concave f gives E_f <= E <= E_{f^{-1}} pointwise, convex f the reverse.
// X must take values in both I and J. Requires a concave or convex f; the
// ordering is checked and a violation raises a numeric error.
JensenTriple jensen_order_check(const MeanFunction& f, const FiniteProbSpace& space,
                                const RandomVariable& X, const Partition& G);

// Diagnostic moment E[|f(X)|^p].
double f_moment(const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X,
                double p);

}  // namespace fmean

#endif  // FMEAN_CONDITIONAL_HPP
