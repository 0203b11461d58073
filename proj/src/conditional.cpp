#include "fmean/conditional.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fmean/errors.hpp"

namespace fmean {

namespace {

void require_same_size(const FiniteProbSpace& space, const RandomVariable& X, const char* who) {
  if (X.size() != space.n_outcomes()) {
    throw validation_error(std::string(who) + ": variable and space sizes differ");
  }
}

void require_same_size(const FiniteProbSpace& space, const Partition& G, const char* who) {
  if (G.n_outcomes() != space.n_outcomes()) {
    throw validation_error(std::string(who) + ": partition and space sizes differ");
  }
}

std::vector<double> transformed(const MeanFunction& f, const RandomVariable& X) {
  std::vector<double> fx(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) fx[i] = f.value(X[i]);
  return fx;
}

// Blockwise probability-weighted means, one value per outcome. Blocks of
// probability zero receive the unconditional mean.
std::vector<double> blockwise_mean(const FiniteProbSpace& space, const std::vector<double>& values,
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

double variance_of(const FiniteProbSpace& space, const std::vector<double>& values) {
  const double mean = space.expectation(values);
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = values[i] - mean;
    acc += space.prob(i) * d * d;
  }
  return acc;
}

}  // namespace

RandomVariable cond_expectation(const FiniteProbSpace& space, const RandomVariable& X,
                                const Partition& G) {
  require_same_size(space, X, "cond_expectation");
  require_same_size(space, G, "cond_expectation");
  return RandomVariable(blockwise_mean(space, X.values, G), X.domain_tag);
}

double f_distance_rv(const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X,
                     const RandomVariable& Y) {
  require_same_size(space, X, "f_distance_rv");
  require_same_size(space, Y, "f_distance_rv");
  double acc = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const double d = f.value(X[i]) - f.value(Y[i]);
    acc += space.prob(i) * d * d;
  }
  return std::sqrt(acc);
}

RandomVariable f_cond_expectation(const MeanFunction& f, const FiniteProbSpace& space,
                                  const RandomVariable& X, const Partition& G) {
  require_same_size(space, X, "f_cond_expectation");
  require_same_size(space, G, "f_cond_expectation");
  const std::vector<double> fx = transformed(f, X);
  const std::vector<double> cm = blockwise_mean(space, fx, G);
  std::vector<double> out(X.size());
  for (const auto& block : G.blocks()) {
    const double predictor = f.invert(cm[block.front()]);
    for (std::size_t outcome : block) out[outcome] = predictor;
  }
  return RandomVariable(std::move(out), f.domain());
}

double f_expectation(const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X) {
  require_same_size(space, X, "f_expectation");
  return f.invert(space.expectation(transformed(f, X)));
}

double f_variance(const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X) {
  require_same_size(space, X, "f_variance");
  return variance_of(space, transformed(f, X));
}

RandomVariable f_cond_variance(const MeanFunction& f, const FiniteProbSpace& space,
                               const RandomVariable& X, const Partition& G) {
  require_same_size(space, X, "f_cond_variance");
  require_same_size(space, G, "f_cond_variance");
  const std::vector<double> fx = transformed(f, X);
  const double unconditional = variance_of(space, fx);
  std::vector<double> out(X.size());
  for (const auto& block : G.blocks()) {
    double mass = 0.0, acc = 0.0;
    for (std::size_t outcome : block) {
      mass += space.prob(outcome);
      acc += space.prob(outcome) * fx[outcome];
    }
    double var;
    if (mass > 0.0) {
      const double mean = acc / mass;
      var = 0.0;
      for (std::size_t outcome : block) {
        const double d = fx[outcome] - mean;
        var += space.prob(outcome) * d * d;
      }
      var /= mass;
    } else {
      var = unconditional;
    }
    for (std::size_t outcome : block) out[outcome] = var;
  }
  return RandomVariable(std::move(out), Interval(0.0, std::numeric_limits<double>::infinity(),
                                                 /*lo_open=*/false, /*hi_open=*/true));
}

VarianceDecomposition total_variance_check(const MeanFunction& f, const FiniteProbSpace& space,
                                           const RandomVariable& X, const Partition& G) {
  const double lhs = f_variance(f, space, X);
  const RandomVariable cond_var = f_cond_variance(f, space, X, G);
  const RandomVariable predictor = f_cond_expectation(f, space, X, G);
  const double rhs = space.expectation(cond_var.values) + f_variance(f, space, predictor);
  return {lhs, rhs};
}

bool f_independent(const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X,
                   const Partition& G, double tol) {
  const RandomVariable predictor = f_cond_expectation(f, space, X, G);
  const double mean = f_expectation(f, space, X);
  for (const auto& block : G.blocks()) {
    double mass = 0.0;
    for (std::size_t outcome : block) mass += space.prob(outcome);
    if (mass > 0.0 && std::abs(predictor[block.front()] - mean) > tol) return false;
  }
  return true;
}

JensenTriple jensen_order_check(const MeanFunction& f, const FiniteProbSpace& space,
                                const RandomVariable& X, const Partition& G) {
  if (f.convexity() == Convexity::neither) {
    throw validation_error("jensen_order_check requires a concave or convex mean function");
  }
  require_same_size(space, X, "jensen_order_check");
  require_same_size(space, G, "jensen_order_check");
  for (double v : X.values) {
    if (!f.domain().contains(v) || !f.codomain().contains(v)) {
      std::ostringstream os;
      os << "jensen_order_check: value " << v << " must lie in both " << f.domain().str()
         << " and " << f.codomain().str();
      throw validation_error(os.str());
    }
  }

  RandomVariable f_pred = f_cond_expectation(f, space, X, G);
  RandomVariable classical = cond_expectation(space, X, G);

  // E_{f^{-1}}[X|G], with f^{-1} as the forward map and f as its inverse.
  std::vector<double> gx(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) gx[i] = f.invert(X[i]);
  const std::vector<double> cm = blockwise_mean(space, gx, G);
  std::vector<double> inv_values(X.size());
  for (const auto& block : G.blocks()) {
    const double predictor = f.value(cm[block.front()]);
    for (std::size_t outcome : block) inv_values[outcome] = predictor;
  }
  RandomVariable inverse_pred(std::move(inv_values), f.codomain());

  for (std::size_t i = 0; i < X.size(); ++i) {
    double low = f_pred[i], mid = classical[i], high = inverse_pred[i];
    if (f.convexity() == Convexity::convex) std::swap(low, high);
    const double slack =
        1e-12 * std::max({1.0, std::abs(low), std::abs(mid), std::abs(high)});
    if (low > mid + slack || mid > high + slack) {
      std::ostringstream os;
      os << "jensen_order_check: ordering violated at outcome " << i << " (" << low << ", " << mid
         << ", " << high << ")";
      throw numeric_error(os.str());
    }
  }
  return {std::move(f_pred), std::move(classical), std::move(inverse_pred)};
}

double f_moment(const MeanFunction& f, const FiniteProbSpace& space, const RandomVariable& X,
                double p) {
  require_same_size(space, X, "f_moment");
  if (!(p > 0.0)) throw validation_error("f_moment requires p > 0");
  double acc = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    acc += space.prob(i) * std::pow(std::abs(f.value(X[i])), p);
  }
  return acc;
}

}  // namespace fmean
