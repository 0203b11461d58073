#include <doctest.h>

#include <cmath>
#include <random>

#include "fmean/errors.hpp"
#include "fmean/means.hpp"

#include "oracles.hpp"

using namespace fmean;

TEST_CASE("frozen f-distance values") {
  const auto id = MeanFunction::make("identity");
  const std::vector<double> x{1.0, 2.0}, y{4.0, 6.0};
  CHECK(f_distance(id, x, y) == doctest::Approx(5.0).epsilon(1e-15));

  const auto lg = MeanFunction::make("log");
  const std::vector<double> a{1.0}, b{std::exp(2.0)};
  CHECK(f_distance(lg, a, b) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("f-distance argument validation") {
  const auto id = MeanFunction::make("identity");
  const std::vector<double> x{1.0, 2.0}, y{4.0};
  CHECK_THROWS_AS(f_distance(id, x, y), validation_error);
  const std::vector<double> empty;
  CHECK_THROWS_AS(f_distance(id, empty, empty), validation_error);
  const auto lg = MeanFunction::make("log");
  const std::vector<double> neg{-1.0};
  const std::vector<double> one{1.0};
  CHECK_THROWS_AS(f_distance(lg, neg, one), validation_error);
}

TEST_CASE("f-distance is a metric on sampled triples") {
  const auto lg = MeanFunction::make("log");
  std::mt19937_64 rng(7101);
  std::uniform_real_distribution<double> unif(0.1, 5.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> x(3), y(3), z(3);
    for (int d = 0; d < 3; ++d) {
      x[d] = unif(rng);
      y[d] = unif(rng);
      z[d] = unif(rng);
    }
    const double dxy = f_distance(lg, x, y);
    const double dyx = f_distance(lg, y, x);
    const double dxz = f_distance(lg, x, z);
    const double dzy = f_distance(lg, z, y);
    CHECK(dxy == doctest::Approx(dyx).epsilon(1e-15));
    CHECK(dxy >= 0.0);
    CHECK(f_distance(lg, x, x) == 0.0);
    CHECK(dxy <= dxz + dzy + 1e-12);
  }
}

TEST_CASE("frozen point-set means") {
  const auto lg = MeanFunction::make("log");
  const PointSet two({{1.0}, {4.0}});
  CHECK(f_mean_points(lg, two)[0] == doctest::Approx(2.0).epsilon(1e-14));

  const auto ni = MeanFunction::make("neg_inverse");
  const PointSet harm({{2.0}, {6.0}});
  CHECK(f_mean_points(ni, harm)[0] == doctest::Approx(3.0).epsilon(1e-14));

  // Componentwise: each coordinate is the one-dimensional mean.
  const PointSet grid({{1.0, 2.0}, {4.0, 8.0}});
  const auto m = f_mean_points(lg, grid);
  CHECK(m[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(m[1] == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("point set validation") {
  using Pts = std::vector<std::vector<double>>;
  CHECK_THROWS_AS(PointSet(Pts{}), validation_error);
  CHECK_THROWS_AS(PointSet(Pts{{1.0, 2.0}, {3.0}}), validation_error);
  CHECK_THROWS_AS(PointSet(Pts{{}}), validation_error);
}

TEST_CASE("the point-set mean minimizes the summed squared f-distance") {
  std::mt19937_64 rng(7102);
  for (const auto& [name, params] : oracles::catalog_params()) {
    CAPTURE(name);
    const double a = params.empty() ? 0.0 : params[0];
    const auto f = MeanFunction::make(name, params);
    const auto g = oracles::oracle_fn(name, a);
    const auto [lo, hi] = oracles::safe_range(name);
    std::uniform_real_distribution<double> unif(lo, hi);

    std::vector<std::vector<double>> pts(5, std::vector<double>(2));
    for (auto& p : pts)
      for (auto& c : p) c = unif(rng);
    const auto m = f_mean_points(f, PointSet(pts));
    const double phi_m = oracles::sum_sq_f_distance(g, pts, m);

    // Probe along axes and with random perturbations; shrink steps that
    // would leave the domain.
    std::uniform_real_distribution<double> dir(-1.0, 1.0);
    for (int probe = 0; probe < 24; ++probe) {
      auto c = m;
      double step = 1e-3;
      bool ok = false;
      for (int halving = 0; halving < 20 && !ok; ++halving, step *= 0.5) {
        ok = true;
        for (std::size_t d = 0; d < c.size(); ++d) {
          c[d] = m[d] + step * dir(rng);
          if (!f.domain().contains(c[d])) ok = false;
        }
      }
      REQUIRE(ok);
      CHECK(phi_m <= oracles::sum_sq_f_distance(g, pts, c) + 1e-12);
    }
  }
}

TEST_CASE("frozen weighted means") {
  const auto id = MeanFunction::make("identity");
  const auto lg = MeanFunction::make("log");
  const std::vector<double> ones{1.0, 1.0}, twos{2.0, 2.0};
  const std::vector<double> v13{1.0, 3.0}, v14{1.0, 4.0};
  CHECK(weighted_f_mean(id, v13, ones) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(weighted_f_mean(lg, v14, twos) == doctest::Approx(2.0).epsilon(1e-14));
  const std::vector<double> v1e4{1.0, std::exp(4.0)};
  const std::vector<double> w31{3.0, 1.0};
  CHECK(weighted_f_mean(lg, v1e4, w31) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
}

TEST_CASE("weighted mean validation") {
  const auto id = MeanFunction::make("identity");
  const std::vector<double> v{1.0, 2.0};
  const std::vector<double> zeros{0.0, 0.0};
  const std::vector<double> neg{1.0, -1.0};
  const std::vector<double> short_w{1.0};
  CHECK_THROWS_AS(weighted_f_mean(id, v, zeros), validation_error);
  CHECK_THROWS_AS(weighted_f_mean(id, v, neg), validation_error);
  CHECK_THROWS_AS(weighted_f_mean(id, v, short_w), validation_error);
  const std::vector<double> empty;
  CHECK_THROWS_AS(weighted_f_mean(id, empty, empty), validation_error);
}

TEST_CASE("weighted means agree with the closed textbook forms") {
  std::mt19937_64 rng(7103);
  for (const auto& [name, params] : oracles::catalog_params()) {
    CAPTURE(name);
    const double a = params.empty() ? 0.0 : params[0];
    const auto f = MeanFunction::make(name, params);
    for (int rep = 0; rep < 40; ++rep) {
      const std::size_t n = 2 + rep % 5;
      const auto probs = oracles::random_probs(rng, n);
      const auto [lo, hi] = oracles::safe_range(name);
      const auto vals = oracles::random_values(rng, n, lo, hi);
      const double got = weighted_f_mean(f, vals, probs);
      const double want = oracles::closed_form_f_mean(name, a, probs, vals);
      CHECK(got == doctest::Approx(want).epsilon(1e-10));

      // Internality: the mean lies in the convex hull of the values.
      const auto [mn, mx] = std::minmax_element(vals.begin(), vals.end());
      CHECK(got >= *mn - 1e-10);
      CHECK(got <= *mx + 1e-10);
    }
  }
}

TEST_CASE("the f-mean is not additive") {
  // E_log[X] = E_log[Y] = 2 pointwise, yet E_log[X + Y] != 4.
  const auto lg = MeanFunction::make("log");
  const std::vector<double> half{0.5, 0.5};
  const std::vector<double> x{1.0, 4.0}, y{4.0, 1.0}, sum{5.0, 5.0};
  CHECK(weighted_f_mean(lg, x, half) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(weighted_f_mean(lg, y, half) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(weighted_f_mean(lg, sum, half) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("weighted distribution means") {
  const auto lg = MeanFunction::make("log");
  const auto id = MeanFunction::make("identity");

  // Single atom: the mean is the atom.
  CHECK(weighted_distribution_f_mean(lg, WeightedDiscreteDistribution({{3.0, 1.0}})) ==
        doctest::Approx(3.0).epsilon(1e-14));

  // Unit weights reduce to the plain f-mean.
  CHECK(weighted_distribution_f_mean(
            id, WeightedDiscreteDistribution({{0.0, 0.5}, {2.0, 0.5}}, {1.0, 1.0})) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // log with weights (1, 3): exp( (ln 1 + 3 ln 4) / 4 ) = 4^{3/4}.
  CHECK(weighted_distribution_f_mean(
            lg, WeightedDiscreteDistribution({{1.0, 0.5}, {4.0, 0.5}}, {1.0, 3.0})) ==
        doctest::Approx(2.8284271247461903).epsilon(1e-14));
}

TEST_CASE("weighted distribution validation") {
  CHECK_THROWS_AS(WeightedDiscreteDistribution({{1.0, 0.6}, {2.0, 0.6}}), validation_error);
  CHECK_THROWS_AS(WeightedDiscreteDistribution({{1.0, -0.1}, {2.0, 1.1}}), validation_error);
  CHECK_THROWS_AS(WeightedDiscreteDistribution({{1.0, 0.5}, {2.0, 0.5}}, {1.0}), validation_error);
  CHECK_THROWS_AS(WeightedDiscreteDistribution({{1.0, 0.5}, {2.0, 0.5}}, {-1.0, 1.0}),
                  validation_error);
  // All weighted mass vanishing leaves nothing to average.
  CHECK_THROWS_AS(WeightedDiscreteDistribution({{1.0, 1.0}, {2.0, 0.0}}, {0.0, 5.0}),
                  validation_error);
}
