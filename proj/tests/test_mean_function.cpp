#include <doctest.h>

#include <cmath>
#include <random>

#include "fmean/errors.hpp"
#include "fmean/mean_function.hpp"

#include "oracles.hpp"

using namespace fmean;

namespace {

std::vector<double> domain_grid(const MeanFunction& f, std::size_t n, std::mt19937_64& rng) {
  const auto [lo, hi] = oracles::safe_range(f.name());
  std::uniform_real_distribution<double> unif(lo, hi);
  std::vector<double> xs(n);
  for (auto& x : xs) x = unif(rng);
  return xs;
}

}  // namespace

TEST_CASE("catalog lists the eight entries") {
  const auto& names = mean_function_names();
  REQUIRE(names.size() == 8);
  for (const auto& [name, params] : oracles::catalog_params()) {
    CHECK_NOTHROW(MeanFunction::make(name, params));
  }
}

TEST_CASE("factory validates names and parameters") {
  CHECK_THROWS_AS(MeanFunction::make("median"), validation_error);
  CHECK_THROWS_AS(MeanFunction::make("power", {0.0}), validation_error);
  CHECK_THROWS_AS(MeanFunction::make("power"), validation_error);
  CHECK_THROWS_AS(MeanFunction::make("cara", {0.0}), validation_error);
  CHECK_THROWS_AS(MeanFunction::make("cara", {-1.0}), validation_error);
  CHECK_THROWS_AS(MeanFunction::make("exp", {0.0}), validation_error);
  CHECK_THROWS_AS(MeanFunction::make("identity", {1.0}), validation_error);
  CHECK_THROWS_AS(MeanFunction::make("log", {2.0}), validation_error);
  const double nan = std::nan("");
  CHECK_THROWS_AS(MeanFunction::make("power", {nan}), validation_error);
}

TEST_CASE("catalog shapes: domains, codomains, convexity") {
  const auto log_f = MeanFunction::make("log");
  CHECK(log_f.domain().str() == "(0, inf)");
  CHECK(log_f.codomain().str() == "(-inf, inf)");
  CHECK(log_f.convexity() == Convexity::concave);

  CHECK(MeanFunction::make("identity").convexity() == Convexity::neither);
  CHECK(MeanFunction::make("sinh").convexity() == Convexity::neither);
  CHECK(MeanFunction::make("normal_cdf").convexity() == Convexity::neither);
  CHECK(MeanFunction::make("cara", {1.0}).convexity() == Convexity::concave);
  CHECK(MeanFunction::make("neg_inverse").convexity() == Convexity::concave);
  CHECK(MeanFunction::make("power", {0.5}).convexity() == Convexity::concave);
  CHECK(MeanFunction::make("power", {2.0}).convexity() == Convexity::convex);
  CHECK(MeanFunction::make("power", {1.0}).convexity() == Convexity::neither);
  CHECK(MeanFunction::make("power", {-1.0}).convexity() == Convexity::concave);
  CHECK(MeanFunction::make("exp", {1.0}).convexity() == Convexity::convex);
  CHECK(MeanFunction::make("exp", {-1.0}).convexity() == Convexity::concave);

  CHECK(MeanFunction::make("cara", {1.0}).codomain().str() == "(0, 1)");
  CHECK(MeanFunction::make("normal_cdf").has_closed_inverse() == false);
  CHECK(MeanFunction::make("log").has_closed_inverse() == true);
  CHECK(MeanFunction::make("power", {0.5}).label() == "power(a=0.5)");
}

TEST_CASE("frozen inverse values") {
  CHECK(MeanFunction::make("log").invert(0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(MeanFunction::make("normal_cdf").invert(0.5) == doctest::Approx(0.0).epsilon(1e-12));
  const double y = 1.0 - std::exp(-2.0);
  CHECK(MeanFunction::make("cara", {1.0}).invert(y) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("decreasing natural forms are stored negated") {
  // power(a<0) and exp(a<0) are sign-normalized so the stored map increases;
  // negation is affine, so the induced means are the textbook ones.
  const auto p = MeanFunction::make("power", {-1.0});
  CHECK(p.value(2.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(p.invert(-0.5) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p.codomain().str() == "(-inf, 0)");

  const auto e = MeanFunction::make("exp", {-1.0});
  CHECK(e.value(0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(e.invert(-std::exp(-2.0)) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("round trip and strict monotonicity across the catalog") {
  std::mt19937_64 rng(7001);
  for (const auto& [name, params] : oracles::catalog_params()) {
    CAPTURE(name);
    const auto f = MeanFunction::make(name, params);
    const double rt_tol = f.has_closed_inverse() ? 1e-12 : 1e-10;
    auto xs = domain_grid(f, 200, rng);
    std::sort(xs.begin(), xs.end());
    double prev = -std::numeric_limits<double>::infinity();
    for (double x : xs) {
      const double y = f.value(x);
      CHECK(f.codomain().contains(y));
      CHECK(y > prev);  // strictly increasing on the sorted grid
      prev = y;
      CHECK(f.invert(y) == doctest::Approx(x).epsilon(rt_tol));
      CHECK(f.domain().contains(f.invert(y)));
    }
  }
}

TEST_CASE("evaluation outside the domain is a validation error") {
  CHECK_THROWS_AS(MeanFunction::make("log").value(-1.0), validation_error);
  CHECK_THROWS_AS(MeanFunction::make("log").value(0.0), validation_error);
  CHECK_THROWS_AS(MeanFunction::make("power", {0.5}).value(-2.0), validation_error);
  CHECK_THROWS_AS(MeanFunction::make("cara", {1.0}).value(0.0), validation_error);
  CHECK_THROWS_AS(MeanFunction::make("identity").value(std::nan("")), validation_error);
}

TEST_CASE("inversion outside the codomain distinguishes boundary from exterior") {
  const auto sqrt_f = MeanFunction::make("power", {0.5});

  CHECK_THROWS_AS(sqrt_f.invert(-1.0), out_of_codomain);
  try {
    sqrt_f.invert(-1.0);
  } catch (const out_of_codomain& e) {
    CHECK(e.at_boundary() == false);
  }
  try {
    sqrt_f.invert(0.0);  // infimum of (0, inf), excluded by openness
  } catch (const out_of_codomain& e) {
    CHECK(e.at_boundary() == true);
  }

  const auto cara = MeanFunction::make("cara", {1.0});
  try {
    cara.invert(1.0);
  } catch (const out_of_codomain& e) {
    CHECK(e.at_boundary() == true);
  }
  try {
    cara.invert(2.0);
  } catch (const out_of_codomain& e) {
    CHECK(e.at_boundary() == false);
  }

  // out_of_codomain is a numeric failure, not a validation failure.
  CHECK_THROWS_AS(cara.invert(1.0), numeric_error);
}

TEST_CASE("normal_cdf agrees with an independent erf route") {
  const auto f = MeanFunction::make("normal_cdf");
  for (double x = -8.0; x <= 8.0; x += 0.37) {
    CHECK(f.value(x) == doctest::Approx(oracles::normal_cdf(x)).epsilon(1e-14));
  }
  // Quantile: the bisection contract gives |f(q(p)) - p| at normal-density
  // resolution of the 1e-13 bracket.
  for (double p : {1e-6, 0.01, 0.2, 0.5, 0.9, 0.999}) {
    const double q = f.invert(p);
    CHECK(f.value(q) == doctest::Approx(p).epsilon(1e-11));
  }
  CHECK(f.invert(standard_normal_cdf(1.96)) == doctest::Approx(1.96).epsilon(1e-10));
}
