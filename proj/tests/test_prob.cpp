#include <doctest.h>

#include "fmean/errors.hpp"
#include "fmean/prob_space.hpp"

using namespace fmean;

TEST_CASE("probability space construction") {
  CHECK_NOTHROW(FiniteProbSpace({0.25, 0.75}));
  CHECK_NOTHROW(FiniteProbSpace({0.0, 1.0}));  // zero-probability outcomes are legal
  CHECK_THROWS_AS(FiniteProbSpace({}), validation_error);
  CHECK_THROWS_AS(FiniteProbSpace({0.5, 0.4}), validation_error);
  CHECK_THROWS_AS(FiniteProbSpace({-0.1, 1.1}), validation_error);
  CHECK_THROWS_AS(FiniteProbSpace({0.5, std::nan("")}), validation_error);

  const auto u = FiniteProbSpace::uniform(4);
  CHECK(u.n_outcomes() == 4);
  CHECK(u.prob(2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(u.expectation(std::vector<double>{1.0, 2.0, 3.0, 4.0}) ==
        doctest::Approx(2.5).epsilon(1e-15));
  CHECK_THROWS_AS(u.expectation(std::vector<double>{1.0}), validation_error);
}

TEST_CASE("partition construction") {
  CHECK_NOTHROW(Partition(4, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(Partition(4, {{0, 1}, {2}}), validation_error);        // misses outcome 3
  CHECK_THROWS_AS(Partition(4, {{0, 1}, {1, 2, 3}}), validation_error);  // overlap
  CHECK_THROWS_AS(Partition(4, {{0, 1}, {}, {2, 3}}), validation_error);
  CHECK_THROWS_AS(Partition(4, {{0, 1}, {2, 4}}), validation_error);  // out of range
  CHECK_THROWS_AS(Partition(0, {}), validation_error);

  const Partition g(4, {{0, 1}, {2, 3}});
  CHECK(g.n_blocks() == 2);
  CHECK(g.block_of(0) == g.block_of(1));
  CHECK(g.block_of(1) != g.block_of(2));

  CHECK(Partition::trivial(3).n_blocks() == 1);
  CHECK(Partition::singletons(3).n_blocks() == 3);
}

TEST_CASE("refinement order") {
  const Partition trivial = Partition::trivial(4);
  const Partition sing = Partition::singletons(4);
  const Partition g(4, {{0, 1}, {2, 3}});
  const Partition h(4, {{0}, {1}, {2, 3}});

  CHECK(refine_check(trivial, g));
  CHECK(refine_check(g, sing));
  CHECK(refine_check(g, g));
  CHECK(refine_check(g, h));
  CHECK_FALSE(refine_check(h, g));
  CHECK_FALSE(refine_check(sing, trivial));

  const Partition other(3, {{0}, {1, 2}});
  CHECK_THROWS_AS(refine_check(g, other), validation_error);
}

TEST_CASE("random variables carry a domain tag") {
  CHECK_NOTHROW(RandomVariable({-1.0, 2.0}, Interval::real_line()));
  CHECK_THROWS_AS(RandomVariable({-1.0, 2.0}, Interval::positive_half_line()),
                  validation_error);
  CHECK_THROWS_AS(RandomVariable({0.0, 2.0}, Interval::positive_half_line()),
                  validation_error);  // 0 excluded by the open endpoint
  CHECK_THROWS_AS(RandomVariable({}, Interval::real_line()), validation_error);

  const RandomVariable X({1.0, 4.0}, Interval::positive_half_line());
  CHECK(X.size() == 2);
  CHECK(X[1] == 4.0);
}

TEST_CASE("measurability is constancy on blocks") {
  const Partition g(4, {{0, 1}, {2, 3}});
  const RandomVariable flat({2.0, 2.0, 7.0, 7.0}, Interval::real_line());
  const RandomVariable jag({2.0, 3.0, 7.0, 7.0}, Interval::real_line());
  CHECK(is_measurable(flat, g));
  CHECK_FALSE(is_measurable(jag, g));
  CHECK(is_measurable(jag, Partition::singletons(4)));
  CHECK_FALSE(is_measurable(jag, Partition::trivial(4)));

  const RandomVariable short_x({1.0, 2.0}, Interval::real_line());
  CHECK_THROWS_AS(is_measurable(short_x, g), validation_error);
}
