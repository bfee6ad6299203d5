#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "proxsmooth/oracles.hpp"

using namespace proxsmooth;
using namespace proxsmooth::oracles;

namespace {

// Both branches of each piecewise formula, evaluated without the case split.
double moreau_inner(double r, double l) { return r * r / (2 * l); }
double moreau_outer(double r, double l) { return r - l / 2; }
double goebel_outer(double r, double l) { return l * r * r / 2 + (1 - l * l) * r - l * (1 - l * l) / 2; }
double new_inner(double r, double l) { return (2 - l) * r * r / (2 * l); }
double new_outer(double r, double l) {
  return l * r * r / (2 * (2 - l)) + 2 * (1 - l) * r / (2 - l) - l * (1 - l) / (2 * (2 - l));
}

}  // namespace

TEST_SUITE("norm_moreau") {
  TEST_CASE("inner branch") { CHECK(norm_moreau({0.25, 0.5}) == doctest::Approx(0.0625).epsilon(1e-15)); }
  TEST_CASE("outer branch") { CHECK(norm_moreau({1.0, 0.5}) == doctest::Approx(0.75).epsilon(1e-15)); }
  TEST_CASE("seam") {
    CHECK(norm_moreau({0.3, 0.3}) == doctest::Approx(0.15).epsilon(1e-15));
    CHECK(moreau_outer(0.3, 0.3) == doctest::Approx(0.15).epsilon(1e-15));
  }
}

TEST_SUITE("norm_moreau_conj") {
  TEST_CASE("on the sphere") { CHECK(norm_moreau_conj({1.0, 0.5}).value() == doctest::Approx(0.25).epsilon(1e-15)); }
  TEST_CASE("outside the ball") { CHECK(norm_moreau_conj({2.0, 0.5}).is_infinite()); }
  TEST_CASE("origin") {
    for (double l : {0.1, 0.5, 0.9}) CHECK(norm_moreau_conj({0.0, l}).value() == 0.0);
  }
}

TEST_SUITE("norm_conj_moreau") {
  TEST_CASE("on the sphere") { CHECK(norm_conj_moreau({1.0, 0.5}) == 0.0); }
  TEST_CASE("outside the ball") { CHECK(norm_conj_moreau({2.0, 0.5}) == doctest::Approx(1.0).epsilon(1e-15)); }
  TEST_CASE("inside the ball") { CHECK(norm_conj_moreau({0.5, 0.3}) == 0.0); }
}

TEST_SUITE("norm_goebel") {
  TEST_CASE("outer branch") { CHECK(norm_goebel({1.0, 0.5}) == doctest::Approx(0.8125).epsilon(1e-15)); }
  TEST_CASE("inner branch") { CHECK(norm_goebel({0.25, 0.5}) == doctest::Approx(0.0625).epsilon(1e-15)); }
  TEST_CASE("seam") {
    CHECK(norm_goebel({0.5, 0.5}) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(goebel_outer(0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  }
}

TEST_SUITE("norm_new") {
  TEST_CASE("inner branch") { CHECK(norm_new({0.2, 0.5}) == doctest::Approx(0.06).epsilon(1e-15)); }
  TEST_CASE("outer branch") { CHECK(norm_new({1.0, 0.5}) == doctest::Approx(0.75).epsilon(1e-15)); }
  TEST_CASE("seam") {
    CHECK(norm_new({0.25, 0.5}) == doctest::Approx(0.09375).epsilon(1e-15));
    CHECK(new_outer(0.25, 0.5) == doctest::Approx(0.09375).epsilon(1e-15));
  }
}

TEST_SUITE("dist_ball_sq") {
  TEST_CASE("values") {
    CHECK(dist_ball_sq(2.0) == 1.0);
    CHECK(dist_ball_sq(0.7) == 0.0);
    CHECK(dist_ball_sq(1.0) == 0.0);
  }
}

TEST_SUITE("validation") {
  TEST_CASE("lambda strictly inside the unit interval") {
    for (double l : {0.0, 1.0, -0.2, 1.5, std::nan("")}) {
      CHECK_THROWS_AS(norm_moreau({1.0, l}), std::invalid_argument);
      CHECK_THROWS_AS(norm_moreau_conj({1.0, l}), std::invalid_argument);
      CHECK_THROWS_AS(norm_conj_moreau({1.0, l}), std::invalid_argument);
      CHECK_THROWS_AS(norm_goebel({1.0, l}), std::invalid_argument);
      CHECK_THROWS_AS(norm_new({1.0, l}), std::invalid_argument);
    }
  }

  TEST_CASE("radius nonnegative") {
    CHECK_THROWS_AS(norm_moreau({-0.1, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(dist_ball_sq(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(norm_goebel({INFINITY, 0.5}), std::invalid_argument);
  }
}

TEST_SUITE("properties") {
  TEST_CASE("seam continuity") {
    for (double l = 0.01; l < 1.0; l += 0.01) {
      REQUIRE(std::abs(moreau_inner(l, l) - moreau_outer(l, l)) <= 1e-12);
      REQUIRE(std::abs(moreau_inner(l, l) - goebel_outer(l, l)) <= 1e-12);
      REQUIRE(std::abs(new_inner(l / 2, l) - new_outer(l / 2, l)) <= 1e-12);
      REQUIRE(norm_moreau_conj({1.0, l}).value() == doctest::Approx(l / 2));
      REQUIRE(norm_conj_moreau({1.0, l}) == 0.0);
      REQUIRE(dist_ball_sq(1.0) == 0.0);
    }
  }

  TEST_CASE("first branch at the breakpoint") {
    // the branches agree there; the inner formula is the one evaluated
    CHECK(norm_moreau({0.4, 0.4}) == moreau_inner(0.4, 0.4));
    CHECK(norm_new({0.2, 0.4}) == new_inner(0.2, 0.4));
  }

  TEST_CASE("conjugate of the envelope differs from the envelope of the conjugate") {
    for (double l = 0.05; l < 1.0; l += 0.05) {
      const double gap = norm_moreau_conj({1.0, l}).value() - norm_conj_moreau({1.0, l});
      REQUIRE(gap == doctest::Approx(l / 2).epsilon(1e-14));
    }
  }

  TEST_CASE("goebel assembled from the envelope") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ur(0.0, 10.0), ul(0.001, 0.999);
    for (int k = 0; k < 10000; ++k) {
      const double r = ur(rng), l = ul(rng);
      const double assembled = (1 - l * l) * norm_moreau({r, l}) + l * r * r / 2;
      REQUIRE(std::abs(norm_goebel({r, l}) - assembled) <= 1e-12 * (1 + std::abs(assembled)));
    }
  }

  TEST_CASE("new operator assembled from the envelope") {
    std::mt19937_64 rng(2025);
    std::uniform_real_distribution<double> ur(0.0, 10.0), ul(0.001, 0.999);
    for (int k = 0; k < 10000; ++k) {
      const double r = ur(rng), l = ul(rng);
      const double mu = l / (2 - l);
      const double assembled = (1 - l) * norm_moreau({2 * r / (2 - l), mu}) + mu * r * r / 2;
      REQUIRE(std::abs(norm_new({r, l}) - assembled) <= 1e-12 * (1 + std::abs(assembled)));
    }
  }

  TEST_CASE("radial profile matches a two dimensional envelope") {
    // min over y in R^2 of |y| + |x - y|^2 / (2 lambda), by dense grid search
    const double l = 0.5;
    const int m = 801;
    const double lo = -2.0, step = 4.0 / (m - 1);
    for (const auto& x : {std::pair{0.2, 0.1}, std::pair{0.8, -0.6}, std::pair{-1.2, 0.9}}) {
      double best = 1e300;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          const double y1 = lo + i * step, y2 = lo + j * step;
          const double d1 = x.first - y1, d2 = x.second - y2;
          best = std::min(best, std::hypot(y1, y2) + (d1 * d1 + d2 * d2) / (2 * l));
        }
      CHECK(best == doctest::Approx(norm_moreau({std::hypot(x.first, x.second), l})).epsilon(1e-4));
    }
  }
}
