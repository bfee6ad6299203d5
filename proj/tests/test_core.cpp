#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "proxsmooth/ext_value.hpp"
#include "proxsmooth/function_spec.hpp"
#include "proxsmooth/grid.hpp"
#include "proxsmooth/grid_function.hpp"
#include "proxsmooth/io.hpp"
#include "proxsmooth/smoothing_param.hpp"
#include "support/random_convex.hpp"

using namespace proxsmooth;

namespace {
const double inf = std::numeric_limits<double>::infinity();
}

TEST_SUITE("ext_value") {
  TEST_CASE("rejects nan and negative infinity") {
    CHECK_THROWS_AS(ExtValue(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(ExtValue(-inf), std::domain_error);
    CHECK(ExtValue(inf).is_infinite());
    CHECK(ExtValue(2.5).value() == 2.5);
  }

  TEST_CASE("arithmetic absorbs infinity") {
    const ExtValue big = ExtValue::infinity();
    CHECK((big + ExtValue(1.0)).is_infinite());
    CHECK((ExtValue(1.0) + 2.0).value() == 3.0);
    CHECK((0.5 * big).is_infinite());
    CHECK_THROWS_AS(0.0 * big, std::domain_error);
    CHECK_THROWS_AS(-1.0 * ExtValue(1.0), std::domain_error);
    CHECK(ExtValue(1.0) < big);
  }
}

TEST_SUITE("grid") {
  TEST_CASE("three point grid") {
    const Grid1D g = make_grid(-1, 1, 3);
    CHECK(g.h() == 1.0);
    CHECK(g.points() == std::vector<double>{-1.0, 0.0, 1.0});
  }

  TEST_CASE("reference grid spacing") {
    const Grid1D g = make_grid(-4, 4, 4097);
    CHECK(g.h() == 0.001953125);
    CHECK(g.point(4096) == 4.0);
    CHECK(g.point(2048) == 0.0);
  }

  TEST_CASE("invalid grids") {
    CHECK_THROWS_AS(make_grid(1, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(2, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0, 1, -7), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0, inf, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(std::nan(""), 1, 5), std::invalid_argument);
  }
}

TEST_SUITE("grid_function") {
  TEST_CASE("properness and contiguity") {
    const Grid1D g(-1, 1, 5);
    CHECK_THROWS_AS(GridFunction::from_doubles(g, std::vector<double>(5, inf)), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction::from_doubles(g, std::vector<double>{0, inf, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction::from_doubles(g, std::vector<double>{0, 0}), std::invalid_argument);
    const GridFunction f = GridFunction::from_doubles(g, std::vector<double>{inf, 1, 0, 1, inf});
    CHECK(f.finite_range() == IndexRange{1, 3});
  }

  TEST_CASE("convexity assertion") {
    const Grid1D g(-1, 1, 5);
    CHECK_THROWS_AS(GridFunction::from_doubles(g, std::vector<double>{0, 1, 0, 1, 0}, Convexity::Assert),
                    std::invalid_argument);
    CHECK(GridFunction::from_doubles(g, std::vector<double>{4, 1, 0, 1, 4}, Convexity::Assert).convex());
  }

  TEST_CASE("convexity tolerance is scale relative") {
    const Grid1D g(0, 1, 3);
    const std::vector<double> v{1e6, 1e6 - 1e-4, 1e6};  // dent of 2e-4, slack is about 1e-3
    CHECK(GridFunction::from_doubles(g, v, Convexity::Assert).convex());
    const std::vector<double> w{1.0, 1.0 + 1e-6, 1.0};
    CHECK_THROWS(GridFunction::from_doubles(g, w, Convexity::Assert));
  }
}

TEST_SUITE("sample") {
  TEST_CASE("norm on three points") {
    const GridFunction f = sample(FunctionSpec::norm(), make_grid(-1, 1, 3));
    CHECK(f.to_doubles() == std::vector<double>{1, 0, 1});
    CHECK(f.convex());
  }

  TEST_CASE("indicator of the unit ball") {
    const GridFunction f = sample(FunctionSpec::indicator_ball(1), make_grid(-2, 2, 5));
    CHECK(f.to_doubles() == std::vector<double>{inf, 0, 0, 0, inf});
  }

  TEST_CASE("half squared norm") {
    const GridFunction f = sample(FunctionSpec::half_squared_norm(), make_grid(-2, 2, 3));
    CHECK(f.to_doubles() == std::vector<double>{2, 0, 2});
  }

  TEST_CASE("domain missing the grid") {
    CHECK_THROWS_AS(sample(FunctionSpec::indicator_ball(0.1), make_grid(1, 2, 5)), std::invalid_argument);
  }

  TEST_CASE("matches direct evaluation to one ulp") {
    const Grid1D g(-4, 4, 4097);
    for (const FunctionSpec& s : {FunctionSpec::norm(), FunctionSpec::half_squared_norm(),
                                  FunctionSpec::affine(0.3, -1.25), FunctionSpec::scaled(FunctionSpec::norm(), 2.5)}) {
      const GridFunction f = sample(s, g);
      for (std::size_t i = 0; i < g.n(); ++i) {
        const double x = g.point(i);
        const double want = s(x).value();
        REQUIRE(f[i].value() >= std::nextafter(want, -inf));
        REQUIRE(f[i].value() <= std::nextafter(want, inf));
      }
    }
    const GridFunction q = sample(FunctionSpec::half_squared_norm(), g);
    for (std::size_t i = 0; i < g.n(); ++i) REQUIRE(q[i].value() == 0.5 * g.point(i) * g.point(i));
  }
}

TEST_SUITE("eval_interp") {
  TEST_CASE("linear data interpolates exactly") {
    const GridFunction f = sample(FunctionSpec::norm(), make_grid(-1, 1, 3));
    CHECK(eval_interp(f, 0.5).value() == doctest::Approx(0.5).epsilon(1e-15));
  }

  TEST_CASE("infinite bracket dominates") {
    const GridFunction f = sample(FunctionSpec::indicator_ball(1), make_grid(-2, 2, 5));
    CHECK(eval_interp(f, 1.5).is_infinite());
    CHECK(eval_interp(f, 1.0).value() == 0.0);
  }

  TEST_CASE("chord of a parabola") {
    const GridFunction f = sample(FunctionSpec::half_squared_norm(), make_grid(-2, 2, 3));
    CHECK(eval_interp(f, 1.0).value() == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("no extrapolation") {
    const GridFunction f = sample(FunctionSpec::norm(), make_grid(-1, 1, 3));
    CHECK_THROWS_AS(eval_interp(f, 1.0000001), std::out_of_range);
    CHECK_THROWS_AS(eval_interp(f, -2.0), std::out_of_range);
  }

  TEST_CASE("exact at grid points") {
    const Grid1D g(-4, 4, 4097);
    std::mt19937_64 rng(11);
    const GridFunction f = testing::random_convex(g, rng);
    for (std::size_t i = 0; i < g.n(); i += 7) REQUIRE(eval_interp(f, g.point(i)) == f[i]);
  }

  TEST_CASE("interpolant of q stays within h^2/8 above q") {
    const Grid1D g(-4, 4, 257);
    const GridFunction f = sample(FunctionSpec::half_squared_norm(), g);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-4, 4);
    const double bound = g.h() * g.h() / 8.0 * (1.0 + 1e-12);
    for (int k = 0; k < 2000; ++k) {
      const double x = u(rng);
      const double err = eval_interp(f, x).value() - 0.5 * x * x;
      REQUIRE(err >= -1e-14);
      REQUIRE(err <= bound + 1e-14);
    }
  }
}

TEST_SUITE("resample") {
  TEST_CASE("identity target") {
    const Grid1D g(-2, 2, 33);
    std::mt19937_64 rng(3);
    const GridFunction f = testing::random_convex(g, rng);
    CHECK(resample(f, g).to_doubles() == f.to_doubles());
  }

  TEST_CASE("refinement of the norm") {
    const GridFunction f = sample(FunctionSpec::norm(), make_grid(-1, 1, 3));
    const GridFunction r = resample(f, make_grid(-1, 1, 5));
    const std::vector<double> want{1, 0.5, 0, 0.5, 1};
    for (std::size_t i = 0; i < 5; ++i) CHECK(r[i].value() == doctest::Approx(want[i]).epsilon(1e-15));
  }

  TEST_CASE("coarsening keeps convexity") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const GridFunction f = testing::random_convex(Grid1D(-3, 3, 1001), rng);
      const GridFunction c = resample(f, Grid1D(-2.5, 2.9, 97));
      REQUIRE(is_discretely_convex(c.values(), c.finite_range()));
    }
  }

  TEST_CASE("target outside the source window") {
    const GridFunction f = sample(FunctionSpec::norm(), make_grid(-1, 1, 3));
    CHECK_THROWS(resample(f, make_grid(-1, 2, 4)));
  }
}

TEST_SUITE("function_spec") {
  TEST_CASE("parse catalog") {
    CHECK(parse_function_spec("norm").to_string() == "norm");
    CHECK(parse_function_spec("q").to_string() == "q");
    CHECK(parse_function_spec("ind_ball:r=2")(1.5).value() == 0.0);
    CHECK(parse_function_spec("ind_ball:r=2")(2.5).is_infinite());
    CHECK(parse_function_spec("affine:m=2,c=-1")(3.0).value() == 5.0);
    CHECK(parse_function_spec("scaled:3:norm")(-2.0).value() == 6.0);
    CHECK(parse_function_spec("scaled:2:scaled:0.5:q")(2.0).value() == 2.0);
  }

  TEST_CASE("parse errors carry a position") {
    try {
      parse_function_spec("ind_ball:r=abc");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 11);
    }
    CHECK_THROWS_AS(parse_function_spec("sin"), ParseError);
    CHECK_THROWS_AS(parse_function_spec("ind_ball:r=-1"), ParseError);
    CHECK_THROWS_AS(parse_function_spec("scaled:0:norm"), ParseError);
    CHECK_THROWS_AS(parse_function_spec("norm extra"), ParseError);
  }

  TEST_CASE("invalid catalog entries") {
    CHECK_THROWS(FunctionSpec::indicator_ball(0.0));
    CHECK_THROWS(FunctionSpec::scaled(FunctionSpec::norm(), -1.0));
    CHECK_THROWS(FunctionSpec::piecewise_linear({0, 1, 2}, {ExtValue(0), ExtValue(1), ExtValue(0)}));
    CHECK_THROWS(FunctionSpec::piecewise_linear({0, 2, 1}, {ExtValue(0), ExtValue(0), ExtValue(0)}));
  }

  TEST_CASE("closed form conjugates") {
    CHECK(conjugate_spec(FunctionSpec::norm())->to_string() == FunctionSpec::indicator_ball(1).to_string());
    CHECK(conjugate_spec(FunctionSpec::half_squared_norm())->to_string() == "q");
    CHECK(conjugate_spec(FunctionSpec::indicator_ball(1))->to_string() == "norm");
    const auto c = conjugate_spec(FunctionSpec::indicator_ball(2));
    REQUIRE(c);
    CHECK((*c)(-1.5).value() == 3.0);
    CHECK(!conjugate_spec(FunctionSpec::affine(1, 0)));
  }

  TEST_CASE("pwl csv round trip is bit exact") {
    const Grid1D g(-2, 2, 41);
    std::mt19937_64 rng(23);
    const GridFunction f = testing::random_convex(g, rng);
    const auto path = std::filesystem::temp_directory_path() / "proxsmooth_core_roundtrip.csv";
    write_csv(f, path.string());
    const FunctionSpec s = parse_function_spec("pwl:" + path.string());
    const GridFunction back = sample(s, g);
    CHECK(back.to_doubles() == f.to_doubles());
    std::filesystem::remove(path);
  }
}

TEST_SUITE("io") {
  TEST_CASE("values round trip") {
    for (double v : {0.1, -1e-300, 1.0 / 3.0, 12345.678901234567, inf}) CHECK(parse_real(format_value(v)) == v);
    CHECK_THROWS(parse_real("nan"));
    CHECK_THROWS(parse_real("1.0x"));
  }

  TEST_CASE("csv layout") {
    std::ostringstream out;
    write_csv(sample(FunctionSpec::indicator_ball(1), make_grid(-2, 2, 5)), out);
    CHECK(out.str() == "x,value\n-2,inf\n-1,0\n0,0\n1,0\n2,inf\n");
  }

  TEST_CASE("malformed csv reports the line") {
    std::istringstream in("x,value\n0,1\n0.5,oops\n");
    try {
      read_csv_rows(in);
      FAIL("expected failure");
    } catch (const std::exception& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    std::istringstream nohead("0,1\n1,2\n");
    CHECK_THROWS(read_csv_rows(nohead));
  }

  TEST_CASE("non uniform x column is rejected") {
    std::istringstream in("x,value\n0,1\n1,2\n3,4\n");
    CHECK_THROWS(read_grid_function_csv(in));
  }
}

TEST_SUITE("smoothing_param") {
  TEST_CASE("open unit interval") {
    CHECK_THROWS(SmoothingParam(0.0));
    CHECK_THROWS(SmoothingParam(1.0));
    CHECK_THROWS(SmoothingParam(std::nan("")));
    CHECK(SmoothingParam(0.5).mu() == doctest::Approx(1.0 / 3.0));
    CHECK(SmoothingParam(0.9).mu() == doctest::Approx(9.0 / 11.0));
  }

  TEST_CASE("mu stays in the open unit interval") {
    for (double l = 0.01; l < 1.0; l += 0.01) {
      const double mu = SmoothingParam(l).mu();
      REQUIRE(mu > 0.0);
      REQUIRE(mu < 1.0);
    }
  }
}
