#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "spectra/errors.hpp"
#include "spectra/formal_series.hpp"
#include "spectra/modular.hpp"

using spectra::FormalSeries;
using spectra::Rational;
using spectra::SeriesBuilder;
using spectra::to_grid_units;

namespace {

// Deterministic pseudo-random series for property checks.
FormalSeries random_series(std::mt19937& rng, std::int64_t grid,
                           std::int64_t order_units, bool invertible) {
  SeriesBuilder builder(grid, Rational(rng() % 5, 24) - Rational(1, 12),
                        order_units);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  if (invertible) builder.set(0, Rational(1 + rng() % 3));
  for (std::int64_t k = invertible ? 1 : 0; k < order_units; ++k) {
    if (rng() % 3 == 0) {
      const int n = num(rng);
      if (n != 0) builder.set(k, Rational(n, den(rng)));
    }
  }
  return builder.take();
}

}  // namespace

TEST_CASE("grid units conversion") {
  CHECK(to_grid_units(Rational(-1, 48), 48) == -1);
  CHECK(to_grid_units(Rational(1, 2), 48) == 24);
  CHECK(to_grid_units(Rational(3), 48) == 144);
  CHECK_THROWS_AS(to_grid_units(Rational(1, 7), 48), spectra::grid_error);
}

TEST_CASE("multiplicative identity") {
  const FormalSeries one = FormalSeries::one(48, 96);
  CHECK(one.is_one());
  SeriesBuilder builder(48, Rational(-1, 48), 96);
  builder.set(0, 1);
  builder.set(24, Rational(-2, 3));
  const FormalSeries s = builder.take();
  CHECK((s * one) == s);
  CHECK((one * s) == s);
}

TEST_CASE("multiplication adds offsets and truncates to the minimum order") {
  const FormalSeries a =
      FormalSeries::monomial(48, Rational(-1, 48), 1, 10 * 48);
  const FormalSeries b =
      FormalSeries::monomial(48, Rational(1, 24), 3, 6 * 48);
  const FormalSeries p = a * b;
  CHECK(p.offset() == Rational(1, 48));
  CHECK(p.order_units() == 6 * 48);
  CHECK(p.coefficient(std::int64_t{0}) == 3);
}

TEST_CASE("binomial powers") {
  // (1 + q)^3 = 1 + 3q + 3q^2 + q^3
  SeriesBuilder builder(1, 0, 8);
  builder.set(0, 1);
  builder.set(1, 1);
  const FormalSeries cube = builder.take().pow(3);
  CHECK(cube.coefficient(std::int64_t{0}) == 1);
  CHECK(cube.coefficient(std::int64_t{1}) == 3);
  CHECK(cube.coefficient(std::int64_t{2}) == 3);
  CHECK(cube.coefficient(std::int64_t{3}) == 1);
  CHECK(cube.coefficient(std::int64_t{4}) == 0);
}

TEST_CASE("geometric inverse") {
  // (1 - q)^{-1} = sum q^k
  SeriesBuilder builder(1, 0, 12);
  builder.set(0, 1);
  builder.set(1, -1);
  const FormalSeries inv = builder.take().inverse();
  for (std::int64_t k = 0; k < 12; ++k) {
    CHECK(inv.coefficient(k) == 1);
  }
}

TEST_CASE("series times its inverse is one") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 25; ++trial) {
    const FormalSeries s = random_series(rng, 24, 60, true);
    CHECK((s * s.inverse()).is_one());
    CHECK(s.pow(-2) == (s * s).inverse());
  }
}

TEST_CASE("addition aligns offsets") {
  const FormalSeries a = FormalSeries::monomial(48, Rational(-1, 24), 2, 96);
  const FormalSeries b = FormalSeries::monomial(48, Rational(1, 48), 5, 96);
  const FormalSeries sum = a + b;
  CHECK(sum.offset() == Rational(-1, 24));
  CHECK(sum.coefficient(Rational(0)) == 2);
  CHECK(sum.coefficient(Rational(1, 16)) == 5);  // 1/48 - (-1/24)
  // subtracting a back leaves exactly b's term (at b's absolute exponent)
  const FormalSeries diff = sum - a;
  CHECK(diff.terms().size() == 1);
  const Rational absolute_exponent =
      diff.offset() + Rational(diff.terms().begin()->first, diff.grid());
  CHECK(absolute_exponent == Rational(1, 48));
  CHECK(diff.terms().begin()->second == 5);
}

TEST_CASE("inverse requires a unit at the offset") {
  const FormalSeries q = FormalSeries::monomial(1, 0, 1, 8).shifted(0);
  SeriesBuilder builder(1, 0, 8);
  builder.set(1, 1);  // q, leading exponent above the offset
  CHECK_THROWS_AS(builder.take().inverse(), spectra::domain_error);
  CHECK(q.inverse().is_one());
}

TEST_CASE("grid mixing is rejected, refinement is exact") {
  const FormalSeries a = FormalSeries::one(2, 10);
  const FormalSeries b = FormalSeries::one(3, 10);
  CHECK_THROWS_AS(a * b, spectra::grid_error);
  CHECK_THROWS_AS(a.with_grid(3), spectra::grid_error);
  const FormalSeries fine = a.with_grid(6);
  CHECK(fine.grid() == 6);
  CHECK(fine.is_one());
  CHECK(fine.order_units() == 30);
}

TEST_CASE("json round trip and schema") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const FormalSeries s = random_series(rng, 48, 100, false);
    CHECK(FormalSeries::from_json(s.to_json()) == s);
  }

  SeriesBuilder builder(48, Rational(-1, 48), 48);
  builder.set(0, 1);
  builder.set(24, Rational(-2, 3));
  const auto j = builder.take().to_json();
  CHECK(j["grid_denominator"] == 48);
  CHECK(j["offset"] == "-1/48");
  CHECK(j["order"] == "1");
  CHECK(j["terms"][0]["exponent"] == "0");
  CHECK(j["terms"][0]["coefficient"] == "1");
  CHECK(j["terms"][1]["exponent"] == "1/2");
  CHECK(j["terms"][1]["coefficient"] == "-2/3");
}

TEST_CASE("csv uses absolute exponents") {
  SeriesBuilder builder(48, Rational(-1, 48), 96);
  builder.set(0, 1);
  const std::string csv = builder.take().to_csv();
  CHECK(csv == "exponent,coefficient\n-1/48,1\n");
}

TEST_CASE("numeric evaluation matches a direct sum") {
  const spectra::ModularParameter tau(0.25, 1.0);
  SeriesBuilder builder(48, Rational(-1, 48), 96);
  builder.set(0, 1);
  builder.set(24, Rational(-1, 2));
  const FormalSeries s = builder.take();
  const std::complex<double> direct =
      tau.q_pow(Rational(-1, 48)) - 0.5 * tau.q_pow(Rational(23, 48));
  CHECK(std::abs(s.value_at(tau) - direct) < 1e-15);
}

TEST_CASE("expansions are deterministic") {
  std::mt19937 rng_a(99), rng_b(99);
  const FormalSeries a = random_series(rng_a, 48, 200, true);
  const FormalSeries b = random_series(rng_b, 48, 200, true);
  CHECK(a == b);
  CHECK((a * a.inverse()).to_json().dump() ==
        (b * b.inverse()).to_json().dump());
}
