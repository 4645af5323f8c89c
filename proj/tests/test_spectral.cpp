#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "spectra/errors.hpp"
#include "spectra/spectral.hpp"

using spectra::Box;
using spectra::Exec;
using spectra::H3Point;
using spectra::Moebius;
using spectra::ModularParameter;
using spectra::RatioVariant;
using spectra::TruncationPolicy;
using spectra::ZeroIndex;

namespace {
const ModularParameter kTau(0.25, 1.0);
const ModularParameter kTau2(0.3, 1.1);
const TruncationPolicy kPolicy;
}  // namespace

TEST_CASE("product vanishes exactly at s = 0") {
  const auto z = spectra::z_gamma_product({0.0, 0.0}, kTau, kPolicy);
  CHECK(z.value == std::complex<double>{0.0, 0.0});
}

TEST_CASE("product tends to 1 as Im tau grows") {
  const ModularParameter far(0.0, 50.0);
  const auto z = spectra::z_gamma_product({2.0, 0.0}, far, kPolicy);
  CHECK(std::abs(z.value - 1.0) < 1e-12);
}

TEST_CASE("the two representations agree") {
  for (const auto& tau : {kTau, kTau2, ModularParameter(0.0, 1.0)}) {
    for (double re = 0.5; re <= 5.0; re += 1.125) {
      for (double im = -2.0; im <= 2.0; im += 1.0) {
        const spectra::SpectralPoint s{re, im};
        const auto product = spectra::z_gamma_product(s, tau, kPolicy);
        const auto log_series = spectra::z_gamma_logseries(s, tau, kPolicy);
        CAPTURE(re);
        CAPTURE(im);
        CHECK(std::abs(product.value - std::exp(log_series.value)) < 1e-10);
      }
    }
  }
}

TEST_CASE("log series decays for large Re s") {
  const auto log_z = spectra::z_gamma_logseries({40.0, 0.0}, kTau, kPolicy);
  CHECK(std::abs(log_z.value) < 1e-100);
}

TEST_CASE("log series rejects Re s <= 0") {
  CHECK_THROWS_AS(spectra::z_gamma_logseries({0.0, 1.0}, kTau, kPolicy),
                  spectra::domain_error);
  CHECK_THROWS_AS(spectra::z_gamma_logseries({-1.0, 0.0}, kTau, kPolicy),
                  spectra::domain_error);
}

TEST_CASE("conjugation symmetry") {
  const std::complex<double> s{1.7, 0.9};
  const ModularParameter mirrored(-kTau2.re(), kTau2.im());  // beta -> -beta

  const auto log_plain = spectra::z_gamma_logseries({s}, kTau2, kPolicy);
  const auto log_mirror =
      spectra::z_gamma_logseries({std::conj(s)}, mirrored, kPolicy);
  CHECK(std::abs(log_mirror.value - std::conj(log_plain.value)) < 1e-14);

  const auto prod_plain = spectra::z_gamma_product({s}, kTau2, kPolicy);
  const auto prod_mirror =
      spectra::z_gamma_product({std::conj(s)}, mirrored, kPolicy);
  CHECK(std::abs(prod_mirror.value - std::conj(prod_plain.value)) < 1e-14);
}

TEST_CASE("serial and parallel kernels are bit-identical") {
  for (const std::complex<double> s :
       {std::complex<double>{2.0, 0.0}, {0.7, -1.3}, {-2.5, 4.0}}) {
    const auto serial =
        spectra::z_gamma_product({s}, kTau2, kPolicy, Exec::serial);
    const auto parallel =
        spectra::z_gamma_product({s}, kTau2, kPolicy, Exec::parallel);
    CHECK(serial.value.real() == parallel.value.real());
    CHECK(serial.value.imag() == parallel.value.imag());
  }
  const auto ls = spectra::z_gamma_logseries({1.2, 0.4}, kTau2, kPolicy,
                                             Exec::serial);
  const auto lp = spectra::z_gamma_logseries({1.2, 0.4}, kTau2, kPolicy,
                                             Exec::parallel);
  CHECK(ls.value.real() == lp.value.real());
  CHECK(ls.value.imag() == lp.value.imag());
}

TEST_CASE("doubling the cutoff moves the value less than the reported tail") {
  for (const std::complex<double> s :
       {std::complex<double>{0.5, 0.0}, {1.5, 1.0}, {-1.3, 0.7}}) {
    const int k = spectra::choose_lattice_cutoff(kTau2.alpha(), s.real(),
                                                 kPolicy);
    const auto at_k = spectra::z_gamma_product(
        {s}, kTau2, TruncationPolicy::fixed_cutoff(k));
    const auto at_2k = spectra::z_gamma_product(
        {s}, kTau2, TruncationPolicy::fixed_cutoff(2 * k));
    CHECK(std::abs(at_k.value - at_2k.value) <= at_k.tail + 1e-15);
  }
}

TEST_CASE("budget error when the cutoff cap is too small") {
  TruncationPolicy strict;
  strict.tolerance = 1e-16;
  strict.max_lattice_cutoff = 2;
  const ModularParameter slow(0.0, 0.05);  // alpha ~ 0.31, needs K >> 2
  CHECK_THROWS_AS(spectra::z_gamma_product({1.0, 0.0}, slow, strict),
                  spectra::budget_error);
}

TEST_CASE("ruelle function") {
  SUBCASE("vanishes at s = 0") {
    const auto r = spectra::ruelle({0.0, 0.0}, kTau2, kPolicy);
    CHECK(std::abs(r.value) < 1e-12);
  }
  SUBCASE("matches its three-factor assembly") {
    const spectra::SpectralPoint s{1.0, 0.0};
    const auto r = spectra::ruelle(s, kTau2, kPolicy);
    const auto z0 = spectra::z_gamma_product(s, kTau2, kPolicy);
    const auto z2 = spectra::z_gamma_product({3.0, 0.0}, kTau2, kPolicy);
    const auto z1 = spectra::z_gamma_product({2.0, 0.0}, kTau2, kPolicy);
    CHECK(std::abs(r.value - z0.value * z2.value / z1.value) < 1e-15);
  }
}

TEST_CASE("ruelle pole detection") {
  // Z(1 + s) vanishes at s = -1 (the base zero of the lattice)
  CHECK_THROWS_AS(spectra::ruelle({-1.0, 0.0}, kTau2, kPolicy),
                  spectra::pole_error);
}

TEST_CASE("zero index validation") {
  CHECK_THROWS_AS(spectra::verify_zero({0, -1, 0}, kTau2, kPolicy),
                  spectra::domain_error);
}

TEST_CASE("a deliberately small fixed cutoff reports an honest tail") {
  const ModularParameter slow(0.0, 0.08);  // alpha ~ 0.5
  const spectra::SpectralPoint s{1.0, 0.0};
  const auto rough = spectra::z_gamma_product(
      s, slow, TruncationPolicy::fixed_cutoff(6));
  TruncationPolicy fine;
  fine.tolerance = 1e-14;
  const auto accurate = spectra::z_gamma_product(s, slow, fine);
  CHECK(std::abs(rough.value - accurate.value) <= rough.tail);
  CHECK(rough.tail > 1e-4);  // visibly imprecise, and says so
}

TEST_CASE("ratio variants reproduce the q-products") {
  const TruncationPolicy policy;
  spectra::QProductSpec euler;  // prod (1 - q^n): xi = 1
  const auto minus = spectra::numeric_qproduct(euler, kTau, policy);
  const auto plain =
      spectra::z_ratio_xi(1.0, kTau, RatioVariant::plain, policy);
  CHECK(std::abs(minus.value - plain.value) < 1e-9);

  spectra::QProductSpec plus_spec;
  plus_spec.sign = +1;
  const auto plus = spectra::numeric_qproduct(plus_spec, kTau, policy);
  for (const int eta_sign : {+1, -1}) {
    const auto eta = spectra::z_ratio_xi(1.0, kTau, RatioVariant::eta_shifted,
                                         policy, eta_sign);
    CAPTURE(eta_sign);
    CHECK(std::abs(plus.value - eta.value) < 1e-9);
  }

  // purely imaginary tau: t = 0, the plain ratio degenerates to Z(s)/Z(s+1)
  const ModularParameter imag_tau(0.0, 1.0);
  const auto ratio =
      spectra::z_ratio({1.0, 0.0}, imag_tau, RatioVariant::plain, policy);
  const auto z_raw = spectra::z_gamma_product({1.0, 0.0}, imag_tau, policy);
  const auto z_shift = spectra::z_gamma_product({2.0, 0.0}, imag_tau, policy);
  CHECK(std::abs(ratio.value - z_raw.value / z_shift.value) < 1e-15);
}

TEST_CASE("predicted zeros") {
  SUBCASE("base point and first lattice neighbours") {
    CHECK(ZeroIndex{0, 0, 0}.location(kTau2) ==
          std::complex<double>{0.0, 0.0});
    const auto z10 = ZeroIndex{0, 1, 0}.location(kTau2);
    CHECK(z10.real() == -1.0);
    CHECK(z10.imag() ==
          doctest::Approx(kTau2.beta() / kTau2.alpha()).epsilon(1e-14));
  }

  SUBCASE("box enumeration and ordering") {
    const auto zeros =
        spectra::zeros_predicted(kTau2, Box{-2.1, 0.1, -1.0, 1.0});
    REQUIRE(!zeros.empty());
    // ordered by (k1+k2, k1-k2, n)
    for (std::size_t i = 1; i < zeros.size(); ++i) {
      const auto& a = zeros[i - 1].first;
      const auto& b = zeros[i].first;
      const auto key = [](const ZeroIndex& z) {
        return std::tuple(z.k1 + z.k2, z.k1 - z.k2, z.n);
      };
      CHECK(key(a) < key(b));
    }
    for (const auto& [index, location] : zeros) {
      CHECK(location.real() >= -2.1);
      CHECK(location.real() <= 0.1);
      CHECK(location.imag() >= -1.0);
      CHECK(location.imag() <= 1.0);
    }
  }

  SUBCASE("a box that misses the lattice is empty") {
    CHECK(spectra::zeros_predicted(kTau2, Box{-0.9, -0.1, 0.0, 0.1}).empty());
  }
}

TEST_CASE("zero residuals") {
  SUBCASE("base zero is exact") {
    const auto r = spectra::verify_zero({0, 0, 0}, kTau2, kPolicy);
    CHECK(std::abs(r.value) == 0.0);
  }
  SUBCASE("neighbouring zeros stay under budget") {
    for (const ZeroIndex index : {ZeroIndex{0, 1, 0}, ZeroIndex{1, 0, 0},
                                  ZeroIndex{-3, 2, 1}, ZeroIndex{2, 0, 3}}) {
      const auto r = spectra::verify_zero(index, kTau2, kPolicy);
      CAPTURE(index.n);
      CHECK(std::abs(r.value) < 1e-10);
    }
  }
  SUBCASE("cutoff error outside the lattice truncation") {
    CHECK_THROWS_AS(spectra::verify_zero({0, 3, 2}, kTau2,
                                         TruncationPolicy::fixed_cutoff(3)),
                    spectra::cutoff_error);
  }
}

TEST_CASE("growth bound fit") {
  SUBCASE("positive real axis values stay bounded by 1") {
    std::vector<std::complex<double>> samples;
    for (int i = 0; i < 20; ++i) samples.emplace_back(1.0 + 0.35 * i, 0.0);
    const auto fit = spectra::growth_check(kTau2, samples, kPolicy);
    CHECK(fit.pass);
    CHECK(fit.c2 >= 0.0);
    CHECK(fit.max_log_abs < 1e-3);  // |Z| <= 1 + tolerance on the axis
  }
  SUBCASE("full grid admits finite constants with no violations") {
    const auto samples = spectra::growth_sample_grid(kTau2, 100, 0.1);
    REQUIRE(samples.size() == 100);
    const auto zeros =
        spectra::zeros_predicted(kTau2, Box{-6.5, 6.5, -6.5, 6.5});
    for (const auto& s : samples) {
      for (const auto& [index, zeta] : zeros) {
        CHECK(std::abs(s - zeta) >= 0.1);
      }
    }
    const auto fit = spectra::growth_check(kTau2, samples, kPolicy);
    CHECK(fit.pass);
    CHECK(std::isfinite(fit.log_c1));
    CHECK(std::isfinite(fit.c2));
    CHECK(fit.violations == 0);
  }
  SUBCASE("empty sample set passes vacuously") {
    const auto fit = spectra::growth_check(kTau2, {}, kPolicy);
    CHECK(fit.pass);
  }
}

TEST_CASE("hyperbolic action") {
  SUBCASE("identity fixes every point") {
    const Moebius id{1.0, 0.0, 0.0, 1.0};
    const H3Point p{0.3, -0.7, 2.1};
    const H3Point q = spectra::hyperbolic_action(id, p);
    CHECK(q.x == doctest::Approx(p.x));
    CHECK(q.y == doctest::Approx(p.y));
    CHECK(q.z == doctest::Approx(p.z));
  }

  SUBCASE("the loxodromic generator dilates the axis point") {
    const Moebius g = spectra::loxodromic_generator(kTau2);
    const H3Point moved = spectra::hyperbolic_action(g, {0.0, 0.0, 1.0});
    CHECK(std::abs(moved.x) < 1e-14);
    CHECK(std::abs(moved.y) < 1e-14);
    CHECK(moved.z == doctest::Approx(std::exp(kTau2.alpha())).epsilon(1e-12));
  }

  SUBCASE("group action composition") {
    std::mt19937 rng(112358);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
      // random det-1 matrices: a, b, c free; d = (1 + b c) / a
      std::complex<double> a{coef(rng) + 1.5, coef(rng)};
      std::complex<double> b{coef(rng), coef(rng)};
      std::complex<double> c{coef(rng), coef(rng)};
      const Moebius g{a, b, c, (1.0 + b * c) / a};
      std::complex<double> a2{coef(rng) + 1.5, coef(rng)};
      std::complex<double> b2{coef(rng), coef(rng)};
      std::complex<double> c2{coef(rng), coef(rng)};
      const Moebius h{a2, b2, c2, (1.0 + b2 * c2) / a2};
      const Moebius gh{g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                       g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
      const H3Point p{coef(rng), coef(rng), 0.5 + std::abs(coef(rng))};

      const H3Point lhs = spectra::hyperbolic_action(gh, p);
      const H3Point rhs =
          spectra::hyperbolic_action(g, spectra::hyperbolic_action(h, p));
      CHECK(std::abs(lhs.x - rhs.x) < 1e-12);
      CHECK(std::abs(lhs.y - rhs.y) < 1e-12);
      CHECK(std::abs(lhs.z - rhs.z) < 1e-12);
      CHECK(lhs.z > 0.0);
    }
  }

  SUBCASE("determinant and half-space preconditions") {
    CHECK_THROWS_AS(
        spectra::hyperbolic_action({2.0, 0.0, 0.0, 1.0}, {0, 0, 1}),
        spectra::domain_error);
    CHECK_THROWS_AS(
        spectra::hyperbolic_action({1.0, 0.0, 0.0, 1.0}, {0, 0, -1.0}),
        spectra::domain_error);
  }
}
