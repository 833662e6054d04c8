#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dzeta/errors.hpp"
#include "dzeta/series.hpp"

using dzeta::Complex;
namespace series = dzeta::series;

// mpmath values at 25 digits, see tests/oracle/reference_values.py.
namespace ref {
constexpr double zeta_prime_2 = -0.9375482543158437537;
constexpr double zeta_second_2 = 1.9892802342989010234;
const Complex hurwitz_deriv{-6.483355515718929375, -3.283713796554614581};   // d/du zeta(u, 0.3) at 1.5+3i
const Complex hurwitz_half{-0.3329992989913172466, -0.1955350477948770740};  // zeta(0.5+10i, 2.5)
const Complex prefix_199{0.6078462541294588403, -0.4007378528671521161};     // H_199(1.3+2i)
constexpr double harmonic_199 = 5.873030948121444476;
const Complex shifted_tail{1.519805976702960140e-6, -1.361681604978487627e-6};
}  // namespace ref

TEST_CASE("bernoulli numbers") {
  CHECK(series::bernoulli(1) == doctest::Approx(1.0 / 6.0));
  CHECK(series::bernoulli(2) == doctest::Approx(-1.0 / 30.0));
  CHECK(series::bernoulli(6) == doctest::Approx(-691.0 / 2730.0));
  CHECK(series::bernoulli_ratio(1) == doctest::Approx(1.0 / 12.0));
  CHECK(series::bernoulli_ratio(2) == doctest::Approx(-1.0 / 720.0));
}

TEST_CASE("compensated sum keeps the small terms") {
  series::CompensatedSum s;
  s += Complex(1e16, -1e16);
  for (int i = 0; i < 1000; ++i) s += Complex(1.0, 1.0);
  s += Complex(-1e16, 1e16);
  CHECK(s.value() == Complex(1000.0, 1000.0));
}

TEST_CASE("complex expm1 near zero") {
  const Complex z(1e-10, -2e-10);
  const Complex e = series::expm1(z);
  CHECK(std::abs(e - (z + 0.5 * z * z)) < 1e-28);
  const Complex big(0.7, 2.0);
  CHECK(std::abs(series::expm1(big) - (std::exp(big) - 1.0)) < 1e-15);
}

TEST_CASE("hurwitz sums and log moments") {
  const double pi = std::numbers::pi;
  auto z2 = series::hurwitz_zeta(2.0, 1.0);
  CHECK(std::abs(z2.value - pi * pi / 6.0) < 1e-15);
  CHECK(z2.bound < 1e-15);
  CHECK(std::abs(series::hurwitz_log_moment(2.0, 1.0, 1).value + ref::zeta_prime_2) < 1e-14);
  CHECK(std::abs(series::hurwitz_log_moment(2.0, 1.0, 2).value - ref::zeta_second_2) < 1e-14);
  CHECK(std::abs(series::hurwitz_log_moment(Complex(1.5, 3.0), 0.3, 1).value + ref::hurwitz_deriv) <
        1e-13);
  // continued below u = 1
  CHECK(std::abs(series::hurwitz_zeta(Complex(0.5, 10.0), 2.5).value - ref::hurwitz_half) < 1e-13);
  CHECK_THROWS_AS(series::hurwitz_zeta(1.0, 2.0), dzeta::PoleError);
}

TEST_CASE("shifted power tail") {
  auto t = series::shifted_power_tail(2.0, Complex(1.5, 4.0), 3.5, 100);
  CHECK(std::abs(t.value - ref::shifted_tail) < 1e-18);
}

TEST_CASE("prefix expansion matches the partial sums") {
  dzeta::EvalSettings st;
  auto check = [&](Complex s0, Complex exact) {
    auto e = series::prefix_expansion(s0, 8, st);
    const double k = 200.0;
    Complex v = 0.0;
    for (const auto& term : e.terms) {
      v += term.coef * std::exp(-term.exponent * std::log(k)) * std::pow(std::log(k), term.log_power);
    }
    const double bound = e.remainder_coef * std::pow(k, -e.remainder_exp);
    CHECK(std::abs(v - exact) <= bound + 1e-13);
    CHECK(bound < 1e-12);
  };
  check(Complex(1.3, 2.0), ref::prefix_199);
  check(1.0, ref::harmonic_199);
}
