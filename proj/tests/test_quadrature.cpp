#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dzeta/quadrature.hpp"

namespace quad = dzeta::quad;
using dzeta_complex = std::complex<double>;

TEST_CASE("gauss-legendre rule integrates polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 16, 40}) {
    const auto& rule = quad::gauss_legendre(n);
    REQUIRE(rule.nodes.size() == std::size_t(n));
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double q = 0.0;
      for (int i = 0; i < n; ++i) q += rule.weights[i] * std::pow(rule.nodes[i], d);
      const double exact = (d % 2 == 1) ? 0.0 : 2.0 / (d + 1);
      CHECK(std::abs(q - exact) < 1e-13);
    }
  }
}

TEST_CASE("gauss-legendre nodes are symmetric and cached") {
  const auto& a = quad::gauss_legendre(16);
  const auto& b = quad::gauss_legendre(16);
  CHECK(&a == &b);
  for (int i = 0; i < 16; ++i) {
    CHECK(std::abs(a.nodes[i] + a.nodes[15 - i]) < 1e-15);
    CHECK(std::abs(a.weights[i] - a.weights[15 - i]) < 1e-15);
  }
}

TEST_CASE("kronrod panel on smooth integrands") {
  auto r = quad::gauss_kronrod15<double>([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) < 1e-15);
  CHECK(r.evaluations == 15);
  // polynomial of degree 22 is exact for the 15-point Kronrod rule
  auto p = quad::gauss_kronrod15<double>([](double x) { return std::pow(x, 22); }, -1.0, 1.0);
  CHECK(std::abs(p.value - 2.0 / 23.0) < 1e-15);
}

TEST_CASE("adaptive integration of an oscillatory integrand") {
  auto f = [](double x) { return std::cos(50.0 * x); };
  auto r = quad::integrate_adaptive<double>(f, 0.0, 10.0, 1e-11);
  CHECK(std::abs(r.value - std::sin(500.0) / 50.0) < 1e-10);
  CHECK(r.error <= 1e-11);
}

TEST_CASE("adaptive integration of a complex integrand") {
  auto f = [](double t) { return std::exp(dzeta_complex(0.0, 3.0 * t)); };
  auto r = quad::integrate_adaptive<dzeta_complex>(f, 0.0, 2.0, 1e-12);
  const dzeta_complex exact = (std::exp(dzeta_complex(0.0, 6.0)) - 1.0) / dzeta_complex(0.0, 3.0);
  CHECK(std::abs(r.value - exact) < 1e-12);
}

TEST_CASE("panel integration is reproducible and additive") {
  auto f = [](double t) { return 1.0 / (1.0 + t * t) + std::sin(7.0 * t) * std::sin(7.0 * t); };
  auto whole = quad::integrate_panels<double>(f, 0.0, 30.0, 0.5, 1e-10);
  auto again = quad::integrate_panels<double>(f, 0.0, 30.0, 0.5, 1e-10);
  CHECK(whole.value == again.value);
  auto left = quad::integrate_panels<double>(f, 0.0, 12.0, 0.5, 1e-10);
  auto right = quad::integrate_panels<double>(f, 12.0, 30.0, 0.5, 1e-10);
  CHECK(std::abs(whole.value - (left.value + right.value)) < 1e-9);
  const double exact = std::atan(30.0) + 15.0 - std::sin(420.0) / 28.0;
  CHECK(std::abs(whole.value - exact) < 1e-9);
  CHECK(quad::integrate_panels<double>(f, 3.0, 3.0, 0.5, 1e-10).value == 0.0);
}
