#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "dzeta/continuation.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/special_functions.hpp"

using dzeta::ArgumentPair;
using dzeta::Complex;
using dzeta::RegionClass;

namespace {

struct Reference {
  ArgumentPair p;
  Complex value;
};

// mpmath values, see tests/oracle/reference_values.py
const Reference kReferences[] = {
    {{1.2, {0.7, 20.0}}, {-0.72004977465509408, -1.0888389753299012}},
    {{1.3, {0.9, 5.0}}, {-0.18029147337012503, 0.15963626213410212}},
    {{0.8, {0.8, 10.0}}, {0.43059062454167384, -0.02287373510256186}},
    {{2.0, {0.8, 15.0}}, {-0.73327989182974297, 0.58148169184901726}},
    {{1.0, {0.8, 10.0}}, {0.43313818100105866, -0.032594084891252157}},
    {{0.6, {0.9, 3.0}}, {-0.25914053359237158, 0.068206102221331275}},
    {{1.4, {0.6, 40.0}}, {-0.15831960606768803, -1.4507528522644411}},
    {{{1.3, 2.0}, {1.5, -4.0}}, {-0.28702731495907481, -0.13077102660032141}},
    {{3.0, {0.2, 7.0}}, {-0.0011429287869435585, 0.42553668547100669}},
};

Complex stuffle_defect(const ArgumentPair& p, const dzeta::EvalSettings& st) {
  const Complex a = dzeta::zeta2_eval(p, st).value;
  const Complex b = dzeta::zeta2_eval({p.s, p.s0}, st).value;
  return dzeta::riemann_zeta(p.s0) * dzeta::riemann_zeta(p.s) - a - b -
         dzeta::riemann_zeta(p.s0 + p.s);
}

}  // namespace

TEST_CASE("region classification") {
  dzeta::EvalSettings st;
  CHECK(dzeta::classify_region({2.0, 2.0}, st) == RegionClass::AbsolutelyConvergent);
  CHECK(dzeta::classify_region({2.0, {0.8, 15.0}}, st) == RegionClass::EMStrip);
  CHECK(dzeta::classify_region({3.0, {0.2, 7.0}}, st) == RegionClass::EMStrip);
  CHECK(dzeta::classify_region({1.2, {0.7, 20.0}}, st) == RegionClass::MBStrip);
  CHECK(dzeta::classify_region({1.3, 0.7}, st) == RegionClass::Singular);
  CHECK(dzeta::classify_region({2.0, 1.0}, st) == RegionClass::Singular);
  CHECK(dzeta::classify_region({0.3, 0.3}, st) == RegionClass::OutOfDomain);
  CHECK(dzeta::classify_region({1.7, {0.25, 3.0}}, st) == RegionClass::OutOfDomain);
  CHECK(dzeta::singular_reason({1.3, 0.7}, st) == "singular locus s0+s=2");
  CHECK(dzeta::singular_reason({{0.5, 1.0}, {0.5, -1.0}}, st) == "singular locus s0+s=1");
  CHECK(dzeta::singular_reason({2.0, {1.0, 1e-8}}, st) == "pole s=1");
  CHECK(dzeta::singular_reason({2.0, 2.0}, st).empty());
  // just outside the exclusion radius
  CHECK(dzeta::classify_region({1.3, {0.7, 2e-6}}, st) == RegionClass::MBStrip);
}

TEST_CASE("sawtooth integral against zeta") {
  const double pi = std::numbers::pi;
  CHECK(std::abs(dzeta::em_sawtooth_integral(1.0, 2.0) - (1.5 - pi * pi / 6.0) / 2.0) < 1e-15);
  // zeta(s) = sum_{n<a} n^{-s} + a^{1-s}/(s-1) + a^{-s}/2 - s I(a, s)
  const Complex s(0.5, 20.0);
  const double a = 7.0;
  Complex head = 0.0;
  for (int n = 1; n < 7; ++n) head += std::pow(double(n), -s);
  const Complex expected =
      (head + std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s) - dzeta::riemann_zeta(s)) / s;
  CHECK(std::abs(dzeta::em_sawtooth_integral(a, s) - expected) < 1e-14);
}

TEST_CASE("mellin-barnes power formula") {
  dzeta::EvalSettings st;
  auto check = [&](Complex lambda, Complex s, double c) {
    const Complex exact = std::exp(-s * std::log(1.0 + lambda));
    CHECK(std::abs(dzeta::mellin_barnes_pow(lambda, s, c, st) - exact) < 1e-12);
  };
  check(0.5, {2.0, 1.0}, -1.0);
  check(3.0, 1.5, -0.75);
  check(std::polar(3.0, 2.5), {0.3, -2.0}, -0.1);
  check(std::polar(0.2, -1.0), {4.0, 10.0}, -2.0);
  CHECK_THROWS_AS(dzeta::mellin_barnes_pow(0.5, 1.0, 0.2, st), dzeta::DomainError);
  CHECK_THROWS_AS(dzeta::mellin_barnes_pow(-2.0, 1.0, -0.5, st), dzeta::DomainError);
}

TEST_CASE("g + Y2 + Y3 reproduces the shifted power sum") {
  dzeta::EvalSettings st;
  for (Complex s : {Complex(0.9, 5.0), Complex(1.1, -30.0)}) {
    const Complex s0 = 1.3;
    auto g = dzeta::g_function(s0, s, 50.0, st);
    const Complex lhs = g.value() + dzeta::y23_terms(s0, s, 50.0, st);
    CHECK(std::abs(lhs - dzeta::shifted_power_sum(s0, s, 50.0, st)) < 1e-13);
    CHECK_FALSE(g.digamma_branch);
  }
  CHECK_THROWS_AS(dzeta::g_function(1.6, {0.9, 5.0}, 50.0, st), dzeta::DomainError);
  CHECK_THROWS_AS(dzeta::g_function(1.3, {0.4, 5.0}, 50.0, st), dzeta::DomainError);
}

TEST_CASE("digamma branch near s0 = 1 is continuous") {
  dzeta::EvalSettings st;
  const Complex s(0.8, 10.0);
  auto inside = dzeta::g_function(1.0 + 5e-5, s, 50.0, st);
  auto outside = dzeta::g_function(1.0 + 2e-4, s, 50.0, st);
  CHECK(inside.digamma_branch);
  CHECK_FALSE(outside.digamma_branch);
  CHECK(std::abs(inside.value() - outside.value()) < 1e-3 * std::abs(outside.value()));
  const Complex at_one = dzeta::zeta2_eval({1.0, s}, st).value;
  const Complex above = dzeta::zeta2_eval({1.0 + 2e-4, s}, st).value;
  const Complex below = dzeta::zeta2_eval({1.0 - 2e-4, s}, st).value;
  CHECK(std::abs(at_one - 0.5 * (above + below)) < 1e-8);
}

TEST_CASE("evaluation against the independent reference") {
  dzeta::EvalSettings st;
  for (const auto& r : kReferences) {
    CAPTURE(r.p.s0);
    CAPTURE(r.p.s);
    auto v = dzeta::zeta2_eval(r.p, st);
    CHECK(std::abs(v.value - r.value) < 1e-12);
  }
}

TEST_CASE("routes agree where they overlap") {
  dzeta::EvalSettings st;
  const ArgumentPair p{1.3, {0.9, 5.0}};
  const Complex mb = dzeta::zeta2_mb(p, 100.0, st).value;
  for (long n : {20L, 50L, 200L}) {
    CHECK(std::abs(dzeta::zeta2_em(p, n, st).value - mb) < 1e-12);
  }
  CHECK(std::abs(dzeta::zeta2_mb(p, 30.0, st).value - mb) < 1e-12);
  const ArgumentPair q{2.5, {2.0, -3.0}};
  CHECK(std::abs(dzeta::zeta2_em(q, 50, st).value - dzeta::zeta2_eval(q, st).value) < 1e-13);
}

TEST_CASE("stuffle identity after continuation") {
  dzeta::EvalSettings st;
  CHECK(std::abs(stuffle_defect({1.3, {0.9, 5.0}}, st)) < 1e-12);
  CHECK(std::abs(stuffle_defect({2.0, {0.8, 15.0}}, st)) < 1e-12);
  CHECK(std::abs(stuffle_defect({{1.2, 3.0}, {0.9, 12.0}}, st)) < 1e-12);
}

TEST_CASE("conjugation symmetry after continuation") {
  dzeta::EvalSettings st;
  const ArgumentPair p{1.2, {0.7, 20.0}};
  const ArgumentPair q{1.2, {0.7, -20.0}};
  CHECK(std::abs(dzeta::zeta2_eval(q, st).value - std::conj(dzeta::zeta2_eval(p, st).value)) < 1e-13);
}

TEST_CASE("routes reject points outside their regions") {
  dzeta::EvalSettings st;
  CHECK_THROWS_AS(dzeta::zeta2_em({1.2, {0.7, 20.0}}, 50, st), dzeta::DomainError);
  CHECK_THROWS_AS(dzeta::zeta2_em({2.0, {1.0, 1e-8}}, 50, st), dzeta::PoleError);
  CHECK_THROWS_AS(dzeta::zeta2_mb({1.2, {0.4, 20.0}}, 50.0, st), dzeta::DomainError);
  CHECK_THROWS_AS(dzeta::zeta2_eval({1.3, 0.7}, st), dzeta::SingularError);
  CHECK_THROWS_AS(dzeta::zeta2_eval({0.3, 0.3}, st), dzeta::DomainError);
  try {
    dzeta::zeta2_eval({1.3, 0.7}, st);
  } catch (const dzeta::SingularError& e) {
    CHECK(std::string(e.what()).find("singular locus s0+s=2") != std::string::npos);
  }
}

TEST_CASE("residue at s = 1") {
  dzeta::EvalSettings st;
  for (Complex s0 : {Complex(2.0), Complex(3.0), Complex(2.0, 1.0)}) {
    CHECK(std::abs(dzeta::residue_at_s1(s0, st) - dzeta::riemann_zeta(s0)) < 1e-6);
  }
  CHECK_THROWS_AS(dzeta::residue_at_s1(0.9, st), dzeta::DomainError);
}

TEST_CASE("sawtooth integral symmetry and domain") {
  const Complex s(1.5, 4.0);
  CHECK(std::abs(dzeta::em_sawtooth_integral(1.0, std::conj(s)) -
                 std::conj(dzeta::em_sawtooth_integral(1.0, s))) < 1e-15);
  // |I(a, s)| <= a^{-sigma} / (8 sigma) style bound
  for (double a : {1.0, 10.0, 1000.0}) {
    CHECK(std::abs(dzeta::em_sawtooth_integral(a, Complex(3.0, 50.0))) <= std::pow(a, -3.0) / 8.0);
  }
}

TEST_CASE("mellin-barnes power formula, simple values") {
  dzeta::EvalSettings st;
  CHECK(std::abs(dzeta::mellin_barnes_pow(1.0, 2.0, -0.5, st) - 0.25) < 1e-12);
  CHECK(std::abs(dzeta::mellin_barnes_pow(3.0, 1.5, -0.75, st) - 0.125) < 1e-12);
  const Complex v = dzeta::mellin_barnes_pow(0.5, {2.0, 1.0}, -1.0, st);
  CHECK(std::abs(v - Complex(0.4084, -0.1754)) < 1e-4);
}

TEST_CASE("Y2 + Y3 conjugation") {
  dzeta::EvalSettings st;
  const Complex s(0.9, 5.0);
  CHECK(std::abs(dzeta::y23_terms(1.3, std::conj(s), 50.0, st) -
                 std::conj(dzeta::y23_terms(1.3, s, 50.0, st))) < 1e-12);
  const Complex g = dzeta::g_function(1.3, 2.0, 9.0, st).value();
  CHECK(std::abs(g + dzeta::y23_terms(1.3, 2.0, 9.0, st) - dzeta::shifted_power_sum(1.3, 2.0, 9.0, st)) < 1e-12);
}

TEST_CASE("digamma branch matches the two-sided limit at s0 = 1") {
  dzeta::EvalSettings st;
  const Complex s(0.8, 10.0);
  const Complex at_one = dzeta::g_function(1.0, s, 100.0, st).value();
  const Complex above = dzeta::g_function(1.0 + 1e-5, s, 100.0, st).value();
  const Complex below = dzeta::g_function(1.0 - 1e-5, s, 100.0, st).value();
  CHECK(std::abs(at_one - 0.5 * (above + below)) < 1e-6);
}

TEST_CASE("mellin-barnes route does not depend on the split") {
  dzeta::EvalSettings st;
  const ArgumentPair p{1.2, {0.7, 20.0}};
  const Complex ref = dzeta::zeta2_mb(p, 100.0, st).value;
  CHECK(std::abs(dzeta::zeta2_mb(p, 50.0, st).value - ref) < 1e-7);
  CHECK(std::abs(dzeta::zeta2_mb(p, 200.0, st).value - ref) < 1e-7);
  const ArgumentPair q{1.3, {0.9, 5.0}};
  CHECK(std::abs(dzeta::zeta2_mb(q, 100.0, st).value - dzeta::zeta2_em(q, 100, st).value) < 1e-8);
  const ArgumentPair r{0.8, {0.8, 10.0}};
  const ArgumentPair rc{0.8, {0.8, -10.0}};
  CHECK(std::abs(dzeta::zeta2_mb(rc, 100.0, st).value - std::conj(dzeta::zeta2_mb(r, 100.0, st).value)) <
        1e-12);
}
