#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "eulerdiff/bernoulli.hpp"
#include "eulerdiff/pfd.hpp"

using namespace eulerdiff;
using C = std::complex<double>;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("pfd_eval examples") {
  CHECK(std::abs(pfd_eval(C{0.0, kPi}, 10000) - C{-0.5, 0.0}) < 1e-4);
  CHECK(std::abs(pfd_eval(C{1.0, 0.0}, 1000) - 1.0 / (std::exp(1.0) - 1.0)) < 1e-4);
  CHECK(std::abs(pfd_eval(C{-1.0, 0.0}, 1000) - 1.0 / (std::exp(-1.0) - 1.0)) < 1e-4);
}

TEST_CASE("direct side matches the naive formula away from cancellation") {
  for (C z : {C{1.0, 0.0}, C{-2.0, 0.5}, C{0.3, 2.0}, C{2.7, -1.0}}) {
    CHECK(std::abs(reciprocal_exp_minus_one(z) - 1.0 / (std::exp(z) - 1.0)) < 1e-13);
  }
  CHECK(std::abs(reciprocal_exp_minus_one(C{0.0, kPi}) - C{-0.5, 0.0}) < 1e-15);
}

TEST_CASE("pole proximity names the offending k") {
  CHECK_THROWS_AS(pfd_eval(C{0.0, 0.0}, 10), PoleProximityError);
  try {
    pfd_eval(C{1e-8, 2.0 * kPi * 3.0}, 10);
    FAIL("expected PoleProximityError");
  } catch (const PoleProximityError& e) {
    CHECK(e.k() == 3);
  }
  // |k| = K + 1 is still excluded.
  try {
    pfd_eval(C{0.0, -2.0 * kPi * 11.0}, 10);
    FAIL("expected PoleProximityError");
  } catch (const PoleProximityError& e) {
    CHECK(e.k() == -11);
  }
  CHECK_NOTHROW(pfd_eval(C{0.0, 2.0 * kPi * 40.0}, 10));
  CHECK_NOTHROW(pfd_eval(C{1e-5, 0.0}, 10));
  CHECK_THROWS_AS(pfd_eval(C{1.0, 0.0}, 0), std::invalid_argument);
}

TEST_CASE("truncation error within the stated bound") {
  for (C z : {C{1, 0}, C{-1, 0}, C{0.5, 0.5}, C{0, kPi}, C{2.7, 0}, C{-3, 0}, C{0, 3}, C{1.5, -2}}) {
    for (long K : {10L, 100L, 1000L}) {
      const double err = std::abs(pfd_eval(z, K) - reciprocal_exp_minus_one(z));
      CHECK(err <= 2.0 * std::abs(z) / (kPi * kPi * K));
    }
  }
}

TEST_CASE("constant offset is -1/2 by construction") {
  for (C z : {C{1, 0}, C{0.5, 0.5}, C{-2, 1}}) {
    const auto parts = pfd_parts(z, 500);
    CHECK(parts.constant == -0.5);
    CHECK(parts.pole == 1.0 / z);
    CHECK(std::abs(pfd_eval(z, 500) - (parts.pole + parts.mode_sum) - C{-0.5, 0.0}) <= 1e-15);
  }
}

TEST_CASE("characteristic zeros") {
  const auto z1 = characteristic_zeros(1);
  REQUIRE(z1.size() == 3);
  CHECK(z1[0] == C{0, 0});
  CHECK(z1[1] == C{0, 2 * kPi});
  CHECK(z1[2] == C{0, -2 * kPi});
  CHECK(characteristic_zeros(2).size() == 5);
  for (const auto& z : characteristic_zeros(50)) CHECK(std::abs(std::exp(z) - 1.0) <= 1e-10);
  const auto z3 = characteristic_zeros(3);
  for (std::size_t i = 1; i + 1 < z3.size(); i += 2) {
    CHECK(z3[i].imag() > 0);
    CHECK(z3[i] == -z3[i + 1]);
  }
}

TEST_CASE("laurent_from_modes examples") {
  for (long K : {1L, 10L, 1000L, 100000L}) CHECK(std::abs(laurent_from_modes(0, K)) <= 1e-12);
  CHECK(std::abs(laurent_from_modes(1, 10000) - 1.0 / 12.0) <= 1e-5);
  CHECK(std::abs(laurent_from_modes(3, 1000) + 1.0 / 720.0) <= 1e-8);
}

TEST_CASE("Laurent coefficients match B_{j+1}/(j+1)!, odd-order ones vanish") {
  for (unsigned j = 0; j <= 12; ++j) {
    const C c = laurent_from_modes(j, 20000);
    if (j % 2 == 0) {
      CHECK(std::abs(c) <= 1e-12);
    } else {
      const double expected = (bernoulli(j + 1) / Rational(factorial(j + 1))).to_double();
      CHECK(std::abs(c - expected) <= 1e-5);
      CHECK(std::abs(c.imag()) == 0.0);
    }
  }
}

TEST_CASE("serial and parallel kernels agree bitwise") {
  for (C z : {C{1, 0}, C{0.5, 0.5}}) {
    CHECK(pfd_eval(z, 30000, Execution::Serial) == pfd_eval(z, 30000, Execution::Parallel));
  }
  for (int p : {-2, -3, -4, -7}) {
    CHECK(mode_power_sum(p, 30000, Execution::Serial) == mode_power_sum(p, 30000, Execution::Parallel));
  }
}
