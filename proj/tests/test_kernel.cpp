#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abh/kernel.hpp"

using namespace abh;

namespace {

double rel_err(const cplx& got, const cplx& want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// Wirtinger derivatives by central differences of a complex field.
template <typename F>
cplx fd_dz(F&& f, const cplx& z, double h) {
  const cplx dx = (f(z + h) - f(z - h)) / (2.0 * h);
  const cplx dy = (f(z + cplx(0, h)) - f(z - cplx(0, h))) / (2.0 * h);
  return 0.5 * (dx - cplx(0, 1) * dy);
}

template <typename F>
cplx fd_dzbar(F&& f, const cplx& z, double h) {
  const cplx dx = (f(z + h) - f(z - h)) / (2.0 * h);
  const cplx dy = (f(z + cplx(0, h)) - f(z - cplx(0, h))) / (2.0 * h);
  return 0.5 * (dx + cplx(0, 1) * dy);
}

ParamPair random_params(std::mt19937_64& rng, bool complex_part) {
  std::uniform_real_distribution<double> re(-0.45, 2.0);
  std::uniform_real_distribution<double> im(-1.0, 1.0);
  ParamPair p;
  p.alpha = cplx(re(rng), complex_part ? im(rng) : 0.0);
  p.beta = cplx(re(rng), complex_part ? im(rng) : 0.0);
  return p;
}

cplx random_point(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> rad(0.0, rmax);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  return std::polar(rad(rng), ang(rng));
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW((ParamPair{0.0, 0.0}.validate()));
  CHECK_NOTHROW((ParamPair{cplx(0.5, 0.5), cplx(0.5, -0.5)}.validate()));
  CHECK_THROWS_AS((ParamPair{-1.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ParamPair{0.0, -2.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ParamPair{-0.6, -0.6}.validate()), std::invalid_argument);
  CHECK(!(ParamPair{-0.6, -0.6}.admissible()));
  CHECK((ParamPair{-0.4, -0.4}.admissible()));
}

TEST_CASE("normalization constant") {
  CHECK(rel_err(c_const({0.0, 0.0}), 1.0) < 1e-14);
  CHECK(rel_err(c_const({1.0, 1.0}), 0.5) < 1e-13);
  // Gamma(3/2)^2 / Gamma(2) = pi/4
  CHECK(rel_err(c_const({0.5, 0.5}), std::numbers::pi / 4.0) < 1e-13);
}

TEST_CASE("u at reference points") {
  CHECK(rel_err(u_value({1.0, 0.5}, cplx(0.5, 0.0)),
                std::pow(0.75, 2.5) / std::pow(0.5, 3.5)) < 1e-14);
  CHECK(rel_err(u_value({0.0, 0.0}, cplx(0.3, 0.4)),
                0.75 / std::norm(cplx(0.7, -0.4))) < 1e-14);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto params = random_params(rng, i % 2 == 1);
    CHECK(rel_err(u_value(params, cplx(0.0, 0.0)), 1.0) < 1e-14);
  }
}

TEST_CASE("polar and cartesian evaluation agree") {
  const ParamPair params{cplx(0.5, 0.2), cplx(1.0, -0.3)};
  const DiskPoint zp{0.6, 1.1};
  CHECK(u_value(params, zp) == u_value(params, zp.to_complex()));
  CHECK(kernel_value(params, zp) == kernel_value(params, zp.to_complex()));
}

TEST_CASE("conjugation symmetry for real parameters") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const auto params = random_params(rng, false);
    const ParamPair swapped{params.beta, params.alpha};
    const cplx z = random_point(rng, 0.9);
    CHECK(rel_err(std::conj(u_value(params, z)), u_value(swapped, z)) < 1e-13);
  }
}

TEST_CASE("modulus bound") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto params = random_params(rng, i >= 10);
    for (int j = 0; j < 500; ++j) {
      const cplx z = random_point(rng, 0.95);
      const double bound = u_modulus_bound(params, z);
      CHECK(std::abs(u_value(params, z)) <= bound * (1.0 + 1e-12));
      if (params.alpha.imag() == 0.0 && params.beta.imag() == 0.0) {
        // Equality for real parameters.
        CHECK(rel_err(std::abs(u_value(params, z)), bound) < 1e-12);
      }
    }
  }
}

TEST_CASE("closed-form first derivatives match finite differences") {
  std::mt19937_64 rng(6);
  const double h = 1e-5;
  for (int i = 0; i < 60; ++i) {
    const auto params = random_params(rng, i % 2 == 0);
    const cplx z = random_point(rng, 0.8);
    auto u = [&](const cplx& w) { return u_value(params, w); };
    CHECK(rel_err(u_dz(params, z), fd_dz(u, z, h)) < 1e-6);
    CHECK(rel_err(u_dzbar(params, z), fd_dzbar(u, z, h)) < 1e-6);
  }
}

TEST_CASE("term algebra reproduces u and its first derivatives") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto params = random_params(rng, i % 3 == 0);
    const cplx z = random_point(rng, 0.85);
    const auto terms = u_term_sum(params);
    CHECK(rel_err(term_sum_eval(terms, z), u_value(params, z)) < 1e-13);
    CHECK(rel_err(term_sum_eval(term_sum_dz(terms), z), u_dz(params, z)) <
          1e-12);
    CHECK(rel_err(term_sum_eval(term_sum_dzbar(terms), z),
                  u_dzbar(params, z)) < 1e-12);
    CHECK(rel_err(u_higher_deriv(params, z, 1, 0), u_dz(params, z)) < 1e-12);
    CHECK(rel_err(u_higher_deriv(params, z, 0, 1), u_dzbar(params, z)) <
          1e-12);
  }
}

TEST_CASE("higher derivatives match finite differences of the closed forms") {
  std::mt19937_64 rng(9);
  const double h = 1e-5;
  for (int i = 0; i < 20; ++i) {
    const auto params = random_params(rng, i % 2 == 1);
    const cplx z = random_point(rng, 0.7);
    auto udz = [&](const cplx& w) { return u_dz(params, w); };
    auto udzb = [&](const cplx& w) { return u_dzbar(params, w); };
    CHECK(rel_err(u_higher_deriv(params, z, 2, 0), fd_dz(udz, z, h)) < 1e-5);
    CHECK(rel_err(u_higher_deriv(params, z, 1, 1), fd_dzbar(udz, z, h)) <
          1e-5);
    CHECK(rel_err(u_higher_deriv(params, z, 0, 2), fd_dzbar(udzb, z, h)) <
          1e-5);
  }
}

TEST_CASE("derivative order cap") {
  CHECK_THROWS_AS(u_higher_deriv({0.5, 0.5}, cplx(0.2, 0.1), 3, 2),
                  std::invalid_argument);
  CHECK_NOTHROW(u_higher_deriv({0.5, 0.5}, cplx(0.2, 0.1), 2, 2));
}

TEST_CASE("u solves the differential equation") {
  // (1-|z|^2) u_{z zbar} + a z u_z + b zbar u_zbar - a b u = 0, with every
  // derivative from the exact term algebra.
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const auto params = random_params(rng, i % 2 == 0);
    const cplx z = random_point(rng, 0.8);
    const cplx u = u_value(params, z);
    const cplx res = (1.0 - std::norm(z)) * u_higher_deriv(params, z, 1, 1) +
                     params.alpha * z * u_dz(params, z) +
                     params.beta * std::conj(z) * u_dzbar(params, z) -
                     params.alpha * params.beta * u;
    CHECK(std::abs(res) <= 1e-8 * (1.0 + std::abs(u)));
  }
}

TEST_CASE("Ckl estimate") {
  CHECK(estimate_Ckl({0.5, 0.5}, 0, 0) == 1.0);
  const double c10 = estimate_Ckl({0.5, 0.5}, 1, 0);
  const double c01 = estimate_Ckl({0.5, 0.5}, 0, 1);
  const double c11 = estimate_Ckl({1.0, 0.5}, 1, 1);
  CHECK(c10 > 0.0);
  CHECK(std::isfinite(c10));
  CHECK(std::isfinite(c11));
  // Symmetric parameters give symmetric constants.
  CHECK(c10 == doctest::Approx(c01).epsilon(1e-12));
  // The estimate dominates the ratio at interior sample points.
  const ParamPair params{1.0, 0.5};
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const cplx z = random_point(rng, 0.9);
    const double ratio = std::abs(u_higher_deriv(params, z, 1, 1)) *
                         std::pow(1.0 - std::norm(z), 2) /
                         std::abs(u_value(params, z));
    CHECK(ratio <= c11 * (1.0 + 1e-2));
  }
}
