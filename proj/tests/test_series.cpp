#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abh/dirichlet.hpp"
#include "abh/series.hpp"
#include "abh/verify.hpp"

using namespace abh;

namespace {

double rel_err(const cplx& got, const cplx& want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_CASE("coefficient sequence lookup") {
  CoefficientSeq s;
  s.M = 2;
  s.c[1] = cplx(2.0, 1.0);
  CHECK(s.at(1) == cplx(2.0, 1.0));
  CHECK(s.at(0) == cplx(0.0));
  CHECK(s.at(-2) == cplx(0.0));
}

TEST_CASE("orientation oracle settles on the standard convention") {
  CHECK(fourier_orientation() == 1);
}

TEST_CASE("coefficients of a rotation boundary") {
  const ParamPair params{0.7, 0.4};
  const auto f = BoundaryFunction::fourier({{1, 1.0}});
  const auto coeffs = coeffs_from_boundary(params, f, 3);
  const cplx c = c_const(params);
  CHECK(rel_err(coeffs.at(1), c * (params.alpha + 1.0)) < 1e-12);
  CHECK(std::abs(coeffs.at(0)) < 1e-12);
  CHECK(std::abs(coeffs.at(-1)) < 1e-12);
  CHECK(std::abs(coeffs.at(2)) < 1e-12);
}

TEST_CASE("series of a constant boundary is hypergeometric") {
  const ParamPair params{cplx(1.0, 0.5), cplx(0.5, -0.25)};
  const auto f = BoundaryFunction::constant(cplx(2.0, -1.0));
  const auto coeffs = coeffs_from_boundary(params, f, 4);
  const cplx z(0.3, -0.5);
  const cplx want = cplx(2.0, -1.0) * c_const(params) *
                    hyp2f1(-params.alpha, -params.beta, 1.0, std::norm(z));
  CHECK(rel_err(eval_series(params, coeffs, z), want) < 1e-12);
}

TEST_CASE("series representation matches the quadrature solver") {
  const ParamPair grid[] = {{0.0, 0.0},
                            {0.5, 0.5},
                            {2.0, 1.0},
                            {cplx(0.5, 0.5), cplx(0.5, -0.5)},
                            {cplx(1.0, 1.0), cplx(0.5, -0.25)}};
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> rad(0.0, 0.9);
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
  for (int fi = 0; fi < 3; ++fi) {
    const auto f = random_boundary(100 + fi, 6);
    const double scale = 1.0 + f.l2_norm_parseval();
    for (const auto& params : grid) {
      const auto coeffs = coeffs_from_boundary(params, f, 6);
      for (int i = 0; i < 10; ++i) {
        const cplx z = std::polar(rad(rng), ang(rng));
        const cplx via_series = eval_series(params, coeffs, z);
        const cplx via_quad = extend(params, f, z);
        CHECK(std::abs(via_series - via_quad) < 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("truncation only drops modes above the boundary degree") {
  const auto f = random_boundary(200, 3);
  const ParamPair params{1.0, 0.5};
  const auto c3 = coeffs_from_boundary(params, f, 3);
  const auto c8 = coeffs_from_boundary(params, f, 8);
  const cplx z(0.4, 0.2);
  CHECK(rel_err(eval_series(params, c3, z), eval_series(params, c8, z)) <
        1e-12);
  for (int m = 4; m <= 8; ++m) {
    CHECK(std::abs(c8.at(m)) < 1e-12);
    CHECK(std::abs(c8.at(-m)) < 1e-12);
  }
}

TEST_CASE("D operator scales coefficients by the signed index") {
  CoefficientSeq s;
  s.M = 2;
  s.c[-2] = cplx(1.0, 1.0);
  s.c[0] = 5.0;
  s.c[2] = cplx(0.0, 3.0);
  const auto d = apply_D(s);
  CHECK(d.at(-2) == cplx(-2.0, -2.0));
  CHECK(d.at(0) == cplx(0.0));
  CHECK(d.at(2) == cplx(0.0, 6.0));
}

TEST_CASE("D operator agrees with the angular derivative") {
  // z w_z - zbar w_zbar = -i dw/dtheta.
  const ParamPair params{0.8, cplx(0.5, 0.3)};
  const auto f = random_boundary(300, 4);
  const auto coeffs = coeffs_from_boundary(params, f, 4);
  const auto dcoeffs = apply_D(coeffs);
  const double r = 0.55, th = 1.2, h = 1e-6;
  const cplx lhs = eval_series(params, dcoeffs, std::polar(r, th));
  const cplx fd = (eval_series(params, coeffs, std::polar(r, th + h)) -
                   eval_series(params, coeffs, std::polar(r, th - h))) /
                  (2.0 * h);
  CHECK(std::abs(lhs - cplx(0, -1) * fd) < 1e-8);
}

TEST_CASE("inadmissible parameters are rejected") {
  const auto f = BoundaryFunction::constant(1.0);
  CHECK_THROWS_AS(coeffs_from_boundary({-1.0, 0.0}, f, 2),
                  std::invalid_argument);
}
