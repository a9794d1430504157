#include "abh/series.hpp"

#include <cmath>
#include <numbers>

#include "abh/dirichlet.hpp"

namespace abh {

cplx eval_series(const ParamPair& params, const CoefficientSeq& coeffs,
                 const cplx& z) {
  const double x = std::norm(z);
  const cplx zb = std::conj(z);
  cplx sum = 0.0;
  cplx zp = 1.0;
  for (int m = 0; m <= coeffs.M; ++m) {
    const cplx cm = coeffs.at(m);
    if (cm != 0.0)
      sum += cm * hyp2f1(-params.alpha, double(m) - params.beta, double(m + 1),
                         x) *
             zp;
    zp *= z;
  }
  cplx zbp = zb;
  for (int m = 1; m <= coeffs.M; ++m) {
    const cplx cm = coeffs.at(-m);
    if (cm != 0.0)
      sum += cm * hyp2f1(-params.beta, double(m) - params.alpha, double(m + 1),
                         x) *
             zbp;
    zbp *= zb;
  }
  return sum;
}

cplx eval_series(const ParamPair& params, const CoefficientSeq& coeffs,
                 const DiskPoint& z) {
  return eval_series(params, coeffs, z.to_complex());
}

namespace {

// fhat(m) = (1/2pi) int f(e^{it}) e^{-imt} dt, exact for trig polynomials
// of degree below n/2.
std::map<int, cplx> fourier_hat(const BoundaryFunction& f, int M) {
  const int n = 4 * std::max(M, 8);
  const auto fv = f.values_at(n);
  std::map<int, cplx> hat;
  for (int m = -M; m <= M; ++m) {
    cplx a = 0.0;
    for (int j = 0; j < n; ++j)
      a += fv[j] * std::polar(1.0, -m * 2.0 * std::numbers::pi * j / double(n));
    hat[m] = a / double(n);
  }
  return hat;
}

CoefficientSeq build_coeffs(const ParamPair& params,
                            const std::map<int, cplx>& hat, int M, int sigma) {
  const cplx c = c_const(params);
  CoefficientSeq out;
  out.M = M;
  double factorial = 1.0;
  for (int k = 0; k <= M; ++k) {
    if (k > 0) factorial *= k;
    const cplx hk = hat.count(sigma * k) ? hat.at(sigma * k) : cplx(0.0);
    const cplx hmk = hat.count(-sigma * k) ? hat.at(-sigma * k) : cplx(0.0);
    out.c[k] = c * pochhammer(params.alpha + 1.0, k) / factorial * hk;
    if (k > 0)
      out.c[-k] = c * pochhammer(params.beta + 1.0, k) / factorial * hmk;
  }
  return out;
}

int resolve_orientation() {
  // Oracle: f = e^{it}; the quadrature solver is ground truth.
  const ParamPair params{0.4, 0.3};
  const BoundaryFunction f = BoundaryFunction::fourier({{1, cplx(1.0)}});
  const cplx z(0.5, 0.2);
  const cplx truth = extend(params, f, z);
  const auto hat = fourier_hat(f, 2);
  double err_plus =
      std::abs(eval_series(params, build_coeffs(params, hat, 2, +1), z) - truth);
  double err_minus =
      std::abs(eval_series(params, build_coeffs(params, hat, 2, -1), z) - truth);
  return err_plus <= err_minus ? +1 : -1;
}

}  // namespace

int fourier_orientation() {
  static const int sigma = resolve_orientation();
  return sigma;
}

CoefficientSeq coeffs_from_boundary(const ParamPair& params,
                                    const BoundaryFunction& f, int M) {
  params.validate();
  return build_coeffs(params, fourier_hat(f, M), M, fourier_orientation());
}

CoefficientSeq apply_D(const CoefficientSeq& coeffs) {
  CoefficientSeq out;
  out.M = coeffs.M;
  // Both sides reduce to multiplication by the signed index: the zbar^m
  // coefficient -m c_{-m} lives at key -m.
  for (const auto& [m, cm] : coeffs.c) out.c[m] = double(m) * cm;
  return out;
}

}  // namespace abh
