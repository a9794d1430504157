#include "abh/bounds.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace abh {

namespace {

double real_gamma(double x) { return cgamma(cplx(x)).real(); }

double im_factor(const ParamPair& params) {
  return std::exp(0.5 * std::numbers::pi *
                  std::abs((params.alpha - params.beta).imag()));
}

double conjugate_q(double p) {
  if (std::isinf(p)) return 1.0;
  if (!(p > 1.0))
    throw std::invalid_argument("conjugate exponent undefined for p <= 1");
  return p / (p - 1.0);
}

double hypF(double a, double r2) {
  return hyp2f1(cplx(a), cplx(a), cplx(1.0), r2).real();
}

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::runtime_error(std::string(what) + ": non-finite bound value");
}

}  // namespace

Theorem31Result theorem31_rhs(const ParamPair& params, double p, double r,
                              double f_norm) {
  params.validate();
  if (!(p >= 1.0)) throw std::invalid_argument("theorem31_rhs: p < 1");
  if (!(r >= 0.0 && r < 1.0))
    throw std::invalid_argument("theorem31_rhs: r outside [0,1)");
  const double s = (params.alpha + params.beta).real();
  const double e = im_factor(params);
  const double cm = std::abs(c_const(params));
  Theorem31Result out;
  out.B = real_gamma(s + 1.0) / std::pow(real_gamma(0.5 * s + 1.0), 2.0);
  out.rhs = cm * e * hypF(-0.5 * s, r * r) * f_norm;
  out.cap = e * out.B * f_norm;
  check_finite(out.rhs, "theorem31_rhs");
  return out;
}

Theorem32Result theorem32_bounds(const ParamPair& params, double p, double r) {
  params.validate();
  if (!(p > 1.0))
    throw std::invalid_argument(
        "theorem32_bounds: requires p > 1 (conjugate-exponent branch)");
  const double q = conjugate_q(p);
  const double s = (params.alpha + params.beta).real();
  const double cm = std::abs(c_const(params));
  const double aa = std::abs(params.alpha);
  const double bb = std::abs(params.beta);
  const double a1 = std::abs(params.alpha + 1.0);
  const double b1 = std::abs(params.beta + 1.0);

  Theorem32Result out;
  out.F1 = std::pow(hypF(1.0 - 0.5 * (s + 2.0) * q, r * r), 1.0 / q);
  const double tail = std::pow(
      real_gamma((s + 2.0) * q - 1.0) /
          std::pow(real_gamma(0.5 * (s + 2.0) * q), 2.0),
      1.0 / q);
  out.C_r = cm * (a1 + bb * r) * out.F1;
  out.C_const = cm * (a1 + bb) * tail;
  out.D_r = cm * (b1 + aa * r) * out.F1;
  out.D_const = cm * (b1 + aa) * tail;
  check_finite(out.C_r, "theorem32_bounds");
  check_finite(out.C_const, "theorem32_bounds");
  return out;
}

double theorem33_rhs(const ParamPair& params, double p, double r, unsigned k,
                     unsigned l, double Ckl, double f_norm) {
  if (k + l > kMaxDerivOrder)
    throw std::invalid_argument("theorem33_rhs: order k+l beyond bound");
  if (!(Ckl > 0.0)) throw std::invalid_argument("theorem33_rhs: Ckl <= 0");
  const Theorem31Result base = theorem31_rhs(params, p, r, f_norm);
  const double v = Ckl / std::pow(1.0 - r * r, double(k + l)) * base.rhs;
  check_finite(v, "theorem33_rhs");
  return v;
}

double coefficient_Cq(double q, unsigned k) {
  if (!(q >= 1.0)) throw std::invalid_argument("coefficient_Cq: q < 1");
  (void)k;  // |cos kt|^q over full periods is k-independent by the exact
            // substitution u = kt
  if (std::isinf(q)) return 1.0;
  using boost::math::quadrature::gauss_kronrod;
  const double integral = gauss_kronrod<double, 61>::integrate(
      [q](double u) { return std::pow(std::cos(u), q); }, 0.0,
      0.5 * std::numbers::pi, 10, 1e-14);
  return std::pow(2.0 / std::numbers::pi * integral, 1.0 / q);
}

Theorem44Result theorem44_bounds(const ParamPair& params, double p, unsigned k,
                                 double f_norm) {
  params.validate();
  if (k < 1) throw std::invalid_argument("theorem44_bounds: k must be >= 1");
  if (!(p >= 1.0)) throw std::invalid_argument("theorem44_bounds: p < 1");
  const double cm = std::abs(c_const(params));
  double factorial = 1.0;
  for (unsigned i = 2; i <= k; ++i) factorial *= i;
  const double q = p == 1.0 ? std::numeric_limits<double>::infinity()
                            : conjugate_q(p);
  Theorem44Result out;
  out.bound_ck = cm * std::abs(pochhammer(params.alpha + 1.0, k)) / factorial *
                 f_norm;
  out.bound_cminusk = cm * std::abs(pochhammer(params.beta + 1.0, k)) /
                      factorial * f_norm;
  out.C_q = coefficient_Cq(q, k);
  out.combined = 2.0 * cm * out.C_q * f_norm;
  check_finite(out.combined, "theorem44_bounds");
  return out;
}

double theorem45_rhs(const ParamPair& params, double p, double r,
                     double f_norm) {
  params.validate();
  if (!(p >= 1.0)) throw std::invalid_argument("theorem45_rhs: p < 1");
  if (!(r >= 0.0 && r < 1.0))
    throw std::invalid_argument("theorem45_rhs: r outside [0,1)");
  const double s = (params.alpha + params.beta).real();
  const double cm = std::abs(c_const(params));
  const double e = im_factor(params);
  double v;
  if (p == 1.0) {
    v = 2.0 * cm * e * std::pow(1.0 - r * r, s) /
        std::pow(1.0 - r, s + 2.0) * f_norm;
  } else {
    const double q = conjugate_q(p);
    const double F2 = std::pow(hypF(1.0 - 0.5 * (s + 2.0) * q, r * r), 1.0 / q);
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    v = 2.0 * cm * f_norm / std::pow(1.0 - r * r, 1.0 + inv_p) * e * F2;
  }
  check_finite(v, "theorem45_rhs");
  return v;
}

}  // namespace abh
