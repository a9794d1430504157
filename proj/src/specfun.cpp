#include "abh/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace abh {

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_gamma(const cplx& z) {
  // Valid for Re(z) >= 0.5.
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z - 1.0 + double(i));
  cplx t = z + kLanczosG - 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z - 0.5) *
         std::exp(-t) * x;
}

}  // namespace

bool is_nonpositive_integer(const cplx& z, double margin) {
  if (std::abs(z.imag()) > margin) return false;
  double n = std::round(z.real());
  return n <= 0.0 && std::abs(z.real() - n) <= margin;
}

cplx cgamma(const cplx& z) {
  if (is_nonpositive_integer(z)) {
    std::ostringstream os;
    os << "cgamma: pole at z = (" << z.real() << "," << z.imag() << ")";
    throw std::domain_error(os.str());
  }
  if (z.real() >= 0.5) return lanczos_gamma(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  return std::numbers::pi /
         (std::sin(std::numbers::pi * z) * lanczos_gamma(1.0 - z));
}

cplx rgamma(const cplx& z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return 1.0 / cgamma(z);
}

cplx pochhammer(const cplx& a, unsigned n) {
  cplx p = 1.0;
  for (unsigned k = 0; k < n; ++k) p *= a + double(k);
  return p;
}

namespace {

constexpr double kSeriesTol = 1e-15;
constexpr int kSeriesCap = 100000;

cplx hyp2f1_series(const cplx& a, const cplx& b, const cplx& c, double x) {
  cplx sum = 1.0;
  cplx term = 1.0;
  for (int n = 0; n < kSeriesCap; ++n) {
    term *= (a + double(n)) * (b + double(n)) /
            ((c + double(n)) * double(n + 1)) * x;
    sum += term;
    if (std::abs(term) < kSeriesTol * std::abs(sum)) return sum;
  }
  throw std::runtime_error("hyp2f1: series failed to converge");
}

bool near_integer(const cplx& z, double margin = kPoleMargin) {
  return std::abs(z.imag()) <= margin &&
         std::abs(z.real() - std::round(z.real())) <= margin;
}

}  // namespace

cplx hyp2f1(const HypParams& p) {
  const cplx &a = p.a, &b = p.b, &c = p.c;
  const double x = p.x;
  if (is_nonpositive_integer(c))
    throw std::invalid_argument("hyp2f1: c is zero or a negative integer");
  if (!(x >= 0.0 && x < 1.0))
    throw std::invalid_argument("hyp2f1: x outside [0,1)");

  const bool terminating =
      is_nonpositive_integer(a) || is_nonpositive_integer(b);
  const cplx cab = c - a - b;
  if (!terminating && x > 0.75 && cab.real() > 0.0 && !near_integer(cab)) {
    // Linear transformation x -> 1-x.
    const double w = 1.0 - x;
    cplx t1 = cgamma(c) * cgamma(cab) * rgamma(c - a) * rgamma(c - b) *
              hyp2f1_series(a, b, 1.0 - cab, w);
    cplx t2 = std::pow(cplx(w), cab) * cgamma(c) * cgamma(-cab) * rgamma(a) *
              rgamma(b) * hyp2f1_series(c - a, c - b, 1.0 + cab, w);
    return t1 + t2;
  }
  return hyp2f1_series(a, b, c, x);
}

cplx hyp2f1(const cplx& a, const cplx& b, const cplx& c, double x) {
  return hyp2f1(HypParams{a, b, c, x});
}

cplx hyp2f1_limit_at_1(const cplx& a, const cplx& b, const cplx& c) {
  const cplx cab = c - a - b;
  if (!(cab.real() > 0.0))
    throw std::invalid_argument("hyp2f1_limit_at_1: Re(c-a-b) <= 0");
  if (is_nonpositive_integer(c))
    throw std::invalid_argument(
        "hyp2f1_limit_at_1: c is zero or a negative integer");
  if (is_nonpositive_integer(c - a))
    throw std::invalid_argument(
        "hyp2f1_limit_at_1: c-a is zero or a negative integer");
  if (is_nonpositive_integer(c - b))
    throw std::invalid_argument(
        "hyp2f1_limit_at_1: c-b is zero or a negative integer");
  return cgamma(c) * cgamma(cab) / (cgamma(c - a) * cgamma(c - b));
}

cplx hyp2f1_derivative(const cplx& a, const cplx& b, const cplx& c, double x) {
  if (std::abs(c) <= kPoleMargin)
    throw std::invalid_argument("hyp2f1_derivative: c must be nonzero");
  return a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, x);
}

}  // namespace abh
