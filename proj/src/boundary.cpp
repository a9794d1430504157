#include "abh/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace abh {

namespace {
constexpr int kNormGrid = 4096;

bool power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

BoundaryFunction BoundaryFunction::constant(const cplx& value) {
  BoundaryFunction f;
  f.modes_[0] = value;
  return f;
}

BoundaryFunction BoundaryFunction::fourier(std::map<int, cplx> coeffs) {
  BoundaryFunction f;
  f.modes_ = std::move(coeffs);
  return f;
}

BoundaryFunction BoundaryFunction::samples(const std::vector<cplx>& values) {
  const size_t n = values.size();
  if (n < 8 || !power_of_two(n))
    throw std::invalid_argument(
        "BoundaryFunction::samples: N must be a power of two, N >= 8");
  BoundaryFunction f;
  f.is_samples_ = true;
  // Exact DFT onto modes m in [-N/2, N/2-1].
  const int half = int(n) / 2;
  for (int m = -half; m < half; ++m) {
    cplx a = 0.0;
    const cplx step = std::polar(1.0, -2.0 * std::numbers::pi * m / double(n));
    cplx phase = 1.0;
    for (size_t j = 0; j < n; ++j) {
      a += values[j] * phase;
      phase *= step;
    }
    f.modes_[m] = a / double(n);
  }
  return f;
}

int BoundaryFunction::degree() const {
  int d = 0;
  for (const auto& [m, a] : modes_) d = std::max(d, std::abs(m));
  return d;
}

cplx BoundaryFunction::eval(double t) const {
  cplx sum = 0.0;
  for (const auto& [m, a] : modes_) sum += a * std::polar(1.0, m * t);
  return sum;
}

std::vector<cplx> BoundaryFunction::values_at(int n) const {
  const int d = degree();
  std::vector<cplx> dense(2 * d + 1, 0.0);
  for (const auto& [m, a] : modes_) dense[m + d] = a;

  std::vector<cplx> out(n);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * j / n;
    const cplx e = std::polar(1.0, t);
    cplx phase = std::polar(1.0, -d * t);
    cplx sum = 0.0;
    for (int i = 0; i < 2 * d + 1; ++i) {
      sum += dense[i] * phase;
      phase *= e;
    }
    out[j] = sum;
  }
  return out;
}

double BoundaryFunction::lp_norm(double p) const {
  if (!(p >= 1.0))
    throw std::invalid_argument("lp_norm: p must be >= 1 (or infinity)");
  const auto vals = values_at(kNormGrid);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : vals) m = std::max(m, std::abs(v));
    return m;
  }
  double sum = 0.0;
  for (const auto& v : vals) sum += std::pow(std::abs(v), p);
  return std::pow(sum / kNormGrid, 1.0 / p);
}

double BoundaryFunction::l2_norm_parseval() const {
  double s = 0.0;
  for (const auto& [m, a] : modes_) s += std::norm(a);
  return std::sqrt(s);
}

}  // namespace abh
