#include "abh/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace abh {

void EvalGrid::validate() const {
  if (n_theta <= 0) throw std::invalid_argument("EvalGrid: n_theta <= 0");
  double prev = -1.0;
  for (double r : radii) {
    if (!(r >= 0.0 && r < 1.0))
      throw std::invalid_argument("EvalGrid: radius outside [0,1)");
    if (!(r > prev))
      throw std::invalid_argument("EvalGrid: radii not strictly increasing");
    prev = r;
  }
}

namespace {

int node_floor() {
  if (const char* env = std::getenv("ABH_QUAD_NODES")) {
    const int v = std::atoi(env);
    if (v >= 64) return v;
  }
  return 512;
}

int next_pow2(double x) {
  int n = 1;
  while (n < x) n *= 2;
  return n;
}

void check_radius(double r) {
  if (r > kMaxEvalRadius)
    throw std::invalid_argument("extend: radius exceeds 0.999");
}

// Kernel samples on the circle of radius r, including the normalization
// constant: g_m = c * d^k dbar^l u(r e^{i s_m}).
std::vector<cplx> kernel_samples(const ParamPair& params, double r, int n,
                                 unsigned k, unsigned l) {
  const cplx c = c_const(params);
  TermSum terms = u_term_sum(params);
  for (unsigned i = 0; i < k; ++i) terms = term_sum_dz(terms);
  for (unsigned j = 0; j < l; ++j) terms = term_sum_dzbar(terms);
  std::vector<cplx> g(n);
  for (int m = 0; m < n; ++m) {
    const double s = 2.0 * std::numbers::pi * m / n;
    g[m] = c * term_sum_eval(terms, std::polar(r, s));
  }
  return g;
}

// Chain-rule factor e^{i(l-k)t} folded into the boundary samples.
std::vector<cplx> boundary_samples(const BoundaryFunction& f, int n, unsigned k,
                                   unsigned l) {
  auto fv = f.values_at(n);
  if (k != l) {
    const int d = int(l) - int(k);
    for (int j = 0; j < n; ++j)
      fv[j] *= std::polar(1.0, d * 2.0 * std::numbers::pi * j / n);
  }
  return fv;
}

std::vector<cplx> profile_impl(const ParamPair& params,
                               const BoundaryFunction& f, double r, int n,
                               unsigned k, unsigned l, bool parallel) {
  check_radius(r);
  const auto g = kernel_samples(params, r, n, k, l);
  const auto fv = boundary_samples(f, n, k, l);
  std::vector<cplx> w(n);
#pragma omp parallel for schedule(static) if (parallel)
  for (int j = 0; j < n; ++j) {
    cplx sum = 0.0;
    for (int m = 0; m < n; ++m) {
      int idx = j - m;
      if (idx < 0) idx += n;
      sum += g[idx] * fv[m];
    }
    w[j] = sum / double(n);
  }
  return w;
}

}  // namespace

int quad_nodes(double r) {
  return std::max(node_floor(), next_pow2(64.0 / (1.0 - r)));
}

cplx extend(const ParamPair& params, const BoundaryFunction& f, const cplx& z) {
  return extend_deriv(params, f, z, 0, 0);
}

cplx extend(const ParamPair& params, const BoundaryFunction& f,
            const DiskPoint& z) {
  return extend(params, f, z.to_complex());
}

cplx extend_deriv(const ParamPair& params, const BoundaryFunction& f,
                  const cplx& z, unsigned k, unsigned l) {
  const double r = std::abs(z);
  check_radius(r);
  const int n = quad_nodes(r);
  const cplx c = c_const(params);
  TermSum terms = u_term_sum(params);
  for (unsigned i = 0; i < k; ++i) terms = term_sum_dz(terms);
  for (unsigned j = 0; j < l; ++j) terms = term_sum_dzbar(terms);
  const auto fv = boundary_samples(f, n, k, l);
  cplx sum = 0.0;
  for (int m = 0; m < n; ++m) {
    const double t = 2.0 * std::numbers::pi * m / n;
    sum += term_sum_eval(terms, z * std::polar(1.0, -t)) * fv[m];
  }
  return c * sum / double(n);
}

cplx extend_dz(const ParamPair& params, const BoundaryFunction& f,
               const cplx& z) {
  const double r = std::abs(z);
  check_radius(r);
  const int n = quad_nodes(r);
  const cplx c = c_const(params);
  const auto fv = f.values_at(n);
  cplx sum = 0.0;
  for (int m = 0; m < n; ++m) {
    const double t = 2.0 * std::numbers::pi * m / n;
    const cplx e = std::polar(1.0, -t);
    sum += u_dz(params, z * e) * e * fv[m];
  }
  return c * sum / double(n);
}

cplx extend_dzbar(const ParamPair& params, const BoundaryFunction& f,
                  const cplx& z) {
  const double r = std::abs(z);
  check_radius(r);
  const int n = quad_nodes(r);
  const cplx c = c_const(params);
  const auto fv = f.values_at(n);
  cplx sum = 0.0;
  for (int m = 0; m < n; ++m) {
    const double t = 2.0 * std::numbers::pi * m / n;
    sum += u_dzbar(params, z * std::polar(1.0, -t)) * std::polar(1.0, t) *
           fv[m];
  }
  return c * sum / double(n);
}

std::vector<cplx> circle_profile(const ParamPair& params,
                                 const BoundaryFunction& f, double r, int n,
                                 unsigned k, unsigned l) {
  return profile_impl(params, f, r, n, k, l, true);
}

std::vector<cplx> circle_profile_serial(const ParamPair& params,
                                        const BoundaryFunction& f, double r,
                                        int n, unsigned k, unsigned l) {
  return profile_impl(params, f, r, n, k, l, false);
}

double integral_mean(const ParamPair& params, const BoundaryFunction& f,
                     double r, double p, unsigned k, unsigned l) {
  if (!(p >= 1.0))
    throw std::invalid_argument("integral_mean: p must be >= 1 (or infinity)");
  const int n = std::max(1024, quad_nodes(r));
  const auto w = circle_profile(params, f, r, n, k, l);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : w) m = std::max(m, std::abs(v));
    return m;
  }
  double sum = 0.0;
  for (const auto& v : w) sum += std::pow(std::abs(v), p);
  return std::pow(sum / n, 1.0 / p);
}

std::vector<double> boundary_convergence_report(
    const ParamPair& params, const BoundaryFunction& f,
    const std::vector<double>& radii) {
  if (f.is_samples())
    throw std::invalid_argument(
        "boundary_convergence_report: requires a constant or fourier boundary");
  std::vector<double> out;
  out.reserve(radii.size());
  for (double r : radii) {
    const int n = std::max(1024, quad_nodes(r));
    const auto w = circle_profile(params, f, r, n);
    const auto fv = f.values_at(n);
    double sup = 0.0;
    for (int j = 0; j < n; ++j) sup = std::max(sup, std::abs(w[j] - fv[j]));
    out.push_back(sup);
  }
  return out;
}

cplx operator_residual(const ParamPair& params, const BoundaryFunction& f,
                       const cplx& z) {
  const double h = 1e-4;
  const cplx w0 = extend(params, f, z);
  const cplx lap = (extend(params, f, z + h) + extend(params, f, z - h) +
                    extend(params, f, z + cplx(0, h)) +
                    extend(params, f, z - cplx(0, h)) - 4.0 * w0) /
                   (h * h);
  const cplx wz = extend_dz(params, f, z);
  const cplx wzb = extend_dzbar(params, f, z);
  return (1.0 - std::norm(z)) * 0.25 * lap + params.alpha * z * wz +
         params.beta * std::conj(z) * wzb - params.alpha * params.beta * w0;
}

namespace {

std::vector<cplx> grid_impl(const ParamPair& params, const BoundaryFunction& f,
                            const EvalGrid& grid, bool parallel) {
  grid.validate();
  const int nr = int(grid.radii.size());
  const int nt = grid.n_theta;
  std::vector<cplx> out(size_t(nr) * nt);
#pragma omp parallel for collapse(2) schedule(static) if (parallel)
  for (int ir = 0; ir < nr; ++ir) {
    for (int it = 0; it < nt; ++it) {
      const DiskPoint z{grid.radii[ir], 2.0 * std::numbers::pi * it / nt};
      out[size_t(ir) * nt + it] = extend(params, f, z);
    }
  }
  return out;
}

}  // namespace

std::vector<cplx> grid_eval(const ParamPair& params, const BoundaryFunction& f,
                            const EvalGrid& grid) {
  return grid_impl(params, f, grid, true);
}

std::vector<cplx> grid_eval_serial(const ParamPair& params,
                                   const BoundaryFunction& f,
                                   const EvalGrid& grid) {
  return grid_impl(params, f, grid, false);
}

}  // namespace abh
