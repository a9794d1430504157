#ifndef ABH_DIRICHLET_HPP
#define ABH_DIRICHLET_HPP

#include <vector>

#include "abh/boundary.hpp"
#include "abh/kernel.hpp"

namespace abh {

inline constexpr double kMaxEvalRadius = 0.999;

// Polar evaluation grid: strictly increasing radii below 1, uniform angles.
struct EvalGrid {
  std::vector<double> radii;
  int n_theta = 0;

  void validate() const;
};

// Quadrature node count for radius r: max(floor, next power of two >=
// 64/(1-r)).  The floor defaults to 512 and can be raised through the
// ABH_QUAD_NODES environment variable.
int quad_nodes(double r);

// Poisson-type integral w(z) = (1/2pi) int K(z e^{-it}) f(e^{it}) dt by the
// periodic trapezoidal rule.
cplx extend(const ParamPair& params, const BoundaryFunction& f, const cplx& z);
cplx extend(const ParamPair& params, const BoundaryFunction& f,
            const DiskPoint& z);

// Wirtinger derivatives of the extension (differentiation under the
// integral sign, closed-form kernel derivatives).
cplx extend_dz(const ParamPair& params, const BoundaryFunction& f,
               const cplx& z);
cplx extend_dzbar(const ParamPair& params, const BoundaryFunction& f,
                  const cplx& z);

// d^k dbar^l of the extension via the exact kernel term algebra.
cplx extend_deriv(const ParamPair& params, const BoundaryFunction& f,
                  const cplx& z, unsigned k, unsigned l);

// Extension (and its (k,l) derivative) on n uniform angles of the circle of
// radius r, computed as a circular convolution of kernel samples with
// boundary samples.  The OpenMP version parallelizes over output angles;
// the serial version is the reference used in tests and benchmarks.
std::vector<cplx> circle_profile(const ParamPair& params,
                                 const BoundaryFunction& f, double r, int n,
                                 unsigned k = 0, unsigned l = 0);
std::vector<cplx> circle_profile_serial(const ParamPair& params,
                                        const BoundaryFunction& f, double r,
                                        int n, unsigned k = 0, unsigned l = 0);

// Integral mean M_p(r, w) of the extension, trapezoid on >= 1024 angles;
// p = infinity is the grid maximum.
double integral_mean(const ParamPair& params, const BoundaryFunction& f,
                     double r, double p, unsigned k = 0, unsigned l = 0);

// sup over the angle grid of |w(r e^{i theta}) - f(e^{i theta})| per radius.
std::vector<double> boundary_convergence_report(const ParamPair& params,
                                                const BoundaryFunction& f,
                                                const std::vector<double>& radii);

// (1-|z|^2) w_{z zbar} + a z w_z + b zbar w_zbar - a b w, with the mixed
// second derivative from a 5-point discrete Laplacian of extend.
cplx operator_residual(const ParamPair& params, const BoundaryFunction& f,
                       const cplx& z);

// Row-major (r outer, theta inner) field evaluation; parallel over points.
std::vector<cplx> grid_eval(const ParamPair& params, const BoundaryFunction& f,
                            const EvalGrid& grid);
std::vector<cplx> grid_eval_serial(const ParamPair& params,
                                   const BoundaryFunction& f,
                                   const EvalGrid& grid);

}  // namespace abh

#endif
