#ifndef ABH_BOUNDARY_HPP
#define ABH_BOUNDARY_HPP

#include <map>
#include <vector>

#include "abh/specfun.hpp"

namespace abh {

// Function on the unit circle, one of
//   constant        f == value
//   fourier         f(e^{it}) = sum_m a_m e^{imt}, finite support
//   samples         N uniform samples at t_j = 2 pi j / N, N a power of two
// All variants are held internally as a finite Fourier series; the samples
// variant is converted by exact DFT (trigonometric interpolation).
class BoundaryFunction {
 public:
  static BoundaryFunction constant(const cplx& value);
  static BoundaryFunction fourier(std::map<int, cplx> coeffs);
  static BoundaryFunction samples(const std::vector<cplx>& values);

  bool is_samples() const { return is_samples_; }

  // Fourier modes a_m, m in [-degree, degree].
  const std::map<int, cplx>& modes() const { return modes_; }
  int degree() const;

  cplx eval(double t) const;

  // f at the n uniform nodes t_j = 2 pi j / n.
  std::vector<cplx> values_at(int n) const;

  // ||f||_{L^p(T)} on a 4096-node grid; p = infinity is the grid maximum.
  double lp_norm(double p) const;

  // Exact ||f||_{L^2} by Parseval, as an independent cross-check.
  double l2_norm_parseval() const;

 private:
  BoundaryFunction() = default;
  std::map<int, cplx> modes_;
  bool is_samples_ = false;
};

}  // namespace abh

#endif
