#ifndef ABH_SERIES_HPP
#define ABH_SERIES_HPP

#include <map>

#include "abh/boundary.hpp"
#include "abh/kernel.hpp"

namespace abh {

// Truncated two-sided coefficient sequence {c_m}, |m| <= M.
struct CoefficientSeq {
  int M = 0;
  std::map<int, cplx> c;

  cplx at(int m) const {
    auto it = c.find(m);
    return it == c.end() ? cplx(0.0) : it->second;
  }
};

// Hypergeometric series representation:
//   sum_{m>=0} c_m F(-a, m-b; m+1; |z|^2) z^m
// + sum_{m>=1} c_{-m} F(-b, m-a; m+1; |z|^2) zbar^m.
cplx eval_series(const ParamPair& params, const CoefficientSeq& coeffs,
                 const cplx& z);
cplx eval_series(const ParamPair& params, const CoefficientSeq& coeffs,
                 const DiskPoint& z);

// Coefficients reproducing the Poisson-type extension of f:
//   c_k = c_{a,b} (a+1)_k / k! fhat(sigma k),
//   c_{-k} = c_{a,b} (b+1)_k / k! fhat(-sigma k),
// where the Fourier-index orientation sigma is fixed once by comparing both
// candidates against the quadrature solver on f = e^{it}.
CoefficientSeq coeffs_from_boundary(const ParamPair& params,
                                    const BoundaryFunction& f, int M);

// Orientation sign chosen by the oracle (exposed for reporting).
int fourier_orientation();

// The operator z d/dz - zbar d/dzbar on series coefficients:
// c_m -> m c_m (m >= 0), c_{-m} -> -m c_{-m}.
CoefficientSeq apply_D(const CoefficientSeq& coeffs);

}  // namespace abh

#endif
