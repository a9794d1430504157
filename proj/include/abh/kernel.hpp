#ifndef ABH_KERNEL_HPP
#define ABH_KERNEL_HPP

#include <vector>

#include "abh/specfun.hpp"

namespace abh {

// Parameter pair (alpha, beta).  Admissible when neither is a negative
// integer and Re(alpha+beta) > -1.
struct ParamPair {
  cplx alpha;
  cplx beta;

  // Throws std::invalid_argument naming the violated invariant.
  void validate() const;
  bool admissible() const;
};

// Polar point z = r e^{i theta}, 0 <= r < 1.
struct DiskPoint {
  double r = 0.0;
  double theta = 0.0;

  cplx to_complex() const;
};

// Normalization constant Gamma(alpha+1)Gamma(beta+1)/Gamma(alpha+beta+1).
cplx c_const(const ParamPair& params);

// Canonical solution u(z) = (1-|z|^2)^{a+b+1} / ((1-z)^{a+1}(1-zbar)^{b+1}),
// principal-branch powers throughout.
cplx u_value(const ParamPair& params, const DiskPoint& z);
cplx u_value(const ParamPair& params, const cplx& z);

// Poisson kernel c_const * u_value.
cplx kernel_value(const ParamPair& params, const DiskPoint& z);
cplx kernel_value(const ParamPair& params, const cplx& z);

// First Wirtinger derivatives of u in closed form.
cplx u_dz(const ParamPair& params, const cplx& z);
cplx u_dzbar(const ParamPair& params, const cplx& z);
cplx u_dz(const ParamPair& params, const DiskPoint& z);
cplx u_dzbar(const ParamPair& params, const DiskPoint& z);

// Term algebra for exact higher derivatives of u: a finite sum of
//   coeff * z^i zbar^j (1-|z|^2)^s (1-z)^{-p} (1-zbar)^{-q},
// closed under d/dz and d/dzbar.
struct KernelTerm {
  cplx coeff;
  int zpow = 0;
  int zbarpow = 0;
  cplx s;  // exponent of (1-|z|^2)
  cplx p;  // exponent of (1-z)^{-1}
  cplx q;  // exponent of (1-zbar)^{-1}
};

using TermSum = std::vector<KernelTerm>;

TermSum u_term_sum(const ParamPair& params);
TermSum term_sum_dz(const TermSum& terms);
TermSum term_sum_dzbar(const TermSum& terms);
cplx term_sum_eval(const TermSum& terms, const cplx& z);

inline constexpr unsigned kMaxDerivOrder = 4;  // k + l <= 4

// Exact d^k dbar^l u(z) via the term algebra.  Throws for k+l beyond the
// implementation bound.
cplx u_higher_deriv(const ParamPair& params, const cplx& z, unsigned k,
                    unsigned l);
cplx u_higher_deriv(const ParamPair& params, const DiskPoint& z, unsigned k,
                    unsigned l);

// Pointwise modulus bound
// exp(pi/2 |Im(a-b)|) (1-|z|^2)^{Re(a+b)+1} / |1-z|^{Re(a+b)+2}.
double u_modulus_bound(const ParamPair& params, const cplx& z);
double u_modulus_bound(const ParamPair& params, const DiskPoint& z);

// Numerical lower estimate of the constant C_{a,b,k,l} bounding
// |d^k dbar^l u| (1-|z|^2)^{k+l} / |u|, by maximization over a polar grid
// (radii up to 0.99).
double estimate_Ckl(const ParamPair& params, unsigned k, unsigned l,
                    int n_radii = 64, int n_angles = 256);

}  // namespace abh

#endif
