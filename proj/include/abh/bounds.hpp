#ifndef ABH_BOUNDS_HPP
#define ABH_BOUNDS_HPP

#include "abh/kernel.hpp"

namespace abh {

// Right-hand sides of the integral-mean and derivative inequalities.
// p is a double with std::numeric_limits<double>::infinity() for the
// sup-norm case; q denotes the conjugate exponent p/(p-1).

struct Theorem31Result {
  double rhs;      // |c| exp(pi/2 |Im(a-b)|) F(-s/2,-s/2;1;r^2) ||f||
  double cap;      // exp(pi/2 |Im(a-b)|) B(a,b) ||f||  (r-independent)
  double B;        // Gamma(s+1)/Gamma^2(s/2+1), s = Re(a+b)
};

Theorem31Result theorem31_rhs(const ParamPair& params, double p, double r,
                              double f_norm);

struct Theorem32Result {
  double C_r;       // |c|(|a+1|+|b|r) F1
  double C_const;   // |c|(|a+1|+|b|) (Gamma((s+2)q-1)/Gamma^2((s+2)q/2))^{1/q}
  double D_r;       // |c|(|b+1|+|a|r) F1
  double D_const;   // |c|(|b+1|+|a|) (...)^{1/q}
  double F1;        // F(1-(s+2)q/2, 1-(s+2)q/2; 1; r^2)^{1/q}
};

// Requires p > 1 (finite conjugate exponent).
Theorem32Result theorem32_bounds(const ParamPair& params, double p, double r);

// (|c| Ckl / (1-r^2)^{k+l}) exp(pi/2 |Im(a-b)|) F(-s/2,-s/2;1;r^2) ||f||.
double theorem33_rhs(const ParamPair& params, double p, double r, unsigned k,
                     unsigned l, double Ckl, double f_norm);

struct Theorem44Result {
  double bound_ck;       // |c| |(a+1)_k| / k! ||f||
  double bound_cminusk;  // |c| |(b+1)_k| / k! ||f||
  double combined;       // 2 |c| C_q ||f||
  double C_q;
};

Theorem44Result theorem44_bounds(const ParamPair& params, double p, unsigned k,
                                 double f_norm);

// ((1/2pi) int |cos kt|^q dt)^{1/q}; independent of k over full periods.
double coefficient_Cq(double q, unsigned k);

// Weighted first-derivative bound; p = 1 and p > 1 branches.
double theorem45_rhs(const ParamPair& params, double p, double r,
                     double f_norm);

}  // namespace abh

#endif
