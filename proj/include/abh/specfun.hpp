#ifndef ABH_SPECFUN_HPP
#define ABH_SPECFUN_HPP

#include <complex>

namespace abh {

using cplx = std::complex<double>;

// Margin below which a floating-point value counts as a nonpositive integer
// (Gamma pole, terminating hypergeometric parameter, ...).
inline constexpr double kPoleMargin = 1e-9;

bool is_nonpositive_integer(const cplx& z, double margin = kPoleMargin);

// Gamma function on the complex plane (Lanczos approximation with
// reflection).  Throws std::domain_error at the poles 0, -1, -2, ...
cplx cgamma(const cplx& z);

// 1/Gamma(z); entire, returns 0 at the poles of Gamma.
cplx rgamma(const cplx& z);

// Ascending factorial (a)_n, computed as a direct product so that it is
// valid (and exactly zero where appropriate) for nonpositive a.
cplx pochhammer(const cplx& a, unsigned n);

struct HypParams {
  cplx a;
  cplx b;
  cplx c;
  double x;  // in [0,1)
};

// Gauss hypergeometric function F(a,b;c;x) for real x in [0,1).
// Direct series with term recurrence; near x=1 the standard 1-x linear
// transformation is applied when it is valid.  Terminates exactly when
// a or b is a nonpositive integer.
cplx hyp2f1(const HypParams& p);
cplx hyp2f1(const cplx& a, const cplx& b, const cplx& c, double x);

// lim_{x->1} F(a,b;c;x) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)),
// valid for Re(c-a-b) > 0.
cplx hyp2f1_limit_at_1(const cplx& a, const cplx& b, const cplx& c);

// dF/dx = (ab/c) F(a+1,b+1;c+1;x).
cplx hyp2f1_derivative(const cplx& a, const cplx& b, const cplx& c, double x);

}  // namespace abh

#endif
