#include "abh/kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace abh {

void ParamPair::validate() const {
  if (is_nonpositive_integer(alpha) && std::abs(alpha) > 0.5)
    throw std::invalid_argument("ParamPair: alpha is a negative integer");
  if (is_nonpositive_integer(beta) && std::abs(beta) > 0.5)
    throw std::invalid_argument("ParamPair: beta is a negative integer");
  if (!((alpha + beta).real() > -1.0))
    throw std::invalid_argument("ParamPair: Re(alpha+beta) <= -1");
}

bool ParamPair::admissible() const {
  try {
    validate();
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

cplx DiskPoint::to_complex() const { return std::polar(r, theta); }

cplx c_const(const ParamPair& params) {
  params.validate();
  return cgamma(params.alpha + 1.0) * cgamma(params.beta + 1.0) /
         cgamma(params.alpha + params.beta + 1.0);
}

cplx u_value(const ParamPair& params, const cplx& z) {
  const double one_minus = 1.0 - std::norm(z);
  return std::pow(cplx(one_minus), params.alpha + params.beta + 1.0) /
         (std::pow(1.0 - z, params.alpha + 1.0) *
          std::pow(1.0 - std::conj(z), params.beta + 1.0));
}

cplx u_value(const ParamPair& params, const DiskPoint& z) {
  return u_value(params, z.to_complex());
}

cplx kernel_value(const ParamPair& params, const cplx& z) {
  return c_const(params) * u_value(params, z);
}

cplx kernel_value(const ParamPair& params, const DiskPoint& z) {
  return kernel_value(params, z.to_complex());
}

cplx u_dz(const ParamPair& params, const cplx& z) {
  const cplx zb = std::conj(z);
  const double d = 1.0 - std::norm(z);
  const cplx factor =
      (params.alpha + 1.0) * (1.0 - zb) / ((1.0 - z) * d) - params.beta * zb / d;
  return factor * u_value(params, z);
}

cplx u_dzbar(const ParamPair& params, const cplx& z) {
  const cplx zb = std::conj(z);
  const double d = 1.0 - std::norm(z);
  const cplx factor =
      (params.beta + 1.0) * (1.0 - z) / ((1.0 - zb) * d) - params.alpha * z / d;
  return factor * u_value(params, z);
}

cplx u_dz(const ParamPair& params, const DiskPoint& z) {
  return u_dz(params, z.to_complex());
}

cplx u_dzbar(const ParamPair& params, const DiskPoint& z) {
  return u_dzbar(params, z.to_complex());
}

TermSum u_term_sum(const ParamPair& params) {
  return {KernelTerm{1.0, 0, 0, params.alpha + params.beta + 1.0,
                     params.alpha + 1.0, params.beta + 1.0}};
}

TermSum term_sum_dz(const TermSum& terms) {
  TermSum out;
  out.reserve(terms.size() * 3);
  for (const auto& t : terms) {
    if (t.zpow > 0) {
      KernelTerm n = t;
      n.coeff *= double(t.zpow);
      n.zpow -= 1;
      out.push_back(n);
    }
    {
      // d/dz (1-|z|^2)^s = -s zbar (1-|z|^2)^{s-1}
      KernelTerm n = t;
      n.coeff *= -t.s;
      n.zbarpow += 1;
      n.s -= 1.0;
      out.push_back(n);
    }
    {
      // d/dz (1-z)^{-p} = p (1-z)^{-p-1}
      KernelTerm n = t;
      n.coeff *= t.p;
      n.p += 1.0;
      out.push_back(n);
    }
  }
  return out;
}

TermSum term_sum_dzbar(const TermSum& terms) {
  TermSum out;
  out.reserve(terms.size() * 3);
  for (const auto& t : terms) {
    if (t.zbarpow > 0) {
      KernelTerm n = t;
      n.coeff *= double(t.zbarpow);
      n.zbarpow -= 1;
      out.push_back(n);
    }
    {
      KernelTerm n = t;
      n.coeff *= -t.s;
      n.zpow += 1;
      n.s -= 1.0;
      out.push_back(n);
    }
    {
      KernelTerm n = t;
      n.coeff *= t.q;
      n.q += 1.0;
      out.push_back(n);
    }
  }
  return out;
}

cplx term_sum_eval(const TermSum& terms, const cplx& z) {
  const cplx zb = std::conj(z);
  const cplx one_minus = cplx(1.0 - std::norm(z));
  cplx sum = 0.0;
  for (const auto& t : terms) {
    cplx v = t.coeff;
    for (int i = 0; i < t.zpow; ++i) v *= z;
    for (int j = 0; j < t.zbarpow; ++j) v *= zb;
    v *= std::pow(one_minus, t.s);
    v *= std::pow(1.0 - z, -t.p);
    v *= std::pow(1.0 - zb, -t.q);
    sum += v;
  }
  return sum;
}

cplx u_higher_deriv(const ParamPair& params, const cplx& z, unsigned k,
                    unsigned l) {
  if (k + l > kMaxDerivOrder) {
    std::ostringstream os;
    os << "u_higher_deriv: order k+l = " << k + l << " exceeds bound "
       << kMaxDerivOrder;
    throw std::invalid_argument(os.str());
  }
  TermSum terms = u_term_sum(params);
  for (unsigned i = 0; i < k; ++i) terms = term_sum_dz(terms);
  for (unsigned j = 0; j < l; ++j) terms = term_sum_dzbar(terms);
  return term_sum_eval(terms, z);
}

cplx u_higher_deriv(const ParamPair& params, const DiskPoint& z, unsigned k,
                    unsigned l) {
  return u_higher_deriv(params, z.to_complex(), k, l);
}

double u_modulus_bound(const ParamPair& params, const cplx& z) {
  const double s = (params.alpha + params.beta).real();
  const double im = std::abs((params.alpha - params.beta).imag());
  const double one_minus = 1.0 - std::norm(z);
  return std::exp(0.5 * std::numbers::pi * im) * std::pow(one_minus, s + 1.0) /
         std::pow(std::abs(1.0 - z), s + 2.0);
}

double u_modulus_bound(const ParamPair& params, const DiskPoint& z) {
  return u_modulus_bound(params, z.to_complex());
}

double estimate_Ckl(const ParamPair& params, unsigned k, unsigned l,
                    int n_radii, int n_angles) {
  if (k + l == 0) return 1.0;
  if (k + l > kMaxDerivOrder)
    throw std::invalid_argument("estimate_Ckl: order beyond bound");

  TermSum terms = u_term_sum(params);
  for (unsigned i = 0; i < k; ++i) terms = term_sum_dz(terms);
  for (unsigned j = 0; j < l; ++j) terms = term_sum_dzbar(terms);

  double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (int ir = 0; ir < n_radii; ++ir) {
    const double r = 0.99 * double(ir + 1) / double(n_radii);
    const double w = std::pow(1.0 - r * r, double(k + l));
    for (int ia = 0; ia < n_angles; ++ia) {
      const double th = 2.0 * std::numbers::pi * ia / n_angles;
      const cplx z = std::polar(r, th);
      const double ratio =
          std::abs(term_sum_eval(terms, z)) * w / std::abs(u_value(params, z));
      if (ratio > best) best = ratio;
    }
  }
  return best;
}

}  // namespace abh
