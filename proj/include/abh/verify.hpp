#ifndef ABH_VERIFY_HPP
#define ABH_VERIFY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "abh/bounds.hpp"
#include "abh/dirichlet.hpp"
#include "abh/series.hpp"

namespace abh {

struct SuiteConfig {
  std::uint64_t seed = 42;
  int n_boundary = 50;
  int degree = 4;
  std::vector<ParamPair> param_grid;
  std::vector<double> radii{0.3, 0.6, 0.9};
  std::vector<double> p_list{1.0, 2.0, 4.0,
                             std::numeric_limits<double>::infinity()};
  double tolerance_rel = 1e-8;

  void validate() const;
  static SuiteConfig defaults();
};

struct CheckResult {
  std::string name;
  ParamPair params{0.0, 0.0};
  double p = 0.0;
  double r = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool pass = false;
  std::string error;  // nonempty when a solver error was recorded
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  int total = 0;
  int failed = 0;
  double worst_margin = std::numeric_limits<double>::infinity();

  void add(CheckResult c);
  void merge(const VerificationReport& other);
  std::string to_json() const;
};

// Randomized inequality suites.  LHS values come from the quadrature and
// series solvers, RHS values from the bounds module; a check passes when
// lhs <= rhs * (1 + tolerance_rel).  Solver errors are recorded as failed
// checks, never aborting the suite.
VerificationReport suite_t31(const SuiteConfig& cfg);
VerificationReport suite_t32(const SuiteConfig& cfg);
VerificationReport suite_t33(const SuiteConfig& cfg);
VerificationReport suite_t44(const SuiteConfig& cfg);
VerificationReport suite_t45(const SuiteConfig& cfg);
VerificationReport run_inequality_suite(const SuiteConfig& cfg);

// Extremal boundary family for the first-derivative sharpness experiment:
// |f_rho| = |1 - rho e^{is}|^{-2/(p-1)} (normalized by (1-rho^2)^{2/(1-p)}),
// with the unimodular phase that aligns the kernel derivative at radius rho;
// sampled on 4096 nodes.  conjugate=true gives the variant driving the
// dbar-derivative ratio.  The ratio (1-r^2)^{1+1/p}|w_z(rho)| / ||f_rho||_p
// then approaches the limit constant of theorem32_bounds as rho -> 1.
BoundaryFunction sharpness_extremal(double p, double rho,
                                    bool conjugate = false);
VerificationReport sharpness_suite(const SuiteConfig& cfg);

// Sub-mean-value and discrete-Laplacian tests of F(-a,-b;1;|z|^2) for real
// positive parameters.
VerificationReport subharmonicity_check(const ParamPair& params,
                                        const EvalGrid& grid, double delta);
VerificationReport subharmonic_suite(const SuiteConfig& cfg);

// Operator residual for quadrature-, series-, and D-operator-produced
// functions at random points.
VerificationReport residual_suite(const SuiteConfig& cfg);

// Dispatcher for the CLI: suite is one of
// all|t31|t32|t33|t44|t45|subharmonic|residual|sharpness.
VerificationReport run_suite(const std::string& suite, const SuiteConfig& cfg);

// Deterministic random trig-polynomial boundary (coefficients uniform on
// the unit disk of the complex plane).
BoundaryFunction random_boundary(std::uint64_t seed, int degree);

}  // namespace abh

#endif
