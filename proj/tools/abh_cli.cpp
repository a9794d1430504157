// Command-line front end: kernel evaluation, Dirichlet extension fields,
// integral means, series coefficients, theorem bounds, verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "abh/verify.hpp"

using namespace abh;
using nlohmann::json;

namespace {

cplx parse_complex(const std::string& s) {
  double re = 0.0, im = 0.0;
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    re = std::stod(s);
  } else {
    re = std::stod(s.substr(0, comma));
    im = std::stod(s.substr(comma + 1));
  }
  return {re, im};
}

double parse_p(const std::string& s) {
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  return std::stod(s);
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

BoundaryFunction load_boundary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open boundary file " + path);
  json j;
  in >> j;
  const std::string type = j.at("type");
  if (type == "constant") {
    const auto& v = j.at("value");
    return BoundaryFunction::constant({v.at(0), v.at(1)});
  }
  if (type == "fourier") {
    std::map<int, cplx> coeffs;
    for (const auto& e : j.at("coeffs"))
      coeffs[e.at("m").get<int>()] = {e.at("re").get<double>(),
                                      e.at("im").get<double>()};
    return BoundaryFunction::fourier(std::move(coeffs));
  }
  if (type == "samples") {
    std::vector<cplx> vals;
    for (const auto& e : j.at("values"))
      vals.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return BoundaryFunction::samples(vals);
  }
  throw std::invalid_argument("unknown boundary type '" + type + "'");
}

// "r0:r1:nr,ntheta"
EvalGrid parse_grid(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("grid must be r0:r1:nr,ntheta");
  const std::string rpart = s.substr(0, comma);
  EvalGrid g;
  g.n_theta = std::stoi(s.substr(comma + 1));
  const auto c1 = rpart.find(':');
  const auto c2 = rpart.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("grid must be r0:r1:nr,ntheta");
  const double r0 = std::stod(rpart.substr(0, c1));
  const double r1 = std::stod(rpart.substr(c1 + 1, c2 - c1 - 1));
  const int nr = std::stoi(rpart.substr(c2 + 1));
  if (nr <= 0) throw std::invalid_argument("grid: nr must be positive");
  for (int i = 0; i < nr; ++i)
    g.radii.push_back(nr == 1 ? r0 : r0 + (r1 - r0) * i / double(nr - 1));
  return g;
}

std::vector<double> parse_radii(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"(alpha,beta)-harmonic functions on the unit disk"};
  app.require_subcommand(1);

  std::string alpha_s = "0,0", beta_s = "0,0", z_s = "0,0", deriv_s;
  std::string boundary_path, out_path, grid_s, radii_s = "0.3,0.6,0.9";
  std::string p_s = "2", theorem = "31", suite = "all", report_path;
  int max_m = 8, k_ord = 0, l_ord = 0;
  double r_val = 0.5, fnorm = 1.0;
  std::uint64_t seed = 42;

  auto* kernel_cmd = app.add_subcommand("kernel", "Poisson kernel values");
  kernel_cmd->add_option("--alpha", alpha_s);
  kernel_cmd->add_option("--beta", beta_s);
  kernel_cmd->add_option("--z", z_s, "r,theta");
  kernel_cmd->add_option("--deriv", deriv_s, "k,l");

  auto* extend_cmd = app.add_subcommand("extend", "Dirichlet extension field");
  extend_cmd->add_option("--alpha", alpha_s);
  extend_cmd->add_option("--beta", beta_s);
  extend_cmd->add_option("--boundary", boundary_path)->required();
  extend_cmd->add_option("--grid", grid_s, "r0:r1:nr,ntheta")->required();
  extend_cmd->add_option("--out", out_path)->required();

  auto* means_cmd = app.add_subcommand("means", "Integral means and bounds");
  means_cmd->add_option("--alpha", alpha_s);
  means_cmd->add_option("--beta", beta_s);
  means_cmd->add_option("--boundary", boundary_path)->required();
  means_cmd->add_option("--p", p_s);
  means_cmd->add_option("--radii", radii_s);

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Series coefficients");
  coeffs_cmd->add_option("--alpha", alpha_s);
  coeffs_cmd->add_option("--beta", beta_s);
  coeffs_cmd->add_option("--boundary", boundary_path)->required();
  coeffs_cmd->add_option("--max-m", max_m);
  coeffs_cmd->add_option("--out", out_path)->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Theorem bound constants");
  bounds_cmd->add_option("--theorem", theorem, "31|32|33|44|45");
  bounds_cmd->add_option("--alpha", alpha_s);
  bounds_cmd->add_option("--beta", beta_s);
  bounds_cmd->add_option("--p", p_s);
  bounds_cmd->add_option("--r", r_val);
  bounds_cmd->add_option("--k", k_ord);
  bounds_cmd->add_option("--l", l_ord);
  bounds_cmd->add_option("--fnorm", fnorm);

  auto* verify_cmd = app.add_subcommand("verify", "Inequality suites");
  verify_cmd->add_option("--suite", suite,
                         "all|t31|t32|t33|t44|t45|subharmonic|residual|sharpness");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--report", report_path);

  CLI11_PARSE(app, argc, argv);

  const ParamPair params{parse_complex(alpha_s), parse_complex(beta_s)};

  if (kernel_cmd->parsed()) {
    params.validate();
    const cplx zc = parse_complex(z_s);  // r,theta pair
    const DiskPoint z{zc.real(), zc.imag()};
    if (!(z.r >= 0.0 && z.r < 1.0))
      throw std::invalid_argument("kernel: radius outside [0,1)");
    json j;
    const cplx v = kernel_value(params, z);
    j["c_const"] = {c_const(params).real(), c_const(params).imag()};
    j["value"] = {v.real(), v.imag()};
    j["modulus_bound"] =
        std::abs(c_const(params)) * u_modulus_bound(params, z);
    if (!deriv_s.empty()) {
      const cplx kl = parse_complex(deriv_s);
      const cplx d = c_const(params) * u_higher_deriv(params, z,
                                                      unsigned(kl.real()),
                                                      unsigned(kl.imag()));
      j["deriv"] = {d.real(), d.imag()};
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (extend_cmd->parsed()) {
    params.validate();
    const auto f = load_boundary(boundary_path);
    const EvalGrid grid = parse_grid(grid_s);
    const auto field = grid_eval(params, f, grid);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << "r,theta,re,im\n";
    size_t idx = 0;
    for (double r : grid.radii)
      for (int it = 0; it < grid.n_theta; ++it, ++idx) {
        const double theta = 2.0 * std::numbers::pi * it / grid.n_theta;
        out << fmt17(r) << ',' << fmt17(theta) << ','
            << fmt17(field[idx].real()) << ',' << fmt17(field[idx].imag())
            << '\n';
      }
    return 0;
  }

  if (means_cmd->parsed()) {
    params.validate();
    const auto f = load_boundary(boundary_path);
    const double p = parse_p(p_s);
    const double norm = f.lp_norm(p);
    std::cout << "r,Mp,bound,margin\n";
    for (double r : parse_radii(radii_s)) {
      const double mp = integral_mean(params, f, r, p);
      const double bound = theorem31_rhs(params, p, r, norm).rhs;
      std::cout << fmt17(r) << ',' << fmt17(mp) << ',' << fmt17(bound) << ','
                << fmt17(bound - mp) << '\n';
    }
    return 0;
  }

  if (coeffs_cmd->parsed()) {
    params.validate();
    const auto f = load_boundary(boundary_path);
    const auto coeffs = coeffs_from_boundary(params, f, max_m);
    json j;
    j["coeffs"] = json::array();
    for (const auto& [m, c] : coeffs.c)
      j["coeffs"].push_back({{"m", m}, {"re", c.real()}, {"im", c.imag()}});
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << j.dump(2) << "\n";
    return 0;
  }

  if (bounds_cmd->parsed()) {
    params.validate();
    const double p = parse_p(p_s);
    json j;
    j["components"] = json::object();
    if (theorem == "31") {
      const auto b = theorem31_rhs(params, p, r_val, fnorm);
      j["lhs_spec"] = "M_p(r,w)";
      j["rhs_value"] = b.rhs;
      j["components"]["cap"] = b.cap;
      j["components"]["B"] = b.B;
    } else if (theorem == "32") {
      const auto b = theorem32_bounds(params, p, r_val);
      j["lhs_spec"] = "|w_z| and |w_zbar| prefactors";
      j["rhs_value"] = b.C_r;
      j["components"] = {{"C_r", b.C_r},
                         {"C_const", b.C_const},
                         {"D_r", b.D_r},
                         {"D_const", b.D_const},
                         {"F1", b.F1}};
    } else if (theorem == "33") {
      const double ckl = estimate_Ckl(params, unsigned(k_ord), unsigned(l_ord));
      j["lhs_spec"] = "M_p(r, d^k dbar^l w)";
      j["rhs_value"] =
          theorem33_rhs(params, p, r_val, unsigned(k_ord), unsigned(l_ord),
                        ckl, fnorm);
      j["components"]["Ckl_estimate"] = ckl;
    } else if (theorem == "44") {
      const auto b = theorem44_bounds(params, p, unsigned(std::max(k_ord, 1)),
                                      fnorm);
      j["lhs_spec"] = "|c_k|, |c_-k|, weighted sum";
      j["rhs_value"] = b.combined;
      j["components"] = {{"bound_ck", b.bound_ck},
                         {"bound_cminusk", b.bound_cminusk},
                         {"C_q", b.C_q}};
    } else if (theorem == "45") {
      j["lhs_spec"] = "weighted |w_z| + |w_zbar|";
      j["rhs_value"] = theorem45_rhs(params, p, r_val, fnorm);
    } else {
      throw std::invalid_argument("bounds: unknown theorem '" + theorem + "'");
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (verify_cmd->parsed()) {
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.seed = seed;
    const auto rep = run_suite(suite, cfg);
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) throw std::runtime_error("cannot write " + report_path);
      out << rep.to_json() << "\n";
    }
    std::cerr << "checks: " << rep.total << "  failed: " << rep.failed
              << "  worst margin: " << rep.worst_margin << "\n";
    return rep.failed == 0 ? 0 : 3;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
