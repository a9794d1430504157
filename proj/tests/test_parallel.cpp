#include <doctest.h>

#include "abh/dirichlet.hpp"
#include "abh/verify.hpp"

using namespace abh;

// The OpenMP kernels only parallelize over independent output elements, so
// they must reproduce the serial reference results exactly.

TEST_CASE("circle profile: parallel equals serial") {
  const ParamPair params{cplx(1.0, 0.5), cplx(0.5, -0.25)};
  const auto f = random_boundary(41, 6);
  for (int n : {256, 1024}) {
    for (auto [k, l] : {std::pair<unsigned, unsigned>{0, 0}, {1, 0}, {1, 1}}) {
      const auto par = circle_profile(params, f, 0.7, n, k, l);
      const auto ser = circle_profile_serial(params, f, 0.7, n, k, l);
      REQUIRE(par.size() == ser.size());
      for (int j = 0; j < n; ++j) CHECK(par[j] == ser[j]);
    }
  }
}

TEST_CASE("grid evaluation: parallel equals serial") {
  const ParamPair params{0.5, 0.5};
  const auto f = random_boundary(43, 4);
  EvalGrid grid;
  grid.n_theta = 32;
  for (int i = 0; i < 8; ++i) grid.radii.push_back(0.1 * (i + 1));
  const auto par = grid_eval(params, f, grid);
  const auto ser = grid_eval_serial(params, f, grid);
  REQUIRE(par.size() == ser.size());
  for (size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
}

TEST_CASE("repeated parallel runs are bitwise stable") {
  const ParamPair params{1.0, 0.5};
  const auto f = random_boundary(47, 5);
  const auto a = circle_profile(params, f, 0.8, 512);
  const auto b = circle_profile(params, f, 0.8, 512);
  for (int j = 0; j < 512; ++j) CHECK(a[j] == b[j]);
}
