#include <cmath>
#include <random>

#include <doctest.h>

#include "neqxx/entanglement.hpp"
#include "neqxx/steady.hpp"
#include "test_helpers.hpp"

using namespace neqxx;

TEST_CASE("effective Hamiltonian equals i times the Liouvillian") {
  std::mt19937 rng(29);
  const Complex im(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const ModelParams p = neqxx::testing::random_params(rng);
    const BathSpec baths = neqxx::testing::random_baths(rng);
    const MatX ht = effective_hamiltonian(p, baths);
    const MatX m = liouvillian(p, baths);
    CHECK((-im * ht - m).norm() <= 1e-10);
  }
}

TEST_CASE("effective Hamiltonian has a zero eigenvalue") {
  const ModelParams p = make_params(3.0, 0.5, 2.5);
  const BathSpec baths{0.6, 0.2, 0.05, 0.05};
  const MatX ht = effective_hamiltonian(p, baths);
  Eigen::ComplexEigenSolver<MatX> solver(ht, false);
  CHECK(solver.eigenvalues().cwiseAbs().minCoeff() <= 1e-10);
}

TEST_CASE("effective Hamiltonian reduces to doubled dynamics at gamma = 0") {
  const ModelParams p = make_params(2.0, 0.9, 1.6);
  const BathSpec baths{0.5, 0.5, 0.0, 0.0};
  const MatX ht = effective_hamiltonian(p, baths);
  const Mat8 h = hamiltonian(p);
  const MatX id = MatX::Identity(8, 8);
  const MatX closed = kron(id, MatX(h)) - kron(MatX(h.conjugate()), id);
  CHECK((ht - closed).norm() <= 1e-12);
}

TEST_CASE("equal bath temperatures thermalize to the Gibbs state") {
  const ModelParams p = make_params(1.0, 1.0, 1.0);
  for (double t : {0.2, 0.5, 1.0}) {
    const BathSpec baths{t, t, 0.05, 0.05};
    const auto [rho, diag] = steady_state_null(p, baths);
    CHECK(trace_distance(rho, gibbs_state(hamiltonian(p), t)) <= 1e-8);
    CHECK(diag.residual <= 1e-10);
    CHECK(diag.null_gap > 1e-8);
  }
}

TEST_CASE("infinite-temperature limit is maximally mixed") {
  const ModelParams p = make_params(1.0, 1.0, 1.0);
  const BathSpec baths{1e3, 1e3, 0.05, 0.05};
  const auto [rho, diag] = steady_state_null(p, baths);
  CHECK(trace_distance(rho, Mat8::Identity() / 8.0) <= 1e-3);
}

TEST_CASE("steady state is a valid density matrix") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const ModelParams p = neqxx::testing::random_params(rng);
    const BathSpec baths = neqxx::testing::random_baths(rng);
    const auto [rho, diag] = steady_state_null(p, baths);
    CHECK((rho - rho.adjoint()).norm() <= 1e-12);
    CHECK(std::abs(rho.trace() - Complex(1.0)) <= 1e-12);
    CHECK(diag.min_eigenvalue >= -1e-10);
    CHECK(diag.residual <= 1e-10);
  }
}

TEST_CASE("steady state is diagonal in the energy eigenbasis") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    const ModelParams p = neqxx::testing::random_params(rng);
    const BathSpec baths = neqxx::testing::random_baths(rng);
    const auto [rho, diag] = steady_state_null(p, baths);
    const EigenSystem es = analytic_eigensystem(p);
    Mat8 basis;
    for (int i = 0; i < 8; ++i) basis.col(i) = es.states[i];
    Mat8 in_basis = basis.adjoint() * rho * basis;
    in_basis.diagonal().setZero();
    CHECK(in_basis.norm() <= 1e-8);
  }
}

TEST_CASE("mirror covariance of the steady state") {
  const ModelParams p = make_params(3.0, 0.5, 2.5);
  const BathSpec baths{0.6, 0.2, 0.05, 0.08};
  const ModelParams p_mirror = make_params(3.0, 2.5, 0.5);
  const BathSpec baths_mirror{0.2, 0.6, 0.08, 0.05};
  const auto [rho, d1] = steady_state_null(p, baths);
  const auto [rho_m, d2] = steady_state_null(p_mirror, baths_mirror);
  const Mat8 pi = reflection();
  CHECK(trace_distance(rho, pi * rho_m * pi) <= 1e-10);
}

TEST_CASE("steady state is invariant under uniform gamma rescaling") {
  const ModelParams p = make_params(3.0, 0.5, 2.5);
  const BathSpec baths{0.6, 0.2, 0.05, 0.08};
  const auto [rho, d] = steady_state_null(p, baths);
  for (double c : {0.1, 10.0}) {
    const BathSpec scaled{baths.t_left, baths.t_right, c * baths.gamma_left,
                          c * baths.gamma_right};
    const auto [rho_c, dc] = steady_state_null(p, scaled);
    CHECK(trace_distance(rho, rho_c) <= 1e-8);
  }
}

TEST_CASE("|s6> dominates the entangled populations in the Fig. 5 regime") {
  const ModelParams p = make_params(3.0, 0.5, 2.5);
  for (double dt : {-0.4, 0.0, 0.4}) {
    const BathSpec baths{0.4 + 0.5 * dt, 0.4 - 0.5 * dt, 0.05, 0.05};
    const auto [rho, diag] = steady_state_null(p, baths);
    const auto pops = eigenstate_populations(rho, analytic_eigensystem(p));
    for (int i = 2; i < 8; ++i) {
      if (i == 5) continue;
      CHECK(pops[5] >= pops[i]);
    }
  }
}

TEST_CASE("RK4 agrees with the null-space solver") {
  std::mt19937 rng(41);
  std::vector<std::pair<ModelParams, BathSpec>> cases;
  cases.emplace_back(make_params(1.0, 1.0, 1.0), BathSpec{0.7, 0.3, 0.05, 0.05});
  cases.emplace_back(make_params(3.0, 0.5, 2.5), BathSpec{0.6, 0.2, 0.05, 0.05});
  for (int trial = 0; trial < 18; ++trial) {
    cases.emplace_back(neqxx::testing::random_params(rng),
                       neqxx::testing::random_baths(rng));
  }
  for (const auto& [p, baths] : cases) {
    const auto [rho_null, d1] = steady_state_null(p, baths);
    const auto [rho_rk4, d2] = steady_state_rk4(p, baths);
    CHECK(trace_distance(rho_null, rho_rk4) <= 1e-6);
    CHECK(d2.residual < 1e-9);
  }
}

TEST_CASE("RK4 result is independent of the initial state") {
  const ModelParams p = make_params(3.0, 0.5, 2.5);
  const BathSpec baths{0.6, 0.2, 0.05, 0.05};
  const EigenSystem es = analytic_eigensystem(p);
  const Mat8 pure = es.states[0] * es.states[0].adjoint();
  const auto [rho_a, d1] = steady_state_rk4(p, baths, pure);
  const auto [rho_b, d2] = steady_state_rk4(p, baths);
  CHECK(trace_distance(rho_a, rho_b) <= 1e-6);
}

TEST_CASE("RK4 reports non-convergence") {
  const ModelParams p = make_params(1.0, 1.0, 1.0);
  const BathSpec baths{0.7, 0.3, 0.05, 0.05};
  Rk4Options opts;
  opts.max_time = 0.5;
  CHECK_THROWS_AS(steady_state_rk4(p, baths, Mat8::Identity() / 8.0, opts),
                  ConvergenceError);
}

TEST_CASE("null solver rejects a closed system (no unique steady state)") {
  const ModelParams p = make_params(1.0, 1.0, 1.0);
  const BathSpec baths{0.7, 0.3, 0.0, 0.0};
  CHECK_THROWS_AS(steady_state_null(p, baths), NonUniqueSteadyStateError);
}
