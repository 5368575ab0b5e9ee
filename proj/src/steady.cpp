#include "neqxx/steady.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace neqxx {

VecX vectorize(const Mat8& rho) {
  return Eigen::Map<const VecX>(rho.data(), 64);
}

Mat8 unvectorize(const VecX& v) {
  return Eigen::Map<const Mat8>(v.data());
}

double trace_distance(const Mat8& a, const Mat8& b) {
  Eigen::SelfAdjointEigenSolver<Mat8> solver(a - b);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

MatX effective_hamiltonian(const ModelParams& params, const BathSpec& baths) {
  validate_baths(baths);
  const Mat8 h = hamiltonian(params);
  const MatX id = MatX::Identity(8, 8);
  const Complex im(0.0, 1.0);

  // System on the second tensor slot, ancilla image O^A = conj(O) on the
  // first; vec(rho) then evolves as -i H_T vec(rho).
  MatX ht = kron(id, MatX(h)) - kron(MatX(h.conjugate()), id);

  const struct {
    Side side;
    double t;
    double gamma;
  } sides[2] = {{Side::Left, baths.t_left, baths.gamma_left},
                {Side::Right, baths.t_right, baths.gamma_right}};
  for (const auto& s : sides) {
    if (s.gamma == 0.0) continue;
    const EigenOperatorSet set = eigenoperators(params, s.side);
    for (int mu = 0; mu < 3; ++mu) {
      const double w = set.frequencies[mu];
      const Mat8 jumps[2] = {
          Mat8(std::sqrt(2.0 * spectral_rate(-w, s.t, s.gamma)) *
               set.operators[mu]),
          Mat8(std::sqrt(2.0 * spectral_rate(w, s.t, s.gamma)) *
               set.operators[mu].adjoint())};
      for (const Mat8& l : jumps) {
        const Mat8 ldl = l.adjoint() * l;
        ht += -0.5 * im * kron(id, MatX(ldl));
        ht += -0.5 * im * kron(MatX(ldl.transpose()), id);
        ht += im * kron(MatX(l.conjugate()), MatX(l));
      }
    }
  }

  const MatX m = liouvillian(params, baths);
  if ((-im * ht - m).norm() > 1e-10) {
    throw ConsistencyError(
        "effective_hamiltonian: -iH_T does not match the Liouvillian");
  }
  return ht;
}

std::pair<Mat8, SolveDiagnostics> steady_state_null(const ModelParams& params,
                                                    const BathSpec& baths,
                                                    double gap_tol) {
  const MatX m = liouvillian(params, baths);
  Eigen::ComplexEigenSolver<MatX> solver(m);
  const VecX evals = solver.eigenvalues();

  int i_min = 0;
  for (int i = 1; i < 64; ++i) {
    if (std::abs(evals(i)) < std::abs(evals(i_min))) i_min = i;
  }
  double gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 64; ++i) {
    if (i == i_min) continue;
    gap = std::min(gap, std::abs(evals(i)));
  }
  if (gap <= gap_tol) {
    throw NonUniqueSteadyStateError(
        "steady_state_null: null gap below gap_tol, steady state not unique");
  }

  Mat8 rho = unvectorize(solver.eigenvectors().col(i_min));
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();

  Eigen::SelfAdjointEigenSolver<Mat8> rho_eigs(rho);
  const double min_eig = rho_eigs.eigenvalues().minCoeff();
  if (min_eig < -1e-8) {
    throw PositivityError("steady_state_null: steady state is not PSD");
  }

  SolveDiagnostics diag;
  diag.null_gap = gap;
  diag.residual = (m * vectorize(rho)).norm();
  diag.min_eigenvalue = min_eig;
  diag.method = "null-space";
  return {rho, diag};
}

std::pair<Mat8, SolveDiagnostics> steady_state_rk4(const ModelParams& params,
                                                   const BathSpec& baths,
                                                   const Mat8& rho0,
                                                   const Rk4Options& opts) {
  const MatX m = liouvillian(params, baths);

  double step = opts.step;
  if (step <= 0.0) {
    // The infinity norm bounds the spectral radius; keep h |lambda| well
    // inside the RK4 stability region.
    const double bound = m.cwiseAbs().rowwise().sum().maxCoeff();
    step = 2.0 / std::max(bound, 1e-12);
  }

  VecX v = vectorize(rho0);
  double t = 0.0;
  double residual = (m * v).norm();
  const int check_every = 16;
  int since_check = 0;
  while (residual >= opts.conv_tol && t < opts.max_time) {
    const VecX k1 = m * v;
    const VecX k2 = m * (v + 0.5 * step * k1);
    const VecX k3 = m * (v + 0.5 * step * k2);
    const VecX k4 = m * (v + step * k3);
    v += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += step;

    Complex trace = 0.0;
    for (int i = 0; i < 8; ++i) trace += v(9 * i);
    v /= trace;

    if (++since_check == check_every) {
      since_check = 0;
      residual = (m * v).norm();
    }
  }
  residual = (m * v).norm();
  if (residual >= opts.conv_tol) {
    throw ConvergenceError("steady_state_rk4: residual " +
                           std::to_string(residual) +
                           " above conv_tol at max_time");
  }

  Mat8 rho = unvectorize(v);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();

  Eigen::SelfAdjointEigenSolver<Mat8> rho_eigs(rho);
  SolveDiagnostics diag;
  diag.null_gap = std::numeric_limits<double>::quiet_NaN();
  diag.residual = residual;
  diag.min_eigenvalue = rho_eigs.eigenvalues().minCoeff();
  diag.method = "rk4";
  return {rho, diag};
}

}  // namespace neqxx
