#include "neqxx/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

namespace neqxx {

namespace {
// Site n (1-based) lives on bit 3 - n; q1 is the most significant bit.
int site_bit(int site) { return 3 - site; }

Vec8 basis_ket(int index) {
  Vec8 v = Vec8::Zero();
  v(index) = 1.0;
  return v;
}
}  // namespace

ModelParams make_params(double epsilon, double j1, double j2) {
  if (!(epsilon > 0.0) || !(j1 > 0.0) || !(j2 > 0.0) ||
      !std::isfinite(epsilon) || !std::isfinite(j1) || !std::isfinite(j2)) {
    throw ParameterDomainError(
        "make_params: epsilon, j1, j2 must be positive and finite");
  }
  ModelParams p;
  p.epsilon = epsilon;
  p.j1 = j1;
  p.j2 = j2;
  p.j_total = std::hypot(j1, j2);
  p.theta = std::atan2(j2, j1);
  p.near_resonance = std::abs(epsilon - p.j_total) < kFreqTol;
  return p;
}

Mat8 sigma_z(int site) {
  Mat8 m = Mat8::Zero();
  const int bit = site_bit(site);
  for (int i = 0; i < 8; ++i) {
    m(i, i) = ((i >> bit) & 1) ? 1.0 : -1.0;
  }
  return m;
}

Mat8 sigma_minus(int site) {
  Mat8 m = Mat8::Zero();
  const int bit = site_bit(site);
  for (int i = 0; i < 8; ++i) {
    if ((i >> bit) & 1) {
      m(i ^ (1 << bit), i) = 1.0;
    }
  }
  return m;
}

Mat8 sigma_plus(int site) { return sigma_minus(site).adjoint(); }

Mat8 excitation_number() {
  Mat8 m = Mat8::Zero();
  for (int i = 0; i < 8; ++i) {
    m(i, i) = static_cast<double>(std::popcount(static_cast<unsigned>(i)));
  }
  return m;
}

Mat8 reflection() {
  Mat8 m = Mat8::Zero();
  for (int i = 0; i < 8; ++i) {
    const int q1 = (i >> 2) & 1;
    const int q3 = i & 1;
    const int j = (i & 0b010) | (q3 << 2) | q1;
    m(j, i) = 1.0;
  }
  return m;
}

Mat8 hamiltonian(const ModelParams& params) {
  Mat8 h = Mat8::Zero();
  for (int n = 1; n <= 3; ++n) {
    h += 0.5 * params.epsilon * sigma_z(n);
  }
  h += params.j1 * (sigma_plus(1) * sigma_minus(2) + sigma_minus(1) * sigma_plus(2));
  h += params.j2 * (sigma_plus(2) * sigma_minus(3) + sigma_minus(2) * sigma_plus(3));
  return h;
}

EigenSystem analytic_eigensystem(const ModelParams& params) {
  const double e = params.epsilon;
  const double j = params.j_total;
  const double s = std::sin(params.theta);
  const double c = std::cos(params.theta);
  const double r = std::sqrt(0.5);

  // Basis indices: |111>=7, |000>=0, |110>=6, |101>=5, |011>=3,
  //                |100>=4, |010>=2, |001>=1.
  EigenSystem es;
  es.values = {1.5 * e, -1.5 * e, 0.5 * e - j, 0.5 * e,
               0.5 * e + j, -0.5 * e - j, -0.5 * e, -0.5 * e + j};

  es.states[0] = basis_ket(7);
  es.states[1] = basis_ket(0);
  es.states[2] = r * (s * basis_ket(6) - basis_ket(5) + c * basis_ket(3));
  es.states[3] = c * basis_ket(6) - s * basis_ket(3);
  es.states[4] = r * (s * basis_ket(6) + basis_ket(5) + c * basis_ket(3));
  es.states[5] = r * (c * basis_ket(4) - basis_ket(2) + s * basis_ket(1));
  es.states[6] = s * basis_ket(4) - c * basis_ket(1);
  es.states[7] = r * (c * basis_ket(4) + basis_ket(2) + s * basis_ket(1));
  return es;
}

double verify_spectrum(const ModelParams& params) {
  const Mat8 h = hamiltonian(params);
  const EigenSystem es = analytic_eigensystem(params);

  double max_residual = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double r = (h * es.states[i] - es.values[i] * es.states[i]).norm();
    max_residual = std::max(max_residual, r);
  }

  Eigen::SelfAdjointEigenSolver<Mat8> solver(h);
  std::vector<double> analytic(es.values.begin(), es.values.end());
  std::sort(analytic.begin(), analytic.end());
  double max_gap = 0.0;
  for (int i = 0; i < 8; ++i) {
    max_gap = std::max(max_gap, std::abs(analytic[i] - solver.eigenvalues()(i)));
  }

  if (max_residual > 1e-10 || max_gap > 1e-10) {
    throw ConsistencyError(
        "verify_spectrum: closed-form eigensystem disagrees with numeric "
        "diagonalization");
  }
  return max_residual;
}

}  // namespace neqxx
