#include "neqxx/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace neqxx {

namespace {

// Bit positions of the kept pair (higher site first) and the traced site.
struct PairBits {
  int hi;
  int lo;
  int traced;
};

PairBits pair_bits(Pair pair) {
  switch (pair) {
    case Pair::P12:
      return {2, 1, 0};
    case Pair::P13:
      return {2, 0, 1};
    case Pair::P23:
      return {1, 0, 2};
  }
  throw ParameterDomainError("unknown pair label");
}

Mat4 spin_flip_matrix() {
  Mat4 y = Mat4::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

}  // namespace

Mat4 partial_trace(const Mat8& rho, Pair pair) {
  const PairBits bits = pair_bits(pair);
  Mat4 out = Mat4::Zero();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      for (int q = 0; q < 2; ++q) {
        const int row = (((r >> 1) & 1) << bits.hi) | ((r & 1) << bits.lo) |
                        (q << bits.traced);
        const int col = (((c >> 1) & 1) << bits.hi) | ((c & 1) << bits.lo) |
                        (q << bits.traced);
        out(r, c) += rho(row, col);
      }
    }
  }
  return out;
}

double concurrence(const Mat4& pair_state) {
  static const Mat4 flip = spin_flip_matrix();
  const Mat4 tilde = flip * pair_state.conjugate() * flip;

  auto psd_sqrt = [](const Mat4& m) {
    Eigen::SelfAdjointEigenSolver<Mat4> solver(m);
    Eigen::Vector4d eigs = solver.eigenvalues();
    for (int i = 0; i < 4; ++i) {
      if (eigs(i) < -1e-10) {
        throw NumericalDegradationError(
            "concurrence: spin-flip factor has a significantly negative "
            "eigenvalue");
      }
      eigs(i) = std::max(eigs(i), 0.0);
    }
    return Mat4(solver.eigenvectors() * eigs.cwiseSqrt().asDiagonal() *
                solver.eigenvectors().adjoint());
  };

  // The mu_k equal the singular values of sqrt(rho) sqrt(rho~), the
  // Hermitian-equivalent form of the rho * rho~ spectrum.
  const Mat4 a = psd_sqrt(pair_state) * psd_sqrt(tilde);
  Eigen::JacobiSVD<Mat4> svd(a);
  const Eigen::Vector4d mu = svd.singularValues();  // descending
  const double c = mu(0) - mu(1) - mu(2) - mu(3);
  return std::clamp(c, 0.0, 1.0);
}

ConcurrenceTriple pairwise_concurrences(const Mat8& rho) {
  return {concurrence(partial_trace(rho, Pair::P12)),
          concurrence(partial_trace(rho, Pair::P13)),
          concurrence(partial_trace(rho, Pair::P23))};
}

std::array<double, 8> eigenstate_populations(const Mat8& rho,
                                             const EigenSystem& eigensystem) {
  std::array<double, 8> p;
  for (int i = 0; i < 8; ++i) {
    p[i] = eigensystem.states[i].dot(rho * eigensystem.states[i]).real();
  }
  return p;
}

Mat8 gibbs_state(const Mat8& h, double temperature) {
  if (!(temperature > 0.0)) {
    throw ParameterDomainError("gibbs_state: temperature must be positive");
  }
  Eigen::SelfAdjointEigenSolver<Mat8> solver(h);
  const double ground = solver.eigenvalues().minCoeff();
  Eigen::Matrix<double, 8, 1> weights;
  for (int i = 0; i < 8; ++i) {
    weights(i) = std::exp(-(solver.eigenvalues()(i) - ground) / temperature);
  }
  weights /= weights.sum();
  return solver.eigenvectors() * weights.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

}  // namespace neqxx
