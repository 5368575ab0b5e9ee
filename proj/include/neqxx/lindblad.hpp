#pragma once

#include <array>

#include "neqxx/model.hpp"
#include "neqxx/types.hpp"

namespace neqxx {

// Two bosonic reservoirs attached to the end spins (left = spin 1,
// right = spin 3), each flat-coupled with rate gamma.
struct BathSpec {
  double t_left;
  double t_right;
  double gamma_left;
  double gamma_right;
};

// Validates temperatures > 0 and gammas >= 0 (gamma = 0 drops the bath).
void validate_baths(const BathSpec& baths);

enum class Side { Left, Right };

int bath_site(Side side);  // 1 for Left, 3 for Right

// Lowering eigenoperators of sigma^-_site at the three Bohr
// frequencies omega = {eps + J, eps, eps - J}:
// [H, X_mu] = -omega_mu X_mu and sum_mu X_mu = sigma^-_site.
struct EigenOperatorSet {
  Side side;
  std::array<double, 3> frequencies;
  std::array<Mat8, 3> operators;
};

EigenOperatorSet eigenoperators(const ModelParams& params, Side side);

// Thermal occupation 1/(e^{omega/T} - 1), omega > 0 only.
double bose_occupation(double omega, double temperature);

// Bath rate gamma * n(omega) for absorption (omega > 0) and
// gamma * (n(|omega|) + 1) for emission (omega < 0); satisfies the
// detailed-balance identity J(-omega) = e^{omega/T} J(omega).
// Throws RateSingularityError for |omega| < kFreqTol.
double spectral_rate(double omega, double temperature, double gamma);

// One bath's dissipator applied to rho:
//   sum_mu J(-w_mu)(2 X rho X+ - {rho, X+ X})
//        + J(+w_mu)(2 X+ rho X - {rho, X X+}).
Mat8 dissipator_apply(const Mat8& rho, const ModelParams& params, Side side,
                      double temperature, double gamma);

// 64x64 generator M with M vec(rho) = vec(-i[H,rho] + L_L rho + L_R rho)
// under column stacking, A rho B <-> (B^T kron A) vec(rho).
MatX liouvillian(const ModelParams& params, const BathSpec& baths);

MatX kron(const MatX& a, const MatX& b);

}  // namespace neqxx
