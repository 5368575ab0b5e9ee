#include "neqxx/lindblad.hpp"

#include <cmath>
#include <vector>

namespace neqxx {

void validate_baths(const BathSpec& baths) {
  if (!(baths.t_left > 0.0) || !(baths.t_right > 0.0) ||
      !std::isfinite(baths.t_left) || !std::isfinite(baths.t_right)) {
    throw ParameterDomainError("bath temperatures must be positive and finite");
  }
  if (baths.gamma_left < 0.0 || baths.gamma_right < 0.0 ||
      !std::isfinite(baths.gamma_left) || !std::isfinite(baths.gamma_right)) {
    throw ParameterDomainError("bath couplings must be nonnegative and finite");
  }
}

int bath_site(Side side) { return side == Side::Left ? 1 : 3; }

EigenOperatorSet eigenoperators(const ModelParams& params, Side side) {
  const EigenSystem es = analytic_eigensystem(params);
  const Mat8 lower = sigma_minus(bath_site(side));

  EigenOperatorSet set;
  set.side = side;
  set.frequencies = {params.epsilon + params.j_total, params.epsilon,
                     params.epsilon - params.j_total};
  set.operators = {Mat8::Zero(), Mat8::Zero(), Mat8::Zero()};

  const double scale = std::max(1.0, params.epsilon + params.j_total);
  const double bin_tol = 1e-9 * scale;
  for (int mu = 0; mu < 3; ++mu) {
    for (int nu = mu + 1; nu < 3; ++nu) {
      if (std::abs(set.frequencies[mu] - set.frequencies[nu]) < 100 * bin_tol) {
        throw DegeneracyError(
            "eigenoperators: Bohr frequencies collide; adjust parameters");
      }
    }
  }

  // Spectral projection of sigma^- onto the three transition frequencies.
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const Complex amp = es.states[a].dot(lower * es.states[b]);
      if (std::abs(amp) < 1e-12) continue;
      const double diff = es.values[b] - es.values[a];
      int mu = -1;
      for (int k = 0; k < 3; ++k) {
        if (std::abs(diff - set.frequencies[k]) < bin_tol) {
          mu = k;
          break;
        }
      }
      if (mu < 0) {
        throw DegeneracyError(
            "eigenoperators: transition outside the three Bohr frequencies");
      }
      set.operators[mu] += amp * es.states[a] * es.states[b].adjoint();
    }
  }
  return set;
}

double bose_occupation(double omega, double temperature) {
  if (!(omega > 0.0)) {
    throw ParameterDomainError("bose_occupation: omega must be positive");
  }
  if (!(temperature > 0.0)) {
    throw ParameterDomainError("bose_occupation: temperature must be positive");
  }
  return 1.0 / std::expm1(omega / temperature);
}

double spectral_rate(double omega, double temperature, double gamma) {
  if (!(temperature > 0.0) || !(gamma > 0.0)) {
    throw ParameterDomainError(
        "spectral_rate: temperature and gamma must be positive");
  }
  if (std::abs(omega) < kFreqTol) {
    throw RateSingularityError(
        "spectral_rate: |omega| below kFreqTol, thermal occupation diverges");
  }
  if (omega > 0.0) {
    return gamma * bose_occupation(omega, temperature);
  }
  return gamma * (bose_occupation(-omega, temperature) + 1.0);
}

Mat8 dissipator_apply(const Mat8& rho, const ModelParams& params, Side side,
                      double temperature, double gamma) {
  const EigenOperatorSet set = eigenoperators(params, side);
  Mat8 out = Mat8::Zero();
  for (int mu = 0; mu < 3; ++mu) {
    const double w = set.frequencies[mu];
    const double down = spectral_rate(-w, temperature, gamma);
    const double up = spectral_rate(w, temperature, gamma);
    const Mat8& x = set.operators[mu];
    const Mat8 xd = x.adjoint();
    out += down * (2.0 * x * rho * xd - rho * xd * x - xd * x * rho);
    out += up * (2.0 * xd * rho * x - rho * x * xd - x * xd * rho);
  }
  return out;
}

MatX kron(const MatX& a, const MatX& b) {
  MatX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

void add_dissipator_terms(MatX& m, const Mat8& x, double rate) {
  const MatX id = MatX::Identity(8, 8);
  const Mat8 xd = x.adjoint();
  const Mat8 xdx = xd * x;
  m += rate * (2.0 * kron(x.conjugate(), MatX(x)) -
               kron(MatX(xdx.transpose()), id) - kron(id, MatX(xdx)));
}

}  // namespace

MatX liouvillian(const ModelParams& params, const BathSpec& baths) {
  validate_baths(baths);
  const Mat8 h = hamiltonian(params);
  const MatX id = MatX::Identity(8, 8);
  const Complex im(0.0, 1.0);

  MatX m = -im * (kron(id, MatX(h)) - kron(MatX(h.transpose()), id));

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
      const Mat8& x = set.operators[mu];
      add_dissipator_terms(m, x, spectral_rate(-w, s.t, s.gamma));
      add_dissipator_terms(m, Mat8(x.adjoint()), spectral_rate(w, s.t, s.gamma));
    }
  }
  return m;
}

}  // namespace neqxx
