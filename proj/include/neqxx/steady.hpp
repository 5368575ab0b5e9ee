#pragma once

#include <string>
#include <utility>

#include "neqxx/lindblad.hpp"
#include "neqxx/model.hpp"
#include "neqxx/types.hpp"

namespace neqxx {

struct SolveDiagnostics {
  double null_gap;        // |second-smallest Liouvillian eigenvalue|; NaN for rk4
  double residual;        // ||M vec(rho_ss)||
  double min_eigenvalue;  // smallest eigenvalue of rho_ss
  std::string method;     // "null-space" or "rk4"
};

// Doubled-space generator H_T with -i H_T = liouvillian(...); the jump
// operators are sqrt(2 J(+-w)) X. The equivalence is asserted internally.
MatX effective_hamiltonian(const ModelParams& params, const BathSpec& baths);

// Steady state from the null eigenvector of the 64x64 Liouvillian.
// Throws NonUniqueSteadyStateError when the null gap is below gap_tol
// and PositivityError when the extracted state is not PSD.
std::pair<Mat8, SolveDiagnostics> steady_state_null(const ModelParams& params,
                                                    const BathSpec& baths,
                                                    double gap_tol = 1e-8);

struct Rk4Options {
  double step = 0.0;  // 0 = choose from the generator's spectral radius
  double max_time = 1e6;
  double conv_tol = 1e-9;
};

// Classical RK4 propagation of vec(rho) until ||M vec(rho)|| < conv_tol.
std::pair<Mat8, SolveDiagnostics> steady_state_rk4(
    const ModelParams& params, const BathSpec& baths,
    const Mat8& rho0 = Mat8::Identity() / 8.0, const Rk4Options& opts = {});

// vec / unvec under column stacking, plus the trace-distance metric.
VecX vectorize(const Mat8& rho);
Mat8 unvectorize(const VecX& v);
double trace_distance(const Mat8& a, const Mat8& b);

}  // namespace neqxx
