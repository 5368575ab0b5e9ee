#pragma once

#include <array>

#include "neqxx/types.hpp"

namespace neqxx {

// Three-qubit XX chain: H = sum_n (eps/2) sigma_n^z
//   + J1 (s1+ s2- + s1- s2+) + J2 (s2+ s3- + s2- s3+).
// Basis |q1 q2 q3>, q in {0,1}, |1> the sigma^z = +1 state,
// index = 4*q1 + 2*q2 + q3.
struct ModelParams {
  double epsilon;  // level splitting (k_B = hbar = 1)
  double j1;       // coupling 1-2
  double j2;       // coupling 2-3
  double j_total;  // sqrt(j1^2 + j2^2)
  double theta;    // atan2(j2, j1), in (0, pi/2)
  bool near_resonance;  // |epsilon - j_total| < kFreqTol
};

ModelParams make_params(double epsilon, double j1, double j2);

Mat8 hamiltonian(const ModelParams& params);

// Eigenpairs in the closed-form indexing i = 1..8 (stored 0..7):
//   lambda = {3e/2, -3e/2, e/2-J, e/2, e/2+J, -e/2-J, -e/2, -e/2+J}.
struct EigenSystem {
  std::array<double, 8> values;
  std::array<Vec8, 8> states;
};

EigenSystem analytic_eigensystem(const ModelParams& params);

// Max residual ||H|s_i> - lambda_i|s_i>|| of the closed-form pairs,
// cross-checked against a numeric diagonalization of H.
// Throws ConsistencyError above 1e-10.
double verify_spectrum(const ModelParams& params);

// Single-site operators embedded in the 8-dimensional chain space,
// site in {1, 2, 3}.
Mat8 sigma_z(int site);
Mat8 sigma_plus(int site);
Mat8 sigma_minus(int site);

// Total excitation number N = sum_n (sigma_n^z + 1)/2.
Mat8 excitation_number();

// Site-reflection permutation q1 <-> q3.
Mat8 reflection();

}  // namespace neqxx
