#pragma once

#include <array>

#include "neqxx/model.hpp"
#include "neqxx/types.hpp"

namespace neqxx {

enum class Pair { P12, P13, P23 };

struct ConcurrenceTriple {
  double c12;
  double c13;
  double c23;
};

// Reduce the chain state to the given qubit pair (trace out the third
// site). Rows/cols ordered |q_a q_b> with the lower site index first.
Mat4 partial_trace(const Mat8& rho, Pair pair);

// Wootters concurrence C = max(0, mu1 - mu2 - mu3 - mu4), the mu_k the
// descending square-rooted eigenvalues of sqrt(rho) rho~ sqrt(rho) with
// rho~ = (sy x sy) conj(rho) (sy x sy) in the computational basis.
double concurrence(const Mat4& pair_state);

ConcurrenceTriple pairwise_concurrences(const Mat8& rho);

// p_i = <s_i|rho|s_i> over the closed-form eigenbasis.
std::array<double, 8> eigenstate_populations(const Mat8& rho,
                                             const EigenSystem& eigensystem);

// e^{-H/T} / Tr e^{-H/T}.
Mat8 gibbs_state(const Mat8& h, double temperature);

}  // namespace neqxx
