#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace neqxx {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix<Complex, 2, 2>;
using Mat4 = Eigen::Matrix<Complex, 4, 4>;
using Mat8 = Eigen::Matrix<Complex, 8, 8>;
using Vec8 = Eigen::Matrix<Complex, 8, 1>;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

// Guard band around omega = 0 where the Bose occupation diverges.
inline constexpr double kFreqTol = 1e-6;

struct ParameterDomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bohr frequency hit the singular point of the thermal occupation
// (happens on the epsilon = J line).
struct RateSingularityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Bohr-frequency bins collided or a sigma^- transition fell outside
// the three expected frequencies.
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonUniqueSteadyStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PositivityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalDegradationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace neqxx
