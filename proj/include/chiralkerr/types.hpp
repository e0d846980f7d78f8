#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace chiralkerr {

using Complex = std::complex<double>;
using Eigen::ArrayXcd;
using Eigen::ArrayXd;
using Eigen::ArrayXXcd;
using Eigen::ArrayXXd;

// Uniform frequency grid, endpoints included.
struct FrequencyGrid {
  double min = -10.0;
  double max = 10.0;
  int points = 2001;

  void validate() const {
    if (points < 2) throw std::invalid_argument("FrequencyGrid: needs at least 2 points");
    if (!(max > min)) throw std::invalid_argument("FrequencyGrid: max must exceed min");
  }
  double step() const { return (max - min) / (points - 1); }
  ArrayXd values() const { return ArrayXd::LinSpaced(points, min, max); }
};

// Square (omega, omega') grid sharing one axis for both frequencies.
struct FrequencyPairGrid {
  FrequencyGrid axis;

  void validate() const { axis.validate(); }
};

// Raised when a tolerance or conservation check fails.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an integration or quadrature goes numerically bad.
struct NumericalAbort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace chiralkerr
