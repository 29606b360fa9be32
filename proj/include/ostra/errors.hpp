#pragma once

#include <stdexcept>
#include <string>

namespace ostra {

// Base class for every failure the library reports.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's mathematical domain.
class domain_error : public error {
 public:
  using error::error;
};

// Result (or an intermediate) exceeds the double-precision range.
class overflow_error : public error {
 public:
  using error::error;
};

// An iterative evaluation hit its term cap before meeting tolerance.
class convergence_error : public error {
 public:
  using error::error;
};

// Adaptive quadrature failure (base class).
class quadrature_error : public error {
 public:
  using error::error;
};

// Subdivision or panel budget exhausted before the tolerance was met.
class depth_exceeded_error : public quadrature_error {
 public:
  using quadrature_error::quadrature_error;
};

// The integrand produced a NaN or infinity at a sample point.
class nonfinite_sample_error : public quadrature_error {
 public:
  using quadrature_error::quadrature_error;
};

}  // namespace ostra
