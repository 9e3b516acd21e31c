#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace ftclab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Parameter outside its documented domain (e.g. size 0, tau' out of range).
class InvalidParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Structurally bad input (dimension mismatch, asymmetric matrix, disconnected graph).
class InvalidInputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Iterative procedure exhausted its budget without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A bound was requested outside the regime where the theorem claims it.
class AdmissibilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// gamma1 == gamma2 makes beta1 = 2/|gamma1-gamma2| undefined.
class DegenerateConstantsError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline bool all_finite(const Matrix& m) { return m.allFinite(); }
inline bool all_finite(const Vector& v) { return v.allFinite(); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidInputError(msg);
}

}  // namespace ftclab
