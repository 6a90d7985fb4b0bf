#pragma once

#include <stdexcept>
#include <string>

namespace qfib {

class QfibError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Laurent division left a nonzero remainder.
class NotDivisible : public QfibError {
 public:
  using QfibError::QfibError;
};

// Evaluation of a negative q-power at q = 0.
class ZeroBase : public QfibError {
 public:
  using QfibError::QfibError;
};

class UnknownFamily : public QfibError {
 public:
  using QfibError::QfibError;
};

class UnknownIdentity : public QfibError {
 public:
  using QfibError::QfibError;
};

// Reciprocal of a power series whose constant term is not +1 or -1.
class NonUnitConstant : public QfibError {
 public:
  using QfibError::QfibError;
};

}  // namespace qfib
