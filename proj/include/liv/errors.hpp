#pragma once

#include <stdexcept>
#include <string>

namespace liv {

/// Base class for all library errors. Messages are module-qualified,
/// e.g. "kf_tensor: component (0,1,0,1) magnitude 0.5 exceeds 0.1".
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

class SymmetryConflict : public Error {
public:
  using Error::Error;
};

class MagnitudeTooLarge : public Error {
public:
  using Error::Error;
};

class CoincidentPoints : public Error {
public:
  using Error::Error;
};

class InvalidQuantumNumbers : public Error {
public:
  using Error::Error;
};

class DivergentExpectation : public Error {
public:
  using Error::Error;
};

class QuadratureNotConverged : public Error {
public:
  using Error::Error;
};

class MonteCarloNotConverged : public Error {
public:
  using Error::Error;
};

class DiagonalizationFailure : public Error {
public:
  using Error::Error;
};

class ZeroSlope : public Error {
public:
  using Error::Error;
};

/// Bad command line, malformed input file, unknown flag. Exit code 2.
class UsageError : public Error {
public:
  using Error::Error;
};

} // namespace liv
