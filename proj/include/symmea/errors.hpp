#pragma once

#include <stdexcept>
#include <string>

namespace symmea {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NonHermitianError : Error {
  using Error::Error;
};

/// A requested measurement block cannot be positive semidefinite.
struct InfeasibleConstruction : Error {
  InfeasibleConstruction(std::string msg, std::size_t operator_index, double eigenvalue)
      : Error(std::move(msg)), operator_index(operator_index), eigenvalue(eigenvalue) {}
  std::size_t operator_index;
  double eigenvalue;
};

/// Raised when an operation needs an informationally complete measurement.
struct NotInformationallyComplete : Error {
  NotInformationallyComplete(std::string msg, std::size_t rank, std::size_t required)
      : Error(std::move(msg)), rank(rank), required(required) {}
  std::size_t rank;
  std::size_t required;
};

/// The requested closed-form bound only exists for a restricted class.
struct BoundUnavailable : Error {
  using Error::Error;
};

struct FileFormatError : Error {
  using Error::Error;
};

}  // namespace symmea
