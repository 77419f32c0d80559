#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilherm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised by validation when the cyclic Jacobi sum is nonzero on a basis triple.
class JacobiViolation : public Error {
 public:
  JacobiViolation(std::array<std::size_t, 3> triple, std::string cyclic_sum)
      : Error("Jacobi identity fails on (X" + std::to_string(triple[0] + 1) + ",X" +
              std::to_string(triple[1] + 1) + ",X" + std::to_string(triple[2] + 1) +
              "): cyclic sum = " + cyclic_sum),
        triple_(triple),
        sum_(std::move(cyclic_sum)) {}

  const std::array<std::size_t, 3>& triple() const { return triple_; }
  const std::string& cyclic_sum() const { return sum_; }

 private:
  std::array<std::size_t, 3> triple_;
  std::string sum_;
};

class NotTwoStep : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for its inputs.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace nilherm
