#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypcomp {

// Base class for every error raised by the algebra layer.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class DivisionByZero : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class UnknownVariable : public AlgebraError {
 public:
  explicit UnknownVariable(const std::string& name, std::size_t position = npos)
      : AlgebraError("unknown variable '" + name + "'"), name_(name), position_(position) {}

  const std::string& name() const noexcept { return name_; }
  // Offset into the parsed text, or npos when not raised by the parser.
  std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::string name_;
  std::size_t position_;
};

class MissingBinding : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotInvertible : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Evaluation point lies on the zero set of a denominator.
class PoleError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class Unsupported : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class DegreeCapExceeded : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace hypcomp
