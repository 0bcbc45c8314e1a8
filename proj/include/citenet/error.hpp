#pragma once

#include <stdexcept>
#include <string>

namespace citenet {

enum class ErrorKind {
  Usage,
  Io,
  Validation,
  NotFound,
  Domain,
  NonConvergence,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& what) : Error(ErrorKind::NotFound, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

// Thrown when power iteration exhausts max_iter; carries the last L1 residual.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double residual, unsigned iterations)
      : Error(ErrorKind::NonConvergence, what), residual_(residual), iterations_(iterations) {}
  double residual() const noexcept { return residual_; }
  unsigned iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  unsigned iterations_;
};

}  // namespace citenet
