#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace supergraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cayley table fails a group axiom. When the failure is associativity the
// offending triple (a, b, c) with (ab)c != a(bc) is attached.
class NotAGroup : public Error {
 public:
  explicit NotAGroup(const std::string& what,
                     std::optional<std::array<std::size_t, 3>> witness = std::nullopt)
      : Error(what), witness_(witness) {}

  const std::optional<std::array<std::size_t, 3>>& witness() const { return witness_; }

 private:
  std::optional<std::array<std::size_t, 3>> witness_;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class NoSignChange : public Error {
 public:
  NoSignChange(const std::string& what, long long lo, long long hi)
      : Error(what), lo_(lo), hi_(hi) {}
  long long lo() const { return lo_; }
  long long hi() const { return hi_; }

 private:
  long long lo_;
  long long hi_;
};

class CanonicalAmbiguity : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class UnsupportedClosedForm : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace supergraph
