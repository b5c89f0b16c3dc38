#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace casimir {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (index range, label sign, length).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// n is too small for a stable representation with the given k (requires n >= 2k+1).
class StableRangeError : public Error {
 public:
  StableRangeError(int n, int k)
      : Error("not in stable range: n=" + std::to_string(n) + " requires n >= " +
              std::to_string(2 * k + 1) + " for k=" + std::to_string(k)),
        n_(n),
        k_(k) {}
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

 private:
  int n_;
  int k_;
};

/// A label strictly between the head and tail blocks is nonzero.
class MiddleLabelError : public Error {
 public:
  explicit MiddleLabelError(int position)
      : Error("middle label nonzero at position " + std::to_string(position)),
        position_(position) {}
  /// 1-based label position.
  int position() const noexcept { return position_; }

 private:
  int position_;
};

class NotLinearError : public Error {
 public:
  NotLinearError() : Error("not linear in N: the 1/N coefficient is nonzero") {}
};

/// A decomposition grew past the configured resource cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace casimir
