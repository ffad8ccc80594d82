#pragma once

#include <stdexcept>
#include <string>

namespace toricmon {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class invalid_argument : public error {
public:
  using error::error;
};

class unsupported_input : public error {
public:
  using error::error;
};

class degenerate_cone : public error {
public:
  using error::error;
};

/// Evaluation of a Laurent element at a point where it is undefined.
class pole_error : public error {
public:
  using error::error;
};

/// A cone whose semigroup algebra is not closed under the group comultiplication.
/// The witness fields name the offending lattice point and the vertical point
/// missing from the cone.
class not_a_monoid : public error {
public:
  not_a_monoid(std::string what, std::string witness, std::string missing)
      : error(std::move(what)), witness_(std::move(witness)),
        missing_(std::move(missing)) {}
  const std::string &witness() const noexcept { return witness_; }
  const std::string &missing() const noexcept { return missing_; }

private:
  std::string witness_;
  std::string missing_;
};

class not_applicable : public error {
public:
  using error::error;
};

class not_implemented_chart : public error {
public:
  using error::error;
};

/// An internal invariant failed, e.g. a comultiplication output left its cone.
class internal_consistency : public error {
public:
  using error::error;
};

} // namespace toricmon
