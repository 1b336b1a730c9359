#pragma once

#include <stdexcept>
#include <string>

namespace pisot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's precondition.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// The operation is only implemented up to a fixed degree.
class UnsupportedDegree : public Error {
public:
  using Error::Error;
};

/// A closed-form cycle construction hit a vanishing denominator.
class DegenerateCycle : public Error {
public:
  explicit DegenerateCycle(std::string quantity)
      : Error("degenerate cycle: " + quantity + " vanishes"), quantity_(std::move(quantity)) {}

  const std::string& quantity() const noexcept { return quantity_; }

private:
  std::string quantity_;
};

/// Two independent computations disagree; indicates a bug or a false claim.
class InternalInconsistency : public Error {
public:
  using Error::Error;
};

} // namespace pisot
