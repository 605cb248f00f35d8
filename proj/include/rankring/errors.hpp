#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankring {

/// Base class for every error raised by the library. The CLI maps
/// ComputationError subclasses to exit code 1 and everything else to 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class ComputationError : public Error {
 public:
  using Error::Error;
};

#define RANKRING_DEFINE_ERROR(Name, Base)      \
  class Name : public Base {                   \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Base(std::string(#Name ": ") + what) {} \
  }

RANKRING_DEFINE_ERROR(MixedRings, UsageError);
RANKRING_DEFINE_ERROR(NotAUnit, UsageError);
RANKRING_DEFINE_ERROR(NotPrime, UsageError);
RANKRING_DEFINE_ERROR(NotMonic, UsageError);
RANKRING_DEFINE_ERROR(OutOfRange, UsageError);
RANKRING_DEFINE_ERROR(DimensionMismatch, UsageError);
RANKRING_DEFINE_ERROR(ShapeNotDominated, UsageError);
RANKRING_DEFINE_ERROR(NotFree, UsageError);
RANKRING_DEFINE_ERROR(RankTooSmall, UsageError);
RANKRING_DEFINE_ERROR(ZeroCode, UsageError);
RANKRING_DEFINE_ERROR(ZeroProjection, UsageError);
RANKRING_DEFINE_ERROR(DependentRows, UsageError);
RANKRING_DEFINE_ERROR(InvalidParams, UsageError);
RANKRING_DEFINE_ERROR(FormatError, UsageError);
RANKRING_DEFINE_ERROR(TooLarge, ComputationError);
RANKRING_DEFINE_ERROR(TrialsExhausted, ComputationError);

#undef RANKRING_DEFINE_ERROR

/// Raised when h reduces to a reducible polynomial over the residue field.
/// `factor` holds a nontrivial factor (ascending coefficients) when one was
/// found during the check, and is empty otherwise.
class ReducibleResidue : public UsageError {
 public:
  ReducibleResidue(const std::string& what, std::vector<std::uint64_t> factor)
      : UsageError("ReducibleResidue: " + what), factor_(std::move(factor)) {}
  const std::vector<std::uint64_t>& factor() const { return factor_; }

 private:
  std::vector<std::uint64_t> factor_;
};

}  // namespace rankring
