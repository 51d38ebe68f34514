#pragma once

#include <stdexcept>
#include <string>

namespace g2count {

/// Base class for internal consistency failures. These never indicate bad
/// user input; they mean an upstream computation produced data that violates
/// an invariant (the CLI maps them to exit code 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define G2COUNT_DEFINE_ERROR(Name)                       \
  class Name : public Error {                            \
   public:                                               \
    explicit Name(const std::string& what)               \
        : Error(std::string(#Name ": ") + what) {}       \
  }

// cyclotomic
G2COUNT_DEFINE_ERROR(NonRational);
G2COUNT_DEFINE_ERROR(NonIntegral);
G2COUNT_DEFINE_ERROR(OrderMismatch);
G2COUNT_DEFINE_ERROR(TruncationTooShort);

// weylchar
G2COUNT_DEFINE_ERROR(DeformationDegenerate);
G2COUNT_DEFINE_ERROR(BoundExceeded);

// gammaclasses
G2COUNT_DEFINE_ERROR(BadOrderData);
G2COUNT_DEFINE_ERROR(GroupSizeUnexpected);
G2COUNT_DEFINE_ERROR(TorusRecoveryFailed);

// counts
G2COUNT_DEFINE_ERROR(FixtureMissing);
G2COUNT_DEFINE_ERROR(FixtureMalformed);

#undef G2COUNT_DEFINE_ERROR

}  // namespace g2count
