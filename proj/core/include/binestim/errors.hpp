#pragma once

#include <stdexcept>
#include <string>

namespace binestim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BINESTIM_DEFINE_ERROR(Name)        \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

BINESTIM_DEFINE_ERROR(ParseError);
BINESTIM_DEFINE_ERROR(BadParameter);
BINESTIM_DEFINE_ERROR(PreconditionViolated);

// Referee
BINESTIM_DEFINE_ERROR(CapacityExceeded);
BINESTIM_DEFINE_ERROR(InvalidBin);
BINESTIM_DEFINE_ERROR(AdversaryDishonest);

// Algorithms
BINESTIM_DEFINE_ERROR(PlanViolation);
BINESTIM_DEFINE_ERROR(UnclassifiableBin);

// Oracles and certificates
BINESTIM_DEFINE_ERROR(InstanceTooLarge);
BINESTIM_DEFINE_ERROR(ConstructionFailure);
BINESTIM_DEFINE_ERROR(CertificateInfeasible);

#undef BINESTIM_DEFINE_ERROR

}  // namespace binestim
