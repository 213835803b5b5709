#pragma once

#include <stdexcept>
#include <string>

namespace holo {

// Base for all domain errors raised by construction and verification code.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define HOLO_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                           \
    explicit Name(const std::string& msg) : Error(msg) {}         \
  }

HOLO_DEFINE_ERROR(DuplicateZero);       // repeated zero handed to a product builder
HOLO_DEFINE_ERROR(NodeNotZeroOfB);      // interpolation node is not a zero of b
HOLO_DEFINE_ERROR(ZeroDerivative);      // b' vanishes where a simple zero is required
HOLO_DEFINE_ERROR(ContourThroughZero);  // quadrature node too close to a zero
HOLO_DEFINE_ERROR(NonIntegerWinding);   // winding estimate far from any integer
HOLO_DEFINE_ERROR(PunctureOffCurve);    // puncture fails the curve equation
HOLO_DEFINE_ERROR(HypothesisViolation); // kept fiber point fails the submersion bound
HOLO_DEFINE_ERROR(CoincidentPoints);    // two arguments that must differ coincide
HOLO_DEFINE_ERROR(ZeroInput);           // zero where a nonzero value is required
HOLO_DEFINE_ERROR(PointOffCurve);       // curve point argument fails the equation
HOLO_DEFINE_ERROR(NotABranchPoint);     // argument is not among the branch points
HOLO_DEFINE_ERROR(HypothesisFailure);   // shear data inconsistent with the graph
HOLO_DEFINE_ERROR(DuplicatePuncture);   // repeated puncture in a model
HOLO_DEFINE_ERROR(ConfigError);         // malformed or inconsistent job config

#undef HOLO_DEFINE_ERROR

}  // namespace holo
