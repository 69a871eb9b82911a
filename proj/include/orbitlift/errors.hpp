#pragma once

#include <stdexcept>
#include <string>

namespace orbitlift {

enum class Errc {
  IndexOutOfRange,
  DimensionMismatch,
  ShapeMismatch,
  NonDivisible,
  OrderExhausted,
  NotInvariant,
  RewriterUnavailable,
  ConventionViolation,
  FlatComponent,
  FlatCurve,
  SingularPoint,
  InconsistentCurve,
  SliceUnavailable,
  FlatnessObstruction,
  NoMatchingElement,
  FlatOverlap,
  FlatWedge,
  FlatVector,
  InternalInconsistency,
  UnknownEntry,
  ValidationFailed,
  NoSection,
  ParseError,
  UsageError,
};

const char* errc_name(Errc c);

// A certified obstruction is a mathematically meaningful negative answer,
// not a failure of the tool; the CLI maps these to exit status 2.
inline bool is_certified_obstruction(Errc c) {
  return c == Errc::FlatnessObstruction || c == Errc::FlatOverlap;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace orbitlift
