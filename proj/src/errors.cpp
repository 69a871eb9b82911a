#include "orbitlift/errors.hpp"

namespace orbitlift {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NonDivisible: return "NonDivisible";
    case Errc::OrderExhausted: return "OrderExhausted";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::RewriterUnavailable: return "RewriterUnavailable";
    case Errc::ConventionViolation: return "ConventionViolation";
    case Errc::FlatComponent: return "FlatComponent";
    case Errc::FlatCurve: return "FlatCurve";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::InconsistentCurve: return "InconsistentCurve";
    case Errc::SliceUnavailable: return "SliceUnavailable";
    case Errc::FlatnessObstruction: return "FlatnessObstruction";
    case Errc::NoMatchingElement: return "NoMatchingElement";
    case Errc::FlatOverlap: return "FlatOverlap";
    case Errc::FlatWedge: return "FlatWedge";
    case Errc::FlatVector: return "FlatVector";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::UnknownEntry: return "UnknownEntry";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::NoSection: return "NoSection";
    case Errc::ParseError: return "ParseError";
    case Errc::UsageError: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace orbitlift
