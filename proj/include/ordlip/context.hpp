#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace ordlip {

// Numeric tolerance carried through every check. A comparison counts as a
// violation only when it fails by more than epsilon, so boundary equalities
// (tight triangles, tight Lipschitz pairs) are accepted.
struct Context {
  double epsilon = 1e-9;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Errc {
  IndexOutOfRange,
  EmptySubset,
  SizeMismatch,
  DuplicatePoint,
  InvalidMetric,
  InvalidOrder,
  NotAViolation,
  PointInDomain,
  EmptyDomain,
  NegativeK,
  WidthMismatch,
  InvalidPartialFunction,
  InvalidPolicy,
  InvertedRange,
  NotRadial,
  DegenerateDiameter,
  TooFewPoints,
  VectorNotSupported,
  DegenerateMajorant,
  InvalidMetricParams,
  NotATree,
  RootMissing,
  NotRadiallyConvex,
  ThetaTooSmall,
  DuplicateSamples,
  ParseError,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::InvalidMetric: return "InvalidMetric";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::NotAViolation: return "NotAViolation";
    case Errc::PointInDomain: return "PointInDomain";
    case Errc::EmptyDomain: return "EmptyDomain";
    case Errc::NegativeK: return "NegativeK";
    case Errc::WidthMismatch: return "WidthMismatch";
    case Errc::InvalidPartialFunction: return "InvalidPartialFunction";
    case Errc::InvalidPolicy: return "InvalidPolicy";
    case Errc::InvertedRange: return "InvertedRange";
    case Errc::NotRadial: return "NotRadial";
    case Errc::DegenerateDiameter: return "DegenerateDiameter";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::VectorNotSupported: return "VectorNotSupported";
    case Errc::DegenerateMajorant: return "DegenerateMajorant";
    case Errc::InvalidMetricParams: return "InvalidMetricParams";
    case Errc::NotATree: return "NotATree";
    case Errc::RootMissing: return "RootMissing";
    case Errc::NotRadiallyConvex: return "NotRadiallyConvex";
    case Errc::ThetaTooSmall: return "ThetaTooSmall";
    case Errc::DuplicateSamples: return "DuplicateSamples";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace ordlip
