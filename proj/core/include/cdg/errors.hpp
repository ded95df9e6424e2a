#ifndef CDG_ERRORS_HPP
#define CDG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cdg {

/// Base class of everything this library throws.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// geometry
struct OverlapError : Error { using Error::Error; };
struct HangingEdgeError : Error { using Error::Error; };
struct StraddleError : Error { using Error::Error; };
struct AlignmentError : Error { using Error::Error; };

// space
struct EvaluationError : Error { using Error::Error; };
struct OutOfSubdomainError : Error { using Error::Error; };

// quadrature
struct UnsupportedDegree : Error { using Error::Error; };

// forms
struct NonpositiveEpsilon : Error { using Error::Error; };
struct VariantError : Error { using Error::Error; };

/// Raised when an exponent in the carrier term exceeds the overflow
/// guard; the Newton damper treats it as a rejected step, not a failure.
struct OverflowGuard : Error { using Error::Error; };

// solver
struct LinearSolveFailure : Error { using Error::Error; };
struct MissingDirichletError : Error { using Error::Error; };

// analysis
struct NotLayered : Error { using Error::Error; };
struct ZeroReferenceNorm : Error { using Error::Error; };
struct UnknownCase : Error { using Error::Error; };

// config
struct ConfigError : Error { using Error::Error; };
struct ParseError : ConfigError { using ConfigError::ConfigError; };
struct SchemaError : ConfigError { using ConfigError::ConfigError; };
struct SemanticError : ConfigError { using ConfigError::ConfigError; };

} // namespace cdg

#endif
