#pragma once

#include <stdexcept>
#include <string>

namespace wickgit {

/// Error raised for domain violations: malformed inputs, broken preconditions,
/// degenerate forms, non-closed orbits where a closed one is required, etc.
/// The CLI maps this to exit code 2.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Default tolerances shared across the library.  Each operation that uses one
/// accepts an override; these are the documented defaults.
namespace tol {
inline constexpr double kSymmetry = 1e-10;    // symmetry / skewness checks
inline constexpr double kEigenZero = 1e-9;    // eigenvalue treated as zero
inline constexpr double kResidual = 1e-12;    // reconstruction residuals
inline constexpr double kBracket = 1e-10;     // Lie bracket closure
inline constexpr double kCommute = 1e-12;     // conjugation commutators
inline constexpr double kGradient = 1e-10;    // Kempf-Ness gradient stop
inline constexpr double kWeightInt = 1e-8;    // integrality of boost weights
}  // namespace tol

}  // namespace wickgit
