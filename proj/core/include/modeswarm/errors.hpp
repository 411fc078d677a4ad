#ifndef MODESWARM_ERRORS_HPP
#define MODESWARM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modeswarm {

/// Operands (or a packed vector) do not have compatible sizes.
struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A matrix required to be symmetric positive definite is not.
struct NotPositiveDefinite : std::runtime_error {
  explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

/// Packed parameter vector has the wrong length for its declared order.
struct BadLength : std::invalid_argument {
  explicit BadLength(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested embedded dimension is outside [1, D].
struct InvalidDimension : std::invalid_argument {
  explicit InvalidDimension(const std::string& what) : std::invalid_argument(what) {}
};

/// Distortion parameter outside (0, 1].
struct InvalidEpsilon : std::invalid_argument {
  explicit InvalidEpsilon(const std::string& what) : std::invalid_argument(what) {}
};

/// First-order shift formula has a vanishing denominator for this perturbation.
struct DegenerateDenominator : std::runtime_error {
  explicit DegenerateDenominator(const std::string& what) : std::runtime_error(what) {}
};

/// An objective returned NaN (as opposed to a +inf penalty, which is allowed).
struct ObjectiveNonFinite : std::runtime_error {
  explicit ObjectiveNonFinite(const std::string& what) : std::runtime_error(what) {}
};

/// A physical or geometric quantity that must be positive is not.
struct NonPositiveInput : std::invalid_argument {
  explicit NonPositiveInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Division by a zero denominator in a ratio of physical quantities.
struct DivisionByZero : std::invalid_argument {
  explicit DivisionByZero(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace modeswarm

#endif  // MODESWARM_ERRORS_HPP
