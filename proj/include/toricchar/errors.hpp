#ifndef TORICCHAR_ERRORS_HPP
#define TORICCHAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toricchar {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// input / syntax
struct ParseError : Error { using Error::Error; };

// polynomial layer
struct NotHomogeneousError : Error { using Error::Error; };
struct ZeroPolynomialError : Error { using Error::Error; };
struct EmptyDegreeError : Error { using Error::Error; };

// fan layer
struct FanValidationError : Error { using Error::Error; };      // NonPrimitiveRay, DuplicateRay, ...
struct TorsionClassGroupError : Error { using Error::Error; };
struct NefBasisNotFoundError : Error { using Error::Error; };
struct ConditionFailedError : Error { using Error::Error; };    // affine codimension condition

// chow layer
struct IntegralityViolationError : Error { using Error::Error; };
struct OrthogonalityFailureError : Error { using Error::Error; };
struct PointClassNotMonomialError : Error { using Error::Error; };
struct NotAUnitError : Error { using Error::Error; };

// characteristic-class layer
struct NotZeroDimensionalError : Error { using Error::Error; };
struct NotCompleteIntersectionError : Error { using Error::Error; };
struct DegreeNotNefError : Error { using Error::Error; };

// exact arithmetic guard
struct OverflowError : Error { using Error::Error; };

} // namespace toricchar

#endif
