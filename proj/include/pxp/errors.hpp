#ifndef PXP_ERRORS_HPP
#define PXP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace pxp {

// Base for all mathematical precondition violations. CLI maps these to exit 1.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : MathError {
    DivisionByZero() : MathError("division by zero field element") {}
};

struct NotBihomogeneous : MathError {
    NotBihomogeneous() : MathError("polynomial is not bihomogeneous") {}
};

struct ZeroPolynomial : MathError {
    ZeroPolynomial() : MathError("operation undefined for the zero polynomial") {}
};

struct ZeroIdeal : MathError {
    ZeroIdeal() : MathError("operation undefined for the zero ideal") {}
};

// Carries the violating pair of lattice points, 1-indexed (row, col).
struct NotAcm : MathError {
    std::pair<int, int> first_point;
    std::pair<int, int> second_point;

    NotAcm(std::pair<int, int> a, std::pair<int, int> b)
        : MathError("configuration is not ACM: points (" + std::to_string(a.first) + "," +
                    std::to_string(a.second) + ") and (" + std::to_string(b.first) + "," +
                    std::to_string(b.second) + ") have no completion point"),
          first_point(a),
          second_point(b) {}
};

// Partition does not have the shape an operation requires.
struct ShapeMismatch : MathError {
    using MathError::MathError;
};

// The bounded generator-shape search failed to regenerate the double symbolic
// power. This indicates an implementation bug; it is asserted never to fire.
struct ShapeNotFound : MathError {
    using MathError::MathError;
};

// The (1,1)-form through three prescribed points is not unique up to scalar.
struct DegenerateCoordinates : MathError {
    using MathError::MathError;
};

struct PreconditionFailed : MathError {
    using MathError::MathError;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pxp

#endif
