#ifndef GAHP_ERRORS_HPP
#define GAHP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gahp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value is outside the domain of an operation (non-positive entry, alpha < 1, ...).
struct DomainError : Error {
    using Error::Error;
};

// Dimensions of the arguments do not agree.
struct ShapeError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

// A linear map was requested through two points with the same abscissa.
struct DegenerateMapError : Error {
    using Error::Error;
};

// Credibility anchors are not ordered h >= m >= l.
struct CredibilityOrderError : Error {
    using Error::Error;
};

struct EmptyReportError : Error {
    using Error::Error;
};

} // namespace gahp

#endif
