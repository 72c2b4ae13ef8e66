// Basic vocabulary shared by every module: points, errors, tolerances.

#ifndef SPATIAL_VOTE_TYPES_HPP
#define SPATIAL_VOTE_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spatial_vote {

using Point = Eigen::VectorXd;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Relative tolerance for point equality; multiplied by the space diameter.
inline constexpr double kDefaultEps = 1e-8;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    DimensionError(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) +
                ", got " + std::to_string(got)) {}
};

/// Raised by constructors and loaders when an input violates an invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Raised when an operation's precondition on its arguments does not hold
/// (point outside the space, boundary anchor, wrong parity, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

inline void require_dimension(const Eigen::Index expected, const Vector& v) {
    if (v.size() != expected) {
        throw DimensionError(static_cast<std::size_t>(expected),
                             static_cast<std::size_t>(v.size()));
    }
}

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_TYPES_HPP
