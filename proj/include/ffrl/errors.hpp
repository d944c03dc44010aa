#pragma once

#include <stdexcept>
#include <string>

namespace ffrl {

// Base class for all library errors. Subclasses carry the condition name so
// callers (and the CLI) can map failures to stable exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotOddPrime : Error {
    explicit NotOddPrime(const std::string& msg) : Error(msg) {}
};
struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};
struct NoIrreduciblePolynomialFound : Error {
    explicit NoIrreduciblePolynomialFound(const std::string& msg) : Error(msg) {}
};
struct ZeroLeadingCoefficient : Error {
    explicit ZeroLeadingCoefficient(const std::string& msg) : Error(msg) {}
};
struct InvalidExponent : Error {
    explicit InvalidExponent(const std::string& msg) : Error(msg) {}
};
struct WrongMeasureTag : Error {
    explicit WrongMeasureTag(const std::string& msg) : Error(msg) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};
struct ZeroRadius : Error {
    explicit ZeroRadius(const std::string& msg) : Error(msg) {}
};
struct MinusOneNotSquare : Error {
    explicit MinusOneNotSquare(const std::string& msg) : Error(msg) {}
};
struct NoBasePointFound : Error {
    explicit NoBasePointFound(const std::string& msg) : Error(msg) {}
};
struct SubspaceNotFound : Error {
    explicit SubspaceNotFound(const std::string& msg) : Error(msg) {}
};
struct OddDimension : Error {
    explicit OddDimension(const std::string& msg) : Error(msg) {}
};
struct NotLayFunction : Error {
    explicit NotLayFunction(const std::string& msg) : Error(msg) {}
};
struct NotHomogeneousZero : Error {
    explicit NotHomogeneousZero(const std::string& msg) : Error(msg) {}
};
struct ZeroFunction : Error {
    explicit ZeroFunction(const std::string& msg) : Error(msg) {}
};

}  // namespace ffrl
