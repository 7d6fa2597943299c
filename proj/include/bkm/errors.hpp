#ifndef BKM_ERRORS_HPP
#define BKM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bkm {

// Base for all domain-level failures (CLI maps these to exit code 3).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotUnivariateT : DomainError {
    NotUnivariateT() : DomainError("polynomial involves s; expected t-only") {}
};

struct LambdaZero : DomainError {
    LambdaZero() : DomainError("lambda must be nonzero") {}
};

struct HNotUnivariate : DomainError {
    HNotUnivariate() : DomainError("h must be a polynomial in t only") {}
};

struct QuotientUndefined : DomainError {
    QuotientUndefined() : DomainError("quotient layers require alpha = beta = 0") {}
};

struct BetaZero : DomainError {
    BetaZero() : DomainError("h is not determined by b_1 when beta = 0") {}
};

struct NotPhiShaped : DomainError {
    explicit NotPhiShaped(const std::string& what) : DomainError("action data is not Phi-shaped: " + what) {}
};

struct UnknownSubalgebra : DomainError {
    explicit UnknownSubalgebra(const std::string& name) : DomainError("unknown subalgebra: " + name) {}
};

struct UnknownDescriptor : DomainError {
    explicit UnknownDescriptor(const std::string& name) : DomainError("unknown subspace descriptor: " + name) {}
};

struct BoxOverflow : DomainError {
    BoxOverflow() : DomainError("polynomial does not fit the degree box") {}
};

struct ZeroStart : DomainError {
    ZeroStart() : DomainError("start vector must be nonzero") {}
};

struct ZeroVector : DomainError {
    ZeroVector() : DomainError("vector must be nonzero") {}
};

// Syntax-level failure (CLI exit code 2). Offset is a byte position into the input.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t at, const std::string& expected)
        : std::runtime_error("parse error at byte " + std::to_string(at) + ": expected " + expected),
          offset(at) {}
};

}  // namespace bkm

#endif
