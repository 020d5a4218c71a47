#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hypaut {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A configured cap was hit (sieve span, matrix size, monomial count, ...).
// The message names the cap and the offending request.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Factoring gave up within the configured effort; the unfactored cofactor
// is carried so callers can report a partial result.
class effort_error : public resource_error {
public:
    effort_error(const std::string& msg, Integer cofactor)
        : resource_error(msg), cofactor_(std::move(cofactor)) {}
    const Integer& cofactor() const noexcept { return cofactor_; }

private:
    Integer cofactor_;
};

// An internal consistency assertion failed in a way that indicates a defect
// in a transcribed formula rather than in the caller's input (e.g. a
// non-integral Gorinov bound). Surfaced, never repaired silently.
class inconsistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested computation is deliberately out of scope (e.g. general
// smoothness decision, p.p.a.v. report outside the classified cases).
class unsupported_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace hypaut
