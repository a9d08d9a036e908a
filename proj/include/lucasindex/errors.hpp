#pragma once

#include <stdexcept>
#include <string>

namespace lucasindex {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
struct ContractViolation : Error {
    using Error::Error;
};

// A sieve or table could not be allocated / is too large.
struct ResourceError : Error {
    using Error::Error;
};

// The Lucas pair (a1, a2) is outside the supported domain.
struct ValidationError : Error {
    enum class Reason {
        ZeroCoefficient,    // a1 = 0 or a2 = 0
        SquareDiscriminant, // a1^2 + 4*a2 is a perfect square (possibly 0)
        Degenerate,         // the root ratio is a root of unity
        UnsupportedField,   // disc of Q(sqrt(D)) is -3 or -4
    };
    Reason reason;
    ValidationError(Reason r, const std::string& msg) : Error(msg), reason(r) {}
};

// p divides 2*a2*D: the rank of appearance is not handled for such primes.
struct ExcludedPrimeError : Error {
    unsigned long long p;
    ExcludedPrimeError(unsigned long long p_, const std::string& msg)
        : Error(msg), p(p_) {}
};

// An internal cross-check failed; indicates a bug, not a user error.
struct InternalError : Error {
    using Error::Error;
};

} // namespace lucasindex
