#pragma once

#include "lucasindex/numtheory.hpp"
#include "lucasindex/quadfield.hpp"

namespace lucasindex {

// The Lucas sequence u_0 = 0, u_1 = 1, u_n = a1*u_{n-1} + a2*u_{n-2},
// with its discriminant data and validity flags.
struct LucasParams {
    long long a1 = 0;
    long long a2 = 0;
    long long D = 0;     // a1^2 + 4*a2
    long long d = 0;     // squarefree part of D (when D is a nonsquare)
    long long discK = 0; // fundamental discriminant of Q(sqrt(D))
    bool nondegenerate = false;
    bool D_nonsquare = false;
    bool discK_supported = false;

    static LucasParams analyze(long long a1, long long a2);

    bool valid() const {
        return a1 != 0 && a2 != 0 && D_nonsquare && nondegenerate && discK_supported;
    }
    void validate() const; // throws ValidationError with the failing reason

    QField field() const;
    QElem gamma() const; // alpha/beta, alpha the root with positive sqrt(d) part
};

// u_n mod p by fast doubling; works for any prime p (p >= 2).
uint64_t u_mod(uint64_t n, uint64_t p, const LucasParams& params);

// Smallest k >= 1 with p | u_k. Preconditions: p odd prime with
// p not dividing 2*a2*D (throws ExcludedPrimeError otherwise), and
// p -+ 1 factorable with the given table.
uint64_t rank_of_appearance(uint64_t p, const LucasParams& params,
                            const SpfTable& table);

// (p - (D|p)) / rank_of_appearance(p); always a positive integer.
uint64_t index_of_appearance(uint64_t p, const LucasParams& params,
                             const SpfTable& table);

} // namespace lucasindex
