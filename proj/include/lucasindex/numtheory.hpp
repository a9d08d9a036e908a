#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lucasindex/errors.hpp"

namespace lucasindex {

using Rat = mpq_class;
using Int = mpz_class;

// gmpxx has no long long constructor; long is 64-bit on every supported target
inline Int to_z(long long v) { return Int(static_cast<long>(v)); }

// Exact rational num/den, canonicalized (lowest terms, positive denominator).
Rat make_rat(long long num, long long den = 1);
Rat make_rat(const Int& num, const Int& den);

std::string rat_str(const Rat& r); // "num/den", or "num" when den = 1

// Smallest-prime-factor table for 2..limit plus the list of primes up to
// limit, built with a linear sieve. Immutable after construction, safe to
// share across threads.
class SpfTable {
public:
    explicit SpfTable(uint64_t limit);

    uint64_t limit() const { return limit_; }
    uint32_t spf(uint64_t n) const;
    bool is_prime(uint64_t n) const;
    const std::vector<uint32_t>& primes() const { return primes_; }

private:
    uint64_t limit_;
    std::vector<uint32_t> spf_;
    std::vector<uint32_t> primes_;
};

// (prime, exponent) pairs with strictly increasing primes; empty for n = 1.
struct Factorization {
    std::vector<std::pair<uint64_t, uint32_t>> factors;

    uint64_t value() const; // product of p^e
    bool squarefree() const;
};

Factorization factorize(uint64_t n, const SpfTable& table);

// Table-free factorization of any 64-bit integer (trial division backed by
// Pollard-Brent rho above the trial range).
Factorization factorize64(uint64_t n);

bool is_prime64(uint64_t n); // deterministic Miller-Rabin

uint64_t euler_phi(uint64_t n);
uint64_t euler_phi(uint64_t n, const SpfTable& table);
int moebius(uint64_t n);
uint32_t nu(uint64_t p, uint64_t n); // p-adic valuation, n >= 1

// Jacobi symbol (a|n) for odd n >= 1.
int jacobi(long long a, uint64_t n);

// Legendre symbol (a|p). Precondition: p is an odd prime (primality is the
// caller's responsibility; oddness is checked).
int legendre(long long a, uint64_t p);

// Largest squarefree d with m/d a positive rational square; sign(d) = sign(m).
long long squarefree_part(long long m);
Int squarefree_part(const Int& m);

// Discriminant of Q(sqrt(m)): d if d = 1 (mod 4) else 4d, d = squarefree_part(m).
// Precondition: m is not a perfect square (and m != 0).
long long fundamental_discriminant(long long m);
Int fundamental_discriminant(const Int& m);

// The nonnegative rational square root of r, if r is a square in Q.
std::optional<Rat> rational_sqrt(const Rat& r);

bool is_square(const Int& n); // n >= 0 and a perfect square

// Upper bound for the n-th prime (1-indexed), suitable for sieve sizing.
uint64_t nth_prime_upper_bound(uint64_t n);

} // namespace lucasindex
