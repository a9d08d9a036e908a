#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lucasindex/density.hpp"
#include "lucasindex/lucas.hpp"

namespace lucasindex {

// Tallies of the index of appearance over the first prime_count primes.
struct EmpiricalTable {
    LucasParams params;
    uint64_t prime_count = 0;
    uint64_t x = 0;                      // largest prime scanned
    std::map<uint64_t, uint64_t> counts; // t -> #{p : iota(p) = t}
    std::vector<uint64_t> skipped;       // scanned primes dividing 2*a2*D

    uint64_t count_of(uint64_t t) const;
    uint64_t count_multiples(uint64_t n) const; // #{p : n | iota(p)}
    double density(uint64_t t) const;           // count_of(t) / prime_count
};

// Deterministic parallel scan: counts are independent of the worker count.
// Requires table.limit() >= x + 1 so that p -+ 1 stays factorable.
EmpiricalTable scan(const LucasParams& params, uint64_t n_primes,
                    unsigned workers, const SpfTable& table);

struct CompareRow {
    uint64_t t;
    Rat coeff;          // delta / A
    double delta;       // closed form
    double delta_tilde; // empirical
    std::optional<double> error_pct; // absent when delta = 0 and delta~ != 0
    bool both_zero = false;
    bool flagged = false; // delta = 0 with delta~ != 0
};

std::vector<CompareRow> compare(const DensityProfile& profile,
                                const EmpiricalTable& table, uint64_t t_max);

} // namespace lucasindex
