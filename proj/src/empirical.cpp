#include "lucasindex/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

namespace lucasindex {

uint64_t EmpiricalTable::count_of(uint64_t t) const {
    auto it = counts.find(t);
    return it == counts.end() ? 0 : it->second;
}

uint64_t EmpiricalTable::count_multiples(uint64_t n) const {
    uint64_t total = 0;
    for (const auto& [t, c] : counts)
        if (t % n == 0) total += c;
    return total;
}

double EmpiricalTable::density(uint64_t t) const {
    return double(count_of(t)) / double(prime_count);
}

namespace {

struct WorkerResult {
    std::unordered_map<uint64_t, uint64_t> counts;
    std::vector<uint64_t> skipped;
};

void scan_range(const LucasParams& prm, const SpfTable& table,
                const std::vector<uint32_t>& primes, size_t lo, size_t hi,
                WorkerResult& out) {
    for (size_t i = lo; i < hi; ++i) {
        const uint64_t p = primes[i];
        if (p == 2 || prm.a2 % (long long)p == 0 || prm.D % (long long)p == 0) {
            out.skipped.push_back(p);
            continue;
        }
        const int chi = jacobi(prm.D, p);
        const uint64_t m0 = chi > 0 ? p - 1 : p + 1;
        uint64_t m = m0;
        uint64_t rest = m0;
        while (rest > 1) {
            const uint64_t q = table.spf(rest);
            while (rest % q == 0) rest /= q;
            while (m % q == 0 && u_mod(m / q, p, prm) == 0) m /= q;
        }
        ++out.counts[m0 / m];
    }
}

} // namespace

EmpiricalTable scan(const LucasParams& prm, uint64_t n_primes,
                    unsigned workers, const SpfTable& table) {
    prm.validate();
    if (n_primes < 1 || n_primes > 10000000ull)
        throw ContractViolation("scan: n_primes must be in [1, 1e7]");
    const auto& primes = table.primes();
    if (primes.size() < n_primes)
        throw ResourceError("scan: sieve holds fewer primes than requested");
    const uint64_t x = primes[n_primes - 1];
    if (x + 1 > table.limit())
        throw ResourceError("scan: sieve limit too small to factor p + 1");

    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, std::thread::hardware_concurrency());
    if (workers == 0) workers = 1;
    workers = (unsigned)std::min<uint64_t>(workers, n_primes);

    std::vector<WorkerResult> results(workers);
    std::vector<std::thread> threads;
    const uint64_t chunk = n_primes / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t lo = w * chunk;
        size_t hi = w + 1 == workers ? n_primes : (w + 1) * chunk;
        threads.emplace_back(scan_range, std::cref(prm), std::cref(table),
                             std::cref(primes), lo, hi, std::ref(results[w]));
    }
    for (auto& t : threads) t.join();

    EmpiricalTable out;
    out.params = prm;
    out.prime_count = n_primes;
    out.x = x;
    for (auto& r : results) {
        for (auto [t, c] : r.counts) out.counts[t] += c;
        out.skipped.insert(out.skipped.end(), r.skipped.begin(), r.skipped.end());
    }
    std::sort(out.skipped.begin(), out.skipped.end());

    uint64_t total = out.skipped.size();
    for (auto [t, c] : out.counts) total += c;
    if (total != n_primes)
        throw InternalError("scan: counts + skipped != prime_count");
    return out;
}

std::vector<CompareRow> compare(const DensityProfile& profile,
                                const EmpiricalTable& table, uint64_t t_max) {
    std::vector<CompareRow> rows;
    rows.reserve(t_max);
    for (uint64_t t = 1; t <= t_max; ++t) {
        CompareRow row;
        row.t = t;
        DeltaValue dv = profile.delta(t);
        row.coeff = dv.coeff;
        row.delta = dv.value;
        row.delta_tilde = table.density(t);
        const bool theory_zero = dv.coeff == 0;
        const bool empirical_zero = table.count_of(t) == 0;
        if (theory_zero && empirical_zero) {
            row.both_zero = true;
            row.error_pct = 0.0;
        } else if (theory_zero) {
            row.flagged = true; // theory says impossible, data disagrees
        } else {
            row.error_pct = std::fabs(row.delta - row.delta_tilde) / row.delta * 100.0;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace lucasindex
