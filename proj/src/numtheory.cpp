#include "lucasindex/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lucasindex {

Rat make_rat(long long num, long long den) {
    if (den == 0) throw ContractViolation("make_rat: zero denominator");
    Rat r(to_z(num), to_z(den));
    r.canonicalize();
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ContractViolation("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

SpfTable::SpfTable(uint64_t limit) : limit_(limit) {
    if (limit < 2) throw ContractViolation("SpfTable: limit must be >= 2");
    if (limit > (uint64_t(1) << 31))
        throw ResourceError("SpfTable: limit too large");
    try {
        spf_.assign(limit + 1, 0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("SpfTable: allocation failed");
    }
    primes_.reserve(size_t(double(limit) / std::log(std::max<double>(limit, 3)) * 1.15));
    for (uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = uint32_t(i);
            primes_.push_back(uint32_t(i));
        }
        for (uint32_t p : primes_) {
            if (p > spf_[i] || i * p > limit) break;
            spf_[i * p] = p;
        }
    }
}

uint32_t SpfTable::spf(uint64_t n) const {
    if (n < 2 || n > limit_)
        throw ContractViolation("SpfTable::spf: n out of range");
    return spf_[n];
}

bool SpfTable::is_prime(uint64_t n) const {
    if (n < 2) return false;
    if (n > limit_) throw ContractViolation("SpfTable::is_prime: n out of range");
    return spf_[n] == n;
}

uint64_t Factorization::value() const {
    uint64_t v = 1;
    for (auto [p, e] : factors)
        for (uint32_t i = 0; i < e; ++i) v *= p;
    return v;
}

bool Factorization::squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](auto pe) { return pe.second == 1; });
}

Factorization factorize(uint64_t n, const SpfTable& table) {
    if (n < 1 || n > table.limit())
        throw ContractViolation("factorize: n out of table range");
    Factorization f;
    while (n > 1) {
        uint64_t p = table.spf(n);
        uint32_t e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.factors.emplace_back(p, e);
    }
    return f;
}

namespace {

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((unsigned __int128)a * b % m);
}

uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t pollard_brent(uint64_t n) {
    // n odd composite, no factor found by the trial range
    for (uint64_t c = 1;; ++c) {
        auto step = [&](uint64_t x) { return (mulmod64(x, x, n) + c) % n; };
        uint64_t x = 2, y = 2, d = 1;
        uint64_t power = 1, lam = 0;
        while (d == 1) {
            if (power == lam) { x = y; power *= 2; lam = 0; }
            y = step(y);
            ++lam;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

} // namespace

bool is_prime64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Factorization factorize64(uint64_t n) {
    if (n < 1) throw ContractViolation("factorize64: n must be >= 1");
    Factorization f;
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        if (n % p == 0) {
            uint32_t e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.factors.emplace_back(p, e);
        }
    }
    // wheel over residues coprime to 30
    static const uint32_t wheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
    uint64_t p = 7;
    int w = 0;
    while (p <= 100000 && p * p <= n) {
        if (n % p == 0) {
            uint32_t e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.factors.emplace_back(p, e);
        }
        p += wheel[w];
        w = (w + 1) & 7;
    }
    // remaining cofactor has no prime factor <= 1e5
    std::vector<uint64_t> stack;
    if (n > 1) stack.push_back(n);
    std::vector<std::pair<uint64_t, uint32_t>> big;
    while (!stack.empty()) {
        uint64_t m = stack.back();
        stack.pop_back();
        if (is_prime64(m)) {
            bool merged = false;
            for (auto& pe : big)
                if (pe.first == m) { pe.second++; merged = true; break; }
            if (!merged) big.emplace_back(m, 1);
            continue;
        }
        uint64_t d = pollard_brent(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(big.begin(), big.end());
    for (auto pe : big) f.factors.emplace_back(pe.first, pe.second);
    return f;
}

uint64_t euler_phi(uint64_t n) {
    if (n < 1) throw ContractViolation("euler_phi: n must be >= 1");
    uint64_t result = n;
    for (auto [p, e] : factorize64(n).factors) result = result / p * (p - 1);
    return result;
}

uint64_t euler_phi(uint64_t n, const SpfTable& table) {
    if (n < 1 || n > table.limit())
        throw ContractViolation("euler_phi: n out of table range");
    uint64_t result = n;
    while (n > 1) {
        uint64_t p = table.spf(n);
        result = result / p * (p - 1);
        while (n % p == 0) n /= p;
    }
    return result;
}

int moebius(uint64_t n) {
    if (n < 1) throw ContractViolation("moebius: n must be >= 1");
    auto f = factorize64(n);
    if (!f.squarefree()) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

uint32_t nu(uint64_t p, uint64_t n) {
    if (p < 2 || n < 1) throw ContractViolation("nu: need p >= 2, n >= 1");
    uint32_t e = 0;
    while (n % p == 0) { n /= p; ++e; }
    return e;
}

int jacobi(long long a, uint64_t n) {
    if (n == 0 || n % 2 == 0)
        throw ContractViolation("jacobi: modulus must be odd and positive");
    uint64_t aa = uint64_t(((a % (long long)n) + (long long)n) % (long long)n);
    uint64_t nn = n;
    int result = 1;
    while (aa != 0) {
        while (aa % 2 == 0) {
            aa /= 2;
            if (nn % 8 == 3 || nn % 8 == 5) result = -result;
        }
        std::swap(aa, nn);
        if (aa % 4 == 3 && nn % 4 == 3) result = -result;
        aa %= nn;
    }
    return nn == 1 ? result : 0;
}

int legendre(long long a, uint64_t p) {
    if (p < 3 || p % 2 == 0)
        throw ContractViolation("legendre: p must be an odd prime");
    return jacobi(a, p);
}

Int squarefree_part(const Int& m) {
    if (m == 0) throw ContractViolation("squarefree_part: m must be nonzero");
    Int am = abs(m);
    Int d = 1;
    if (am.fits_ulong_p()) {
        for (auto [p, e] : factorize64(am.get_ui()).factors)
            if (e % 2 == 1) d *= (unsigned long)p;
    } else {
        // trial division only; adequate for the sizes produced by this library
        Int rest = am;
        for (uint64_t p = 2; Int(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
            uint32_t e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                rest /= (unsigned long)p;
                ++e;
            }
            if (e % 2 == 1) d *= (unsigned long)p;
        }
        if (rest > 1) d *= rest;
    }
    return sgn(m) < 0 ? Int(-d) : d;
}

long long squarefree_part(long long m) {
    Int d = squarefree_part(to_z(m));
    if (!d.fits_slong_p()) throw InternalError("squarefree_part: overflow");
    return d.get_si();
}

Int fundamental_discriminant(const Int& m) {
    if (m == 0) throw ContractViolation("fundamental_discriminant: m must be nonzero");
    if (m > 0 && is_square(m))
        throw ContractViolation("fundamental_discriminant: m is a perfect square");
    Int d = squarefree_part(m);
    Int mod4 = ((d % 4) + 4) % 4;
    return mod4 == 1 ? d : Int(4 * d);
}

long long fundamental_discriminant(long long m) {
    Int d = fundamental_discriminant(to_z(m));
    if (!d.fits_slong_p()) throw InternalError("fundamental_discriminant: overflow");
    return d.get_si();
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    if (!is_square(num) || !is_square(den)) return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return make_rat(sn, sd);
}

uint64_t nth_prime_upper_bound(uint64_t n) {
    if (n < 6) return 13;
    double dn = double(n);
    double bound = dn * (std::log(dn) + std::log(std::log(dn)));
    return uint64_t(bound) + 16;
}

} // namespace lucasindex
