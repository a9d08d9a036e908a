#include "lucasindex/lucas.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

namespace lucasindex {

LucasParams LucasParams::analyze(long long a1, long long a2) {
    if (std::llabs(a1) > 1000000000LL || std::llabs(a2) > 1000000000LL)
        throw ContractViolation("LucasParams: |a1|, |a2| must be <= 1e9");
    LucasParams prm;
    prm.a1 = a1;
    prm.a2 = a2;
    prm.D = a1 * a1 + 4 * a2;
    prm.D_nonsquare = prm.D < 0 || !is_square(to_z(prm.D));
    if (a1 != 0 && a2 != 0) {
        // gamma + 1/gamma = (a1^2 + 2 a2)/(-a2); gamma is a root of unity
        // exactly when this rational lies in {0, +-1, +-2}
        Rat tr = make_rat(a1 * a1 + 2 * a2, -a2);
        prm.nondegenerate =
            !(tr == 0 || tr == 1 || tr == -1 || tr == 2 || tr == -2);
    }
    if (prm.D_nonsquare && prm.D != 0) {
        prm.d = squarefree_part(prm.D);
        prm.discK = fundamental_discriminant(prm.D);
        prm.discK_supported = prm.discK != -3 && prm.discK != -4;
    }
    return prm;
}

void LucasParams::validate() const {
    using R = ValidationError::Reason;
    if (a1 == 0 || a2 == 0)
        throw ValidationError(R::ZeroCoefficient, "a1 and a2 must be nonzero");
    if (!D_nonsquare)
        throw ValidationError(R::SquareDiscriminant,
                              "D = a1^2 + 4*a2 = " + std::to_string(D) +
                                  " is a perfect square");
    if (!nondegenerate)
        throw ValidationError(R::Degenerate,
                              "degenerate sequence: the root ratio is a root of unity");
    if (!discK_supported)
        throw ValidationError(R::UnsupportedField,
                              "disc of Q(sqrt(D)) is " + std::to_string(discK) +
                                  "; -3 and -4 are not supported");
}

QField LucasParams::field() const {
    validate();
    return QField::of_squarefree(d);
}

QElem LucasParams::gamma() const {
    QField fld = field();
    // alpha = a1/2 + (e/2) sqrt(d) with e = sqrt(D/d); gamma = alpha^2 / (-a2)
    long long q = D / d; // a positive perfect square
    long long e = (long long)std::llround(std::sqrt(double(q)));
    while (e * e < q) ++e;
    while (e * e > q) --e;
    QElem alpha(make_rat(a1, 2), make_rat(e, 2), fld);
    return alpha * alpha * make_rat(-1, a2);
}

namespace {

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    // callers guarantee p < 2^32
    return (a * b) % p;
}

inline uint64_t reduce_ll(long long v, uint64_t p) {
    long long r = v % (long long)p;
    if (r < 0) r += (long long)p;
    return uint64_t(r);
}

} // namespace

uint64_t u_mod(uint64_t n, uint64_t p, const LucasParams& prm) {
    if (p < 2) throw ContractViolation("u_mod: p must be >= 2");
    if (p >= (uint64_t(1) << 32))
        throw ContractViolation("u_mod: p must be < 2^32");
    const uint64_t a1 = reduce_ll(prm.a1, p);
    const uint64_t a2 = reduce_ll(prm.a2, p);
    if (n == 0) return 0;
    // (a, b) = (u_m, u_{m+1}); doubling via u_{2m} = u_m (2 u_{m+1} - a1 u_m),
    // u_{2m+1} = u_{m+1}^2 + a2 u_m^2
    uint64_t a = 0, b = 1 % p;
    for (int i = 63 - std::countl_zero(n); i >= 0; --i) {
        uint64_t t = submod(addmod(b, b, p), mulmod(a1, a, p), p);
        uint64_t u2m = mulmod(a, t, p);
        uint64_t u2m1 = addmod(mulmod(b, b, p), mulmod(a2, mulmod(a, a, p), p), p);
        a = u2m;
        b = u2m1;
        if ((n >> i) & 1) {
            uint64_t nb = addmod(mulmod(a1, b, p), mulmod(a2, a, p), p);
            a = b;
            b = nb;
        }
    }
    return a;
}

namespace {

bool divides_2a2D(uint64_t p, const LucasParams& prm) {
    if (p == 2) return true;
    if (reduce_ll(prm.a2, p) == 0) return true;
    if (reduce_ll(prm.D, p) == 0) return true;
    return false;
}

} // namespace

uint64_t rank_of_appearance(uint64_t p, const LucasParams& prm,
                            const SpfTable& table) {
    if (divides_2a2D(p, prm))
        throw ExcludedPrimeError(p, "p divides 2*a2*D");
    int chi = legendre(prm.D, p);
    uint64_t m0 = chi > 0 ? p - 1 : p + 1;
    if (m0 > table.limit())
        throw ContractViolation("rank_of_appearance: p exceeds the sieve range");
    // peel prime factors off m0 while the zero persists
    uint64_t m = m0;
    uint64_t rest = m0;
    while (rest > 1) {
        uint64_t q = table.spf(rest);
        while (rest % q == 0) rest /= q;
        while (m % q == 0 && u_mod(m / q, p, prm) == 0) m /= q;
    }
    return m;
}

uint64_t index_of_appearance(uint64_t p, const LucasParams& prm,
                             const SpfTable& table) {
    uint64_t rho = rank_of_appearance(p, prm, table);
    int chi = legendre(prm.D, p);
    uint64_t m0 = chi > 0 ? p - 1 : p + 1;
    return m0 / rho;
}

} // namespace lucasindex
