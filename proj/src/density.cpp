#include "lucasindex/density.hpp"

#include <algorithm>
#include <numeric>

#include <mpfr.h>

namespace lucasindex {

namespace {
// prod over p < 1e8 of (1 - 1/(p(p-1))), with the prime tail added back by
// partial summation; agrees with the literature value to every digit kept.
const char* kArtinDigits = "0.3739558136192022880547280543";
}

const char* artin_constant_digits() { return kArtinDigits; }

double artin_constant() {
    static const double a = std::strtod(kArtinDigits, nullptr);
    return a;
}

double times_artin(const Rat& coeff) {
    mpfr_t a, c;
    mpfr_init2(a, 128);
    mpfr_init2(c, 128);
    mpfr_set_str(a, kArtinDigits, 10, MPFR_RNDN);
    mpfr_set_q(c, coeff.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(c, c, a, MPFR_RNDN);
    double out = mpfr_get_d(c, MPFR_RNDN);
    mpfr_clear(a);
    mpfr_clear(c);
    return out;
}

Rat f_small(uint64_t h, uint64_t t, uint64_t p) {
    if (h < 1 || t < 1 || p < 2)
        throw ContractViolation("f_small: need h, t >= 1 and p prime");
    if (t % p == 0) {
        if (nu(p, t) < nu(p, h)) return make_rat(1, (long long)p);
        return make_rat(1, (long long)(p * p));
    }
    if (h % p == 0) return make_rat(1, (long long)(p - 1));
    return make_rat(1, (long long)(p * (p - 1)));
}

Rat big_f(uint64_t h, uint64_t t) {
    if (h < 1 || t < 1) throw ContractViolation("big_f: need h, t >= 1");
    uint64_t g = std::gcd(t, h);
    Rat F = make_rat(Int(g), Int(euler_phi(t)) * Int(t));
    for (auto [p, e] : factorize64(t).factors) {
        if (p == 2) continue;
        uint64_t gpt = std::gcd(p * t, h);
        F *= Rat(1) - make_rat(Int(gpt), Int(p) * Int(p) * Int(g));
        F /= Rat(1) - make_rat(Int(std::gcd(p, h)), Int(p) * Int(p - 1));
    }
    return F;
}

Rat b_const(uint64_t h) {
    if (h < 1) throw ContractViolation("b_const: need h >= 1");
    Rat B = 2;
    for (auto [p, e] : factorize64(h).factors) {
        if (p == 2) continue;
        B *= Rat(1) - make_rat(Int(p - 1), Int(p) * Int(p) - Int(p) - 1);
    }
    return B;
}

Rat g_tilde(uint64_t h, uint64_t m, uint64_t t) {
    if (h < 1 || m < 1 || t < 1)
        throw ContractViolation("g_tilde: need h, m, t >= 1");
    auto fm = factorize64(m);
    if (!fm.squarefree()) return Rat(0);
    Rat G = m % 2 == 0 ? Rat(-f_small(h, t, 2)) : Rat(1) - f_small(h, t, 2);
    for (auto [p, e] : fm.factors) {
        if (p == 2) continue;
        Rat den = Rat(1) - Rat(1) / f_small(h, t, p);
        G /= den;
    }
    return G;
}

Rat g_fun(uint64_t h, uint64_t m, uint64_t t) {
    return g_tilde(h, m / std::gcd(m, t), t);
}

Rat wagstaff(uint64_t h, uint64_t m, uint64_t t) {
    return b_const(h) * big_f(h, t) * g_fun(h, m, t);
}

DensityProfile DensityProfile::build(const LucasParams& params) {
    params.validate();
    auto dec = gamma_decompose(params.gamma());
    auto ctx = ConditionContext::build(dec, params.field());
    DensityProfile prof(params, std::move(ctx));
    prof.chi_ = chi_decompose(prof.ctx_);

    const uint64_t twoh = prof.ctx_.two_h();
    uint64_t period0 = std::lcm(prof.chi_.period, twoh);
    std::vector<Rat> table(period0);
    auto gu_direct = [&](uint64_t t) -> Rat {
        Rat sum = 0;
        for (const auto& [m, c] : prof.chi_.terms) sum += c * g_fun(twoh, m, t);
        return b_const(twoh) * sum;
    };
    for (uint64_t t = 1; t <= period0; ++t) table[t % period0] = gu_direct(t);
    // reduce to the minimal period among the divisors of period0
    uint64_t best = period0;
    for (uint64_t cand = 1; cand < period0; ++cand) {
        if (period0 % cand != 0) continue;
        bool ok = true;
        for (uint64_t t = 0; t < period0 && ok; ++t)
            ok = table[t] == table[(t + cand) % period0];
        if (ok) { best = cand; break; }
    }
    prof.gu_period_ = best;
    prof.gu_.assign(best, Rat(0));
    for (uint64_t r = 0; r < best; ++r) prof.gu_[r] = table[r % period0];
    // the reduced table must keep matching direct evaluation
    for (uint64_t t = 1; t <= 3 * best; ++t)
        if (prof.gu_[t % best] != gu_direct(t))
            throw InternalError("gu_table: period reduction mismatch");
    return prof;
}

Rat DensityProfile::gu(uint64_t t) const {
    if (t < 1) throw ContractViolation("gu: t must be >= 1");
    return gu_[t % gu_period_];
}

DeltaValue DensityProfile::delta(uint64_t t) const {
    Rat coeff = big_f(ctx_.two_h(), t) * gu(t);
    if (coeff < 0) throw InternalError("delta: negative density coefficient");
    return DeltaValue{coeff, times_artin(coeff)};
}

SeriesValue delta_series(uint64_t t, uint64_t n_terms,
                         const ConditionContext& ctx) {
    if (t < 1 || n_terms < 1)
        throw ContractViolation("delta_series: need t, N >= 1");
    double sum = 0;
    for (uint64_t n = 1; n <= n_terms; ++n) {
        int mu = moebius(n);
        if (mu == 0) continue;
        sum += mu * degree_ratio(n * t, ctx).get_d();
    }
    return SeriesValue{sum, 8.0 / double(n_terms)};
}

} // namespace lucasindex
