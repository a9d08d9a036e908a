#include "lucasindex/kummer.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace lucasindex {

CycloSqrt cyclo_sqrt_test(const Rat& r) {
    if (r == 0) throw ContractViolation("cyclo_sqrt_test: r must be nonzero");
    if (rational_sqrt(r)) return CycloSqrt{true, 0};
    // sqrt(num/den) = sqrt(num*den)/den, so only the kernel of num*den matters
    Int kernel = squarefree_part(Int(r.get_num() * r.get_den()));
    return CycloSqrt{false, fundamental_discriminant(kernel)};
}

bool sqrt_in_cyclotomic(const Rat& r, uint64_t n) {
    if (n < 1) throw ContractViolation("sqrt_in_cyclotomic: n must be >= 1");
    return cyclo_sqrt_test(r).contains(n);
}

BetaData analyze_beta(const QElem& beta) {
    if (beta.is_zero())
        throw ContractViolation("analyze_beta: beta must be nonzero");
    const long long disc = beta.field().disc;
    if (disc == -3 || disc == -4)
        throw ContractViolation("analyze_beta: field with disc -3 or -4");
    BetaData B{beta};
    B.root_in_K = qth_root_in_K(beta, 2);
    if (B.root_in_K) return B;
    if (beta.is_rational()) {
        B.rat_test = cyclo_sqrt_test(beta.x());
        B.rat_over_disc_test = cyclo_sqrt_test(beta.x() / to_z(disc));
        return B;
    }
    Rat N = beta.norm();
    if (auto s = rational_sqrt(N)) {
        B.norm_is_square = true;
        B.sqrt_norm = *s;
        B.c = (beta.x() - *s) / 2;
        B.d = B.c / to_z(disc);
        // c != 0: c*(x + sqrt N)/2 = (x^2 - N)/4 = d y^2 disc/4 != 0 since y != 0
        B.c_test = cyclo_sqrt_test(B.c);
        B.d_test = cyclo_sqrt_test(B.d);
    }
    return B;
}

bool BetaData::member(uint64_t n) const {
    if (root_in_K) return true;
    if (beta.is_rational())
        return rat_test.contains(n) || rat_over_disc_test.contains(n);
    if (!norm_is_square) return false;
    return c_test.contains(n) || d_test.contains(n);
}

bool sqrt_in_K_cyclotomic(const QElem& beta, uint64_t n) {
    if (n < 1) throw ContractViolation("sqrt_in_K_cyclotomic: n must be >= 1");
    return analyze_beta(beta).member(n);
}

const char* cond_case_name(CondCase c) {
    switch (c) {
        case CondCase::C1: return "C1";
        case CondCase::C2: return "C2";
        case CondCase::C3: return "C3";
        case CondCase::C4: return "C4";
        case CondCase::None: return "none";
    }
    return "?";
}

namespace {

uint64_t lcm_checked(uint64_t a, uint64_t b) {
    uint64_t g = std::gcd(a, b);
    uint64_t l = a / g * b;
    if (l > 100000000ull)
        throw ResourceError("chi period bound exceeds 1e8");
    return l;
}

uint64_t fold_disc(uint64_t acc, const CycloSqrt& t) {
    if (t.is_square) return acc;
    Int a = abs(t.disc);
    if (!a.fits_ulong_p()) throw ResourceError("discriminant too large");
    return lcm_checked(acc, a.get_ui());
}

std::vector<uint64_t> divisors_of(uint64_t n) {
    std::vector<uint64_t> divs{1};
    for (auto [p, e] : factorize64(n).factors) {
        size_t sz = divs.size();
        uint64_t pk = 1;
        for (uint32_t i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

ConditionContext ConditionContext::build(const GammaDecomposition& dec,
                                         QField field) {
    if (field.disc == -3 || field.disc == -4)
        throw ContractViolation("ConditionContext: disc -3/-4 not supported");
    ConditionContext ctx;
    ctx.dec_ = dec;
    ctx.fld_ = field;
    Rat n0 = dec.gamma0.norm();
    if (n0 != 1 && n0 != -1)
        throw ContractViolation("ConditionContext: |norm(gamma0)| must be 1");
    ctx.norm_g0_ = n0 == 1 ? 1 : -1;

    uint64_t period = lcm_checked(8, 4 * dec.h);
    period = lcm_checked(period, uint64_t(std::abs(field.disc)));
    for (uint64_t g : divisors_of(2 * dec.h)) {
        uint64_t hp = 2 * dec.h / g;
        QElem base = dec.gamma0.pow(hp);
        BetaTriple trip{analyze_beta(base), analyze_beta(-base),
                        analyze_beta(base * Rat(2))};
        for (const BetaData* B : {&trip.plus, &trip.minus, &trip.twice}) {
            if (B->root_in_K) continue;
            if (B->beta.is_rational()) {
                period = fold_disc(period, B->rat_test);
                period = fold_disc(period, B->rat_over_disc_test);
            } else if (B->norm_is_square) {
                period = fold_disc(period, B->c_test);
                period = fold_disc(period, B->d_test);
            }
        }
        ctx.betas_.emplace(hp, std::move(trip));
    }
    ctx.period_bound_ = period;
    return ctx;
}

const BetaData& ConditionContext::beta_plus(uint64_t hp) const {
    auto it = betas_.find(hp);
    if (it == betas_.end()) throw InternalError("unknown h'");
    return it->second.plus;
}
const BetaData& ConditionContext::beta_minus(uint64_t hp) const {
    auto it = betas_.find(hp);
    if (it == betas_.end()) throw InternalError("unknown h'");
    return it->second.minus;
}
const BetaData& ConditionContext::beta_twice(uint64_t hp) const {
    auto it = betas_.find(hp);
    if (it == betas_.end()) throw InternalError("unknown h'");
    return it->second.twice;
}

CondCase condition_case(uint64_t n, const ConditionContext& ctx) {
    if (n < 1) throw ContractViolation("condition_case: n must be >= 1");
    if (n % 2 == 1) return CondCase::C1;
    const uint64_t twoh = ctx.two_h();
    const uint64_t g = std::gcd(n, twoh);
    const uint64_t nprime = n / g;
    const uint64_t hprime = twoh / g;
    const int s = ctx.decomposition().sign;
    const int s_np = (s == -1 && nprime % 2 == 1) ? -1 : 1;
    const uint32_t v2 = nu(2, n);
    if (s_np == 1 && ctx.beta_plus(hprime).member(n)) return CondCase::C2;
    if (s == -1 && v2 == 1 && ctx.beta_minus(hprime).member(n)) return CondCase::C3;
    if (s_np == -1 && v2 == 2 && ctx.beta_twice(hprime).member(n)) return CondCase::C4;
    return CondCase::None;
}

namespace {

// sigma(sqrt(beta)) * sqrt(beta) == target for sigma in {sigma1, sigma2}?
// sigma1 is complex conjugation; sigma2 inverts zeta_n and negates the
// conjugate of sqrt(disc) (defined when sqrt(disc) is outside Q(zeta_n),
// otherwise sigma2 = sigma1). Only called when beta is a square in K(zeta_n).
bool sqrt_sigma_condition(const BetaData& B, const Rat& target, uint64_t n,
                          long long disc) {
    if (B.beta.is_rational())
        throw InternalError("sqrt_sigma_condition: rational beta unreachable");
    if (disc < 0) {
        // sigma1 is the nontrivial automorphism of K; the product is the
        // nonnegative square root of norm(beta). sigma2 fixes K pointwise
        // (or equals sigma1) and contributes nothing.
        if (B.root_in_K) return B.root_in_K->norm() == target;
        return B.norm_is_square && B.sqrt_norm == target;
    }
    // real field: sigma1 fixes K, its product is |beta|, never rational here.
    if (n % uint64_t(disc) == 0) return false; // sigma2 = sigma1
    if (B.root_in_K) return B.root_in_K->norm() == target;
    if (!B.norm_is_square)
        throw InternalError("sqrt_sigma_condition: beta not a square in K(zeta_n)");
    bool c_in = B.c_test.contains(n);
    bool d_in = B.d_test.contains(n);
    if (c_in == d_in)
        throw InternalError("sqrt_sigma_condition: ambiguous membership route");
    bool plus_row = (c_in && B.c < 0) || (d_in && B.d > 0);
    return plus_row && B.sqrt_norm == target;
}

// sigma(delta) = delta^{-1} for delta = gamma0^k, k >= 1?
// The conjugation route needs norm(delta) = 1; the identity route would need
// delta^2 = 1, impossible since gamma0 is not a root of unity.
bool element_sigma_condition(uint64_t k, uint64_t n, const ConditionContext& ctx) {
    const long long disc = ctx.field().disc;
    bool conj_available =
        disc < 0 || (n % uint64_t(disc) != 0); // sigma1 resp. sigma2
    return conj_available && ctx.norm_gamma0_pow(k) == 1;
}

} // namespace

bool sigma_exists(uint64_t n, CondCase c, const ConditionContext& ctx) {
    const uint64_t twoh = ctx.two_h();
    const uint64_t g = std::gcd(n, twoh);
    const uint64_t hprime = twoh / g;
    const long long disc = ctx.field().disc;
    switch (c) {
        case CondCase::C1:
            // n odd makes h' even; the argument gamma0^{h'/2} lies in K
            return element_sigma_condition(hprime / 2, n, ctx);
        case CondCase::C2:
            return sqrt_sigma_condition(ctx.beta_plus(hprime), Rat(1), n, disc);
        case CondCase::C3:
            return sqrt_sigma_condition(ctx.beta_minus(hprime), Rat(1), n, disc);
        case CondCase::C4:
            return sqrt_sigma_condition(ctx.beta_twice(hprime), Rat(2), n, disc);
        case CondCase::None:
            return element_sigma_condition(hprime, n, ctx);
    }
    return false;
}

unsigned cn_size(uint64_t n, const ConditionContext& ctx) {
    return sigma_exists(n, condition_case(n, ctx), ctx) ? 2 : 1;
}

Rat r_value(uint64_t n, const ConditionContext& ctx) {
    CondCase c = condition_case(n, ctx);
    unsigned cfac = c == CondCase::None ? 2 : 1;
    unsigned kfac = n % uint64_t(std::abs(ctx.field().disc)) == 0 ? 1 : 2;
    unsigned cn = sigma_exists(n, c, ctx) ? 2 : 1;
    return make_rat(cn, (long long)(cfac * kfac));
}

Rat degree_ratio(uint64_t n, const ConditionContext& ctx) {
    // #C_n / [K_n:Q] = r(n) * (n, 2h) / (phi(n) n)
    Rat r = r_value(n, ctx);
    uint64_t g = std::gcd(n, ctx.two_h());
    return r * make_rat(Int(g), Int(euler_phi(n)) * Int(n));
}

Rat ChiDecomposition::r_of(uint64_t n) const {
    Rat sum = 0;
    uint64_t g = std::gcd(n, period);
    for (const auto& [m, c] : terms)
        if (g % m == 0) sum += c;
    return sum;
}

ChiDecomposition chi_decompose(const ConditionContext& ctx) {
    ChiDecomposition chi;
    chi.period = ctx.chi_period_bound();
    auto divs = divisors_of(chi.period);
    std::map<uint64_t, Rat> r;
    for (uint64_t m : divs) r[m] = r_value(m, ctx);
    // Moebius inversion over the divisor lattice of P
    for (uint64_t m : divs) {
        Rat c = 0;
        for (uint64_t e : divs) {
            if (m % e != 0) continue;
            int mu = moebius(m / e);
            if (mu == 1) c += r[e];
            else if (mu == -1) c -= r[e];
        }
        if (c != 0) chi.terms.emplace_back(m, c);
    }
    for (uint64_t n = 1; n <= 10 * chi.period; ++n) {
        if (chi.r_of(n) != r_value(n, ctx))
            throw InternalError("chi_decompose: verification sweep failed at n=" +
                                std::to_string(n));
    }
    return chi;
}

std::vector<ConditionRow> condition_table(const ConditionContext& ctx,
                                          uint64_t n_max) {
    std::vector<ConditionRow> rows;
    rows.reserve(n_max);
    for (uint64_t n = 1; n <= n_max; ++n) {
        CondCase c = condition_case(n, ctx);
        rows.push_back({n, c, cn_size(n, ctx), degree_ratio(n, ctx)});
    }
    return rows;
}

} // namespace lucasindex
