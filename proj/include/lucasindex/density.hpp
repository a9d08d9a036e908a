#pragma once

#include <cstdint>
#include <vector>

#include "lucasindex/kummer.hpp"
#include "lucasindex/lucas.hpp"

namespace lucasindex {

// Artin constant, prod_p (1 - 1/(p(p-1))).
double artin_constant();
const char* artin_constant_digits(); // decimal string, 28 digits

// coeff * artin_constant rendered through extended precision.
double times_artin(const Rat& coeff);

Rat big_f(uint64_t h, uint64_t t);                      // F_h(t), multiplicative in t
Rat b_const(uint64_t h);                                // B_h
Rat f_small(uint64_t h, uint64_t t, uint64_t p);        // f_h(t, p), p prime
Rat g_tilde(uint64_t h, uint64_t m, uint64_t t);        // G~_{h,m}(t)
Rat g_fun(uint64_t h, uint64_t m, uint64_t t);          // G_{h,m}(t) = G~_{h, m/(m,t)}(t)
Rat wagstaff(uint64_t h, uint64_t m, uint64_t t);       // S_{h,m}(t) / A

struct DeltaValue {
    Rat coeff;    // delta / A, exact
    double value; // coeff * A
};

// Per-sequence data: the chi decomposition plus the periodic G table.
class DensityProfile {
public:
    static DensityProfile build(const LucasParams& params);

    const LucasParams& params() const { return params_; }
    const GammaDecomposition& decomposition() const { return ctx_.decomposition(); }
    const ConditionContext& context() const { return ctx_; }
    const ChiDecomposition& chi() const { return chi_; }
    uint64_t h() const { return ctx_.decomposition().h; }
    uint64_t gu_period() const { return gu_period_; }

    Rat gu(uint64_t t) const; // G_u(t), t >= 1
    const std::vector<Rat>& gu_table() const { return gu_; } // index = t mod period

    DeltaValue delta(uint64_t t) const;

private:
    LucasParams params_;
    ConditionContext ctx_;
    ChiDecomposition chi_;
    uint64_t gu_period_ = 1;
    std::vector<Rat> gu_;

    DensityProfile(LucasParams p, ConditionContext ctx)
        : params_(std::move(p)), ctx_(std::move(ctx)) {}
};

struct SeriesValue {
    double value;
    double remainder_bound; // 8 / n_terms
};

// Truncated series sum_{n<=N} mu(n) #C_{nt}/[K_{nt}:Q], straight off the
// condition engine; the independent check of the closed form.
SeriesValue delta_series(uint64_t t, uint64_t n_terms,
                         const ConditionContext& ctx);

} // namespace lucasindex
