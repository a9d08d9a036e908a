#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lucasindex/quadfield.hpp"

namespace lucasindex {

// Membership of sqrt(r) in Q(zeta_n), reduced to a divisibility test:
// a rational square belongs for every n, otherwise membership holds exactly
// when the discriminant of Q(sqrt(r)) divides n.
struct CycloSqrt {
    bool is_square = false;
    Int disc = 0;

    bool contains(uint64_t n) const {
        if (is_square) return true;
        return Int(n) % abs(disc) == 0;
    }
};

CycloSqrt cyclo_sqrt_test(const Rat& r);
bool sqrt_in_cyclotomic(const Rat& r, uint64_t n); // sqrt(r) in Q(zeta_n)?

// Everything needed to decide, for any n, whether beta is a square in
// K(zeta_n) and to evaluate sigma(sqrt(beta))*sqrt(beta) when it is.
struct BetaData {
    QElem beta;
    std::optional<QElem> root_in_K; // delta with delta^2 = beta, if any
    // rational beta (and not a square in K):
    CycloSqrt rat_test, rat_over_disc_test;
    // beta outside Q and K^2:
    bool norm_is_square = false;
    Rat sqrt_norm; // positive rational root of norm(beta), when square
    Rat c, d;      // (x - sqrt_norm)/2 and c/disc
    CycloSqrt c_test, d_test;

    bool member(uint64_t n) const; // beta in K(zeta_n)^2?
};

BetaData analyze_beta(const QElem& beta);

// Generic form of the membership test above.
bool sqrt_in_K_cyclotomic(const QElem& beta, uint64_t n);

enum class CondCase { C1, C2, C3, C4, None };
const char* cond_case_name(CondCase c);

// Precomputed data for evaluating #C_n and [K_n : Q] for every n, where
// K_n = K(zeta_n, gamma^{1/n}) and gamma = sign * gamma0^h.
class ConditionContext {
public:
    static ConditionContext build(const GammaDecomposition& dec, QField field);

    const GammaDecomposition& decomposition() const { return dec_; }
    const QField& field() const { return fld_; }
    uint64_t two_h() const { return 2 * dec_.h; }
    int norm_gamma0() const { return norm_g0_; }
    int norm_gamma0_pow(uint64_t k) const {
        return (norm_g0_ == -1 && k % 2 == 1) ? -1 : 1;
    }

    // betas for h' = 2h/(n, 2h); key must be a divisor of 2h times 2
    const BetaData& beta_plus(uint64_t hprime) const;
    const BetaData& beta_minus(uint64_t hprime) const;
    const BetaData& beta_twice(uint64_t hprime) const;

    // lcm(8, 4h, |disc K|, |disc| of every divisibility test in play);
    // a sufficient period for n -> #C_n/[K_n:Q] normalized
    uint64_t chi_period_bound() const { return period_bound_; }

private:
    struct BetaTriple {
        BetaData plus, minus, twice;
    };
    GammaDecomposition dec_{1, 1, QElem(Rat(0), Rat(0), QField{2, 8})};
    QField fld_;
    int norm_g0_ = 1;
    std::map<uint64_t, BetaTriple> betas_; // keyed by h'
    uint64_t period_bound_ = 1;

    ConditionContext() = default;
};

CondCase condition_case(uint64_t n, const ConditionContext& ctx);

// Does some sigma in Gal(K_n/Q) invert both zeta_n and gamma^{1/n}?
bool sigma_exists(uint64_t n, CondCase c, const ConditionContext& ctx);

unsigned cn_size(uint64_t n, const ConditionContext& ctx); // #C_n, 1 or 2

// #C_n / [K_n : Q], exactly.
Rat degree_ratio(uint64_t n, const ConditionContext& ctx);

// degree_ratio(n) * phi(n) * n / (n, 2h); depends only on gcd(n, P).
Rat r_value(uint64_t n, const ConditionContext& ctx);

// r(n) = sum of c_m over m | gcd(n, P).
struct ChiDecomposition {
    uint64_t period = 1;                        // P
    std::vector<std::pair<uint64_t, Rat>> terms; // (m, c_m), m | P, c_m != 0

    Rat r_of(uint64_t n) const;
};

// Extracts the finite decomposition and verifies it against direct
// evaluation for all n <= 10 P (throws InternalError on mismatch).
ChiDecomposition chi_decompose(const ConditionContext& ctx);

struct ConditionRow {
    uint64_t n;
    CondCase c;
    unsigned cn;
    Rat ratio;
};
std::vector<ConditionRow> condition_table(const ConditionContext& ctx,
                                          uint64_t n_max);

} // namespace lucasindex
