#include "lucasindex/quadfield.hpp"

#include <cstdlib>
#include <vector>

#include <mpfr.h>

namespace lucasindex {

QField QField::of_squarefree(long long d) {
    if (d == 0 || d == 1)
        throw ContractViolation("QField: d must be squarefree and != 0, 1");
    if (squarefree_part(d) != d)
        throw ContractViolation("QField: d must be squarefree");
    return QField{d, fundamental_discriminant(d)};
}

QField QField::containing_sqrt(long long m) {
    return of_squarefree(squarefree_part(m));
}

QElem::QElem(Rat x, Rat y, QField field)
    : x_(std::move(x)), y_(std::move(y)), field_(field) {
    if (field_.d == 0) throw ContractViolation("QElem: uninitialized field");
}

QElem QElem::from_rational(Rat x, QField field) {
    return QElem(std::move(x), Rat(0), field);
}

QElem QElem::operator+(const QElem& o) const {
    return QElem(x_ + o.x_, y_ + o.y_, field_);
}

QElem QElem::operator-(const QElem& o) const {
    return QElem(x_ - o.x_, y_ - o.y_, field_);
}

QElem QElem::operator*(const QElem& o) const {
    if (field_.d != o.field_.d)
        throw ContractViolation("QElem: mixed fields");
    return QElem(x_ * o.x_ + Rat(to_z(field_.d)) * y_ * o.y_,
                 x_ * o.y_ + y_ * o.x_, field_);
}

QElem QElem::operator*(const Rat& s) const {
    return QElem(x_ * s, y_ * s, field_);
}

QElem QElem::operator-() const { return QElem(-x_, -y_, field_); }

bool QElem::operator==(const QElem& o) const {
    return field_.d == o.field_.d && x_ == o.x_ && y_ == o.y_;
}

QElem QElem::conj() const { return QElem(x_, -y_, field_); }

Rat QElem::norm() const { return x_ * x_ - Rat(to_z(field_.d)) * y_ * y_; }

Rat QElem::trace() const { return 2 * x_; }

QElem QElem::inverse() const {
    if (is_zero()) throw ContractViolation("QElem: inverse of zero");
    Rat n = norm();
    return QElem(x_ / n, -y_ / n, field_);
}

QElem QElem::pow(uint64_t e) const {
    QElem result = from_rational(Rat(1), field_);
    QElem base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

int QElem::embedding_sign(bool conjugate) const {
    if (!field_.real())
        throw ContractViolation("embedding_sign: imaginary field");
    Rat y = conjugate ? Rat(-y_) : y_;
    int sx = sgn(x_), sy = sgn(y);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // mixed signs: compare |x| against |y|*sqrt(d) via the norm
    int sn = sgn(norm());
    return sx > 0 ? sn : -sn;
}

std::string QElem::str() const {
    std::string s = rat_str(x_);
    if (y_ != 0) {
        if (y_ > 0) s += " + " + rat_str(y_);
        else s += " - " + rat_str(-y_);
        s += "*sqrt(" + std::to_string(field_.d) + ")";
    }
    return s;
}

namespace {

struct MpfrValue {
    mpfr_t v;
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~MpfrValue() { mpfr_clear(v); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
};

// Round re to the nearest rational with denominator dividing bound.
Rat round_to_denominator(const mpfr_t re, const Int& bound) {
    MpfrValue scaled(mpfr_get_prec(re));
    mpfr_mul_z(scaled.v, re, bound.get_mpz_t(), MPFR_RNDN);
    Int num;
    mpfr_get_z(num.get_mpz_t(), scaled.v, MPFR_RNDN);
    return make_rat(num, bound);
}

// Shared reconstruction step: candidate coordinates from approximate
// embeddings (u, v), exact verification against beta.
std::optional<QElem> try_candidate(const mpfr_t u, const mpfr_t v,
                                   const Int& bound, const QElem& beta,
                                   uint64_t q) {
    Rat cx = round_to_denominator(u, bound);
    Rat cy = round_to_denominator(v, bound);
    QElem cand(cx, cy, beta.field());
    if (cand.pow(q) == beta) return cand;
    return std::nullopt;
}

Int denominator_bound(const QElem& beta) {
    Int m = lcm(beta.x().get_den(), beta.y().get_den());
    return 2 * abs(to_z(beta.field().d)) * m;
}

std::optional<QElem> root_real(const QElem& beta, uint64_t q, mpfr_prec_t prec) {
    const Int bound = denominator_bound(beta);
    MpfrValue sqd(prec), e1(prec), e2(prec), r1(prec), r2(prec), u(prec), v(prec), t(prec);
    mpfr_set_si(sqd.v, beta.field().d, MPFR_RNDN);
    mpfr_sqrt(sqd.v, sqd.v, MPFR_RNDN);
    mpfr_set_q(e1.v, beta.x().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(t.v, beta.y().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(t.v, t.v, sqd.v, MPFR_RNDN);
    mpfr_sub(e2.v, e1.v, t.v, MPFR_RNDN);
    mpfr_add(e1.v, e1.v, t.v, MPFR_RNDN);

    auto assemble = [&](const mpfr_t a, const mpfr_t b) -> std::optional<QElem> {
        mpfr_add(u.v, a, b, MPFR_RNDN);
        mpfr_div_ui(u.v, u.v, 2, MPFR_RNDN);
        mpfr_sub(v.v, a, b, MPFR_RNDN);
        mpfr_div_ui(v.v, v.v, 2, MPFR_RNDN);
        mpfr_div(v.v, v.v, sqd.v, MPFR_RNDN);
        return try_candidate(u.v, v.v, bound, beta, q);
    };

    if (q == 2) {
        if (beta.embedding_sign(false) < 0 || beta.embedding_sign(true) < 0)
            return std::nullopt; // a square is totally nonnegative
        mpfr_sqrt(r1.v, e1.v, MPFR_RNDN);
        mpfr_sqrt(r2.v, e2.v, MPFR_RNDN);
        if (auto c = assemble(r1.v, r2.v)) return c;
        mpfr_neg(r2.v, r2.v, MPFR_RNDN);
        return assemble(r1.v, r2.v);
    }
    // odd q: the real q-th root is unique in each embedding
    auto odd_root = [&](mpfr_t out, const mpfr_t in) {
        MpfrValue a(prec);
        mpfr_abs(a.v, in, MPFR_RNDN);
        mpfr_rootn_ui(out, a.v, (unsigned long)q, MPFR_RNDN);
        if (mpfr_sgn(in) < 0) mpfr_neg(out, out, MPFR_RNDN);
    };
    odd_root(r1.v, e1.v);
    odd_root(r2.v, e2.v);
    return assemble(r1.v, r2.v);
}

std::optional<QElem> root_imaginary(const QElem& beta, uint64_t q, mpfr_prec_t prec) {
    const Int bound = denominator_bound(beta);
    MpfrValue sqd(prec), re(prec), im(prec), rho(prec), theta(prec);
    MpfrValue rr(prec), ang(prec), u(prec), v(prec), tau(prec);
    mpfr_set_si(sqd.v, -beta.field().d, MPFR_RNDN);
    mpfr_sqrt(sqd.v, sqd.v, MPFR_RNDN); // sqrt(|d|)
    mpfr_set_q(re.v, beta.x().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(im.v, beta.y().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(im.v, im.v, sqd.v, MPFR_RNDN);
    mpfr_hypot(rho.v, re.v, im.v, MPFR_RNDN);
    mpfr_atan2(theta.v, im.v, re.v, MPFR_RNDN);
    mpfr_rootn_ui(rr.v, rho.v, (unsigned long)q, MPFR_RNDN);
    mpfr_const_pi(tau.v, MPFR_RNDN);
    mpfr_mul_ui(tau.v, tau.v, 2, MPFR_RNDN);
    for (uint64_t k = 0; k < q; ++k) {
        mpfr_mul_ui(ang.v, tau.v, (unsigned long)k, MPFR_RNDN);
        mpfr_add(ang.v, ang.v, theta.v, MPFR_RNDN);
        mpfr_div_ui(ang.v, ang.v, (unsigned long)q, MPFR_RNDN);
        mpfr_cos(u.v, ang.v, MPFR_RNDN);
        mpfr_mul(u.v, u.v, rr.v, MPFR_RNDN);
        mpfr_sin(v.v, ang.v, MPFR_RNDN);
        mpfr_mul(v.v, v.v, rr.v, MPFR_RNDN);
        mpfr_div(v.v, v.v, sqd.v, MPFR_RNDN);
        if (auto c = try_candidate(u.v, v.v, bound, beta, q)) return c;
    }
    return std::nullopt;
}

size_t coordinate_height_bits(const QElem& e) {
    size_t b = 1;
    for (const Int* z : {&e.x().get_num(), &e.x().get_den(),
                         &e.y().get_num(), &e.y().get_den()})
        b = std::max(b, mpz_sizeinbase(z->get_mpz_t(), 2));
    return b;
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
    std::vector<uint64_t> ps;
    for (uint64_t q = 2; q <= bound; ++q)
        if (is_prime64(q)) ps.push_back(q);
    return ps;
}

} // namespace

std::optional<QElem> qth_root_in_K(const QElem& beta, uint64_t q) {
    if (beta.is_zero()) throw ContractViolation("qth_root_in_K: beta must be nonzero");
    if (q < 2) throw ContractViolation("qth_root_in_K: q must be >= 2");
    for (mpfr_prec_t prec = 256; prec <= 4096; prec *= 2) {
        auto r = beta.field().real() ? root_real(beta, q, prec)
                                     : root_imaginary(beta, q, prec);
        if (r) return r;
    }
    return std::nullopt;
}

GammaDecomposition gamma_decompose(const QElem& gamma) {
    Rat n = gamma.norm();
    if (n != 1 && n != -1)
        throw ContractViolation("gamma_decompose: |norm(gamma)| must be 1");
    if (n == 1) {
        Rat tr = gamma.trace();
        if (tr == 0 || tr == 1 || tr == -1 || tr == 2 || tr == -2)
            throw ContractViolation("gamma_decompose: gamma is a root of unity");
    }

    int s = 1;
    uint64_t h = 1;
    QElem g0 = gamma;
    bool progress = true;
    while (progress) {
        progress = false;
        uint64_t bound = 2 * coordinate_height_bits(g0) + 2;
        for (uint64_t q : primes_up_to(bound)) {
            for (int z : {1, -1}) {
                QElem cand = z == 1 ? g0 : -g0;
                if (auto r = qth_root_in_K(cand, q)) {
                    // g0 = z * r^q, so gamma = s * z^h * r^(q h)
                    if (z == -1 && h % 2 == 1) s = -s;
                    g0 = *r;
                    h *= q;
                    progress = true;
                    break;
                }
            }
            if (progress) break;
        }
    }
    // canonical sign: first nonzero coordinate of gamma0 positive
    int lead = sgn(g0.x()) != 0 ? sgn(g0.x()) : sgn(g0.y());
    if (lead < 0) {
        g0 = -g0;
        if (h % 2 == 1) s = -s;
    }
    GammaDecomposition dec{s, h, g0};
    QElem check = g0.pow(h) * Rat(s);
    if (!(check == gamma))
        throw InternalError("gamma_decompose: reconstruction mismatch");
    return dec;
}

} // namespace lucasindex
