#pragma once

#include <optional>
#include <string>

#include "lucasindex/numtheory.hpp"

namespace lucasindex {

// The real or imaginary quadratic field Q(sqrt(d)), d squarefree, d != 0, 1.
struct QField {
    long long d = 0;
    long long disc = 0; // fundamental discriminant

    static QField of_squarefree(long long d);
    static QField containing_sqrt(long long m); // the field Q(sqrt(m))

    bool real() const { return d > 0; }
    bool operator==(const QField&) const = default;
};

// x + y*sqrt(d) with exact rational coordinates.
class QElem {
public:
    QElem(Rat x, Rat y, QField field);
    static QElem from_rational(Rat x, QField field);

    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }
    const QField& field() const { return field_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }

    QElem operator+(const QElem& o) const;
    QElem operator-(const QElem& o) const;
    QElem operator*(const QElem& o) const;
    QElem operator*(const Rat& s) const;
    QElem operator-() const;
    bool operator==(const QElem& o) const;

    QElem conj() const;            // x - y*sqrt(d)
    QElem inverse() const;         // precondition: nonzero
    QElem pow(uint64_t e) const;
    Rat norm() const;              // x^2 - d*y^2
    Rat trace() const;             // 2x

    // Sign of the real embedding x +/- y*sqrt(d); real fields only, nonzero.
    int embedding_sign(bool conjugate = false) const;

    std::string str() const;

private:
    Rat x_, y_;
    QField field_;
};

// A q-th root of beta in K, if one exists. q is 2 or an odd prime.
// Candidate roots are reconstructed from high-precision embeddings and only
// accepted after exact verification, so a returned value is always correct;
// absence is decided by denominator-bounded enumeration of the candidates.
std::optional<QElem> qth_root_in_K(const QElem& beta, uint64_t q);

// gamma = sign * gamma0^h with gamma0 not a power in K, canonical sign
// (first nonzero coordinate of gamma0 positive).
struct GammaDecomposition {
    int sign;
    uint64_t h;
    QElem gamma0;
};

// Precondition: |norm(gamma)| = 1 and gamma is not a root of unity.
GammaDecomposition gamma_decompose(const QElem& gamma);

} // namespace lucasindex
