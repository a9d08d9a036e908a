#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lucasindex/quadfield.hpp"

using namespace lucasindex;

namespace {

QElem elem(long long xn, long long xd, long long yn, long long yd, long long d) {
    return QElem(make_rat(xn, xd), make_rat(yn, yd), QField::of_squarefree(d));
}

} // namespace

TEST_CASE("field construction") {
    QField f = QField::of_squarefree(5);
    CHECK(f.disc == 5);
    CHECK(QField::of_squarefree(3).disc == 12);
    CHECK(QField::of_squarefree(-1).disc == -4);
    CHECK(QField::containing_sqrt(12).d == 3);
    CHECK_THROWS_AS(QField::of_squarefree(12), ContractViolation);
    CHECK_THROWS_AS(QField::of_squarefree(1), ContractViolation);
}

TEST_CASE("arithmetic") {
    QElem u = elem(2, 1, 1, 1, 3); // 2 + sqrt(3)
    CHECK(u.norm() == 1);
    CHECK((u.conj() * u).is_rational());
    CHECK((u.conj() * u).x() == u.norm());
    CHECK(u.pow(3) == elem(26, 1, 15, 1, 3));
    CHECK(u * u.inverse() == QElem::from_rational(Rat(1), u.field()));
    CHECK(u.trace() == 4);
    CHECK((-u).embedding_sign() == -1);
    CHECK(u.embedding_sign(true) == 1);                     // 2 - sqrt(3) > 0
    CHECK(elem(1, 1, -1, 1, 3).embedding_sign(false) == -1); // 1 - sqrt(3) < 0
    CHECK(elem(1, 1, -1, 1, 3).embedding_sign(true) == 1);   // 1 + sqrt(3) > 0
}

TEST_CASE("norm is multiplicative") {
    std::mt19937 rng(42);
    for (long long d : {2LL, 5LL, 13LL, -1LL, -11LL}) {
        QField f = QField::of_squarefree(d);
        for (int i = 0; i < 50; ++i) {
            QElem a(make_rat((long long)(rng() % 19) - 9, 1 + rng() % 4),
                    make_rat((long long)(rng() % 19) - 9, 1 + rng() % 4), f);
            QElem b(make_rat((long long)(rng() % 19) - 9, 1 + rng() % 4),
                    make_rat((long long)(rng() % 19) - 9, 1 + rng() % 4), f);
            CHECK((a * b).norm() == a.norm() * b.norm());
        }
    }
}

TEST_CASE("qth_root_in_K examples") {
    auto r1 = qth_root_in_K(elem(26, 1, 15, 1, 3), 3);
    REQUIRE(r1.has_value());
    CHECK((*r1 == elem(2, 1, 1, 1, 3) || *r1 == -elem(2, 1, 1, 1, 3)));

    auto r2 = qth_root_in_K(elem(3, 2, 1, 2, 5), 2); // (3+sqrt5)/2
    REQUIRE(r2.has_value());
    CHECK(r2->pow(2) == elem(3, 2, 1, 2, 5));
    CHECK((*r2 == elem(1, 2, 1, 2, 5) || *r2 == -elem(1, 2, 1, 2, 5)));

    CHECK(!qth_root_in_K(elem(2, 1, 1, 1, 3), 2).has_value());
    CHECK_THROWS_AS(
        qth_root_in_K(QElem::from_rational(Rat(0), QField::of_squarefree(5)), 2),
        ContractViolation);
}

TEST_CASE("qth_root_in_K rational and imaginary cases") {
    QField f5 = QField::of_squarefree(5);
    auto r = qth_root_in_K(QElem::from_rational(Rat(5), f5), 2);
    REQUIRE(r.has_value()); // sqrt(5) = 0 + 1*sqrt(5)
    CHECK(r->pow(2) == QElem::from_rational(Rat(5), f5));

    QField fm11 = QField::of_squarefree(-11);
    QElem z(make_rat(1, 2), make_rat(1, 2), fm11);
    auto rz = qth_root_in_K(z.pow(3), 3);
    REQUIRE(rz.has_value());
    CHECK(rz->pow(3) == z.pow(3));

    CHECK(!qth_root_in_K(QElem::from_rational(Rat(2), f5), 2).has_value());
}

TEST_CASE("qth_root round trips") {
    std::mt19937 rng(7);
    for (long long d : {2LL, 3LL, 5LL, -2LL, -11LL}) {
        QField f = QField::of_squarefree(d);
        for (uint64_t q : {2ull, 3ull, 5ull}) {
            for (int i = 0; i < 12; ++i) {
                QElem delta(make_rat((long long)(rng() % 9) - 4, 1 + rng() % 3),
                            make_rat((long long)(rng() % 9) - 4, 1 + rng() % 3), f);
                if (delta.is_zero()) continue;
                QElem beta = delta.pow(q);
                auto r = qth_root_in_K(beta, q);
                REQUIRE(r.has_value());
                CHECK(r->pow(q) == beta);
                if (q % 2 == 1) CHECK(*r == delta);
                else CHECK((*r == delta || *r == -delta));
            }
        }
    }
}

TEST_CASE("gamma_decompose on the worked sequences") {
    QField f5 = QField::of_squarefree(5);
    QField f3 = QField::of_squarefree(3);

    // (a1, a2) = (1, 1): gamma = -(3+sqrt5)/2
    auto dec = gamma_decompose(-elem(3, 2, 1, 2, 5));
    CHECK(dec.sign == -1);
    CHECK(dec.h == 2);
    CHECK(dec.gamma0 == elem(1, 2, 1, 2, 5));

    // (4, -1): gamma = 7 + 4 sqrt3 = (2+sqrt3)^2
    dec = gamma_decompose(elem(7, 1, 4, 1, 3));
    CHECK(dec.sign == 1);
    CHECK(dec.h == 2);
    CHECK(dec.gamma0 == elem(2, 1, 1, 1, 3));

    // (10, 2): gamma = -(26 + 15 sqrt3) = -(2+sqrt3)^3
    dec = gamma_decompose(-elem(26, 1, 15, 1, 3));
    CHECK(dec.sign == -1);
    CHECK(dec.h == 3);
    CHECK(dec.gamma0 == elem(2, 1, 1, 1, 3));

    (void)f5;
    (void)f3;
}

TEST_CASE("gamma_decompose invariants") {
    std::vector<QElem> gammas = {
        -elem(3, 2, 1, 2, 5), elem(7, 1, 4, 1, 3), -elem(26, 1, 15, 1, 3),
        elem(2, 1, 1, 1, 3).pow(5),   // h = 5
        -elem(1, 2, 1, 2, 5).pow(6),  // h = 6 with sign
    };
    for (const auto& g : gammas) {
        auto dec = gamma_decompose(g);
        CHECK(dec.gamma0.pow(dec.h) * Rat(dec.sign) == g);
        // canonical sign
        int lead = sgn(dec.gamma0.x()) != 0 ? sgn(dec.gamma0.x())
                                            : sgn(dec.gamma0.y());
        CHECK(lead > 0);
        // gamma0 has no further prime roots within the height bound
        size_t bits = 1;
        for (const Int* z : {&dec.gamma0.x().get_num(), &dec.gamma0.x().get_den(),
                             &dec.gamma0.y().get_num(), &dec.gamma0.y().get_den()})
            bits = std::max(bits, mpz_sizeinbase(z->get_mpz_t(), 2));
        for (uint64_t q = 2; q <= 2 * bits + 2; ++q) {
            if (!is_prime64(q)) continue;
            CHECK(!qth_root_in_K(dec.gamma0, q).has_value());
            CHECK(!qth_root_in_K(-dec.gamma0, q).has_value());
        }
    }
}

TEST_CASE("gamma_decompose rejects degenerate input") {
    // the ratio for (a1, a2) = (1, -1) is a sixth root of unity
    QElem zeta6(make_rat(1, 2), make_rat(1, 2), QField::of_squarefree(-3));
    CHECK(zeta6.norm() == 1);
    CHECK_THROWS_AS(gamma_decompose(zeta6), ContractViolation);
    CHECK_THROWS_AS(gamma_decompose(elem(3, 1, 1, 1, 5)), ContractViolation);
}
