#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numeric>

#include "lucasindex/density.hpp"

using namespace lucasindex;

namespace {

DensityProfile profile_for(long long a1, long long a2) {
    return DensityProfile::build(LucasParams::analyze(a1, a2));
}

int moebius_from(uint64_t n, const SpfTable& spf) {
    int sign = 1;
    while (n > 1) {
        uint64_t p = spf.spf(n);
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return sign;
}

// direct partial sum of the Wagstaff series, using a phi table
double wagstaff_series(uint64_t h, uint64_t m, uint64_t t, uint64_t N,
                       const SpfTable& spf) {
    double sum = 0;
    for (uint64_t n = 1; n <= N; ++n) {
        if (n * t % m != 0) continue;
        int mu = moebius_from(n, spf);
        if (mu == 0) continue;
        uint64_t nt = n * t;
        sum += double(mu) * double(std::gcd(nt, h)) /
               (double(euler_phi(nt, spf)) * double(nt));
    }
    return sum;
}

} // namespace

TEST_CASE("artin constant") {
    double A = artin_constant();
    // first ten digits of the decimal expansion
    CHECK(std::strncmp(artin_constant_digits(), "0.3739558136", 12) == 0);
    CHECK(A == doctest::Approx(0.3739558136).epsilon(1e-9));

    // direct product over primes < X brackets the constant:
    // partial > A > partial * (1 - 2/X), since sum_{n>X} 1/(n(n-1)) = 1/X
    const uint64_t X = 2000000;
    SpfTable t(X);
    long double partial = 1.0L;
    for (uint32_t p : t.primes())
        partial *= 1.0L - 1.0L / ((long double)p * (p - 1));
    CHECK(A < (double)partial);
    CHECK(A > (double)(partial * (1.0L - 2.0L / X)));

    // all partial products are upper bounds; primes < 100 give a crude one
    long double small = 1.0L;
    for (uint32_t p : t.primes()) {
        if (p >= 100) break;
        small *= 1.0L - 1.0L / ((long double)p * (p - 1));
    }
    CHECK((double)small > A);
}

TEST_CASE("F_h examples and multiplicativity") {
    CHECK(big_f(4, 1) == 1);
    CHECK(big_f(4, 4) == make_rat(1, 2));
    CHECK(big_f(4, 3) == make_rat(8, 45));
    for (uint64_t h : {2ull, 4ull, 6ull}) {
        for (uint64_t t1 = 1; t1 <= 100; ++t1)
            for (uint64_t t2 = t1; t2 <= 100; t2 += 7) {
                if (std::gcd(t1, t2) != 1) continue;
                CHECK(big_f(h, t1 * t2) == big_f(h, t1) * big_f(h, t2));
            }
    }
}

TEST_CASE("B, f, G-tilde examples") {
    CHECK(b_const(4) == 2);
    CHECK(b_const(6) == make_rat(6, 5));
    CHECK(f_small(4, 1, 2) == 1);
    CHECK(f_small(4, 2, 2) == make_rat(1, 2));
    CHECK(f_small(4, 4, 2) == make_rat(1, 4));
    CHECK(f_small(4, 1, 5) == make_rat(1, 20));
    CHECK(g_tilde(4, 2, 1) == -1);
    CHECK(g_tilde(4, 1, 1) == 0);
    CHECK(g_tilde(4, 12, 1) == 0); // 12 is not squarefree
}

TEST_CASE("wagstaff closed form examples") {
    CHECK(wagstaff(4, 1, 1) == 0);
    CHECK(wagstaff(4, 2, 1) == -2);
    CHECK(wagstaff(4, 20, 1) == 0);
}

TEST_CASE("wagstaff closed form against the direct series") {
    const uint64_t N = 10000;
    SpfTable spf(N * 24 + 1);
    for (uint64_t h : {4ull, 6ull})
        for (uint64_t m : {1ull, 2ull, 4ull, 24ull})
            for (uint64_t t = 1; t <= 8; ++t) {
                double closed = wagstaff(h, m, t).get_d() * artin_constant();
                double series = wagstaff_series(h, m, t, N, spf);
                CHECK(std::fabs(closed - series) <= 16.0 / double(N));
            }
}

TEST_CASE("G_u tables reproduce the worked examples") {
    auto fib = profile_for(1, 1);
    CHECK(fib.gu_period() == 20);
    CHECK(fib.gu(20) == make_rat(3, 4));
    for (uint64_t t = 1; t <= 40; t += 2) CHECK(fib.gu(t) == 1);
    for (uint64_t t : {2ull, 6ull, 14ull, 18ull, 22ull})
        CHECK(fib.gu(t) == make_rat(29, 38));
    for (uint64_t t : {4ull, 8ull, 12ull, 16ull, 24ull})
        CHECK(fib.gu(t) == make_rat(27, 76));
    CHECK(fib.gu(10) == make_rat(1, 2));
    CHECK(fib.gu(30) == make_rat(1, 2));

    auto p41 = profile_for(4, -1);
    CHECK(p41.gu_period() == 24);
    for (uint64_t t : {24ull, 2ull, 6ull, 10ull, 14ull, 18ull, 22ull})
        CHECK(p41.gu(t) == make_rat(3, 2));
    for (uint64_t t = 1; t <= 47; t += 2) CHECK(p41.gu(t) == 0);
    CHECK(p41.gu(4) == make_rat(4, 5));
    CHECK(p41.gu(20) == make_rat(4, 5));
    CHECK(p41.gu(8) == make_rat(3, 5));
    CHECK(p41.gu(16) == make_rat(3, 5));
    CHECK(p41.gu(12) == make_rat(1, 2));

    auto p102 = profile_for(10, 2);
    CHECK(p102.gu_period() == 24);
    CHECK(p102.gu(24) == make_rat(9, 10));
    for (uint64_t t : {1ull, 3ull, 4ull, 5ull, 7ull, 9ull, 11ull, 13ull, 15ull,
                       17ull, 19ull, 20ull, 21ull, 23ull})
        CHECK(p102.gu(t) == make_rat(3, 5));
    for (uint64_t t : {2ull, 6ull, 10ull, 14ull, 18ull, 22ull})
        CHECK(p102.gu(t) == make_rat(9, 20));
    CHECK(p102.gu(8) == 0);
    CHECK(p102.gu(16) == 0);
    CHECK(p102.gu(12) == make_rat(3, 10));
}

TEST_CASE("gu is periodic under direct evaluation") {
    for (auto ab : std::vector<std::pair<long long, long long>>{
             {1, 1}, {4, -1}, {10, 2}}) {
        auto prof = profile_for(ab.first, ab.second);
        uint64_t P = prof.gu_period();
        uint64_t twoh = 2 * prof.h();
        for (uint64_t t = 1; t <= 3 * P; ++t) {
            Rat direct = 0;
            for (const auto& [m, c] : prof.chi().terms)
                direct += c * g_fun(twoh, m, t);
            direct *= b_const(twoh);
            CHECK(prof.gu(t) == direct);
            CHECK(prof.gu(t) == prof.gu(t + P));
        }
    }
}

TEST_CASE("delta closed form spot values") {
    auto fib = profile_for(1, 1);
    CHECK(fib.delta(1).coeff == 1);
    CHECK(fib.delta(1).value == doctest::Approx(0.373956).epsilon(5e-7));
    CHECK(fib.delta(2).coeff == make_rat(29, 38));
    CHECK(fib.delta(2).value == doctest::Approx(0.285387).epsilon(5e-7));
    CHECK(fib.delta(3).value == doctest::Approx(0.066481).epsilon(1e-5));

    auto p102 = profile_for(10, 2);
    CHECK(p102.delta(8).coeff == 0);
    CHECK(p102.delta(8).value == 0.0);
    CHECK(p102.delta(1).value == doctest::Approx(0.224373).epsilon(5e-6));

    auto p41 = profile_for(4, -1);
    CHECK(p41.delta(2).value == doctest::Approx(0.560934).epsilon(5e-6));
    for (uint64_t t = 1; t <= 15; t += 2) CHECK(p41.delta(t).coeff == 0);
}

TEST_CASE("delta agrees with the truncated series") {
    const uint64_t N = 2000;
    for (auto ab : std::vector<std::pair<long long, long long>>{
             {1, 1}, {4, -1}, {10, 2}}) {
        auto prof = profile_for(ab.first, ab.second);
        for (uint64_t t = 1; t <= 6; ++t) {
            auto sv = delta_series(t, N, prof.context());
            CHECK(sv.remainder_bound == doctest::Approx(8.0 / N));
            CHECK(std::fabs(prof.delta(t).value - sv.value) <= sv.remainder_bound);
        }
    }
}

TEST_CASE("series with one term is the first ratio") {
    auto prof = profile_for(1, 1);
    auto sv = delta_series(1, 1, prof.context());
    CHECK(sv.value ==
          doctest::Approx(degree_ratio(1, prof.context()).get_d()));
}

TEST_CASE("partial mass stays below one") {
    for (auto ab : std::vector<std::pair<long long, long long>>{
             {1, 1}, {4, -1}, {10, 2}}) {
        auto prof = profile_for(ab.first, ab.second);
        Rat mass = 0;
        for (uint64_t t = 1; t <= 200; ++t) mass += prof.delta(t).coeff;
        CHECK(mass.get_d() * artin_constant() <= 1.0);
    }
}

TEST_CASE("closed form vs series across a spread of sequences") {
    // real and imaginary fields, h in {1, 2}, both signs of s
    std::vector<std::pair<long long, long long>> pairs = {
        {2, 1}, {3, 1}, {1, -3}, {5, 3}, {6, 1}, {1, 5}, {-3, 2}, {5, -2}, {4, 3}};
    const uint64_t N = 1500;
    for (auto [a1, a2] : pairs) {
        auto prof = profile_for(a1, a2);
        Rat mass = 0;
        for (uint64_t t = 1; t <= 60; ++t) mass += prof.delta(t).coeff;
        CHECK(mass.get_d() * artin_constant() <= 1.0);
        for (uint64_t t : {1ull, 2ull, 3ull}) {
            auto sv = delta_series(t, N, prof.context());
            CHECK(std::fabs(prof.delta(t).value - sv.value) <= sv.remainder_bound);
        }
    }
}
