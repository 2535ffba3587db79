#include "doctest.h"
#include "ktreegen/rng.hpp"
#include "ktreegen/series.hpp"

#include <cmath>

using namespace ktg;

namespace {

// brute-force exp oracle: sum_{j<=deg} a^j / j! by repeated naive convolution
Series exp_by_powers(const Series& a) {
    int N = a.trunc();
    Series sum = Series::constant(N, 1);
    Series pw = Series::constant(N, 1);
    Rat fact(1);
    for (int j = 1; j <= N; ++j) {
        pw = pw.mul(a);
        fact *= j;
        Series term(N);
        for (int n = 0; n <= N; ++n) term.set_coefficient(n, pw[n] / fact);
        sum = sum.add(term);
    }
    return sum;
}

Series random_small_series(int N, RngStream& rng) {
    Series s(N);
    for (int n = 1; n <= N; ++n)
        s.set_coefficient(n, Rat((long)rng.below_u64(7)) - 3);
    return s;
}

}  // namespace

TEST_CASE("ring operations") {
    Series one_plus_z = Series::constant(8, 1).add(Series::monomial(8, 1));
    Series sq = one_plus_z.mul(one_plus_z);
    CHECK(sq[0] == 1);
    CHECK(sq[1] == 2);
    CHECK(sq[2] == 1);
    CHECK(sq[3] == 0);

    Series z3 = Series::monomial(8, 3);
    Series d = z3.derivative();
    CHECK(d[2] == 3);
    CHECK(d[1] == 0);

    // 1/(1-z) as a geometric mul chain
    Series geo = Series::constant(8, 1);
    Series acc = Series::constant(8, 1);
    for (int i = 0; i < 8; ++i) {
        acc = acc.mul(Series::monomial(8, 1));
        geo = geo.add(acc);
    }
    CHECK(geo[5] == 1);
    CHECK_THROWS_AS(geo.coefficient(9), std::out_of_range);
}

TEST_CASE("substitute_power") {
    Series a = Series::constant(10, 1).add(Series::monomial(10, 1));
    Series b = a.substitute_power(2);
    CHECK(b[0] == 1);
    CHECK(b[1] == 0);
    CHECK(b[2] == 1);

    Series c = Series::monomial(10, 1).add(Series::monomial(10, 2));
    Series d = c.substitute_power(3);
    CHECK(d[3] == 1);
    CHECK(d[6] == 1);
    CHECK(d[1] == 0);

    CHECK(a.substitute_power(1) == a);

    RngStream rng(7);
    for (int rep = 0; rep < 5; ++rep) {
        Series x = random_small_series(24, rng), y = random_small_series(24, rng);
        for (int i : {2, 3}) {
            CHECK(x.mul(y).substitute_power(i) ==
                  x.substitute_power(i).mul(y.substitute_power(i)));
        }
    }
}

TEST_CASE("exp basics") {
    Series zero(12);
    Series e0 = zero.exp();
    for (int n = 0; n <= 12; ++n) CHECK(e0[n] == (n == 0 ? 1 : 0));

    Series z = Series::monomial(10, 1);
    Series ez = z.exp();
    Rat fact(1);
    for (int n = 1; n <= 10; ++n) {
        fact *= n;
        CHECK(ez[n] == Rat(1) / fact);
    }

    CHECK_THROWS_AS(Series::constant(4, 1).exp(), std::domain_error);
}

TEST_CASE("exp of sum z^i/i is geometric, to order 60") {
    int N = 60;
    Series a(N);
    for (int i = 1; i <= N; ++i) a.set_coefficient(i, Rat(1) / i);
    Series e = a.exp();
    for (int n = 0; n <= N; ++n) CHECK(e[n] == 1);
    // cross-check the recurrence against term-by-term exponentiation
    Series brute = exp_by_powers(a);
    CHECK(e == brute);
}

TEST_CASE("exp homomorphism on random series") {
    RngStream rng(123);
    for (int rep = 0; rep < 4; ++rep) {
        Series a = random_small_series(30, rng), b = random_small_series(30, rng);
        CHECK(a.add(b).exp() == a.exp().mul(b.exp()));
        CHECK(a.exp() == exp_by_powers(a));
    }
}

TEST_CASE("evaluate") {
    Series a = Series::constant(4, 1).add(Series::monomial(4, 1));
    CHECK(a.evaluate(0.5) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(Series(6).evaluate(0.3) == 0.0);

    // truncated geometric at x = 1/2: closed-form partial sum (1-x^{N+1})/(1-x)
    int N = 60;
    Series geo(N);
    for (int n = 0; n <= N; ++n) geo.set_coefficient(n, 1);
    Rat x(1, 2);
    Rat closed = (Rat(1) - Rat(mpz_class(1), mpz_class(1) << (N + 1))) / (Rat(1) - x);
    CHECK(geo.evaluate(0.5) == doctest::Approx(closed.get_d()).epsilon(1e-14));
}

TEST_CASE("fraction dump") {
    Series a(2);
    a.set_coefficient(1, Rat(3, 4));
    auto v = a.to_fraction_strings();
    CHECK(v[0] == "0/1");
    CHECK(v[1] == "3/4");
}
