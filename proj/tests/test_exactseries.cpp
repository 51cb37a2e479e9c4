#include <doctest.h>

#include <random>

#include "mf/arith.hpp"
#include "mf/errors.hpp"
#include "mf/qexpansion.hpp"
#include "oracles.hpp"

using namespace mf;

namespace {

QExpansion monomial(Grid g, long m, long num, long den, long precision) {
    std::map<long, Rational> c{{m, make_rational(num, den)}};
    return QExpansion(g, precision, std::move(c));
}

QExpansion random_series(std::mt19937_64& rng, Grid g, long precision) {
    std::map<long, Rational> c;
    long entries = 1 + rng() % 8;
    for (long i = 0; i < entries; ++i) {
        long m = rng() % precision;
        if (g == Grid::Integer) m -= m % 2;
        long num = static_cast<long>(rng() % 41) - 20;
        long den = 1 + rng() % 7;
        if (num != 0) c[m] = make_rational(num, den);
    }
    return QExpansion(g, precision, std::move(c));
}

}  // namespace

TEST_CASE("rational canonical form") {
    Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(rational_to_string(make_rational(0, 5)) == "0/1");
    CHECK(rational_from_string("-88") == Rational(-88));
    CHECK(rational_from_string("3/4") == make_rational(3, 4));
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("abc"), ParseError);
}

TEST_CASE("sigma helpers") {
    CHECK(sigma(1) == 1);
    CHECK(sigma(6) == 12);
    CHECK(sigma_odd(12) == 4);
    for (long n = 1; n <= 60; ++n) {
        CHECK(sigma(n) == oracle::sigma_by_enumeration(n, 1));
        CHECK(sigma_k(n, 3) == oracle::sigma_by_enumeration(n, 3));
        CHECK(sigma_k(n, 5) == oracle::sigma_by_enumeration(n, 5));
    }
}

TEST_CASE("add basics") {
    long p = 40;
    QExpansion q1 = monomial(Grid::Integer, 2, 1, 1, p);
    CHECK(add(q1, neg(q1)).is_zero());

    QExpansion a = add(monomial(Grid::Integer, 0, 1, 1, p), monomial(Grid::Integer, 2, 8, 1, p));
    QExpansion b = monomial(Grid::Integer, 2, 24, 1, p);
    QExpansion s = add(a, b);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 32);

    // precision shrinks to the weaker operand
    QExpansion shallow = monomial(Grid::Integer, 2, 1, 1, 10);
    CHECK(add(q1, shallow).precision() == 10);
}

TEST_CASE("add grid mismatch raises") {
    QExpansion half = monomial(Grid::Half, 1, 1, 1, 20);
    QExpansion whole = monomial(Grid::Integer, 2, 1, 1, 20);
    CHECK_THROWS_AS(add(half, whole), GridError);
    // a zero operand adopts the other grid
    QExpansion zero(Grid::Integer, 20);
    CHECK(add(half, zero) == half);
}

TEST_CASE("mul basics and grids") {
    long p = 40;
    QExpansion one = monomial(Grid::Integer, 0, 1, 1, p);
    QExpansion f = add(monomial(Grid::Integer, 2, 3, 2, p), monomial(Grid::Integer, 6, -1, 1, p));
    CHECK(mul(one, f) == f);

    QExpansion qhalf = monomial(Grid::Half, 1, 1, 1, p);
    QExpansion sq = mul(qhalf, qhalf);
    CHECK(sq.grid() == Grid::Integer);  // q^{1/2} * q^{1/2} = q
    CHECK(sq.coeff(1) == 1);

    // theta^4 + 16 F against a fully independent dense expansion
    long nmax = 10;
    std::vector<long> t4 = oracle::theta4_by_lattice_count(nmax);
    oracle::Dense expected(nmax + 1, Rational(0));
    for (long n = 0; n <= nmax; ++n) {
        expected[n] = Rational(t4[n]);
        if (n % 2 == 1) expected[n] += Rational(16) * Rational(oracle::sigma_by_enumeration(n));
    }
    std::map<long, Rational> tc, fc;
    for (long n = 0; n <= nmax; ++n)
        if (t4[n] != 0) tc[2 * n] = Rational(t4[n]);
    for (long n = 1; n <= nmax; n += 2) fc[2 * n] = Rational(oracle::sigma_by_enumeration(n));
    QExpansion theta4(Grid::Integer, 2 * nmax + 2, std::move(tc));
    QExpansion f2(Grid::Integer, 2 * nmax + 2, std::move(fc));
    QExpansion total = add(theta4, scalar_mul(Rational(16), f2));
    CHECK(oracle::matches_dense(total, expected, nmax));
}

TEST_CASE("ring axioms on random truncations") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        Grid g = (trial % 2 == 0) ? Grid::Integer : Grid::Half;
        long p = 24 + (rng() % 30);
        QExpansion a = random_series(rng, g, p);
        QExpansion b = random_series(rng, g, p);
        QExpansion c = random_series(rng, g, p);
        CHECK(add(a, b) == add(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    }
}

TEST_CASE("rescale_variable") {
    long p = 30;
    QExpansion f = add(monomial(Grid::Half, 1, 1, 1, p), monomial(Grid::Half, 3, -12, 1, p));
    CHECK(rescale_variable(f, 1) == f);

    QExpansion g = rescale_variable(f, 2);
    CHECK(g.grid() == Grid::Integer);  // all keys even after doubling
    CHECK(g.coeff(1) == 1);
    CHECK(g.coeff(3) == -12);
    CHECK(g.precision() == 60);

    // composition law up to the cap
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        QExpansion h = random_series(rng, Grid::Integer, 20 + rng() % 20);
        long a = 1 + rng() % 3, b = 1 + rng() % 3;
        CHECK(rescale_variable(rescale_variable(h, a), b) == rescale_variable(h, a * b));
    }

    // leading term of Delta under q -> q^2
    QExpansion delta = eta_product({{1, 24}}, 30);
    QExpansion d2 = rescale_variable(delta, 2);
    CHECK(d2.leading_exponent2() == 4);
    CHECK(d2.coeff(2) == 1);
}

TEST_CASE("translation_sign_action") {
    long p = 30;
    // half grid, t = 1: every q^{n+1/2} picks up -1
    QExpansion f = add(monomial(Grid::Half, 1, 1, 1, p), monomial(Grid::Half, 5, 7, 1, p));
    CHECK(translation_sign_action(f, Rational(1)) == neg(f));

    // odd-supported integer series, t = 1/2: output is -g
    QExpansion g = add(monomial(Grid::Integer, 2, 1, 1, p), monomial(Grid::Integer, 6, -4, 1, p));
    CHECK(translation_sign_action(g, Rational(1, 2)) == neg(g));

    // q^2 is fixed by t = 1/2
    QExpansion q2 = monomial(Grid::Integer, 4, 1, 1, p);
    CHECK(translation_sign_action(q2, Rational(1, 2)) == q2);

    // half-integer exponents make the t = 1/2 multiplier non-real
    CHECK_THROWS_AS(translation_sign_action(f, Rational(1, 2)), NonRealMultiplier);

    // applying t = 1/2 twice equals t = 1
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        QExpansion h = random_series(rng, Grid::Integer, 20 + rng() % 20);
        CHECK(translation_sign_action(translation_sign_action(h, Rational(1, 2)), Rational(1, 2)) ==
              translation_sign_action(h, Rational(1)));
    }
}

TEST_CASE("eta products against factor-by-factor oracle") {
    // eta(tau)^12 on the half grid
    QExpansion e12 = eta_product({{1, 12}}, 22);
    CHECK(e12.grid() == Grid::Half);
    CHECK(e12.coeff2(1) == 1);
    CHECK(e12.coeff2(3) == -12);
    CHECK(e12.coeff2(5) == 54);
    CHECK(e12.coeff2(7) == -88);
    CHECK(e12.coeff2(9) == -99);

    // eta(2tau)^12
    QExpansion g = eta_product({{2, 12}}, 30);
    CHECK(g.grid() == Grid::Integer);
    CHECK(g.coeff(1) == 1);
    CHECK(g.coeff(3) == -12);
    CHECK(g.coeff(5) == 54);
    CHECK(g.coeff(7) == -88);
    CHECK(g.coeff(9) == -99);
    CHECK(g.coeff(11) == 540);
    CHECK(g.coeff(13) == -418);

    // Delta begins q - 24q^2 + 252q^3
    QExpansion delta = eta_product({{1, 24}}, 10);
    CHECK(delta.coeff(1) == 1);
    CHECK(delta.coeff(2) == -24);
    CHECK(delta.coeff(3) == 252);

    // full prefix comparisons against the dense brute-force product
    long nmax = 16;
    oracle::Dense d24 = oracle::dense_eta_factor(1, 24, nmax);
    oracle::Dense shifted(nmax + 1, Rational(0));
    for (long n = 1; n <= nmax; ++n) shifted[n] = d24[n - 1];
    CHECK(oracle::matches_dense(eta_product({{1, 24}}, 2 * nmax + 2), shifted, nmax));

    oracle::Dense d88 = oracle::dense_mul(oracle::dense_eta_factor(1, 8, nmax),
                                          oracle::dense_eta_factor(2, 8, nmax), nmax);
    oracle::Dense shifted88(nmax + 1, Rational(0));
    for (long n = 1; n <= nmax; ++n) shifted88[n] = d88[n - 1];
    CHECK(oracle::matches_dense(eta_product({{1, 8}, {2, 8}}, 2 * nmax + 2), shifted88, nmax));

    // eta^12 * eta^12 = eta^24 through q^5 (as half-grid product landing on
    // the integer grid)
    QExpansion prod = mul(eta_product({{1, 12}}, 14), eta_product({{1, 12}}, 14));
    CHECK(prod.grid() == Grid::Integer);
    QExpansion direct = eta_product({{1, 24}}, 14);
    CHECK(prod == direct);

    // negative exponents via series inversion: eta(2t)^-2 * eta(2t)^2 = 1
    QExpansion inv_pair = eta_product({{2, 2}, {2, -2}}, 24);
    CHECK(inv_pair.coeff(0) == 1);
    CHECK(inv_pair.coeffs().size() == 1);

    // prefactor off the grid
    CHECK_THROWS_AS(eta_product({{1, 1}}, 10), PrefactorNotOnGrid);
    CHECK_THROWS_AS(eta_product({{1, -12}}, 10), PrefactorNotOnGrid);
}

TEST_CASE("integer eta coefficients are integral") {
    QExpansion delta = eta_product({{1, 24}}, 42);
    for (const auto& [m, v] : delta.coeffs()) {
        (void)m;
        CHECK(is_integer(v));
    }
}

TEST_CASE("invert_unit") {
    // 1/(1 - q) = geometric series
    std::map<long, Rational> c{{0, Rational(1)}, {2, Rational(-1)}};
    QExpansion f(Grid::Integer, 12, std::move(c));
    QExpansion inv = invert_unit(f);
    for (long n = 0; n < 6; ++n) CHECK(inv.coeff(n) == 1);
    CHECK_THROWS_AS(invert_unit(QExpansion(Grid::Integer, 4)), Error);
}

TEST_CASE("canonical sparse form forbids stored zeros") {
    std::map<long, Rational> c{{0, Rational(0)}, {2, Rational(5)}};
    QExpansion f(Grid::Integer, 10, std::move(c));
    CHECK(f.coeffs().size() == 1);

    std::map<long, Rational> bad{{1, Rational(1)}};
    CHECK_THROWS_AS(QExpansion(Grid::Integer, 10, std::move(bad)), GridError);
    std::map<long, Rational> toobig{{12, Rational(1)}};
    CHECK_THROWS_AS(QExpansion(Grid::Integer, 10, std::move(toobig)), Error);
}
