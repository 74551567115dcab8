#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pxp/polynomial.hpp"

using namespace pxp;

namespace {

Monomial mono(int x0, int x1, int y0, int y1, int t = 0) {
    Monomial m;
    m.e = {static_cast<std::uint16_t>(x0), static_cast<std::uint16_t>(x1),
           static_cast<std::uint16_t>(y0), static_cast<std::uint16_t>(y1),
           static_cast<std::uint16_t>(t)};
    return m;
}

Monomial random_monomial(std::mt19937& rng, int max_exp = 3, bool with_elim = false) {
    return mono(static_cast<int>(rng() % (max_exp + 1)), static_cast<int>(rng() % (max_exp + 1)),
                static_cast<int>(rng() % (max_exp + 1)), static_cast<int>(rng() % (max_exp + 1)),
                with_elim ? static_cast<int>(rng() % (max_exp + 1)) : 0);
}

template <class K>
Polynomial<K> random_poly(std::mt19937& rng) {
    std::vector<typename Polynomial<K>::Term> terms;
    int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i)
        terms.emplace_back(random_monomial(rng),
                           K::from_int(static_cast<long long>(rng() % 9) - 4));
    return Polynomial<K>(std::move(terms), TermOrder::degrevlex());
}

}  // namespace

TEST_CASE("degrevlex basics") {
    TermOrder ord = TermOrder::degrevlex();
    CHECK(ord.greater(mono(1, 0, 0, 0), mono(0, 1, 0, 0)));  // x0 > x1
    CHECK(ord.greater(mono(0, 1, 0, 0), mono(0, 0, 1, 0)));  // x1 > y0
    CHECK(ord.greater(mono(0, 0, 1, 0), mono(0, 0, 0, 1)));  // y0 > y1
    CHECK(ord.greater(mono(2, 0, 0, 0), mono(1, 0, 0, 0)));  // degree first
    CHECK(ord.less(mono(1, 0, 0, 1), mono(0, 1, 1, 0)));     // x0y1 < x1y0
}

TEST_CASE("lex order") {
    TermOrder ord = TermOrder::lex();
    CHECK(ord.greater(mono(1, 0, 0, 0), mono(0, 5, 3, 2)));  // x0 beats any x0-free
    CHECK(ord.greater(mono(0, 2, 0, 0), mono(0, 1, 9, 9)));
}

TEST_CASE("elimination block order puts the auxiliary variable first") {
    TermOrder ord = TermOrder::elim_t();
    CHECK(ord.greater(mono(0, 0, 0, 0, 1), mono(5, 5, 5, 5, 0)));
    CHECK(ord.greater(mono(0, 0, 0, 0, 2), mono(9, 9, 9, 9, 1)));
    // On elimination-variable-free monomials it restricts to degrevlex.
    std::mt19937 rng(3);
    TermOrder drl = TermOrder::degrevlex();
    for (int i = 0; i < 200; ++i) {
        Monomial a = random_monomial(rng), b = random_monomial(rng);
        CHECK(ord.compare(a, b) == drl.compare(a, b));
    }
}

TEST_CASE("orders are total and multiplicative") {
    std::mt19937 rng(7);
    for (TermOrder ord : {TermOrder::degrevlex(), TermOrder::lex(), TermOrder::elim_t()}) {
        for (int i = 0; i < 300; ++i) {
            Monomial a = random_monomial(rng, 3, true), b = random_monomial(rng, 3, true),
                     c = random_monomial(rng, 3, true);
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            if (ab == 0) CHECK(a == b);
            if (ab < 0) CHECK(ord.less(a * c, b * c));
        }
    }
}

TEST_CASE("monomials of a bidegree") {
    CHECK(monomials_of_bidegree({0, 0}) == std::vector<Monomial>{Monomial::one()});
    auto m11 = monomials_of_bidegree({1, 1});
    REQUIRE(m11.size() == 4);
    CHECK(m11[0] == mono(1, 0, 1, 0));  // x0*y0
    CHECK(m11[1] == mono(1, 0, 0, 1));  // x0*y1
    CHECK(m11[2] == mono(0, 1, 1, 0));  // x1*y0
    CHECK(m11[3] == mono(0, 1, 0, 1));  // x1*y1
    CHECK(monomials_of_bidegree({4, 4}).size() == 25);
}

TEMPLATE_TEST_CASE("products and bidegrees", "", Fp, Rational) {
    using K = TestType;
    Polynomial<K> x0 = Polynomial<K>::variable(kVarX0);
    Polynomial<K> x1 = Polynomial<K>::variable(kVarX1);
    Polynomial<K> y0 = Polynomial<K>::variable(kVarY0);
    Polynomial<K> y1 = Polynomial<K>::variable(kVarY1);
    CHECK((x0 * x1).str() == "x0*x1");
    CHECK((x0 * x1).bidegree() == Bidegree{2, 0});
    CHECK(x0 * x1 * Polynomial<K>::one() == x0 * x1);
    Polynomial<K> p = (x0 - x1) * (y0 + y1);
    CHECK(p == Polynomial<K>::parse("x0*y0 + x0*y1 - x1*y0 - x1*y1"));
    CHECK(p.bidegree() == Bidegree{1, 1});
    CHECK(Polynomial<K>::parse("x0^2*x1*y0").bidegree() == Bidegree{3, 1});
    CHECK_THROWS_AS((x0 + y0).bidegree(), NotBihomogeneous);
    CHECK_THROWS_AS(Polynomial<K>().bidegree(), ZeroPolynomial);
}

TEST_CASE("a product of five single-x-degree forms has bidegree (5,0)") {
    using K = Fp;
    Polynomial<K> f = Polynomial<K>::one();
    for (int k = 0; k < 5; ++k) {
        Polynomial<K> linear = Polynomial<K>::variable(kVarX0) -
                               Polynomial<K>::variable(kVarX1).scaled(K::from_int(k));
        f = f * linear;
    }
    CHECK(f.bidegree() == Bidegree{5, 0});
}

TEMPLATE_TEST_CASE("ring axioms on random polynomials", "", Fp, Rational) {
    using K = TestType;
    std::mt19937 rng(41);
    for (int i = 0; i < 50; ++i) {
        Polynomial<K> p = random_poly<K>(rng), q = random_poly<K>(rng), r = random_poly<K>(rng);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == Polynomial<K>());
        if (!p.is_zero() && !q.is_zero() && p.is_bihomogeneous() && q.is_bihomogeneous())
            CHECK((p * q).bidegree() == p.bidegree() + q.bidegree());
    }
}

TEMPLATE_TEST_CASE("parser round-trips the printer", "", Fp, Rational) {
    using K = TestType;
    std::mt19937 rng(43);
    for (int i = 0; i < 100; ++i) {
        Polynomial<K> p = random_poly<K>(rng);
        if (p.is_zero()) continue;
        CHECK(Polynomial<K>::parse(p.str()) == p);
    }
}

TEST_CASE("parsing the documented format") {
    auto p = Polynomial<Rational>::parse("x0^2*x1*y0 - 3*y0*y1");
    CHECK(p.str() == "x0^2*x1*y0 - 3*y0*y1");
    CHECK(Polynomial<Rational>::parse("1/2*x0 - y0").leading_coefficient() ==
          Rational::from_fraction(1, 2));
    CHECK(Polynomial<Rational>::parse("0").is_zero());
    CHECK(Polynomial<Rational>::parse("2 - 2").is_zero());
    CHECK_THROWS_AS(Polynomial<Rational>::parse("x2"), ParseError);
    CHECK_THROWS_AS(Polynomial<Rational>::parse("x0^"), ParseError);
    CHECK_THROWS_AS(Polynomial<Rational>::parse(""), ParseError);
    CHECK_THROWS_AS(Polynomial<Rational>::parse("x0 + + x1"), ParseError);
}

TEST_CASE("changing the active order re-sorts terms") {
    auto p = Polynomial<Rational>::parse("x0 + y0^2");
    CHECK(p.leading_term().first == mono(0, 0, 2, 0));  // degrevlex: degree wins
    auto q = p.with_order(TermOrder::lex());
    CHECK(q.leading_term().first == mono(1, 0, 0, 0));  // lex: x0 wins
    CHECK(p == q);
}

TEMPLATE_TEST_CASE("evaluation", "", Fp, Rational) {
    using K = TestType;
    auto p = Polynomial<K>::parse("x0*y0 - x0*y1 - x1*y0");
    CHECK(p.evaluate(K::from_int(1), K::zero(), K::from_int(1), K::one()).is_zero());
    CHECK(!p.evaluate(K::one(), K::one(), K::one(), K::one()).is_zero());
}
