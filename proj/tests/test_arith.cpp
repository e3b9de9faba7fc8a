#include "doctest.h"

#include "isoclinic/arith.hpp"

using namespace isoc;

TEST_CASE("polynomial arithmetic") {
    Poly q = Poly::q();
    Poly a = q * q - Poly(1);
    CHECK(a.degree() == 2);
    CHECK(a.eval(3) == 8);
    Poly quo, rem;
    Poly::divmod(a, q - Poly(1), quo, rem);
    CHECK(quo == q + Poly(1));
    CHECK(rem.is_zero());
    CHECK_THROWS(Poly::exact_div(a, q - Poly(2)));
    CHECK(gcd(a, q * q - q) == q - Poly(1));
    CHECK(Poly::monomial(3, 2).valuation() == 3);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == Poly::q() - Poly(1));
    CHECK(cyclotomic(6) == Poly(std::vector<Rational>{1, -1, 1}));
    // q^12 - 1 is the product over divisors of 12
    Poly prod(1);
    for (int d : {1, 2, 3, 4, 6, 12}) prod *= cyclotomic(d);
    CHECK(prod == Poly::monomial(12) - Poly(1));
    CHECK(q_int(4) == Poly(std::vector<Rational>{1, 1, 1, 1}));
}

TEST_CASE("rational functions reduce and print") {
    RatFunc f(Poly::monomial(2) - Poly(1), Poly::q() - Poly(1));
    CHECK(f == RatFunc(Poly::q() + Poly(1)));
    CHECK(f.is_polynomial());
    RatFunc g = RatFunc(1) / RatFunc(Poly::q() - Poly(1));
    CHECK(g.factored() == "Φ1^-1");
    CHECK((RatFunc::q_power(-4) * g).factored() == "q^-4Φ1^-1");
    CHECK(RatFunc(0).factored() == "0");
    CHECK(RatFunc(1).factored() == "1");
    CHECK(RatFunc::q_power(6).factored() == "q^6");
    CHECK(g.eval(3) == Rational(1, 2));
    CHECK(RatFunc(Poly::monomial(2) + Poly(1)).factored() == "Φ4");
    CHECK(RatFunc(Poly::monomial(2) + Poly(2)).factored().front() == '(');
}

TEST_CASE("cyclotomic split") {
    Poly p = Poly::monomial(3) * cyclotomic(2) * cyclotomic(2) * cyclotomic(3) * Rational(5);
    auto s = split_cyclotomic(p);
    CHECK(s.unit == 5);
    CHECK(s.qpow == 3);
    CHECK(s.residual == Poly(1));
    REQUIRE(s.phis.size() == 2);
    CHECK(s.phis[0] == std::make_pair(2, 2));
    CHECK(s.phis[1] == std::make_pair(3, 1));
}

TEST_CASE("interpolation recovers a polynomial") {
    Poly p(std::vector<Rational>{3, Rational(-1, 2), 0, 7});
    std::vector<Rational> xs, ys;
    for (int x = 2; x < 6; ++x) {
        xs.push_back(x);
        ys.push_back(p.eval(x));
    }
    CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("rational strings") {
    CHECK(rational_str(parse_rational("3/6")) == "1/2");
    CHECK(rational_str(Rational(-4)) == "-4");
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(parse_rational("12") == 12);
    CHECK_THROWS(parse_rational("1/0"));
}
