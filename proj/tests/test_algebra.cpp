#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lforge/errors.hpp"
#include "lforge/json_io.hpp"
#include "lforge/laurent.hpp"
#include "lforge/prng.hpp"
#include "lforge/rational.hpp"
#include "lforge/series.hpp"

using namespace lforge;

namespace {

LaurentPoly sym(const std::string& n) { return LaurentPoly::symbol(n); }

LaurentPoly random_poly(SplitMix64& rng, int max_terms = 5) {
    static const std::vector<std::string> names{"x", "y", "z"};
    LaurentPoly p;
    const int nterms = 1 + static_cast<int>(rng.uniform(0, static_cast<std::uint64_t>(max_terms - 1)));
    for (int t = 0; t < nterms; ++t) {
        LaurentPoly term = LaurentPoly::constant(rng.small_rational());
        for (const auto& n : names) {
            const int e = static_cast<int>(rng.uniform(0, 6)) - 3;
            if (e != 0) term = term * LaurentPoly::monomial(n, e);
        }
        p = p + term;
    }
    return p;
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(rational_to_string(Rational(3, 2)) == "3/2");
    CHECK(rational_to_string(Rational(-4, 2)) == "-2");
    CHECK(rational_from_string("3/2") == Rational(3, 2));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK(rational_from_string("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(rational_from_string("1/0"), InputError);
    CHECK_THROWS_AS(rational_from_string("zebra"), InputError);

    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rational_pow(Rational(5), 0) == 1);
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), InputError);

    CHECK(binomial(11 + 2, 11) == 78);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("monomial inverses multiply to one") {
    const LaurentPoly x = sym("x");
    const LaurentPoly xinv = LaurentPoly::monomial("x", -1);
    CHECK(x * xinv == LaurentPoly::one());
    CHECK((x * xinv).is_constant());
    CHECK((x * xinv).constant_value() == 1);
}

TEST_CASE("difference of squares") {
    const LaurentPoly x = sym("x"), y = sym("y");
    CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("cancellation leaves the empty term map") {
    const LaurentPoly x = sym("x");
    const LaurentPoly p = (LaurentPoly::one() + x) + (-(LaurentPoly::one() + x));
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
}

TEST_CASE("exact division") {
    const LaurentPoly x = sym("x"), y = sym("y");

    SUBCASE("(x^2-1)/(x-1) = x+1") {
        const LaurentPoly num = x * x - LaurentPoly::one();
        const LaurentPoly den = x - LaurentPoly::one();
        CHECK(num.exact_div(den) == x + LaurentPoly::one());
    }
    SUBCASE("(x-y)/(x-y) = 1") {
        CHECK((x - y).exact_div(x - y) == LaurentPoly::one());
    }
    SUBCASE("inexact division fails loudly") {
        CHECK_THROWS_AS(LaurentPoly::one().exact_div(LaurentPoly::one() - x), NonExactDivision);
        CHECK_THROWS_AS((x * x + LaurentPoly::one()).exact_div(x + LaurentPoly::one()),
                        NonExactDivision);
        CHECK_THROWS_AS(x.exact_div(LaurentPoly::zero()), NonExactDivision);
    }
    SUBCASE("division by a Laurent monomial shifts exponents") {
        const LaurentPoly num = x * y + LaurentPoly::one();
        const LaurentPoly den = LaurentPoly::monomial("x", 2, Rational(3));
        const LaurentPoly q = num.exact_div(den);
        CHECK(q * den == num);
    }
}

TEST_CASE("property: exact_div(a*b, b) == a") {
    SplitMix64 rng(0xA1CEu);
    int nontrivial = 0;
    for (int i = 0; i < 60; ++i) {
        const LaurentPoly a = random_poly(rng);
        const LaurentPoly b = random_poly(rng);
        if (b.is_zero()) continue;
        ++nontrivial;
        CHECK((a * b).exact_div(b) == a);
    }
    CHECK(nontrivial >= 50);
}

TEST_CASE("ring axioms on random triples") {
    SplitMix64 rng(0xBEEFu);
    for (int i = 0; i < 25; ++i) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == LaurentPoly::zero());
    }
}

TEST_CASE("powers") {
    const LaurentPoly x = sym("x"), y = sym("y");
    CHECK((x + y).pow(2) == x * x + Rational(2) * x * y + y * y);
    CHECK((x + y).pow(0) == LaurentPoly::one());
    CHECK(LaurentPoly::monomial("x", 2, Rational(3, 2)).pow(-2) ==
          LaurentPoly::monomial("x", -4, Rational(4, 9)));
    CHECK_THROWS_AS((x + y).pow(-1), InputError);
}

TEST_CASE("substitution by invertible monomials") {
    const LaurentPoly x = sym("x"), y = sym("y");
    SUBCASE("flip-style image x -> nu / y") {
        const LaurentPoly img = LaurentPoly::symbol("nu") * LaurentPoly::monomial("y", -1);
        const LaurentPoly p = x * x + y;
        const LaurentPoly q = p.substitute({{"x", img}});
        const LaurentPoly expected =
            LaurentPoly::symbol("nu").pow(2) * LaurentPoly::monomial("y", -2) + y;
        CHECK(q == expected);
    }
    SUBCASE("scaling image") {
        const LaurentPoly q = (x * y).substitute({{"x", LaurentPoly::constant(Rational(2)) * y}});
        CHECK(q == Rational(2) * y * y);
    }
    SUBCASE("non-monomial image is rejected") {
        CHECK_THROWS_AS(x.substitute({{"x", x + y}}), InputError);
        CHECK_THROWS_AS(x.substitute({{"x", LaurentPoly::zero()}}), InputError);
    }
}

TEST_CASE("coefficient lookup") {
    const LaurentPoly p = Rational(3, 2) * sym("x").pow(2) * LaurentPoly::monomial("y", -1) +
                          LaurentPoly::one();
    CHECK(p.coefficient({{"x", 2}, {"y", -1}}) == Rational(3, 2));
    CHECK(p.coefficient({}) == 1);
    CHECK(p.coefficient({{"x", 1}}) == 0);
    CHECK(p.coefficient({{"w", 3}}) == 0);
}

TEST_CASE("rendering") {
    const LaurentPoly p = Rational(3, 2) * sym("x").pow(2) * LaurentPoly::monomial("y", -1) +
                          LaurentPoly::one();
    CHECK(p.str() == "3/2*x^2*y^-1 + 1");
    CHECK(LaurentPoly::zero().str() == "0");
    const LaurentPoly m = sym("x") - sym("y");
    CHECK(m.str() == "x - y");
}

TEST_CASE("equality ignores unused variable columns") {
    const LaurentPoly a = sym("x") + sym("y") - sym("y");
    const LaurentPoly b = sym("x");
    CHECK(a == b);
    CHECK(a.pruned().vars() == std::vector<std::string>{"x"});
}

TEST_CASE("polynomial JSON round trip") {
    SplitMix64 rng(0x5EEDu);
    for (int i = 0; i < 20; ++i) {
        const LaurentPoly p = random_poly(rng);
        CHECK(poly_from_json(poly_to_json(p)) == p);
    }
    const auto j = nlohmann::json::parse(
        R"({"vars":["x","y"],"terms":[{"exp":[2,-1],"coef":"3/2"},{"exp":[0,0],"coef":1}]})");
    const LaurentPoly p = poly_from_json(j);
    CHECK(p.str() == "3/2*x^2*y^-1 + 1");
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"({"vars":["x"]})")), InputError);
    CHECK_THROWS_AS(
        poly_from_json(nlohmann::json::parse(R"({"vars":["x"],"terms":[{"exp":[1],"coef":"a"}]})")),
        InputError);
}

TEST_CASE("inverse-root expansion: twelve unit roots") {
    std::vector<std::pair<LaurentPoly, int>> roots(12, {LaurentPoly::one(), 1});
    const TruncatedSeries s = ps_from_inverse_roots(roots, 2);
    CHECK(s.coeff(0).constant_value() == 1);
    CHECK(s.coeff(1).constant_value() == 12);
    CHECK(s.coeff(2).constant_value() == 78);
}

TEST_CASE("property: k unit roots give C(n+k-1, k-1) at T^n") {
    for (int k = 1; k <= 5; ++k) {
        std::vector<std::pair<LaurentPoly, int>> roots(static_cast<std::size_t>(k),
                                                       {LaurentPoly::one(), 1});
        const TruncatedSeries s = ps_from_inverse_roots(roots, 6);
        for (int n = 0; n <= 6; ++n) {
            CHECK(numerator(s.coeff(n).constant_value()) == binomial(n + k - 1, k - 1));
            CHECK(denominator(s.coeff(n).constant_value()) == 1);
        }
    }
}

TEST_CASE("inverse-root expansion: geometric series in a symbol") {
    const TruncatedSeries s = ps_from_inverse_roots({{sym("x"), 1}}, 3);
    CHECK(s.coeff(0) == LaurentPoly::one());
    CHECK(s.coeff(1) == sym("x"));
    CHECK(s.coeff(2) == sym("x").pow(2));
    CHECK(s.coeff(3) == sym("x").pow(3));
}

TEST_CASE("inverse-root expansion: first order in two symbolic roots") {
    const LaurentPoly r1 = sym("a1") * sym("a2") * sym("b1");
    const LaurentPoly r2 = sym("a1") * sym("a2") * sym("b2");
    const TruncatedSeries s = ps_from_inverse_roots({{r1, 1}, {r2, 1}}, 1);
    CHECK(s.coeff(0) == LaurentPoly::one());
    CHECK(s.coeff(1) == r1 + r2);
}

TEST_CASE("inverse roots of degree two skip odd degrees") {
    const TruncatedSeries s = ps_from_inverse_roots({{sym("x"), 2}}, 5);
    CHECK(s.coeff(1).is_zero());
    CHECK(s.coeff(3).is_zero());
    CHECK(s.coeff(2) == sym("x"));
    CHECK(s.coeff(4) == sym("x").pow(2));
}

TEST_CASE("series product and equality") {
    TruncatedSeries onePlusT({"T"}, {3, 0});
    onePlusT.set_coeff(0, 0, LaurentPoly::one());
    onePlusT.set_coeff(1, 0, LaurentPoly::one());
    TruncatedSeries oneMinusT({"T"}, {3, 0});
    oneMinusT.set_coeff(0, 0, LaurentPoly::one());
    oneMinusT.set_coeff(1, 0, -LaurentPoly::one());

    const TruncatedSeries prod = ps_mul(onePlusT, oneMinusT);
    CHECK(prod.coeff(0) == LaurentPoly::one());
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == -LaurentPoly::one());
    CHECK(ps_eq(prod, prod));

    TruncatedSeries expected({"T"}, {3, 0});
    expected.set_coeff(0, 0, LaurentPoly::one());
    expected.set_coeff(2, 0, -LaurentPoly::one());
    CHECK(ps_eq(prod, expected));

    // different truncation orders compare on the common region
    const TruncatedSeries shorter = expected.truncated({2, 0});
    CHECK(ps_eq(prod, shorter));

    // geometric series times its inverse polynomial is one
    const TruncatedSeries geo = ps_from_inverse_roots({{sym("x"), 1}}, 6);
    TruncatedSeries inv({"T"}, {6, 0});
    inv.set_coeff(0, 0, LaurentPoly::one());
    inv.set_coeff(1, 0, -sym("x"));
    CHECK(ps_eq(ps_mul(geo, inv), TruncatedSeries::one({"T"}, {6, 0})));
}

TEST_CASE("series mismatch reporting in graded order") {
    TruncatedSeries a({"T"}, {4, 0});
    a.set_coeff(0, 0, LaurentPoly::one());
    a.set_coeff(2, 0, sym("x"));
    TruncatedSeries b({"T"}, {4, 0});
    b.set_coeff(0, 0, LaurentPoly::one());
    b.set_coeff(2, 0, sym("y"));
    b.set_coeff(3, 0, sym("x"));

    const auto mm = first_series_mismatch(a, b);
    REQUIRE(mm.has_value());
    CHECK(mm->degree == std::pair<int, int>{2, 0});
    CHECK(mm->lhs == sym("x"));
    CHECK(mm->rhs == sym("y"));
    CHECK_FALSE(ps_eq(a, b));
}

TEST_CASE("bivariate embedding and product") {
    const TruncatedSeries t_part = ps_from_inverse_roots({{sym("a"), 1}}, 3, "T");
    const TruncatedSeries u_part = ps_from_inverse_roots({{sym("b"), 1}}, 2, "U");
    const TruncatedSeries tb = t_part.embedded({"T", "U"}, {3, 2});
    const TruncatedSeries ub = u_part.embedded({"T", "U"}, {3, 2});
    const TruncatedSeries j = ps_mul(tb, ub);
    CHECK(j.coeff(2, 1) == sym("a").pow(2) * sym("b"));
    CHECK(j.coeff(0, 0) == LaurentPoly::one());
    CHECK(j.coeff(3, 2) == sym("a").pow(3) * sym("b").pow(2));
    CHECK_THROWS_AS(ps_mul(tb, t_part), InputError);

    const auto round = series_from_json(series_to_json(j));
    CHECK(ps_eq(round, j));
    CHECK(round.bounds() == j.bounds());
}

TEST_CASE("scaled multiplies every coefficient") {
    const TruncatedSeries geo = ps_from_inverse_roots({{sym("x"), 1}}, 2);
    const TruncatedSeries s = geo.scaled(Rational(2) * sym("y"));
    CHECK(s.coeff(0) == Rational(2) * sym("y"));
    CHECK(s.coeff(2) == Rational(2) * sym("y") * sym("x").pow(2));
}
