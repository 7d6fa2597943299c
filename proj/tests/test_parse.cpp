#include <doctest.h>

#include "bkm/parse.hpp"
#include "bkm/rng.hpp"
#include "bkm/suites.hpp"

using namespace bkm;

TEST_CASE("parse_poly") {
    BiPoly p = parse_poly("s^2*t - 3");
    CHECK(p == BiPoly::monomial(2, 1) - BiPoly(3));
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("1/2*s + i*t") ==
          GaussianRational(mpq_class(1, 2)) * BiPoly::var_s() +
              GaussianRational::imaginary_unit() * BiPoly::var_t());
    CHECK(parse_poly("2^3") == BiPoly(8));
    CHECK_THROWS_AS(parse_poly("s^-1"), ParseError);
    CHECK_THROWS_AS(parse_poly("s s"), ParseError);
    CHECK_THROWS_AS(parse_poly("3/0"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);

    try {
        parse_poly("s + ^2");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("print/parse roundtrip") {
    CHECK(parse_poly("s*t - t") == BiPoly::monomial(1, 1) - BiPoly::var_t());
    CHECK((BiPoly::monomial(1, 1) - BiPoly::var_t()).str() == "s*t - t");
    CHECK(BiPoly().str() == "0");
    CHECK(BiPoly(GaussianRational(mpq_class(0), mpq_class(-1))).str() == "-i");

    SuiteResult r = suites::parse_roundtrip(42, 200);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("parse_word") {
    auto w = parse_word("L[2] M[-1]");
    REQUIRE(w.size() == 2);
    CHECK(w[0] == Generator{Family::L, 2});
    CHECK(w[1] == Generator{Family::M, -1});
    CHECK(parse_word("").empty());
    CHECK(parse_word("   ").empty());
    CHECK_THROWS_AS(parse_word("K[1]"), ParseError);
    CHECK_THROWS_AS(parse_word("L[2"), ParseError);
}

TEST_CASE("parse_algebra_element") {
    AlgebraElement e = parse_algebra_element("2*L[0] + M[1] - i*S[-2]");
    AlgebraElement expected;
    expected.add_term({Family::L, 0}, GaussianRational(2));
    expected.add_term({Family::M, 1}, GaussianRational(1));
    expected.add_term({Family::S, -2}, -GaussianRational::imaginary_unit());
    CHECK(e == expected);
    CHECK(parse_algebra_element("0").is_zero());
    CHECK(parse_algebra_element("L[1] - L[1]").is_zero());
}

TEST_CASE("parse_module_spec") {
    PhiParams p = parse_module_spec("phi(lambda=2,alpha=1,beta=3,rho=5,h=t^2)");
    CHECK(p.lambda == GaussianRational(2));
    CHECK(p.alpha == GaussianRational(1));
    CHECK(p.beta == GaussianRational(3));
    CHECK(p.rho == GaussianRational(5));
    CHECK(p.h == BiPoly::monomial(0, 2));

    PhiParams q = parse_module_spec("phi(lambda=1+2*i, alpha=1/2, beta=0, rho=0, h=0)");
    CHECK(q.lambda == GaussianRational(mpq_class(1), mpq_class(2)));
    CHECK(q.alpha == GaussianRational(mpq_class(1, 2)));

    CHECK_THROWS_AS(parse_module_spec("phi(lambda=0,alpha=0,beta=0,rho=0,h=0)"), LambdaZero);
    CHECK_THROWS_AS(parse_module_spec("phi(lambda=1,alpha=0,beta=0,rho=0,h=s)"), HNotUnivariate);
    CHECK_THROWS_AS(parse_module_spec("phi(lambda=1)"), ParseError);
}

TEST_CASE("module spec roundtrips through its canonical text") {
    SeededRng rng(101, 0);
    for (int k = 0; k < 20; ++k) {
        PhiParams p = rng.next_params();
        CHECK(parse_module_spec(p.str()) == p);
    }
}
