#include <doctest.h>

#include <vector>

#include "bkm/phi.hpp"
#include "bkm/rng.hpp"

using namespace bkm;

namespace {
GaussianRational gr(long n) { return GaussianRational(n); }
PhiParams make(long lam, long a, long b, long r, BiPoly h = BiPoly()) {
    return PhiParams(gr(lam), gr(a), gr(b), gr(r), std::move(h));
}
BiPoly s() { return BiPoly::var_s(); }
BiPoly t() { return BiPoly::var_t(); }
}  // namespace

TEST_CASE("PhiParams validation") {
    CHECK_THROWS_AS(make(0, 0, 0, 0), LambdaZero);
    CHECK_THROWS_AS(PhiParams(gr(1), gr(0), gr(0), gr(0), s()), HNotUnivariate);
}

TEST_CASE("h_m") {
    SeededRng rng(29, 0);
    PhiParams any(rng.next_nonzero_scalar(), rng.next_scalar(), gr(0), gr(0), rng.next_t_poly(4));
    CHECK(h_m(any, 0).is_zero());
    CHECK(h_m(any, 1) == any.h);
    PhiParams p(gr(1), gr(1), gr(0), gr(0), t() * t());
    // 2t^2 - 2*(t+1) via the difference-quotient oracle
    CHECK(h_m(p, 2) == 2 * (t() * t()) - 2 * t() - BiPoly(2));
}

TEST_CASE("act_generator worked examples") {
    PhiParams p1 = make(1, 0, 1, 0);
    CHECK(act_generator(p1, {Family::L, 1}, s()) == s() * s() - s());

    PhiParams p2 = make(2, 1, 0, 0);
    CHECK(act_generator(p2, {Family::M, 2}, BiPoly(1)) == 4 * t() - BiPoly(8));

    PhiParams p3 = make(1, 0, 1, 2, t());
    CHECK(act_generator(p3, {Family::I, 1}, t()) == t() + BiPoly(1));

    SeededRng rng(31, 0);
    for (int k = 0; k < 10; ++k) {
        PhiParams p = rng.next_params();
        BiPoly f = rng.next_poly(4, 4);
        CHECK(act_generator(p, {Family::L, 0}, f) == s() * f);
        CHECK(act_generator(p, {Family::M, 0}, f) == t() * f);
    }
}

TEST_CASE("act_element and act_word") {
    PhiParams p = make(1, 0, 0, 0);
    SeededRng rng(37, 0);
    BiPoly f = rng.next_poly(3, 3);
    AlgebraElement combo;
    combo.add_term({Family::L, 0}, gr(2));
    combo.add_term({Family::M, 0}, gr(1));
    CHECK(act_element(p, combo, f) == 2 * (s() * f) + t() * f);
    CHECK(act_element(p, AlgebraElement(), f).is_zero());

    std::vector<Generator> lm = {{Family::L, 1}, {Family::M, 1}};
    std::vector<Generator> ml = {{Family::M, 1}, {Family::L, 1}};
    CHECK(act_word(p, lm, BiPoly(1)) == s() * t() - t());
    CHECK(act_word(p, ml, BiPoly(1)) == s() * t() - t());  // [L_1, M_1] = 0
    CHECK(act_word(p, std::vector<Generator>{}, f) == f);
}

TEST_CASE("module axiom on sampled pairs") {
    SeededRng rng(41, 0);
    const Family fams[] = {Family::L, Family::M, Family::S, Family::I};
    for (int k = 0; k < 40; ++k) {
        PhiParams p = rng.next_params();
        BiPoly f = rng.next_poly(3, 3);
        Generator x{fams[rng.next_int(0, 3)], rng.next_int(-3, 3)};
        Generator y{fams[rng.next_int(0, 3)], rng.next_int(-3, 3)};
        BiPoly lhs = act_generator(p, x, act_generator(p, y, f)) -
                     act_generator(p, y, act_generator(p, x, f));
        CHECK(lhs == act_element(p, bracket(x, y), f));
    }
}

TEST_CASE("quotient actions") {
    PhiParams p1 = make(1, 0, 0, 0, t());
    CHECK(quotient_act(p1, {0}, {Family::L, 1}, BiPoly(1)) == s());

    PhiParams p2 = make(1, 0, 0, 2);
    CHECK(quotient_act(p2, {3}, {Family::I, 3}, s()) == 2 * s() - BiPoly(6));

    SeededRng rng(43, 0);
    PhiParams p3(rng.next_nonzero_scalar(), gr(0), gr(0), rng.next_scalar(), rng.next_t_poly(3));
    BiPoly g = rng.next_poly(4, 0);
    CHECK(quotient_act(p3, {1}, {Family::M, 2}, g).is_zero());
    CHECK(quotient_act(p3, {1}, {Family::S, -1}, g).is_zero());

    PhiParams bad = make(1, 1, 0, 0);
    CHECK_THROWS_AS(quotient_act(bad, {0}, {Family::L, 1}, BiPoly(1)), QuotientUndefined);
    CHECK_THROWS_AS(quotient_irreducible(bad, {0}), QuotientUndefined);
}

TEST_CASE("irreducibility predicates") {
    CHECK(is_irreducible(make(1, 1, 0, 0)));
    CHECK(is_irreducible(make(1, 0, 1, 0)));
    BiPoly t3 = t() * t() * t();
    CHECK(!is_irreducible(make(1, 0, 0, 5, t3)));

    BiPoly h = t() + BiPoly(1);  // h(0) = 1
    CHECK(!quotient_irreducible(make(1, 0, 0, 0, h), {1}));
    CHECK(quotient_irreducible(make(1, 0, 0, 0, h), {0}));
    CHECK(quotient_irreducible(make(1, 0, 0, 1, h), {1}));
}

TEST_CASE("L and M actions are independent of beta and rho") {
    SeededRng rng(47, 0);
    for (int k = 0; k < 10; ++k) {
        GaussianRational lam = rng.next_nonzero_scalar(), alpha = rng.next_scalar();
        BiPoly h = rng.next_t_poly(3);
        PhiParams a(lam, alpha, rng.next_scalar(), rng.next_scalar(), h);
        PhiParams b(lam, alpha, rng.next_scalar(), rng.next_scalar(), h);
        BiPoly f = rng.next_poly(3, 3);
        for (long long m = -3; m <= 3; ++m) {
            CHECK(act_generator(a, {Family::L, m}, f) == act_generator(b, {Family::L, m}, f));
            CHECK(act_generator(a, {Family::M, m}, f) == act_generator(b, {Family::M, m}, f));
        }
    }
}

TEST_CASE("L_m raises s-degree by one") {
    SeededRng rng(53, 0);
    for (int k = 0; k < 20; ++k) {
        PhiParams p = rng.next_params();
        BiPoly f = rng.next_poly(3, 3);
        long long m = rng.next_int(-4, 4);
        BiPoly image = act_generator(p, {Family::L, m}, f);
        CHECK(image.deg_s() == f.deg_s() + 1);
        CHECK(!image.is_zero());
    }
}
