#include <doctest.h>

#include "bkm/classify.hpp"
#include "bkm/rng.hpp"

using namespace bkm;

namespace {
GaussianRational gr(long n) { return GaussianRational(n); }
BiPoly t() { return BiPoly::var_t(); }
PhiParams make(long lam, long a, long b, long r, BiPoly h = BiPoly()) {
    return PhiParams(gr(lam), gr(a), gr(b), gr(r), std::move(h));
}
}  // namespace

TEST_CASE("action_trace") {
    PhiParams p(gr(1), gr(1), gr(1), gr(0), t() * t());
    ActionTrace trace = action_trace(p, 2);
    CHECK(trace.b.at(2) == -2 * t() - BiPoly(2));

    SeededRng rng(79, 0);
    for (int k = 0; k < 10; ++k) {
        PhiParams q = rng.next_params();
        ActionTrace tr = action_trace(q, 1);
        CHECK(tr.a.at(0) == BiPoly(q.beta));
        CHECK(tr.b.at(0) == BiPoly(q.rho));
    }
}

TEST_CASE("verify_claims") {
    SeededRng rng(83, 0);
    for (int k = 0; k < 10; ++k) {
        PhiParams p = rng.next_params();
        ActionTrace trace = action_trace(p, 5);
        ClaimReport report = verify_claims(trace, p);
        CHECK(report.all_pass());
        // traces of a genuine module are t-only
        for (long long m = -5; m <= 5; ++m) {
            CHECK(trace.a.at(m).deg_s() <= 0);
            CHECK(trace.b.at(m).deg_s() <= 0);
        }
    }
    // A_1 = 0 and, for lambda = rho = 1, A_3 = -2
    PhiParams p = make(1, 1, 2, 1, t());
    ActionTrace trace = action_trace(p, 3);
    auto A = [&](long long m) {
        return trace.b.at(m) - (GaussianRational(m) * p.lambda_pow(m - 1)) * trace.b.at(1);
    };
    CHECK(A(1).is_zero());
    CHECK(A(3) == BiPoly(-2));
    CHECK(A(0) == BiPoly(1));
}

TEST_CASE("claims detect corrupted traces") {
    PhiParams p = make(2, 1, 1, 3, t());
    ActionTrace trace = action_trace(p, 3);
    trace.b[2] += BiPoly(1);
    CHECK(!verify_claims(trace, p).all_pass());
}

TEST_CASE("extract_params") {
    PhiParams p(gr(2), gr(1), gr(3), gr(5), t() * t());
    PhiParams recovered = extract_params(oracle_of(p));
    CHECK(recovered == p);

    PhiParams trivial = make(1, 0, 0, 0);
    CHECK(extract_params(oracle_of(trivial)) == trivial);

    // degree precondition: M_1.1 must have t-degree exactly 1
    ActionOracle bad = [](Generator g) {
        if (g.family == Family::M && g.index == 1) return BiPoly::monomial(0, 2);
        return BiPoly(1);
    };
    CHECK_THROWS_AS(extract_params(bad), NotPhiShaped);

    // consistency witness: tamper with M_2 only
    ActionOracle inconsistent = [&p](Generator g) {
        BiPoly v = act_generator(p, g, BiPoly(1));
        if (g.family == Family::M && g.index == 2) v += BiPoly(1);
        return v;
    };
    CHECK_THROWS_AS(extract_params(inconsistent), NotPhiShaped);

    SeededRng rng(89, 0);
    for (int k = 0; k < 25; ++k) {
        PhiParams q = rng.next_params();
        CHECK(extract_params(oracle_of(q)) == q);
    }
}

TEST_CASE("solve_h") {
    // b_1 = -t with lambda=1, alpha=0, beta=1, rho=0, h(0)=0 gives h = t^2
    CHECK(solve_h(-t(), gr(1), gr(0), gr(1), gr(0), gr(0)) == t() * t());
    CHECK_THROWS_AS(solve_h(t(), gr(1), gr(0), gr(0), gr(0), gr(0)), BetaZero);

    SeededRng rng(97, 0);
    for (int k = 0; k < 25; ++k) {
        PhiParams p(rng.next_nonzero_scalar(), rng.next_scalar(), rng.next_nonzero_scalar(),
                    rng.next_scalar(), rng.next_t_poly(4));
        BiPoly b1 = act_generator(p, {Family::I, 1}, BiPoly(1));
        CHECK(solve_h(b1, p.lambda, p.alpha, p.beta, p.rho, p.h.eval_t(p.alpha)) == p.h);
    }
}

TEST_CASE("iso_check") {
    PhiParams p(gr(2), gr(1), gr(3), gr(5), t() * t());
    CHECK(iso_check(p, p));
    PhiParams q(gr(2), gr(1), gr(3), gr(6), t() * t());
    CHECK(!iso_check(p, q));
    PhiParams r(gr(3), gr(1), gr(3), gr(5), t() * t());
    CHECK(!iso_check(p, r));
}
