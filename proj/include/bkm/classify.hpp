#ifndef BKM_CLASSIFY_HPP
#define BKM_CLASSIFY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bkm/phi.hpp"

namespace bkm {

/// The classification traces a_m = S_m.1 and b_m = I_m.1 for |m| <= range.
/// For a genuine rank-one module these are t-only; the type permits
/// s-dependence so violations stay detectable.
struct ActionTrace {
    long long range = 0;
    std::map<long long, BiPoly> a;
    std::map<long long, BiPoly> b;
};

inline ActionTrace action_trace(const PhiParams& params, long long range) {
    ActionTrace trace;
    trace.range = range;
    for (long long m = -range; m <= range; ++m) {
        trace.a[m] = act_generator(params, {Family::S, m}, BiPoly(1));
        trace.b[m] = act_generator(params, {Family::I, m}, BiPoly(1));
    }
    return trace;
}

struct ClaimReport {
    struct Entry {
        std::string name;
        bool pass;
        std::string detail;  // offending m on failure
    };
    std::vector<Entry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

/// Check the trace against the closed forms:
///   (i)   a_m = lam^m beta
///   (ii)  b_m = lam^m (rho - m beta (h(t)-h(alpha))/(t-alpha))
///   (iii) A_m := b_m - m lam^(m-1) b_1 is the constant (1-m) lam^m rho
///   (iv)  A_(m+1) = lam A_m + lam^(m+1) rho - lam^(m+2) A_(-1)
///         A_(m-1) = lam^(-1) A_m + lam^(m-1) rho
inline ClaimReport verify_claims(const ActionTrace& trace, const PhiParams& params) {
    ClaimReport report;
    const long long range = trace.range;
    const BiPoly hq = params.h_diff_quotient();
    auto record = [&report](const std::string& name, bool pass, long long m) {
        report.entries.push_back({name, pass, pass ? "" : "m=" + std::to_string(m)});
    };

    auto A = [&](long long m) {  // A_m per (iii), from the trace
        GaussianRational mlm1 = GaussianRational(mpq_class(static_cast<long>(m))) * params.lambda_pow(m - 1);
        return trace.b.at(m) - mlm1 * trace.b.at(1);
    };

    bool a_ok = true, b_ok = true, am_ok = true;
    long long a_bad = 0, b_bad = 0, am_bad = 0;
    for (long long m = -range; m <= range; ++m) {
        GaussianRational lm = params.lambda_pow(m);
        if (a_ok && trace.a.at(m) != BiPoly(lm * params.beta)) {
            a_ok = false;
            a_bad = m;
        }
        BiPoly expected_b =
            lm * (BiPoly(params.rho) - (GaussianRational(mpq_class(static_cast<long>(m))) * params.beta) * hq);
        if (b_ok && trace.b.at(m) != expected_b) {
            b_ok = false;
            b_bad = m;
        }
        if (range >= 1) {
            GaussianRational one_minus_m(mpq_class(1 - static_cast<long>(m)));
            if (am_ok && A(m) != BiPoly(one_minus_m * lm * params.rho)) {
                am_ok = false;
                am_bad = m;
            }
        }
    }
    record("a_m = lambda^m*beta", a_ok, a_bad);
    record("b_m = lambda^m*(rho - m*beta*(h(t)-h(alpha))/(t-alpha))", b_ok, b_bad);
    record("A_m constant and equal to (1-m)*lambda^m*rho", am_ok, am_bad);

    bool up_ok = true, down_ok = true;
    long long up_bad = 0, down_bad = 0;
    if (range >= 1) {
        const BiPoly a_minus1 = A(-1);
        for (long long m = -range; m + 1 <= range; ++m) {
            BiPoly rhs = params.lambda * A(m) + BiPoly(params.lambda_pow(m + 1) * params.rho) -
                         params.lambda_pow(m + 2) * a_minus1;
            if (A(m + 1) != rhs) {
                up_ok = false;
                up_bad = m;
                break;
            }
        }
        for (long long m = -range + 1; m <= range; ++m) {
            BiPoly rhs = params.lambda.inverse() * A(m) + BiPoly(params.lambda_pow(m - 1) * params.rho);
            if (A(m - 1) != rhs) {
                down_ok = false;
                down_bad = m;
                break;
            }
        }
    }
    record("A_(m+1) = lambda*A_m + lambda^(m+1)*rho - lambda^(m+2)*A_(-1)", up_ok, up_bad);
    record("A_(m-1) = lambda^(-1)*A_m + lambda^(m-1)*rho", down_ok, down_bad);
    return report;
}

/// Supplies the action of a basis symbol on the free generator 1.
using ActionOracle = std::function<BiPoly(Generator)>;

/// Reconstruct the parameter tuple from rank-one action data:
///   lambda = [t] M_1.1,  alpha = -(const term of M_1.1)/lambda,
///   beta = S_0.1,  rho = I_0.1,  h(t) = (L_1.1)/lambda - s.
/// Validated against the independent witnesses M_2.1 and S_1.1.
inline PhiParams extract_params(const ActionOracle& action) {
    BiPoly m1 = action({Family::M, 1});
    if (!m1.is_t_only() || m1.deg_t() != 1) throw NotPhiShaped("M_1.1 must be t-only of degree exactly 1");
    GaussianRational lambda = m1.coeff(0, 1);
    if (lambda.is_zero()) throw LambdaZero();
    GaussianRational lambda_inv = lambda.inverse();
    GaussianRational alpha = -(lambda_inv * m1.coeff(0, 0));

    BiPoly l1 = action({Family::L, 1});
    if (l1.deg_s() != 1) throw NotPhiShaped("L_1.1 must have s-degree exactly 1");
    BiPoly s_part;
    BiPoly rest;
    for (const auto& [mono, c] : l1.terms()) {
        if (mono.s == 1)
            s_part.add_term({0, mono.t}, c);
        else
            rest.add_term(mono, c);
    }
    if (s_part != BiPoly(lambda)) throw NotPhiShaped("s-coefficient of L_1.1 must equal lambda");
    BiPoly h = lambda_inv * rest;
    if (!h.is_t_only()) throw NotPhiShaped("h part of L_1.1 must be t-only");

    BiPoly beta_poly = action({Family::S, 0});
    BiPoly rho_poly = action({Family::I, 0});
    if (beta_poly.deg_s() > 0 || beta_poly.deg_t() > 0) throw NotPhiShaped("S_0.1 must be constant");
    if (rho_poly.deg_s() > 0 || rho_poly.deg_t() > 0) throw NotPhiShaped("I_0.1 must be constant");
    GaussianRational beta = beta_poly.coeff(0, 0);
    GaussianRational rho = rho_poly.coeff(0, 0);

    PhiParams params(lambda, alpha, beta, rho, h);

    // consistency witnesses
    BiPoly m2_expected = (lambda * lambda) * (BiPoly::var_t() - BiPoly(GaussianRational(2) * alpha));
    if (action({Family::M, 2}) != m2_expected) throw NotPhiShaped("M_2.1 inconsistent with (lambda, alpha)");
    if (action({Family::S, 1}) != BiPoly(lambda * beta)) throw NotPhiShaped("S_1.1 inconsistent with lambda*beta");
    return params;
}

/// Convenience oracle: the actions of a known parameter tuple on 1.
inline ActionOracle oracle_of(const PhiParams& params) {
    return [params](Generator g) { return act_generator(params, g, BiPoly(1)); };
}

/// Recover h from the trace value b_1:
///   h(t) = ( -lambda^(-1) b_1(t)(t-alpha) + rho t + beta h(alpha) - rho alpha ) / beta.
inline BiPoly solve_h(const BiPoly& b1, const GaussianRational& lambda, const GaussianRational& alpha,
                      const GaussianRational& beta, const GaussianRational& rho,
                      const GaussianRational& h_at_alpha) {
    if (beta.is_zero()) throw BetaZero();
    if (lambda.is_zero()) throw LambdaZero();
    if (!b1.is_t_only()) throw NotUnivariateT();
    BiPoly t = BiPoly::var_t();
    BiPoly numerator = -(lambda.inverse() * (b1 * (t - BiPoly(alpha)))) + rho * t +
                       BiPoly(beta * h_at_alpha - rho * alpha);
    return beta.inverse() * numerator;
}

/// Two modules are isomorphic iff their five-tuples are equal.
inline bool iso_check(const PhiParams& p1, const PhiParams& p2) { return p1 == p2; }

}  // namespace bkm

#endif
