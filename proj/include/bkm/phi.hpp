#ifndef BKM_PHI_HPP
#define BKM_PHI_HPP

#include <span>
#include <string>

#include "bkm/algebra.hpp"
#include "bkm/bipoly.hpp"
#include "bkm/errors.hpp"

namespace bkm {

/// Parameter tuple (lambda, alpha, beta, rho, h(t)) of a rank-one module on
/// C[s,t]. lambda must be nonzero and h a polynomial in t only.
struct PhiParams {
    GaussianRational lambda;
    GaussianRational alpha;
    GaussianRational beta;
    GaussianRational rho;
    BiPoly h;

    PhiParams(GaussianRational lam, GaussianRational a, GaussianRational b, GaussianRational r, BiPoly h_poly)
        : lambda(std::move(lam)), alpha(std::move(a)), beta(std::move(b)), rho(std::move(r)), h(std::move(h_poly)) {
        if (lambda.is_zero()) throw LambdaZero();
        if (!h.is_t_only()) throw HNotUnivariate();
    }

    GaussianRational lambda_pow(long long m) const { return lambda.pow(m); }

    /// (h(t) - h(alpha)) / (t - alpha), always an exact polynomial.
    BiPoly h_diff_quotient() const { return h.diff_quotient_t(alpha); }

    friend bool operator==(const PhiParams& a, const PhiParams& b) {
        return a.lambda == b.lambda && a.alpha == b.alpha && a.beta == b.beta && a.rho == b.rho && a.h == b.h;
    }

    std::string str() const {
        return "phi(lambda=" + lambda.str() + ",alpha=" + alpha.str() + ",beta=" + beta.str() + ",rho=" +
               rho.str() + ",h=" + h.str() + ")";
    }
};

/// h_m(t) = m h(t) - m(m-1) alpha (h(t) - h(alpha))/(t - alpha).
inline BiPoly h_m(const PhiParams& p, long long m) {
    GaussianRational gm(mpq_class(static_cast<long>(m)));
    GaussianRational gmm1(mpq_class(static_cast<long>(m)) * mpq_class(static_cast<long>(m - 1)));
    return gm * p.h - (gmm1 * p.alpha) * p.h_diff_quotient();
}

/// Action of a basis symbol on f per the defining formulas:
///   L_m.f = lam^m (s + h_m(t)) f(s-m,t) - m lam^m (t - m a) d/dt f(s-m,t)
///   M_m.f = lam^m (t - m a) f(s-m,t)
///   S_m.f = lam^m b f(s-m,t)
///   I_m.f = lam^m (r - m b (h(t)-h(a))/(t-a)) f(s-m,t) + m lam^m b d/dt f(s-m,t)
inline BiPoly act_generator(const PhiParams& p, Generator g, const BiPoly& f) {
    const long long m = g.index;
    const GaussianRational lm = p.lambda_pow(m);
    const GaussianRational gm(mpq_class(static_cast<long>(m)));
    const BiPoly fs = shift_s(f, m);
    switch (g.family) {
        case Family::L: {
            BiPoly t_minus_ma = BiPoly::var_t() - BiPoly(gm * p.alpha);
            BiPoly r = (BiPoly::var_s() + h_m(p, m)) * fs - gm * (t_minus_ma * fs.d_dt());
            return lm * r;
        }
        case Family::M: {
            BiPoly t_minus_ma = BiPoly::var_t() - BiPoly(gm * p.alpha);
            return lm * (t_minus_ma * fs);
        }
        case Family::S:
            return (lm * p.beta) * fs;
        case Family::I: {
            BiPoly factor = BiPoly(p.rho) - (gm * p.beta) * p.h_diff_quotient();
            return lm * (factor * fs + (gm * p.beta) * fs.d_dt());
        }
    }
    return BiPoly();
}

/// Linear extension of act_generator.
inline BiPoly act_element(const PhiParams& p, const AlgebraElement& x, const BiPoly& f) {
    BiPoly r;
    for (const auto& [g, c] : x.terms()) r += c * act_generator(p, g, f);
    return r;
}

/// Apply a word of generators, rightmost first (operator composition order).
inline BiPoly act_word(const PhiParams& p, std::span<const Generator> word, const BiPoly& f) {
    BiPoly acc = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = act_generator(p, *it, acc);
    return acc;
}

/// Irreducibility criterion: the module is irreducible iff alpha != 0 or
/// beta != 0.
inline bool is_irreducible(const PhiParams& p) { return !p.alpha.is_zero() || !p.beta.is_zero(); }

/// Layer t^i C[s,t] / t^(i+1) C[s,t] of the submodule filtration present when
/// alpha = beta = 0.
struct QuotientLevel {
    unsigned i = 0;
};

namespace detail {
inline void require_quotient_case(const PhiParams& p) {
    if (!p.alpha.is_zero() || !p.beta.is_zero()) throw QuotientUndefined();
}
}  // namespace detail

/// Induced action on a filtration layer, on the coefficient polynomial g(s)
/// (the t^i factor is implicit):
///   L_m . g = lam^m (s + m(h(0) - i)) g(s-m)
///   I_m . g = lam^m rho g(s-m)
///   M_m . g = S_m . g = 0
inline BiPoly quotient_act(const PhiParams& p, QuotientLevel level, Generator g, const BiPoly& gbar) {
    detail::require_quotient_case(p);
    if (!gbar.is_s_only()) throw DomainError("quotient layer element must be a polynomial in s only");
    const long long m = g.index;
    const GaussianRational lm = p.lambda_pow(m);
    const BiPoly gs = shift_s(gbar, m);
    switch (g.family) {
        case Family::L: {
            GaussianRational c = GaussianRational(mpq_class(static_cast<long>(m))) *
                                 (p.h.eval_t(GaussianRational()) - GaussianRational(static_cast<long>(level.i)));
            return lm * ((BiPoly::var_s() + BiPoly(c)) * gs);
        }
        case Family::I:
            return (lm * p.rho) * gs;
        case Family::M:
        case Family::S:
            return BiPoly();
    }
    return BiPoly();
}

/// The layer t^i C[s,t]/t^(i+1) C[s,t] is irreducible iff h(0) != i or rho != 0.
inline bool quotient_irreducible(const PhiParams& p, QuotientLevel level) {
    detail::require_quotient_case(p);
    return p.h.eval_t(GaussianRational()) != GaussianRational(static_cast<long>(level.i)) || !p.rho.is_zero();
}

}  // namespace bkm

#endif
