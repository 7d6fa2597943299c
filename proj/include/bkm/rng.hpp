#ifndef BKM_RNG_HPP
#define BKM_RNG_HPP

#include <cstdint>

#include "bkm/bipoly.hpp"
#include "bkm/phi.hpp"

namespace bkm {

/// Counter-based deterministic generator: every drawn value is a pure
/// function of (seed, stream, counter), so per-trial streams are independent
/// of execution order and thread count.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0)
        : base_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ULL))) {}

    /// Derive the stream for one trial of a suite.
    static SeededRng for_trial(std::uint64_t seed, std::uint64_t trial) { return SeededRng(seed, trial); }

    std::uint64_t next_u64() { return mix(base_ + (counter_++) * 0x9E3779B97F4A7C15ULL); }

    long next_int(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Gaussian rational with integer parts drawn from [-3, 3].
    GaussianRational next_scalar() {
        return GaussianRational(mpq_class(next_int(-3, 3)), mpq_class(next_int(-3, 3)));
    }

    GaussianRational next_nonzero_scalar() {
        for (;;) {
            GaussianRational x = next_scalar();
            if (!x.is_zero()) return x;
        }
    }

    /// Sparse random polynomial: a handful of monomials within the degree
    /// bounds, small integer Gaussian coefficients, never the zero polynomial.
    BiPoly next_poly(unsigned max_s, unsigned max_t, unsigned terms = 6) {
        BiPoly p;
        for (unsigned k = 0; k < terms; ++k) {
            unsigned js = static_cast<unsigned>(next_int(0, static_cast<long>(max_s)));
            unsigned jt = static_cast<unsigned>(next_int(0, static_cast<long>(max_t)));
            p.add_term({js, jt}, next_scalar());
        }
        if (p.is_zero()) p.add_term({0, 0}, GaussianRational(1));
        return p;
    }

    BiPoly next_t_poly(unsigned max_t) { return next_poly(0, max_t, 4); }

    /// Random parameter tuple; alpha, beta, rho unconstrained small scalars,
    /// h of t-degree <= 4.
    PhiParams next_params() {
        return PhiParams(next_nonzero_scalar(), next_scalar(), next_scalar(), next_scalar(), next_t_poly(4));
    }

private:
    static std::uint64_t mix(std::uint64_t x) {  // splitmix64 finalizer
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

}  // namespace bkm

#endif
