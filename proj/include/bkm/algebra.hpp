#ifndef BKM_ALGEBRA_HPP
#define BKM_ALGEBRA_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "bkm/errors.hpp"
#include "bkm/scalar.hpp"

namespace bkm {

enum class Family : int { L = 0, M = 1, S = 2, I = 3 };

inline char family_letter(Family f) { return "LMSI"[static_cast<int>(f)]; }

inline std::optional<Family> family_from_letter(char c) {
    switch (c) {
        case 'L': return Family::L;
        case 'M': return Family::M;
        case 'S': return Family::S;
        case 'I': return Family::I;
        default: return std::nullopt;
    }
}

/// Basis symbol X_m, X in {L, M, S, I}, m an integer.
struct Generator {
    Family family;
    long long index;

    friend auto operator<=>(const Generator&, const Generator&) = default;

    std::string str() const { return std::string(1, family_letter(family)) + "[" + std::to_string(index) + "]"; }
};

/// Finite linear combination of basis symbols over Q(i).
class AlgebraElement {
public:
    using TermMap = std::map<Generator, GaussianRational>;

    AlgebraElement() = default;
    AlgebraElement(Generator g) { add_term(g, GaussianRational(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Generator g, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

    AlgebraElement operator-() const {
        AlgebraElement r;
        for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
        return r;
    }
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement r = a;
        for (const auto& [g, c] : b.terms_) r.add_term(g, c);
        return r;
    }
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement r = a;
        for (const auto& [g, c] : b.terms_) r.add_term(g, -c);
        return r;
    }
    friend AlgebraElement operator*(const GaussianRational& c, const AlgebraElement& x) {
        AlgebraElement r;
        if (c.is_zero()) return r;
        for (const auto& [g, xc] : x.terms_) r.terms_.emplace(g, c * xc);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [g, c] : terms_) {
            GaussianRational one(1);
            bool neg = c.is_real() && c.re() < 0;
            GaussianRational mag = neg ? -c : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (!(mag == one)) out += mag.str() + "*";
            out += g.str();
        }
        return out;
    }

private:
    TermMap terms_;
};

namespace detail {

// Bracket table in the stored orientation (L,L),(L,M),(L,S),(L,I),(M,I);
// reversed pairs are obtained by antisymmetry.
inline AlgebraElement bracket_oriented(Generator x, Generator y) {
    const long long m = x.index, n = y.index;
    AlgebraElement r;
    auto single = [&](Family f, const GaussianRational& c) { r.add_term({f, m + n}, c); };
    if (x.family == Family::L && y.family == Family::L) single(Family::L, GaussianRational(static_cast<long>(n - m)));
    else if (x.family == Family::L && y.family == Family::M) single(Family::M, GaussianRational(static_cast<long>(n - m)));
    else if (x.family == Family::L && y.family == Family::S) single(Family::S, GaussianRational(static_cast<long>(n)));
    else if (x.family == Family::L && y.family == Family::I) single(Family::I, GaussianRational(static_cast<long>(n)));
    else if (x.family == Family::M && y.family == Family::I) single(Family::S, GaussianRational(static_cast<long>(-n)));
    // all other basis brackets vanish
    return r;
}

}  // namespace detail

inline AlgebraElement bracket(Generator x, Generator y) {
    if (static_cast<int>(x.family) <= static_cast<int>(y.family)) return detail::bracket_oriented(x, y);
    return -detail::bracket_oriented(y, x);
}

/// Bilinear extension of the basis bracket table.
inline AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r;
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms()) r = r + (cx * cy) * bracket(gx, gy);
    return r;
}

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; zero for every triple iff the table is
/// a Lie algebra.
inline AlgebraElement jacobi_defect(Generator x, Generator y, Generator z) {
    AlgebraElement ex(x), ey(y), ez(z);
    return bracket(ex, bracket(ey, ez)) + bracket(ey, bracket(ez, ex)) + bracket(ez, bracket(ex, ey));
}

enum class Subalgebra { witt, hv_i, hv_s, bms, ideal_si };

inline Subalgebra subalgebra_from_name(const std::string& name) {
    if (name == "witt") return Subalgebra::witt;
    if (name == "hv_i") return Subalgebra::hv_i;
    if (name == "hv_s") return Subalgebra::hv_s;
    if (name == "bms") return Subalgebra::bms;
    if (name == "ideal_si") return Subalgebra::ideal_si;
    throw UnknownSubalgebra(name);
}

inline bool family_in_subalgebra(Family f, Subalgebra sub) {
    switch (sub) {
        case Subalgebra::witt: return f == Family::L;
        case Subalgebra::hv_i: return f == Family::L || f == Family::I;
        case Subalgebra::hv_s: return f == Family::L || f == Family::S;
        case Subalgebra::bms: return f == Family::L || f == Family::M;
        case Subalgebra::ideal_si: return f == Family::I || f == Family::S;
    }
    return false;
}

inline bool in_subalgebra(const AlgebraElement& x, Subalgebra sub) {
    for (const auto& [g, c] : x.terms())
        if (!family_in_subalgebra(g.family, sub)) return false;
    return true;
}

}  // namespace bkm

#endif
