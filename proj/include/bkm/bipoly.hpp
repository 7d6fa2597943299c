#ifndef BKM_BIPOLY_HPP
#define BKM_BIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bkm/errors.hpp"
#include "bkm/scalar.hpp"

namespace bkm {

/// Exponent pair of a monomial s^j t^k.
struct Monomial {
    unsigned s = 0;
    unsigned t = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order, s before t: total degree first, then s-degree.
struct GrLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.s + a.t, db = b.s + b.t;
        if (da != db) return da < db;
        return a.s < b.s;
    }
};

/// Sparse element of C[s,t] over Q(i). Canonical form: no zero coefficients,
/// terms ordered graded-lex.
class BiPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational, GrLexLess>;

    BiPoly() = default;
    BiPoly(const GaussianRational& c) { add_term({0, 0}, c); }
    BiPoly(long n) : BiPoly(GaussianRational(n)) {}

    static BiPoly monomial(unsigned j, unsigned k, GaussianRational c = GaussianRational(1)) {
        BiPoly p;
        p.add_term({j, k}, c);
        return p;
    }
    static BiPoly var_s() { return monomial(1, 0); }
    static BiPoly var_t() { return monomial(0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Monomial m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GaussianRational coeff(unsigned j, unsigned k) const {
        auto it = terms_.find({j, k});
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    int deg_s() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.s));
        return d;  // -1 for the zero polynomial
    }
    int deg_t() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.t));
        return d;
    }
    bool is_t_only() const { return deg_s() <= 0; }
    bool is_s_only() const { return deg_t() <= 0; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term({ma.s + mb.s, ma.t + mb.t}, ca * cb);
        return r;
    }
    friend BiPoly operator*(const GaussianRational& c, const BiPoly& p) {
        BiPoly r;
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }

    /// Drop every term with t-degree >= k: reduction mod t^k C[s,t].
    BiPoly drop_t_at_least(unsigned k) const {
        BiPoly r;
        for (const auto& [m, c] : terms_)
            if (m.t < k) r.terms_.emplace(m, c);
        return r;
    }

    /// Substitute s -> s + c (exact binomial expansion).
    BiPoly substitute_s_plus(const GaussianRational& c) const;

    /// Formal partial derivative in t.
    BiPoly d_dt() const {
        BiPoly r;
        for (const auto& [m, c] : terms_)
            if (m.t > 0) r.terms_.emplace(Monomial{m.s, m.t - 1}, static_cast<long>(m.t) * c);
        return r;
    }

    /// Exact value p(a) for a t-only polynomial, by Horner evaluation.
    GaussianRational eval_t(const GaussianRational& a) const {
        if (!is_t_only()) throw NotUnivariateT();
        int d = deg_t();
        GaussianRational acc;
        for (int k = d; k >= 0; --k) acc = acc * a + coeff(0, static_cast<unsigned>(k));
        return acc;
    }

    /// Exact quotient (p(t) - p(a)) / (t - a) for a t-only polynomial, by
    /// synthetic division. Always a polynomial of t-degree deg(p) - 1.
    BiPoly diff_quotient_t(const GaussianRational& a) const {
        if (!is_t_only()) throw NotUnivariateT();
        int d = deg_t();
        BiPoly q;
        GaussianRational carry;  // running quotient coefficient
        for (int k = d; k >= 1; --k) {
            carry = carry * a + coeff(0, static_cast<unsigned>(k));
            q.add_term({0, static_cast<unsigned>(k - 1)}, carry);
        }
        return q;
    }

    /// Canonical pretty form: summands in graded-lex descending order, a
    /// mixed complex coefficient split into real and imaginary summands so
    /// the output stays inside the expression grammar. "0" for zero.
    std::string str() const;

private:
    TermMap terms_;
};

inline BiPoly operator*(long n, const BiPoly& p) { return GaussianRational(n) * p; }

namespace detail {

// Pascal-triangle cache for binomial coefficients; grown on demand.
inline const mpz_class& binomial(unsigned n, unsigned k) {
    thread_local std::vector<std::vector<mpz_class>> rows{{1}};
    while (rows.size() <= n) {
        const auto& prev = rows.back();
        std::vector<mpz_class> row(prev.size() + 1, 1);
        for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

}  // namespace detail

inline BiPoly BiPoly::substitute_s_plus(const GaussianRational& c) const {
    if (c.is_zero()) return *this;
    BiPoly r;
    for (const auto& [m, coef] : terms_) {
        // (s + c)^j = sum_r C(j,r) c^(j-r) s^r
        GaussianRational cp(1);
        for (unsigned rdeg = m.s; rdeg + 1 > 0; --rdeg) {
            r.add_term({rdeg, m.t}, GaussianRational(mpq_class(detail::binomial(m.s, rdeg))) * cp * coef);
            cp *= c;
            if (rdeg == 0) break;
        }
    }
    return r;
}

/// f(s - m, t): the s-shift appearing in every module action.
inline BiPoly shift_s(const BiPoly& f, long long m) {
    return f.substitute_s_plus(GaussianRational(mpq_class(static_cast<long>(-m))));
}

inline std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    auto emit = [&out](const mpq_class& mag, bool negative, unsigned j, unsigned k, bool imag) {
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::vector<std::string> pieces;
        bool bare = (j == 0 && k == 0 && !imag);
        if (mag != 1 || bare) pieces.push_back(mag.get_str());
        if (j > 0) pieces.push_back(j == 1 ? "s" : "s^" + std::to_string(j));
        if (k > 0) pieces.push_back(k == 1 ? "t" : "t^" + std::to_string(k));
        if (imag) pieces.push_back("i");
        for (std::size_t p = 0; p < pieces.size(); ++p) {
            if (p) out += "*";
            out += pieces[p];
        }
    };
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (c.re() != 0) emit(abs(c.re()), c.re() < 0, m.s, m.t, false);
        if (c.im() != 0) emit(abs(c.im()), c.im() < 0, m.s, m.t, true);
    }
    return out;
}

/// Truncation frame for orbit analysis: the monomial box s^j t^k, j <= max_s,
/// k <= max_t.
struct DegreeBox {
    unsigned max_s = 0;
    unsigned max_t = 0;

    bool fits(const BiPoly& p) const {
        for (const auto& [m, c] : p.terms())
            if (m.s > max_s || m.t > max_t) return false;
        return true;
    }
    std::size_t dimension() const { return static_cast<std::size_t>(max_s + 1) * (max_t + 1); }
};

}  // namespace bkm

#endif
