#ifndef BKM_PARSE_HPP
#define BKM_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "bkm/algebra.hpp"
#include "bkm/bipoly.hpp"
#include "bkm/errors.hpp"
#include "bkm/phi.hpp"

namespace bkm {
namespace detail {

// Recursive descent with precedence climbing over the grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nonneg-int]
//   atom   := 's' | 't' | 'i' | number
//   number := digits ['/' digits]
// No parentheses and no implicit multiplication. Errors carry byte offsets.
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    BiPoly parse_expr() {
        skip_ws();
        bool negate = accept('-');
        skip_ws();
        BiPoly acc = parse_term();
        if (negate) acc = -acc;
        skip_ws();
        while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            char op = text_[pos_++];
            skip_ws();
            BiPoly t = parse_term();
            acc = (op == '+') ? acc + t : acc - t;
            skip_ws();
        }
        return acc;
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "end of input, '+', '-', '*', or '^'");
    }

    std::size_t position() const { return pos_; }

private:
    BiPoly parse_term() {
        BiPoly acc = parse_factor();
        skip_ws();
        while (accept('*')) {
            skip_ws();
            acc = acc * parse_factor();
            skip_ws();
        }
        return acc;
    }

    BiPoly parse_factor() {
        BiPoly base = parse_atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            unsigned long e = parse_uint("nonnegative integer exponent");
            BiPoly acc(1);
            for (unsigned long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    BiPoly parse_atom() {
        if (pos_ >= text_.size()) throw ParseError(pos_, "atom ('s', 't', 'i', or number)");
        char c = text_[pos_];
        if (c == 's') {
            ++pos_;
            return BiPoly::var_s();
        }
        if (c == 't') {
            ++pos_;
            return BiPoly::var_t();
        }
        if (c == 'i') {
            ++pos_;
            return BiPoly(GaussianRational::imaginary_unit());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(parse_digits());
            if (accept('/')) {
                std::size_t den_at = pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw ParseError(den_at, "denominator digits");
                mpz_class den(parse_digits());
                if (den == 0) throw ParseError(den_at, "nonzero denominator");
                mpq_class q(num, den);
                q.canonicalize();
                return BiPoly(GaussianRational(q));
            }
            return BiPoly(GaussianRational(mpq_class(num)));
        }
        throw ParseError(pos_, "atom ('s', 't', 'i', or number)");
    }

    std::string parse_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned long parse_uint(const char* what) {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(pos_, what);
        return std::stoul(parse_digits());
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline long long parse_signed_int(std::string_view text, std::size_t& pos, std::size_t base_offset) {
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
        neg = true;
        ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(base_offset + pos, "integer");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 1000000) throw ParseError(base_offset + pos, "index with |m| <= 10^6");
        ++pos;
    }
    return neg ? -v : v;
}

}  // namespace detail

inline BiPoly parse_poly(std::string_view text) {
    detail::PolyParser p(text);
    BiPoly r = p.parse_expr();
    p.expect_end();
    return r;
}

/// Constant expression in the a+b*i rational syntax.
inline GaussianRational parse_scalar(std::string_view text, std::size_t base_offset = 0) {
    detail::PolyParser p(text);
    BiPoly r;
    try {
        r = p.parse_expr();
        p.expect_end();
    } catch (const ParseError& e) {
        throw ParseError(base_offset + e.offset, "scalar expression");
    }
    if (r.deg_s() > 0 || r.deg_t() > 0) throw ParseError(base_offset, "constant scalar (no s or t)");
    return r.coeff(0, 0);
}

/// One generator token F[m], F in {L,M,S,I}.
inline Generator parse_generator(std::string_view text, std::size_t& pos, std::size_t base_offset = 0) {
    if (pos >= text.size()) throw ParseError(base_offset + pos, "generator family letter (L, M, S, or I)");
    auto fam = family_from_letter(text[pos]);
    if (!fam) throw ParseError(base_offset + pos, "generator family letter (L, M, S, or I)");
    ++pos;
    if (pos >= text.size() || text[pos] != '[') throw ParseError(base_offset + pos, "'['");
    ++pos;
    long long idx = detail::parse_signed_int(text, pos, base_offset);
    if (pos >= text.size() || text[pos] != ']') throw ParseError(base_offset + pos, "']'");
    ++pos;
    return {*fam, idx};
}

/// Whitespace-separated generator tokens, in textual order.
inline std::vector<Generator> parse_word(std::string_view text) {
    std::vector<Generator> word;
    std::size_t pos = 0;
    for (;;) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        word.push_back(parse_generator(text, pos));
    }
    return word;
}

/// Linear combination of generators, e.g. "2*L[0] + M[1] - i*S[-2]".
inline AlgebraElement parse_algebra_element(std::string_view text) {
    AlgebraElement elem;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size()) return elem;
    if (text.substr(pos) == "0") return elem;
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        GaussianRational sign(1);
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') sign = GaussianRational(-1);
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError(pos, "'+' or '-'");
        } else if (text[pos] == '-') {
            sign = GaussianRational(-1);
            ++pos;
            skip_ws();
        }
        // optional scalar prefix "c*" before the generator token
        GaussianRational coeff(1);
        std::size_t star = text.find('*', pos);
        std::size_t gen_at = pos;
        if (star != std::string_view::npos) {
            // a '*' before the next generator letter means a scalar prefix
            std::size_t probe = pos;
            while (probe < text.size() && !family_from_letter(text[probe]) && text[probe] != '+' &&
                   (text[probe] != '-' || probe == pos))
                ++probe;
            if (star < probe) {
                coeff = parse_scalar(text.substr(pos, star - pos), pos);
                gen_at = star + 1;
            }
        }
        pos = gen_at;
        skip_ws();
        Generator g = parse_generator(text, pos);
        elem.add_term(g, sign * coeff);
        skip_ws();
        first = false;
    }
    return elem;
}

/// phi(lambda=<scalar>, alpha=<scalar>, beta=<scalar>, rho=<scalar>, h=<t-only poly>)
inline PhiParams parse_module_spec(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](std::string_view lit) {
        skip_ws();
        if (text.substr(pos, lit.size()) != lit) throw ParseError(pos, "'" + std::string(lit) + "'");
        pos += lit.size();
    };
    auto value_until = [&](char stop) {
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size() && (depth > 0 || text[pos] != stop)) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')') --depth;
            ++pos;
        }
        if (pos >= text.size()) throw ParseError(pos, std::string("'") + stop + "'");
        return std::pair<std::string_view, std::size_t>{text.substr(start, pos - start), start};
    };
    expect("phi");
    expect("(");
    expect("lambda");
    expect("=");
    auto [lam_text, lam_at] = value_until(',');
    expect(",");
    expect("alpha");
    expect("=");
    auto [alpha_text, alpha_at] = value_until(',');
    expect(",");
    expect("beta");
    expect("=");
    auto [beta_text, beta_at] = value_until(',');
    expect(",");
    expect("rho");
    expect("=");
    auto [rho_text, rho_at] = value_until(',');
    expect(",");
    expect("h");
    expect("=");
    auto [h_text, h_at] = value_until(')');
    expect(")");
    skip_ws();
    if (pos != text.size()) throw ParseError(pos, "end of module spec");

    GaussianRational lambda = parse_scalar(lam_text, lam_at);
    GaussianRational alpha = parse_scalar(alpha_text, alpha_at);
    GaussianRational beta = parse_scalar(beta_text, beta_at);
    GaussianRational rho = parse_scalar(rho_text, rho_at);
    BiPoly h;
    try {
        h = parse_poly(h_text);
    } catch (const ParseError& e) {
        throw ParseError(h_at + e.offset, "t-only polynomial");
    }
    return PhiParams(lambda, alpha, beta, rho, h);  // throws LambdaZero / HNotUnivariate
}

}  // namespace bkm

#endif
