#ifndef BKM_SCALAR_HPP
#define BKM_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "bkm/errors.hpp"

namespace bkm {

/// Exact element of Q(i): the coefficient field. Both components are
/// arbitrary-precision rationals kept in canonical reduced form.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational imaginary_unit() { return GaussianRational(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational operator-() const { return raw(-re_, -im_); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return raw(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return raw(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        if (a.im_ == 0) return raw(a.re_ * b.re_, a.re_ * b.im_);
        if (b.im_ == 0) return raw(a.re_ * b.re_, a.im_ * b.re_);
        return raw(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws on zero.
    GaussianRational inverse() const {
        if (is_zero()) throw DomainError("division by zero in Q(i)");
        mpq_class n = re_ * re_ + im_ * im_;
        return raw(re_ / n, -im_ / n);
    }

    /// Integer power, with field inversion for negative exponents.
    GaussianRational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        GaussianRational acc(1);
        GaussianRational base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Canonical textual form, e.g. "3", "-1/2", "i", "2-1/3*i".
    std::string str() const {
        auto rat = [](const mpq_class& q) { return q.get_str(); };
        if (im_ == 0) return rat(re_);
        std::string imag;
        mpq_class ai = abs(im_);
        imag = (ai == 1) ? "i" : rat(ai) + "*i";
        if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
        return rat(re_) + (im_ < 0 ? "-" : "+") + imag;
    }

    // Total order (component-wise) for use as a map key; not the field order.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

private:
    // mpq_class arithmetic already yields canonical results; skip the
    // constructor's canonicalize pass on internally computed values.
    static GaussianRational raw(mpq_class re, mpq_class im) {
        GaussianRational r;
        r.re_ = std::move(re);
        r.im_ = std::move(im);
        return r;
    }

    mpq_class re_, im_;
};

inline GaussianRational operator*(long n, const GaussianRational& x) { return GaussianRational(n) * x; }

}  // namespace bkm

#endif
