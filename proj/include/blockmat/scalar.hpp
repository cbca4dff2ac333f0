#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "blockmat/errors.hpp"

namespace blockmat {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational. Always canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Gaussian rational a + b*i. All arithmetic is exact; equality is exact.
/// Values are immutable once constructed and safe to share across threads.
class Scalar {
public:
    Scalar() = default;
    Scalar(int n) : re_(n) {}
    Scalar(long long n) : re_(n) {}
    Scalar(Integer n) : re_(std::move(n)) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// The imaginary unit.
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& real() const noexcept { return re_; }
    const Rational& imag() const noexcept { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    /// Complex conjugate: real part unchanged, imaginary part negated.
    Scalar conj() const { return Scalar(re_, -im_); }

    /// Multiplicative inverse. Throws DivisionByZeroError on zero.
    Scalar inverse() const {
        Rational n = re_ * re_ + im_ * im_;
        if (n == 0) throw DivisionByZeroError("scalar inverse of zero");
        return Scalar(re_ / n, -im_ / n);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_,
                      a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        return a * b.inverse();
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text form: `p` or `p/q` for real values, with the imaginary
    /// part appended as `+r/si` or `-r/si` otherwise (q and s omitted when 1).
    /// Examples: `5`, `-3/7`, `1+2i`, `1/2-3/4i`, `0+1i`.
    std::string str() const {
        std::string out = rational_str(re_);
        if (im_ != 0) {
            out += (im_ > 0) ? '+' : '-';
            out += rational_str(boost::multiprecision::abs(im_));
            out += 'i';
        }
        return out;
    }

    /// Parses the canonical text form above. Whitespace is not allowed.
    /// Throws ParseError on anything outside the grammar.
    static Scalar parse(std::string_view text) {
        std::size_t pos = 0;
        Rational re = parse_signed_rational(text, pos, /*sign_required=*/false);
        if (pos == text.size()) return Scalar(std::move(re));
        Rational im = parse_signed_rational(text, pos, /*sign_required=*/true);
        if (pos >= text.size() || text[pos] != 'i')
            throw ParseError("scalar literal '" + std::string(text) +
                             "': expected 'i' after imaginary part");
        ++pos;
        if (pos != text.size())
            throw ParseError("scalar literal '" + std::string(text) +
                             "': trailing characters");
        return Scalar(std::move(re), std::move(im));
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
        return os << s.str();
    }

private:
    Rational re_{};
    Rational im_{};

    static std::string rational_str(const Rational& r) {
        std::string out = numerator(r).str();
        if (denominator(r) != 1) {
            out += '/';
            out += denominator(r).str();
        }
        return out;
    }

    static Integer parse_digits(std::string_view text, std::size_t& pos) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start)
            throw ParseError("scalar literal '" + std::string(text) +
                             "': expected digits at position " + std::to_string(start));
        return Integer(std::string(text.substr(start, pos - start)));
    }

    static Rational parse_signed_rational(std::string_view text, std::size_t& pos,
                                          bool sign_required) {
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        } else if (sign_required) {
            throw ParseError("scalar literal '" + std::string(text) +
                             "': expected '+' or '-' before imaginary part");
        }
        Integer num = parse_digits(text, pos);
        Integer den = 1;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            den = parse_digits(text, pos);
            if (den == 0)
                throw ParseError("scalar literal '" + std::string(text) +
                                 "': zero denominator");
        }
        if (negative) num = -num;
        return Rational(num, den);
    }
};

} // namespace blockmat
