#pragma once

/**
 * Exact rational numbers over an arbitrary-precision integer type.
 *
 * Values are kept reduced with a positive denominator, so equality is
 * structural and zero is uniquely 0/1. Nothing here ever touches floating
 * point; decimal output is produced only for denominators 1, 2 and 4, which
 * covers every bound value this library emits.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace cobkit {

using Integer = boost::multiprecision::cpp_int;

// Small signed integers: continued fraction terms, orders of H_1, counts.
using Int = std::int64_t;

namespace detail {

template <class I>
I abs_value(const I& x) {
    return x < 0 ? I(-x) : x;
}

template <class I>
I gcd_abs(I a, I b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        I t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// floor(a / b) for b > 0; built-in division truncates toward zero.
template <class I>
I floor_div(const I& a, const I& b) {
    I q = a / b;
    if ((a % b != 0) && (a < 0)) q -= 1;
    return q;
}

template <class I>
std::string int_str(const I& x) {
    if constexpr (std::integral<I>) {
        return std::to_string(x);
    } else {
        return x.str();
    }
}

}  // namespace detail

template <class I>
class basic_rational {
public:
    using int_type = I;

    basic_rational() : num_(0), den_(1) {}
    basic_rational(const I& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    basic_rational(T n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    basic_rational(I n, I d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const I& num() const { return num_; }
    const I& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    I floor() const { return detail::floor_div(num_, den_); }
    I ceil() const { return -detail::floor_div(I(-num_), den_); }

    basic_rational reciprocal() const {
        if (num_ == 0) throw domain_error("reciprocal of zero");
        return basic_rational(den_, num_);
    }

    basic_rational operator-() const {
        basic_rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend basic_rational operator+(const basic_rational& x, const basic_rational& y) {
        return basic_rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend basic_rational operator-(const basic_rational& x, const basic_rational& y) {
        return basic_rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend basic_rational operator*(const basic_rational& x, const basic_rational& y) {
        return basic_rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend basic_rational operator/(const basic_rational& x, const basic_rational& y) {
        if (y.num_ == 0) throw domain_error("division by zero");
        return basic_rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    basic_rational& operator+=(const basic_rational& y) { return *this = *this + y; }
    basic_rational& operator-=(const basic_rational& y) { return *this = *this - y; }
    basic_rational& operator*=(const basic_rational& y) { return *this = *this * y; }
    basic_rational& operator/=(const basic_rational& y) { return *this = *this / y; }

    friend bool operator==(const basic_rational& x, const basic_rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const basic_rational& x, const basic_rational& y) {
        I lhs = x.num_ * y.den_;
        I rhs = y.num_ * x.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p/q" with q >= 1, always including the denominator.
    std::string to_fraction() const { return detail::int_str(num_) + "/" + detail::int_str(den_); }

    // Decimal form for denominators 1, 2, 4 ("-2.0", "0.5", "1.25");
    // anything else falls back to "p/q".
    std::string to_decimal() const {
        if (den_ != 1 && den_ != 2 && den_ != 4) return to_fraction();
        I scaled = num_ * (100 / den_);  // hundredths, exact
        bool neg = scaled < 0;
        I mag = detail::abs_value(scaled);
        I whole = mag / 100;
        I frac = mag % 100;
        std::string s = neg ? "-" : "";
        s += detail::int_str(whole);
        s += ".";
        if (frac == 0) {
            s += "0";
        } else if (frac % 10 == 0) {
            s += detail::int_str(I(frac / 10));
        } else {
            s += detail::int_str(frac);
        }
        return s;
    }

    // Accepts "p/q", "p" and "-p/q" (whitespace not allowed).
    static basic_rational parse(std::string_view text) {
        auto slash = text.find('/');
        auto to_int = [](std::string_view part) {
            if (part.empty()) throw domain_error("malformed rational");
            std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
            if (i == part.size()) throw domain_error("malformed rational");
            for (std::size_t k = i; k < part.size(); ++k) {
                if (part[k] < '0' || part[k] > '9')
                    throw domain_error("malformed rational: '" + std::string(part) + "'");
            }
            if (part[0] == '+') part.remove_prefix(1);
            if constexpr (std::integral<I>) {
                return static_cast<I>(std::stoll(std::string(part)));
            } else {
                return I(std::string(part));
            }
        };
        if (slash == std::string_view::npos) return basic_rational(to_int(text));
        I d = to_int(text.substr(slash + 1));
        if (d == 0) throw domain_error("rational with zero denominator");
        return basic_rational(to_int(text.substr(0, slash)), d);
    }

private:
    void normalize() {
        if (den_ == 0) throw domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        I g = detail::gcd_abs(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    I num_;
    I den_;
};

template <class I>
std::ostream& operator<<(std::ostream& os, const basic_rational<I>& r) {
    return os << r.to_fraction();
}

using Rational = basic_rational<Integer>;

inline Rational make_rational(Int num, Int den) { return Rational(Integer(num), Integer(den)); }

inline Int to_int(const Integer& x) {
    if (x > Integer(INT64_MAX) || x < Integer(INT64_MIN)) throw resource_error("integer exceeds 64-bit range");
    return x.convert_to<Int>();
}

}  // namespace cobkit
