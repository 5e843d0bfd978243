#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "dicekeep/bigint.hpp"
#include "dicekeep/errors.hpp"

namespace dicekeep {

/// Exact fraction of two arbitrary-precision integers.
///
/// Always stored canonically: denominator > 0 and gcd(|num|, den) = 1, so
/// equality is plain structural equality of the two fields.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t n) : num_(n), den_(1) {}       // NOLINT
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        reduce();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // a/b <=> c/d iff ad <=> cb, denominators positive.
        int c = (a.num_ * b.den_).compare(b.num_ * a.den_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Canonical "num/den" form, denominator always spelled out ("0/1", "21/2").
    std::string fraction_str() const { return num_.str() + "/" + den_.str(); }

    /// Decimal approximation with `digits` fractional digits, exact long
    /// division, round half away from zero.
    std::string decimal_str(unsigned digits) const {
        BigInt scale = ipow(BigInt(10), digits);
        BigInt a = boost::multiprecision::abs(num_) * scale;
        BigInt q = a / den_;
        BigInt rem = a % den_;
        if (rem * 2 >= den_)
            ++q;
        BigInt whole = q / scale;
        BigInt frac = q % scale;
        std::string out;
        if (num_.sign() < 0 && !q.is_zero())
            out += '-';
        out += whole.str();
        if (digits > 0) {
            std::string f = frac.str();
            out += '.';
            out.append(digits - f.size(), '0');
            out += f;
        }
        return out;
    }

    /// Inverse of fraction_str(); also accepts a bare integer.
    static Rational parse(std::string_view text) {
        auto is_int = [](std::string_view t) {
            if (!t.empty() && (t.front() == '-' || t.front() == '+'))
                t.remove_prefix(1);
            if (t.empty() || t.size() > 100000)
                return false;
            for (char c : t)
                if (c < '0' || c > '9')
                    return false;
            return true;
        };
        std::string_view num = text, den = "1";
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            num = text.substr(0, slash);
            den = text.substr(slash + 1);
        }
        if (!is_int(num) || !is_int(den))
            throw domain_error("Rational: cannot parse '" + std::string(text) + "'");
        BigInt d{std::string(den)};
        if (d.is_zero())
            throw domain_error("Rational: zero denominator in '" + std::string(text) + "'");
        return Rational(BigInt{std::string(num)}, std::move(d));
    }

    /// Lossy conversion; fine for statistics, never used on the exact paths.
    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

private:
    void reduce() {
        if (den_.is_zero())
            throw domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_;
    BigInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.fraction_str();
}

}  // namespace dicekeep
