#pragma once

// Exact rational scalar used throughout the library. Backed by
// boost::multiprecision so numerators and denominators never overflow;
// every value is kept in lowest terms with a positive denominator, so
// structural equality coincides with mathematical equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liefol {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) : v_(normalized(BigInt(num), BigInt(den))) {}
    Rational(BigInt num, BigInt den) : v_(normalized(std::move(num), std::move(den))) {}
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    // "p" when the denominator is 1, otherwise "p/q" with q > 0 and gcd(|p|,q) = 1.
    std::string str() const
    {
        std::string s = numerator().str();
        if (denominator() != 1) {
            s += '/';
            s += denominator().str();
        }
        return s;
    }

    // Accepts exactly the strings produced by str(), modulo normalization:
    // an optional leading '-', a decimal integer, optionally "/q" with q a
    // positive decimal integer. Throws std::invalid_argument otherwise.
    static Rational parse(std::string_view s)
    {
        auto fail = [&] { throw std::invalid_argument("bad rational string: '" + std::string(s) + "'"); };
        std::string_view num = s, den = "1";
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            num = s.substr(0, slash);
            den = s.substr(slash + 1);
        }
        auto digits_only = [](std::string_view t) {
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view num_digits = num;
        if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
        if (!digits_only(num_digits) || !digits_only(den)) fail();
        BigInt q{std::string(den)};
        if (q.is_zero()) fail();
        return Rational(BigInt{std::string(num)}, std::move(q));
    }

    Rational operator-() const { return Rational(boost::multiprecision::cpp_rational(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static boost::multiprecision::cpp_rational normalized(BigInt num, BigInt den)
    {
        if (den.is_zero()) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        // cpp_rational reduces to lowest terms itself once the denominator is positive.
        return boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    boost::multiprecision::cpp_rational v_;
};

inline Rational half(const Rational& r) { return r * Rational(1, 2); }

} // namespace liefol
