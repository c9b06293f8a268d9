#pragma once

// Arbitrary-precision integers and exact rational arithmetic.
//
// Rational keeps gcd(|num|, den) = 1 with den > 0; zero is 0/1.
// Integer square roots are computed by Newton iteration on the big
// integer type with a final exactness check, so the perfect-square
// predicates never touch floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace painleve {

using BigInt = boost::multiprecision::cpp_int;

// floor(sqrt(n)) for n >= 0 via Newton iteration, seeded from the bit length.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    if (n < 2) return n;
    BigInt x = BigInt(1) << (unsigned)((boost::multiprecision::msb(n) / 2) + 1);
    for (;;) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    // x = floor(sqrt(n)) exactly; the loop exits with x*x <= n < (x+1)^2.
    return x;
}

// sqrt(k) when k is a perfect square, empty otherwise.
inline std::optional<BigInt> is_perfect_square(const BigInt& k) {
    if (k < 0) return std::nullopt;
    BigInt r = isqrt(k);
    if (r * r == k) return r;
    return std::nullopt;
}

// true iff n^2 + 8n is a perfect square (n >= 1).
inline bool n2_plus_8n_is_square(const BigInt& n) {
    if (n < 1) throw std::domain_error("n2_plus_8n_is_square: n must be >= 1");
    return is_perfect_square(n * (n + 8)).has_value();
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        BigInt l = num_ * o.den_, r = o.num_ * den_;
        return l < r ? std::strong_ordering::less
                     : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // "p/q" with the "/q" omitted for integers.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Parses "p" or "p/q" with optional leading sign.
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(text));
            return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        } catch (const std::runtime_error&) {
            throw std::domain_error("Rational: cannot parse \"" + text + "\"");
        }
    }

    double to_double() const;

private:
    struct unchecked {};
    Rational(unchecked, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;  // > 0
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// Exact square root of a nonnegative rational, when it exists.
inline std::optional<Rational> sqrt_rational(const Rational& r) {
    if (r.is_negative()) return std::nullopt;
    auto p = is_perfect_square(r.num());
    if (!p) return std::nullopt;
    auto q = is_perfect_square(r.den());
    if (!q) return std::nullopt;
    return Rational(*p, *q);
}

// lcm helper for step-denominator bookkeeping.
inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace painleve
