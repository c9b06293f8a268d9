#pragma once

// Exact arithmetic in the real quadratic extension Q(sqrt(d)).
//
// A QuadElem is a + b*sqrt(d) with rational a, b and a nonnegative integer
// radicand d. The radicand is stored exactly as given (not reduced to a
// squarefree core); when d is a perfect square the root is folded into the
// rational part at construction, so rad_part() == 0 characterizes rational
// values. Elements of different radicands never mix in arithmetic, except
// that a rational value (rad_part 0) embeds into any field.

#include <painleve/rational.hpp>

#include <optional>
#include <ostream>
#include <string>

namespace painleve {

class QuadElem {
public:
    QuadElem() : a_(0), b_(0), d_(0) {}
    QuadElem(Rational rational_value)  // NOLINT: implicit by design
        : a_(std::move(rational_value)), b_(0), d_(0) {}
    QuadElem(long long v) : a_(v), b_(0), d_(0) {}  // NOLINT
    QuadElem(Rational a, Rational b, BigInt d);

    const Rational& rat_part() const { return a_; }
    const Rational& rad_part() const { return b_; }
    const BigInt& radicand() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    // Requires a rational value; throws otherwise.
    const Rational& as_rational() const;

    // Exact sign of the real value: -1, 0, or +1.
    int sign() const;
    bool is_negative() const { return sign() < 0; }

    QuadElem operator-() const;
    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator/(const QuadElem& o) const;
    QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
    QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }
    QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }
    QuadElem& operator/=(const QuadElem& o) { return *this = *this / o; }

    // (a - b sqrt(d)) / (a^2 - d b^2); throws on zero.
    QuadElem inverse() const;

    bool operator==(const QuadElem& o) const;
    bool operator!=(const QuadElem& o) const { return !(*this == o); }

    // Exact string form "p/q", "r/s*sqrt(d)", or "p/q + r/s*sqrt(d)".
    std::string str() const;

    double to_double() const;

    // Value sqrt(d) in the field of radicand d.
    static QuadElem root_of(const BigInt& d) { return QuadElem(Rational(0), Rational(1), d); }

private:
    friend std::optional<QuadElem> sqrt_in_field(const QuadElem& x);
    // Common radicand of two operands, allowing rationals to embed anywhere.
    static BigInt join_radicand(const QuadElem& x, const QuadElem& y);

    Rational a_;
    Rational b_;
    BigInt d_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadElem& q) { return os << q.str(); }

// y in Q(sqrt(d)) with y^2 = x, when such an element exists. The returned
// root is the one with nonnegative value.
std::optional<QuadElem> sqrt_in_field(const QuadElem& x);

}  // namespace painleve
