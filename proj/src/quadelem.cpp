#include <painleve/quadelem.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace painleve {

namespace {
using Quad = boost::multiprecision::cpp_bin_float_quad;
}

QuadElem::QuadElem(Rational a, Rational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0) throw std::domain_error("QuadElem: negative radicand");
    if (b_.is_zero()) return;
    if (auto r = is_perfect_square(d_)) {
        a_ += b_ * Rational(*r);
        b_ = Rational(0);
    }
}

const Rational& QuadElem::as_rational() const {
    if (!b_.is_zero()) throw std::domain_error("QuadElem: value is irrational: " + str());
    return a_;
}

int QuadElem::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;  // d > 0 here, else b was folded away
    if (sa == sb) return sa;
    // Opposite signs: compare |a| against |b| sqrt(d) via squares.
    Rational a2 = a_ * a_;
    Rational b2d = b_ * b_ * Rational(d_);
    if (a2 == b2d) return 0;
    return a2 > b2d ? sa : sb;
}

BigInt QuadElem::join_radicand(const QuadElem& x, const QuadElem& y) {
    if (x.b_.is_zero()) return y.d_;
    if (y.b_.is_zero()) return x.d_;
    if (x.d_ != y.d_)
        throw std::domain_error("QuadElem: mismatched radicands " + x.d_.str() + " and " +
                                y.d_.str());
    return x.d_;
}

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, d_); }

QuadElem QuadElem::operator+(const QuadElem& o) const {
    return QuadElem(a_ + o.a_, b_ + o.b_, join_radicand(*this, o));
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    return QuadElem(a_ - o.a_, b_ - o.b_, join_radicand(*this, o));
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    BigInt d = join_radicand(*this, o);
    return QuadElem(a_ * o.a_ + b_ * o.b_ * Rational(d), a_ * o.b_ + b_ * o.a_, d);
}

QuadElem QuadElem::inverse() const {
    Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    if (norm.is_zero()) throw std::domain_error("QuadElem: division by zero");
    return QuadElem(a_ / norm, -b_ / norm, d_);
}

QuadElem QuadElem::operator/(const QuadElem& o) const {
    if (o.is_zero()) throw std::domain_error("QuadElem: division by zero");
    if (o.b_.is_zero()) return QuadElem(a_ / o.a_, b_ / o.a_, d_);
    return *this * o.inverse();
}

bool QuadElem::operator==(const QuadElem& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    return b_.is_zero() || d_ == o.d_;
}

std::string QuadElem::str() const {
    if (b_.is_zero()) return a_.str();
    std::string rad = (b_ == Rational(1) ? "" : (b_ == Rational(-1) ? "-" : b_.str() + "*")) +
                      "sqrt(" + d_.str() + ")";
    if (a_.is_zero()) return rad;
    if (b_.is_negative()) {
        std::string mag =
            ((-b_) == Rational(1) ? "" : (-b_).str() + "*") + "sqrt(" + d_.str() + ")";
        return a_.str() + " - " + mag;
    }
    return a_.str() + " + " + rad;
}

double QuadElem::to_double() const {
    Quad v = Quad(a_.num()) / Quad(a_.den());
    if (!b_.is_zero()) v += Quad(b_.num()) / Quad(b_.den()) * sqrt(Quad(d_));
    return v.convert_to<double>();
}

double Rational::to_double() const {
    return (Quad(num_) / Quad(den_)).convert_to<double>();
}

std::optional<QuadElem> sqrt_in_field(const QuadElem& x) {
    if (x.sign() < 0) return std::nullopt;
    const Rational& a = x.a_;
    const Rational& b = x.b_;
    const BigInt& d = x.d_;
    auto made = [&](const Rational& u, const Rational& v) -> std::optional<QuadElem> {
        QuadElem y(u, v, d);
        if (y.sign() < 0) y = -y;
        return y;
    };
    if (b.is_zero()) {
        // y = u: u^2 = a, or y = v*sqrt(d): d v^2 = a (only in a genuine extension).
        if (auto u = sqrt_rational(a)) return made(*u, Rational(0));
        if (d > 1 && !is_perfect_square(d)) {
            if (auto v = sqrt_rational(a / Rational(d))) return made(Rational(0), *v);
        }
        return std::nullopt;
    }
    // y = u + v sqrt(d) with u^2 + d v^2 = a and 2uv = b; eliminating v gives
    // u^2 = (a +- s)/2 where s = sqrt(a^2 - d b^2) must be rational.
    auto s = sqrt_rational(a * a - b * b * Rational(d));
    if (!s) return std::nullopt;
    for (const Rational& cand : {(a + *s) / Rational(2), (a - *s) / Rational(2)}) {
        if (auto u = sqrt_rational(cand)) {
            if (u->is_zero()) continue;
            Rational v = b / (Rational(2) * *u);
            QuadElem y(*u, v, d);
            if (y * y == x) return made(*u, v);
        }
    }
    return std::nullopt;
}

}  // namespace painleve
