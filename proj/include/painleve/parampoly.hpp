#pragma once

// Polynomials over Q(sqrt(d)) in named parameter symbols.
//
// Series coefficients are carried as exact polynomials in the free
// parameters registered during an analysis (the movable-singularity family
// parameters and any free leading coefficients). Monomials use lex order
// on symbol ids; exact polynomial division supports fraction-free
// elimination over this ring.

#include <painleve/quadelem.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace painleve {

using SymbolId = int;

class SymbolTable {
public:
    SymbolId add(const std::string& name) {
        names_.push_back(name);
        return static_cast<SymbolId>(names_.size()) - 1;
    }
    const std::string& name(SymbolId id) const { return names_.at(id); }
    size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
};

// Sparse exponent vector, kept sorted by symbol id.
class Monomial {
public:
    Monomial() = default;
    static Monomial symbol(SymbolId id, unsigned exp = 1) {
        Monomial m;
        if (exp > 0) m.exps_.emplace_back(id, exp);
        return m;
    }

    bool is_unit() const { return exps_.empty(); }
    unsigned total_degree() const;
    unsigned degree_in(SymbolId id) const;
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide_by(const Monomial& o) const;  // requires o.divides(*this)

    // Lex order with smaller symbol ids dominating; compatible with
    // multiplication, which exact division relies on.
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    const std::vector<std::pair<SymbolId, unsigned>>& exps() const { return exps_; }
    std::string str(const SymbolTable& symbols) const;

private:
    std::vector<std::pair<SymbolId, unsigned>> exps_;
};

class Poly {
public:
    Poly() = default;
    Poly(QuadElem c) {  // NOLINT: implicit by design
        if (!c.is_zero()) terms_.emplace(Monomial(), std::move(c));
    }
    Poly(Rational r) : Poly(QuadElem(std::move(r))) {}  // NOLINT
    Poly(long long v) : Poly(QuadElem(v)) {}            // NOLINT
    static Poly symbol(SymbolId id) {
        Poly p;
        p.terms_.emplace(Monomial::symbol(id), QuadElem(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero if absent); constant() additionally requires the
    // whole polynomial to be constant.
    QuadElem constant() const;
    unsigned total_degree() const;
    unsigned degree_in(SymbolId id) const;
    bool depends_on(SymbolId id) const { return degree_in(id) > 0; }
    std::vector<SymbolId> symbols_used() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const QuadElem& c) const;
    Poly divided(const QuadElem& c) const { return scaled(c.inverse()); }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // Full substitution of every symbol appearing in the polynomial.
    QuadElem evaluate(const std::map<SymbolId, QuadElem>& values) const;
    // Partial substitution; unassigned symbols stay symbolic.
    Poly substitute(const std::map<SymbolId, QuadElem>& values) const;

    // Exact division; throws std::domain_error when o does not divide *this.
    Poly exact_divide(const Poly& o) const;

    // Coefficient of o's leading monomial pattern; helpers for elimination.
    std::pair<Monomial, QuadElem> leading_term() const;

    // Views *this as univariate in `id`: coefficient polynomials by degree.
    std::vector<Poly> coefficients_in(SymbolId id) const;

    std::string str(const SymbolTable& symbols) const;
    const std::map<Monomial, QuadElem>& terms() const { return terms_; }

private:
    void prune();
    std::map<Monomial, QuadElem> terms_;
};

}  // namespace painleve
