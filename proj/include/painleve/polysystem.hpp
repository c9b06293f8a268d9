#pragma once

// Autonomous polynomial ODE systems with exact coefficients, including the
// built-in steady and expanding rotationally-symmetric soliton systems.

#include <painleve/matrix.hpp>
#include <painleve/quadelem.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace painleve {

// One monomial of a right-hand side: coeff * prod_v var_v^exps[v].
struct SysTerm {
    QuadElem coeff;
    std::vector<unsigned> exps;  // length = system dimension
    unsigned total_degree() const {
        unsigned d = 0;
        for (unsigned e : exps) d += e;
        return d;
    }
};

// A polynomial right-hand side, canonicalized: graded-lex descending term
// order, no duplicate exponent vectors, no zero coefficients.
class SysPoly {
public:
    SysPoly() = default;
    explicit SysPoly(std::vector<SysTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

    const std::vector<SysTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SysPoly operator+(const SysPoly& o) const;
    SysPoly operator-(const SysPoly& o) const;

    QuadElem evaluate(const std::vector<QuadElem>& point) const;
    // Partial derivative with respect to variable v.
    SysPoly derivative(size_t v) const;

    bool operator==(const SysPoly& o) const;
    std::string str(const std::vector<std::string>& variables) const;

private:
    void canonicalize();
    std::vector<SysTerm> terms_;
};

struct PolySystem {
    std::vector<std::string> variables;
    std::map<std::string, Rational> parameters;  // substituted values, kept for reports
    std::vector<SysPoly> equations;              // one per variable

    size_t dimension() const { return variables.size(); }
    bool operator==(const PolySystem& o) const {
        return variables == o.variables && equations == o.equations;
    }
    std::string print() const;
};

struct SystemId {
    enum class Kind { Steady, Expanding, Custom };
    Kind kind = Kind::Custom;
    BigInt n = 1;
    Rational lambda = Rational(1);
    std::string source;  // file path or label for Custom

    static SystemId steady(BigInt n) { return {Kind::Steady, std::move(n), Rational(1), ""}; }
    static SystemId expanding(BigInt n, Rational lambda) {
        return {Kind::Expanding, std::move(n), std::move(lambda), ""};
    }
    std::string label() const;
};

// x' = x^2 - x*y + (n-1), y' = x*y - n*x^2; n >= 1.
PolySystem builtin_steady(const BigInt& n);
// x' = x^2 - x*y + lambda*z^2 + (n-1), y' = x*y - n*x^2 + lambda*z^2,
// z' = x*z; n >= 1, lambda > 0.
PolySystem builtin_expanding(const BigInt& n, const Rational& lambda);
PolySystem builtin(const SystemId& id);

// Exact Jacobian of the right-hand side at a point.
QuadMatrix jacobian_at(const PolySystem& system, const std::vector<QuadElem>& point);

std::vector<QuadElem> evaluate_rhs(const PolySystem& system, const std::vector<QuadElem>& point);

}  // namespace painleve
