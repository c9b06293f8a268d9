#pragma once

// Leading-order (dominant balance) analysis: admissible leading exponents
// and exact leading coefficients, in a builtin paper mode for the soliton
// systems and a bounded generic mode for arbitrary systems.

#include <painleve/polysystem.hpp>

#include <string>
#include <vector>

namespace painleve {

struct Balance {
    std::string label;                  // "plus", "minus", "equal-plus", "mixed-minus", ...
    std::vector<Rational> exponents;    // leading exponent per variable
    std::vector<QuadElem> leading;      // leading coefficient per variable (free ones stored as 1)
    unsigned step_den = 1;              // Q: series run in powers of t^(1/Q)
    std::vector<unsigned> offsets;      // exponent_v = base + offset_v / Q
    std::vector<size_t> free_leading;   // indices whose leading coefficient is arbitrary
    BigInt radicand = 0;                // field radicand d of the analysis
    bool fixed_grid = false;            // paper-mode balances keep their Q as given

    Rational base_exponent() const;     // min exponent; offsets are relative to it
    bool is_free(size_t v) const;
};

struct BalanceSet {
    std::vector<Balance> balances;
    std::vector<std::string> notes;  // omissions and unsupported-algebra reports
};

// The paper's balances for the builtin systems, with the paper's step
// denominators (Q = sqrt(n)+-1 on the perfect-square steady branches and the
// mixed expanding branches; both Q=1 and Q=2 grids for the steady n=1 case).
BalanceSet paper_balances(const SystemId& id);

// Bounded search: candidate exponent vectors with entries in [exp_min, 0)
// and denominator <= max_den, validated so the derivative participates in
// every equation's leading order; leading coefficients solved by monomial
// content removal + linear elimination down to at most one quadratic.
BalanceSet generic_balances(const PolySystem& system, unsigned max_den, const Rational& exp_min);

// Exact residuals of the leading-order relations; all-zero iff valid.
std::vector<QuadElem> verify_balance(const PolySystem& system, const Balance& bal);

// Value equality of field elements that may carry different (but compatible)
// radicand representations, e.g. sqrt(2) vs (1/2) sqrt(8).
bool same_value(const QuadElem& x, const QuadElem& y);

}  // namespace painleve
