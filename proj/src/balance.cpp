#include <painleve/balance.hpp>

#include <painleve/parampoly.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace painleve {

Rational Balance::base_exponent() const {
    Rational base = exponents[0];
    for (auto& e : exponents) base = std::min(base, e);
    return base;
}

bool Balance::is_free(size_t v) const {
    return std::find(free_leading.begin(), free_leading.end(), v) != free_leading.end();
}

bool same_value(const QuadElem& x, const QuadElem& y) {
    if (x.rat_part() != y.rat_part()) return false;
    const Rational& bx = x.rad_part();
    const Rational& by = y.rad_part();
    if (bx.sign() != by.sign()) return false;
    return bx * bx * Rational(x.radicand()) == by * by * Rational(y.radicand());
}

namespace {

// Pulls perfect-square factors with small prime part out of k, so that
// sqrt(k) = mult * sqrt(core). Trial division only; no full factorization.
std::pair<BigInt, BigInt> split_square_part(BigInt k) {
    BigInt mult = 1;
    if (auto r = is_perfect_square(k)) return {*r, BigInt(1)};
    for (BigInt f = 2; f <= 1000; ++f) {
        BigInt f2 = f * f;
        while (k % f2 == 0) {
            k /= f2;
            mult *= f;
        }
    }
    return {mult, k};
}

// sqrt of a nonnegative rational as an element of a fresh quadratic field.
QuadElem detached_sqrt(const Rational& r) {
    BigInt k = r.num() * r.den();
    auto [mult, core] = split_square_part(k);
    // sqrt(p/q) = sqrt(pq)/q = (mult/q) sqrt(core)
    return QuadElem(Rational(0), Rational(mult, r.den()), core);
}

}  // namespace

BalanceSet paper_balances(const SystemId& id) {
    BalanceSet out;
    if (id.kind == SystemId::Kind::Steady) {
        const BigInt& n = id.n;
        if (n < 1) throw std::domain_error("paper_balances: n must be >= 1");
        if (n == 1) {
            Balance b;
            b.label = "plus";
            b.exponents = {Rational(-1), Rational(-1)};
            b.leading = {QuadElem(Rational(-1, 2)), QuadElem(Rational(1, 2))};
            b.step_den = 1;
            b.offsets = {0, 0};
            b.radicand = 1;
            b.fixed_grid = true;
            out.balances.push_back(b);
            b.label = "plus-q2";
            b.step_den = 2;
            out.balances.push_back(b);
            out.notes.push_back(
                "steady n=1 has a single balance (-1/2, 1/2); emitted on both the meromorphic "
                "grid (Q=1) and the half-step grid (Q=2)");
            return out;
        }
        auto square = is_perfect_square(n);
        QuadElem root = QuadElem::root_of(n);
        QuadElem one(1);
        for (int sign : {+1, -1}) {
            Balance b;
            b.label = sign > 0 ? "plus" : "minus";
            QuadElem denom = sign > 0 ? root + one : root - one;
            b.exponents = {Rational(-1), Rational(-1)};
            b.leading = {(sign > 0 ? -one : one) / denom, root / denom};
            unsigned paper_q = 1;
            if (square) {
                BigInt q = sign > 0 ? BigInt(*square + 1) : BigInt(*square - 1);
                paper_q = (unsigned)q.convert_to<unsigned long long>();
            }
            b.step_den = paper_q;
            b.offsets = {0, 0};
            b.radicand = n;
            b.fixed_grid = true;
            out.balances.push_back(std::move(b));
        }
        return out;
    }
    if (id.kind != SystemId::Kind::Expanding)
        throw std::domain_error("paper_balances: builtin systems only");

    const BigInt& n = id.n;
    const Rational& lambda = id.lambda;
    if (n < 1) throw std::domain_error("paper_balances: n must be >= 1");
    if (!lambda.is_positive()) throw std::domain_error("paper_balances: lambda must be positive");

    // Equal leading exponents: (-1,-1,-1) with a0=-1, b0=-n, c0=+-sqrt(n/lambda).
    QuadElem c0 = detached_sqrt(Rational(n) / lambda);
    for (int sign : {+1, -1}) {
        Balance b;
        b.label = sign > 0 ? "equal-plus" : "equal-minus";
        b.exponents = {Rational(-1), Rational(-1), Rational(-1)};
        b.leading = {QuadElem(-1), QuadElem(-Rational(n)), sign > 0 ? c0 : -c0};
        b.step_den = 1;
        b.offsets = {0, 0, 0};
        b.radicand = c0.is_rational() ? BigInt(1) : c0.radicand();
        b.fixed_grid = true;
        out.balances.push_back(std::move(b));
    }

    // Mixed exponents: gamma = a0 with c0 a free parameter; needs the steady
    // coefficients to be rational, hence n a perfect square.
    auto square = is_perfect_square(n);
    if (!square) {
        out.notes.push_back("mixed balances omitted: n = " + n.str() +
                            " is not a perfect square, so the third exponent gamma = a0 "
                            "would be irrational");
        return out;
    }
    BigInt m = *square;
    for (int sign : {+1, -1}) {
        if (sign < 0 && m == 1) {
            out.notes.push_back(
                "mixed-minus balance omitted for n = 1: the minus-branch leading "
                "coefficients 1/(sqrt(n)-1) are undefined");
            continue;
        }
        Balance b;
        b.label = sign > 0 ? "mixed-plus" : "mixed-minus";
        Rational a0 = sign > 0 ? Rational(-1, m + 1) : Rational(1, m - 1);
        Rational b0 = sign > 0 ? Rational(m, m + 1) : Rational(m, m - 1);
        b.exponents = {Rational(-1), Rational(-1), a0};
        b.leading = {QuadElem(a0), QuadElem(b0), QuadElem(1)};
        b.free_leading = {2};
        BigInt q = sign > 0 ? BigInt(m + 1) : BigInt(m - 1);
        b.step_den = (unsigned)q.convert_to<unsigned long long>();
        b.offsets = {0, 0, (unsigned)m.convert_to<unsigned long long>()};
        b.radicand = n;
        b.fixed_grid = true;
        out.balances.push_back(std::move(b));
    }
    return out;
}

std::vector<QuadElem> verify_balance(const PolySystem& system, const Balance& bal) {
    size_t dim = system.dimension();
    std::vector<QuadElem> residuals(dim, QuadElem(0));
    for (size_t v = 0; v < dim; ++v) {
        // Leading level of equation v: min over monomial exponents and the
        // derivative exponent alpha_v - 1.
        Rational deriv_level = bal.exponents[v] - Rational(1);
        Rational level = deriv_level;
        for (auto& t : system.equations[v].terms()) {
            Rational e(0);
            for (size_t u = 0; u < dim; ++u)
                e += Rational((long long)t.exps[u]) * bal.exponents[u];
            level = std::min(level, e);
        }
        QuadElem acc(0);
        if (deriv_level == level)
            acc += QuadElem(bal.exponents[v]) * bal.leading[v];
        for (auto& t : system.equations[v].terms()) {
            Rational e(0);
            for (size_t u = 0; u < dim; ++u)
                e += Rational((long long)t.exps[u]) * bal.exponents[u];
            if (e != level) continue;
            QuadElem prod = t.coeff;
            for (size_t u = 0; u < dim; ++u)
                for (unsigned k = 0; k < t.exps[u]; ++k) prod *= bal.leading[u];
            acc -= prod;
        }
        residuals[v] = acc;
    }
    return residuals;
}

namespace {

// --- generic mode -----------------------------------------------------

std::vector<Rational> exponent_grid(unsigned max_den, const Rational& exp_min) {
    std::set<std::pair<BigInt, BigInt>> seen;
    std::vector<Rational> grid;
    for (unsigned q = 1; q <= max_den; ++q) {
        // p/q in [exp_min, 0)
        BigInt pmin_num = exp_min.num() * q;
        BigInt pmin = pmin_num / exp_min.den();  // floor for negative handled below
        if (pmin * exp_min.den() != pmin_num && pmin_num < 0) pmin -= 1;
        for (BigInt p = pmin; p <= -1; ++p) {
            Rational r(p, q);
            if (r < exp_min) continue;
            if (seen.insert({r.num(), r.den()}).second) grid.push_back(r);
        }
    }
    std::sort(grid.begin(), grid.end());
    return grid;
}

struct LeadingSolveResult {
    std::vector<std::vector<QuadElem>> solutions;  // each a full coefficient vector
    std::vector<size_t> free_leading;
    bool unsupported = false;
    std::string note;
};

// Strips the monomial content (product of symbols dividing every term).
// Valid because every leading coefficient is constrained to be nonzero.
Poly strip_content(const Poly& p) {
    if (p.is_zero()) return p;
    Monomial content;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        if (first) {
            content = m;
            first = false;
            continue;
        }
        Monomial g;
        for (auto& [id, e] : content.exps()) {
            unsigned o = m.degree_in(id);
            if (std::min(e, o) > 0) g = g * Monomial::symbol(id, std::min(e, o));
        }
        content = g;
    }
    if (content.is_unit()) return p;
    Poly divisor(QuadElem(1));
    for (auto& [id, e] : content.exps())
        for (unsigned k = 0; k < e; ++k) divisor *= Poly::symbol(id);
    return p.exact_divide(divisor);
}

// Solves the leading-coefficient system by linear elimination with
// content stripping, finishing with at most one quadratic.
LeadingSolveResult solve_leading_system(std::vector<Poly> eqs, size_t dim) {
    LeadingSolveResult out;
    struct Subst {
        SymbolId id;
        Poly num;
        Poly den;  // single-term polynomial; nonzero at any admissible solution
    };
    std::vector<Subst> chain;
    std::vector<bool> eliminated(dim, false);

    auto strip_all = [&](std::vector<Poly>& v) {
        for (auto& p : v) p = strip_content(p);
        v.erase(std::remove_if(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); }),
                v.end());
    };
    strip_all(eqs);

    // Eliminate unknowns that appear linearly with a single-term coefficient.
    for (;;) {
        bool progressed = false;
        for (size_t ei = 0; ei < eqs.size() && !progressed; ++ei) {
            for (size_t u = 0; u < dim && !progressed; ++u) {
                if (eliminated[u]) continue;
                if (eqs[ei].degree_in((SymbolId)u) != 1) continue;
                auto coeffs = eqs[ei].coefficients_in((SymbolId)u);
                const Poly& c1 = coeffs[1];
                if (c1.terms().size() != 1) continue;  // need a guaranteed-nonzero pivot
                Subst s{(SymbolId)u, -coeffs[0], c1};
                std::vector<Poly> next;
                for (size_t j = 0; j < eqs.size(); ++j) {
                    if (j == ei) continue;
                    auto qc = eqs[j].coefficients_in((SymbolId)u);
                    // q = sum q_k u^k -> sum q_k num^k den^(K-k), clearing the
                    // denominator (a nonvanishing single term).
                    size_t K = qc.size() - 1;
                    Poly acc;
                    for (size_t k = 0; k <= K; ++k) {
                        Poly t = qc[k];
                        for (size_t x = 0; x < k; ++x) t *= s.num;
                        for (size_t x = k; x < K; ++x) t *= s.den;
                        acc += t;
                    }
                    next.push_back(acc);
                }
                chain.push_back(std::move(s));
                eliminated[u] = true;
                eqs = std::move(next);
                strip_all(eqs);
                progressed = true;
            }
        }
        if (!progressed) break;
    }

    std::vector<SymbolId> remaining;
    for (size_t u = 0; u < dim; ++u)
        if (!eliminated[u]) remaining.push_back((SymbolId)u);

    // Roots of the residual system for the remaining unknowns.
    std::vector<std::map<SymbolId, QuadElem>> assignments;
    if (eqs.empty()) {
        std::map<SymbolId, QuadElem> base;
        for (SymbolId u : remaining) {
            base[u] = QuadElem(1);  // unconstrained leading coefficient
            out.free_leading.push_back((size_t)u);
        }
        assignments.push_back(std::move(base));
    } else {
        // All residual equations must involve the same single unknown.
        SymbolId u = -1;
        for (auto& p : eqs) {
            auto syms = p.symbols_used();
            if (syms.size() > 1 || (u >= 0 && !syms.empty() && syms[0] != u)) {
                out.unsupported = true;
                out.note = "leading-coefficient system not reducible to one unknown";
                return out;
            }
            if (!syms.empty()) u = syms[0];
        }
        if (u < 0) return out;  // nonzero constant equation: no solution
        // Take the lowest-degree equation as the defining polynomial.
        size_t best = 0;
        for (size_t j = 1; j < eqs.size(); ++j)
            if (eqs[j].degree_in(u) < eqs[best].degree_in(u)) best = j;
        auto uc = eqs[best].coefficients_in(u);
        std::vector<QuadElem> roots;
        if (uc.size() == 2) {
            roots.push_back(-uc[0].constant() / uc[1].constant());
        } else if (uc.size() == 3) {
            QuadElem A = uc[2].constant(), B = uc[1].constant(), C = uc[0].constant();
            QuadElem disc = B * B - QuadElem(4) * A * C;
            std::optional<QuadElem> sq = sqrt_in_field(disc);
            if (!sq && disc.is_rational() && !disc.as_rational().is_negative()) {
                // Extend the field; legal only while everything else is rational.
                bool all_rational = A.is_rational() && B.is_rational() && C.is_rational();
                if (all_rational) sq = detached_sqrt(disc.as_rational());
            }
            if (!sq) {
                out.unsupported = true;
                out.note = "leading quadratic has no root in a single quadratic extension";
                return out;
            }
            QuadElem twoA = QuadElem(2) * A;
            roots.push_back((-B + *sq) / twoA);
            roots.push_back((-B - *sq) / twoA);
        } else {
            out.unsupported = true;
            out.note = "leading-coefficient equation of degree " +
                       std::to_string(uc.size() - 1) + " in one unknown";
            return out;
        }
        for (auto& r : roots) {
            if (r.is_zero()) continue;
            // Every residual equation must vanish at the root.
            bool ok = true;
            std::map<SymbolId, QuadElem> value{{u, r}};
            for (auto& p : eqs)
                if (!p.evaluate(value).is_zero()) ok = false;
            if (ok) assignments.push_back(value);
        }
    }

    // Back-substitute the elimination chain.
    for (auto& assign : assignments) {
        bool ok = true;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            QuadElem den = it->den.evaluate(assign);
            if (den.is_zero()) {
                ok = false;
                break;
            }
            QuadElem num = it->num.evaluate(assign);
            assign[it->id] = num / den;
            if (assign[it->id].is_zero()) ok = false;  // leading coefficients are nonzero
            if (!ok) break;
        }
        if (!ok) continue;
        std::vector<QuadElem> full(dim);
        bool nonzero = true;
        for (size_t v = 0; v < dim; ++v) {
            full[v] = assign.at((SymbolId)v);
            if (full[v].is_zero()) nonzero = false;
        }
        if (nonzero) out.solutions.push_back(std::move(full));
    }
    return out;
}

}  // namespace

BalanceSet generic_balances(const PolySystem& system, unsigned max_den, const Rational& exp_min) {
    if (max_den < 1) throw std::domain_error("generic_balances: max_den must be >= 1");
    if (exp_min > Rational(-1)) throw std::domain_error("generic_balances: exp_min must be <= -1");

    BalanceSet out;
    size_t dim = system.dimension();
    std::vector<Rational> grid = exponent_grid(max_den, exp_min);

    std::vector<size_t> idx(dim, 0);
    std::vector<Rational> alpha(dim);
    int candidate_no = 0;
    for (;;) {
        for (size_t v = 0; v < dim; ++v) alpha[v] = grid[idx[v]];

        // Validity: the derivative term participates in every equation's
        // leading order and nothing is more singular than it.
        bool valid = true;
        for (size_t v = 0; v < dim && valid; ++v) {
            Rational deriv_level = alpha[v] - Rational(1);
            bool matched = false;
            for (auto& t : system.equations[v].terms()) {
                Rational e(0);
                for (size_t u = 0; u < dim; ++u)
                    e += Rational((long long)t.exps[u]) * alpha[u];
                if (e < deriv_level) valid = false;
                if (e == deriv_level) matched = true;
            }
            if (!matched) valid = false;
        }

        if (valid) {
            ++candidate_no;
            // Leading system: alpha_v l_v = sum of dominant monomials at l.
            std::vector<Poly> eqs;
            for (size_t v = 0; v < dim; ++v) {
                Poly p = Poly(QuadElem(alpha[v])) * Poly::symbol((SymbolId)v);
                for (auto& t : system.equations[v].terms()) {
                    Rational e(0);
                    for (size_t u = 0; u < dim; ++u)
                        e += Rational((long long)t.exps[u]) * alpha[u];
                    if (e != alpha[v] - Rational(1)) continue;
                    Poly mono(t.coeff);
                    for (size_t u = 0; u < dim; ++u)
                        for (unsigned k = 0; k < t.exps[u]; ++k) mono *= Poly::symbol((SymbolId)u);
                    p -= mono;
                }
                eqs.push_back(std::move(p));
            }
            LeadingSolveResult res = solve_leading_system(std::move(eqs), dim);
            if (res.unsupported) {
                std::string exps;
                for (size_t v = 0; v < dim; ++v) exps += (v ? ", " : "") + alpha[v].str();
                out.notes.push_back("unsupported-algebra at exponents (" + exps + "): " + res.note);
            }
            int sol_no = 0;
            for (auto& coeffs : res.solutions) {
                ++sol_no;
                Balance b;
                b.label = "generic-" + std::to_string(candidate_no) + "-" + std::to_string(sol_no);
                b.exponents = alpha;
                b.leading = coeffs;
                b.free_leading = res.free_leading;
                BigInt q = 1;
                for (auto& a : alpha) q = lcm(q, a.den());
                b.step_den = (unsigned)q.convert_to<unsigned long long>();
                Rational base = alpha[0];
                for (auto& a : alpha) base = std::min(base, a);
                b.offsets.resize(dim);
                for (size_t v = 0; v < dim; ++v) {
                    Rational off = (alpha[v] - base) * Rational(b.step_den);
                    b.offsets[v] = (unsigned)off.num().convert_to<unsigned long long>();
                }
                BigInt d = 1;
                for (auto& c : coeffs)
                    if (!c.is_rational()) d = c.radicand();
                b.radicand = d;
                out.balances.push_back(std::move(b));
            }
        }

        // Advance the grid index odometer.
        size_t v = 0;
        while (v < dim) {
            if (++idx[v] < grid.size()) break;
            idx[v] = 0;
            ++v;
        }
        if (v == dim) break;
    }

    // Verified exact residuals; anything nonzero is a bug worth surfacing.
    for (auto& b : out.balances)
        for (auto& r : verify_balance(system, b))
            if (!r.is_zero())
                throw std::logic_error("generic_balances: produced balance with nonzero residual");
    return out;
}

}  // namespace painleve
