#include <painleve/parampoly.hpp>

#include <algorithm>

namespace painleve {

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (auto& [id, e] : exps_) d += e;
    return d;
}

unsigned Monomial::degree_in(SymbolId id) const {
    for (auto& [sid, e] : exps_)
        if (sid == id) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            out.exps_.push_back(*a++);
        } else if (a == exps_.end() || b->first < a->first) {
            out.exps_.push_back(*b++);
        } else {
            out.exps_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    for (auto& [id, e] : exps_)
        if (o.degree_in(id) < e) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    Monomial out;
    for (auto& [id, e] : exps_) {
        unsigned oe = o.degree_in(id);
        if (oe > e) throw std::domain_error("Monomial: inexact division");
        if (e - oe > 0) out.exps_.emplace_back(id, e - oe);
    }
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        // Missing symbol = exponent 0. Smaller id is compared first.
        SymbolId ia = a != exps_.end() ? a->first : INT32_MAX;
        SymbolId ib = b != o.exps_.end() ? b->first : INT32_MAX;
        unsigned ea = ia <= ib ? a->second : 0;
        unsigned eb = ib <= ia ? b->second : 0;
        SymbolId id = std::min(ia, ib);
        if (ea != eb) return ea < eb ? std::strong_ordering::less : std::strong_ordering::greater;
        if (ia == id) ++a;
        if (ib == id) ++b;
    }
    return std::strong_ordering::equal;
}

std::string Monomial::str(const SymbolTable& symbols) const {
    std::string s;
    for (auto& [id, e] : exps_) {
        if (!s.empty()) s += "*";
        s += symbols.name(id);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

void Poly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

QuadElem Poly::constant() const {
    if (!is_constant()) throw std::domain_error("Poly: not a constant");
    return terms_.empty() ? QuadElem(0) : terms_.begin()->second;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

unsigned Poly::degree_in(SymbolId id) const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(id));
    return d;
}

std::vector<SymbolId> Poly::symbols_used() const {
    std::vector<SymbolId> out;
    for (auto& [m, c] : terms_)
        for (auto& [id, e] : m.exps())
            if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    for (auto& [m, c] : o.terms_) {
        auto [it, inserted] = out.terms_.emplace(m, c);
        if (!inserted) it->second += c;
    }
    out.prune();
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (auto& [m1, c1] : terms_) {
        for (auto& [m2, c2] : o.terms_) {
            Monomial m = m1 * m2;
            QuadElem c = c1 * c2;
            auto it = out.terms_.find(m);
            if (it == out.terms_.end())
                out.terms_.emplace(std::move(m), std::move(c));
            else
                it->second += c;
        }
    }
    out.prune();
    return out;
}

Poly Poly::scaled(const QuadElem& c) const {
    Poly out;
    if (c.is_zero()) return out;
    for (auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

QuadElem Poly::evaluate(const std::map<SymbolId, QuadElem>& values) const {
    QuadElem acc(0);
    for (auto& [m, c] : terms_) {
        QuadElem t = c;
        for (auto& [id, e] : m.exps()) {
            auto it = values.find(id);
            if (it == values.end())
                throw std::domain_error("Poly: missing value for parameter id " +
                                        std::to_string(id));
            for (unsigned k = 0; k < e; ++k) t *= it->second;
        }
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(const std::map<SymbolId, QuadElem>& values) const {
    Poly acc;
    for (auto& [m, c] : terms_) {
        Poly t(c);
        Monomial rest;
        for (auto& [id, e] : m.exps()) {
            auto it = values.find(id);
            if (it == values.end()) {
                rest = rest * Monomial::symbol(id, e);
            } else {
                QuadElem p(1);
                for (unsigned k = 0; k < e; ++k) p *= it->second;
                t = t.scaled(p);
            }
        }
        Poly term;
        for (auto& [mm, cc] : t.terms_) term.terms_.emplace(mm * rest, cc);
        acc += term;
    }
    return acc;
}

std::pair<Monomial, QuadElem> Poly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("Poly: leading term of zero");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

Poly Poly::exact_divide(const Poly& o) const {
    if (o.is_zero()) throw std::domain_error("Poly: division by zero");
    if (o.is_constant()) return divided(o.constant());
    Poly r = *this;
    Poly q;
    auto [lm, lc] = o.leading_term();
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        if (!lm.divides(rm)) throw std::domain_error("Poly: inexact division");
        Poly t;
        t.terms_.emplace(rm.divide_by(lm), rc / lc);
        q += t;
        r -= t * o;
    }
    return q;
}

std::vector<Poly> Poly::coefficients_in(SymbolId id) const {
    std::vector<Poly> out(degree_in(id) + 1);
    for (auto& [m, c] : terms_) {
        unsigned e = m.degree_in(id);
        Monomial rest;
        for (auto& [sid, se] : m.exps())
            if (sid != id) rest = rest * Monomial::symbol(sid, se);
        Poly t;
        t.terms_.emplace(rest, c);
        out[e] += t;
    }
    return out;
}

std::string Poly::str(const SymbolTable& symbols) const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest monomial first reads naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool need_parens = cs.find(' ') != std::string::npos && !m.is_unit();
        std::string piece;
        if (m.is_unit()) {
            piece = cs;
        } else if (c == QuadElem(1)) {
            piece = m.str(symbols);
        } else if (c == QuadElem(-1)) {
            piece = "-" + m.str(symbols);
        } else {
            piece = (need_parens ? "(" + cs + ")" : cs) + "*" + m.str(symbols);
        }
        if (s.empty()) {
            s = piece;
        } else if (piece.front() == '-') {
            s += " - " + piece.substr(1);
        } else {
            s += " + " + piece;
        }
    }
    return s;
}

}  // namespace painleve
