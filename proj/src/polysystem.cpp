#include <painleve/polysystem.hpp>

#include <algorithm>
#include <sstream>

namespace painleve {

namespace {

// Graded lex, descending: higher total degree first, ties broken by the
// exponent vector itself (larger first).
bool term_before(const SysTerm& a, const SysTerm& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exps > b.exps;
}

}  // namespace

void SysPoly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), term_before);
    std::vector<SysTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exps == t.exps)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const SysTerm& t) { return t.coeff.is_zero(); }),
                 merged.end());
    terms_ = std::move(merged);
}

SysPoly SysPoly::operator+(const SysPoly& o) const {
    std::vector<SysTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return SysPoly(std::move(all));
}

SysPoly SysPoly::operator-(const SysPoly& o) const {
    std::vector<SysTerm> all = terms_;
    for (auto t : o.terms_) {
        t.coeff = -t.coeff;
        all.push_back(std::move(t));
    }
    return SysPoly(std::move(all));
}

QuadElem SysPoly::evaluate(const std::vector<QuadElem>& point) const {
    QuadElem acc(0);
    for (auto& t : terms_) {
        QuadElem v = t.coeff;
        for (size_t i = 0; i < t.exps.size(); ++i)
            for (unsigned k = 0; k < t.exps[i]; ++k) v *= point[i];
        acc += v;
    }
    return acc;
}

SysPoly SysPoly::derivative(size_t v) const {
    std::vector<SysTerm> out;
    for (auto& t : terms_) {
        if (t.exps[v] == 0) continue;
        SysTerm d = t;
        d.coeff = d.coeff * QuadElem((long long)t.exps[v]);
        d.exps[v] -= 1;
        out.push_back(std::move(d));
    }
    return SysPoly(std::move(out));
}

bool SysPoly::operator==(const SysPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exps != o.terms_[i].exps || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string SysPoly::str(const std::vector<std::string>& variables) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& t : terms_) {
        std::string mono;
        for (size_t v = 0; v < t.exps.size(); ++v) {
            if (t.exps[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variables[v];
            if (t.exps[v] > 1) mono += "^" + std::to_string(t.exps[v]);
        }
        const QuadElem& c = t.coeff;
        if (!c.is_rational())
            throw std::domain_error("SysPoly: cannot print irrational coefficient");
        Rational r = c.as_rational();
        std::string piece;
        if (mono.empty()) {
            piece = r.abs().str();
        } else if (r.abs() == Rational(1)) {
            piece = mono;
        } else {
            piece = r.abs().str() + "*" + mono;
        }
        if (s.empty()) {
            s = (r.is_negative() ? "-" : "") + piece;
        } else {
            s += (r.is_negative() ? " - " : " + ") + piece;
        }
    }
    return s;
}

std::string PolySystem::print() const {
    std::ostringstream os;
    os << "vars:";
    for (size_t i = 0; i < variables.size(); ++i) os << (i ? ", " : " ") << variables[i];
    os << "\n";
    for (size_t i = 0; i < variables.size(); ++i)
        os << variables[i] << "' = " << equations[i].str(variables) << "\n";
    return os.str();
}

std::string SystemId::label() const {
    switch (kind) {
        case Kind::Steady:
            return "steady(n=" + n.str() + ")";
        case Kind::Expanding:
            return "expanding(n=" + n.str() + ", lambda=" + lambda.str() + ")";
        default:
            return source.empty() ? "custom" : source;
    }
}

PolySystem builtin_steady(const BigInt& n) {
    if (n < 1) throw std::domain_error("builtin_steady: n must be >= 1");
    Rational rn{n};
    PolySystem sys;
    sys.variables = {"x", "y"};
    sys.parameters = {{"n", rn}};
    sys.equations = {
        SysPoly({{QuadElem(1), {2, 0}}, {QuadElem(-1), {1, 1}}, {QuadElem(rn - Rational(1)), {0, 0}}}),
        SysPoly({{QuadElem(1), {1, 1}}, {QuadElem(-rn), {2, 0}}}),
    };
    return sys;
}

PolySystem builtin_expanding(const BigInt& n, const Rational& lambda) {
    if (n < 1) throw std::domain_error("builtin_expanding: n must be >= 1");
    if (!lambda.is_positive())
        throw std::domain_error("builtin_expanding: lambda must be positive");
    Rational rn{n};
    PolySystem sys;
    sys.variables = {"x", "y", "z"};
    sys.parameters = {{"n", rn}, {"lambda", lambda}};
    sys.equations = {
        SysPoly({{QuadElem(1), {2, 0, 0}},
                 {QuadElem(-1), {1, 1, 0}},
                 {QuadElem(lambda), {0, 0, 2}},
                 {QuadElem(rn - Rational(1)), {0, 0, 0}}}),
        SysPoly({{QuadElem(1), {1, 1, 0}},
                 {QuadElem(-rn), {2, 0, 0}},
                 {QuadElem(lambda), {0, 0, 2}}}),
        SysPoly({{QuadElem(1), {1, 0, 1}}}),
    };
    return sys;
}

PolySystem builtin(const SystemId& id) {
    switch (id.kind) {
        case SystemId::Kind::Steady:
            return builtin_steady(id.n);
        case SystemId::Kind::Expanding:
            return builtin_expanding(id.n, id.lambda);
        default:
            throw std::domain_error("builtin: custom systems come from files");
    }
}

QuadMatrix jacobian_at(const PolySystem& system, const std::vector<QuadElem>& point) {
    if (point.size() != system.dimension())
        throw std::domain_error("jacobian_at: point dimension mismatch");
    size_t n = system.dimension();
    QuadMatrix j(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t v = 0; v < n; ++v) j.at(i, v) = system.equations[i].derivative(v).evaluate(point);
    return j;
}

std::vector<QuadElem> evaluate_rhs(const PolySystem& system, const std::vector<QuadElem>& point) {
    std::vector<QuadElem> out;
    out.reserve(system.dimension());
    for (auto& eq : system.equations) out.push_back(eq.evaluate(point));
    return out;
}

}  // namespace painleve
