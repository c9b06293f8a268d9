#include <painleve/parser.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace painleve {

namespace {

struct Token {
    enum class Kind { Ident, Number, Symbol, End };
    Kind kind = Kind::End;
    std::string text;   // ident name or symbol character
    Rational value;     // for Number
    int line = 0, col = 0;
};

class Lexer {
public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
        Token t;
        t.line = line_;
        t.col = (int)pos_ + 1;
        if (pos_ >= text_.size()) return t;
        char c = text_[pos_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
                ++pos_;
            t.kind = Token::Kind::Ident;
            t.text = text_.substr(start, pos_ - start);
            return t;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
            std::string num = text_.substr(start, pos_ - start);
            std::string den = "1";
            // "p/q" is one rational literal only when a digit follows the slash.
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                std::isdigit((unsigned char)text_[pos_ + 1])) {
                ++pos_;
                size_t dstart = pos_;
                while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
                den = text_.substr(dstart, pos_ - dstart);
            }
            t.kind = Token::Kind::Number;
            t.value = Rational(BigInt(num), BigInt(den));
            return t;
        }
        t.kind = Token::Kind::Symbol;
        t.text = std::string(1, c);
        ++pos_;
        return t;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_;
};

// Dense polynomial accumulator used only inside the parser.
struct ExprPoly {
    std::map<std::vector<unsigned>, Rational> terms;

    static ExprPoly constant(size_t dim, const Rational& r) {
        ExprPoly p;
        if (!r.is_zero()) p.terms[std::vector<unsigned>(dim, 0)] = r;
        return p;
    }
    static ExprPoly variable(size_t dim, size_t v) {
        ExprPoly p;
        std::vector<unsigned> e(dim, 0);
        e[v] = 1;
        p.terms[std::move(e)] = Rational(1);
        return p;
    }
    ExprPoly add(const ExprPoly& o) const {
        ExprPoly out = *this;
        for (auto& [e, c] : o.terms) {
            auto it = out.terms.find(e);
            if (it == out.terms.end())
                out.terms.emplace(e, c);
            else {
                it->second += c;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
        return out;
    }
    ExprPoly negate() const {
        ExprPoly out;
        for (auto& [e, c] : terms) out.terms.emplace(e, -c);
        return out;
    }
    ExprPoly mul(const ExprPoly& o) const {
        ExprPoly out;
        for (auto& [e1, c1] : terms)
            for (auto& [e2, c2] : o.terms) {
                std::vector<unsigned> e(e1.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                Rational c = c1 * c2;
                auto it = out.terms.find(e);
                if (it == out.terms.end())
                    out.terms.emplace(std::move(e), std::move(c));
                else {
                    it->second += c;
                    if (it->second.is_zero()) out.terms.erase(it);
                }
            }
        return out;
    }
    ExprPoly pow(unsigned k, size_t dim) const {
        ExprPoly out = constant(dim, Rational(1));
        for (unsigned i = 0; i < k; ++i) out = out.mul(*this);
        return out;
    }
};

class ExprParser {
public:
    ExprParser(Lexer lexer, const std::vector<std::string>& variables,
               const std::map<std::string, Rational>& params)
        : lexer_(std::move(lexer)), variables_(variables), params_(params) {
        advance();
    }

    ExprPoly parse() {
        ExprPoly p = expr();
        if (cur_.kind != Token::Kind::End) fail("trailing input after expression");
        return p;
    }

private:
    void advance() { cur_ = lexer_.next(); }
    [[noreturn]] void fail(const std::string& reason) const {
        throw ParseError(cur_.line, cur_.col, reason);
    }
    bool is_symbol(const char* s) const {
        return cur_.kind == Token::Kind::Symbol && cur_.text == s;
    }
    size_t dim() const { return variables_.size(); }

    ExprPoly expr() {
        bool neg = false;
        if (is_symbol("-")) {
            neg = true;
            advance();
        }
        ExprPoly acc = term();
        if (neg) acc = acc.negate();
        while (is_symbol("+") || is_symbol("-")) {
            bool minus = cur_.text == "-";
            advance();
            ExprPoly t = term();
            acc = acc.add(minus ? t.negate() : t);
        }
        return acc;
    }

    ExprPoly term() {
        ExprPoly acc = factor();
        while (true) {
            if (is_symbol("*")) {
                advance();
                acc = acc.mul(factor());
            } else if (is_symbol("/")) {
                fail("non-polynomial construct: division");
            } else {
                break;
            }
        }
        return acc;
    }

    ExprPoly factor() {
        ExprPoly b = base();
        if (is_symbol("^")) {
            advance();
            if (cur_.kind != Token::Kind::Number || !cur_.value.is_integer())
                fail("non-polynomial construct: exponent must be an unsigned integer");
            if (cur_.value.is_negative()) fail("non-polynomial construct: negative power");
            unsigned k = (unsigned)cur_.value.num().convert_to<unsigned long long>();
            advance();
            return b.pow(k, dim());
        }
        return b;
    }

    ExprPoly base() {
        if (cur_.kind == Token::Kind::Number) {
            ExprPoly p = ExprPoly::constant(dim(), cur_.value);
            advance();
            return p;
        }
        if (cur_.kind == Token::Kind::Ident) {
            std::string name = cur_.text;
            for (size_t v = 0; v < variables_.size(); ++v) {
                if (variables_[v] == name) {
                    advance();
                    return ExprPoly::variable(dim(), v);
                }
            }
            auto it = params_.find(name);
            if (it != params_.end()) {
                advance();
                return ExprPoly::constant(dim(), it->second);
            }
            fail("unknown variable or unbound parameter \"" + name + "\"");
        }
        if (is_symbol("(")) {
            advance();
            ExprPoly p = expr();
            if (!is_symbol(")")) fail("expected )");
            advance();
            return p;
        }
        if (is_symbol("-")) fail("unexpected unary minus; write it before the whole term");
        fail(cur_.kind == Token::Kind::End ? "unexpected end of line" : "unexpected token \"" +
                                                                            cur_.text + "\"");
    }

    Lexer lexer_;
    Token cur_;
    const std::vector<std::string>& variables_;
    const std::map<std::string, Rational>& params_;
};

struct RawEquation {
    std::string lhs;
    std::string rhs_text;
    int line = 0;
    int rhs_col = 0;
};

Rational parse_signed_rational(Lexer& lx, Token& cur) {
    bool neg = false;
    if (cur.kind == Token::Kind::Symbol && cur.text == "-") {
        neg = true;
        cur = lx.next();
    }
    if (cur.kind != Token::Kind::Number)
        throw ParseError(cur.line, cur.col, "expected rational value");
    Rational v = cur.value;
    cur = lx.next();
    return neg ? -v : v;
}

}  // namespace

PolySystem parse_system(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) lines.push_back(line);
    }

    std::vector<std::string> declared_vars;
    bool have_vars_header = false;
    std::map<std::string, Rational> params;
    std::vector<RawEquation> raw;

    for (size_t li = 0; li < lines.size(); ++li) {
        int lineno = (int)li + 1;
        const std::string& line = lines[li];
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line.find_first_not_of(" \t") != std::string::npos &&
            line[line.find_first_not_of(" \t")] == '#')
            continue;  // comment line

        Lexer lx(line, lineno);
        Token first = lx.next();
        if (first.kind != Token::Kind::Ident)
            throw ParseError(lineno, first.col, "expected a header or an equation");

        Token second = lx.next();
        if (second.kind == Token::Kind::Symbol && second.text == ":") {
            if (first.text == "vars") {
                if (have_vars_header) throw ParseError(lineno, first.col, "duplicate vars header");
                have_vars_header = true;
                Token t = lx.next();
                while (true) {
                    if (t.kind != Token::Kind::Ident)
                        throw ParseError(t.line, t.col, "expected variable name");
                    declared_vars.push_back(t.text);
                    t = lx.next();
                    if (t.kind == Token::Kind::End) break;
                    if (!(t.kind == Token::Kind::Symbol && t.text == ","))
                        throw ParseError(t.line, t.col, "expected , between variable names");
                    t = lx.next();
                }
            } else if (first.text == "params") {
                Token t = lx.next();
                while (true) {
                    if (t.kind != Token::Kind::Ident)
                        throw ParseError(t.line, t.col, "expected parameter name");
                    std::string name = t.text;
                    t = lx.next();
                    if (!(t.kind == Token::Kind::Symbol && t.text == "="))
                        throw ParseError(t.line, t.col, "expected = after parameter name");
                    t = lx.next();
                    params[name] = parse_signed_rational(lx, t);
                    if (t.kind == Token::Kind::End) break;
                    if (!(t.kind == Token::Kind::Symbol && t.text == ","))
                        throw ParseError(t.line, t.col, "expected , between parameters");
                    t = lx.next();
                }
            } else {
                throw ParseError(lineno, first.col,
                                 "unknown header \"" + first.text + "\" (expected vars or params)");
            }
            continue;
        }

        if (!(second.kind == Token::Kind::Symbol && second.text == "'"))
            throw ParseError(second.line, second.col, "expected ' after variable name");
        Token eq = lx.next();
        if (!(eq.kind == Token::Kind::Symbol && eq.text == "="))
            throw ParseError(eq.line, eq.col, "expected = in equation");
        size_t rhs_pos = line.find('=');
        RawEquation re;
        re.lhs = first.text;
        re.rhs_text = line.substr(rhs_pos + 1);
        re.line = lineno;
        re.rhs_col = (int)rhs_pos + 2;
        raw.push_back(std::move(re));
    }

    if (raw.empty()) throw ParseError((int)lines.size() + 1, 1, "no equations found");

    std::vector<std::string> variables = declared_vars;
    if (!have_vars_header)
        for (auto& re : raw) variables.push_back(re.lhs);

    PolySystem sys;
    sys.variables = variables;
    sys.parameters = params;
    sys.equations.assign(variables.size(), SysPoly());

    std::vector<bool> seen(variables.size(), false);
    for (auto& re : raw) {
        size_t v = variables.size();
        for (size_t i = 0; i < variables.size(); ++i)
            if (variables[i] == re.lhs) v = i;
        if (v == variables.size())
            throw ParseError(re.line, 1, "unknown variable \"" + re.lhs + "\" on left-hand side");
        if (seen[v])
            throw ParseError(re.line, 1, "duplicate equation for variable \"" + re.lhs + "\"");
        seen[v] = true;

        ExprPoly p;
        try {
            ExprParser ep(Lexer(re.rhs_text, re.line), variables, params);
            p = ep.parse();
        } catch (ParseError& e) {
            // Columns inside the rhs substring are offset by the '=' position.
            throw ParseError(e.line(), e.col() + re.rhs_col - 1,
                             std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
        }
        std::vector<SysTerm> terms;
        for (auto& [e, c] : p.terms) terms.push_back({QuadElem(c), e});
        sys.equations[v] = SysPoly(std::move(terms));
    }
    for (size_t i = 0; i < variables.size(); ++i)
        if (!seen[i])
            throw ParseError((int)lines.size() + 1, 1,
                             "missing equation for variable \"" + variables[i] + "\"");
    return sys;
}

}  // namespace painleve
