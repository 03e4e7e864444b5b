#include "homvar/parse.hpp"

#include "homvar/errors.hpp"

#include <cctype>
#include <sstream>

namespace homvar {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit Lexer(const std::string& t) : text(t) { skip_space(); }

    void advance() {
        if (pos < text.size() && text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_space() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool at_end() const { return pos >= text.size(); }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            skip_space();
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c))
            throw SyntaxError(std::string("expected '") + c + "' (" + what + ")",
                              line, col);
    }

    long integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError("expected an integer", line, col);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            advance();
        }
        skip_space();
        return v;
    }
};

struct ExprParser {
    Lexer lex;

    explicit ExprParser(const std::string& text) : lex(text) {}

    RatExpr parse() {
        RatExpr e = expr();
        if (!lex.at_end())
            throw SyntaxError("unexpected trailing input", lex.line, lex.col);
        return e;
    }

    RatExpr expr() {
        RatExpr e = term();
        for (;;) {
            if (lex.accept('+'))
                e = e + term();
            else if (lex.accept('-'))
                e = e - term();
            else
                return e;
        }
    }

    RatExpr term() {
        RatExpr e = factor();
        for (;;) {
            if (lex.accept('*'))
                e = e * factor();
            else if (lex.accept('/'))
                e = e / factor();
            else
                return e;
        }
    }

    RatExpr factor() {
        if (lex.accept('-')) return -factor();
        RatExpr b = base();
        if (lex.accept('^')) {
            int l = lex.line, c = lex.col;
            long e = lex.integer();
            if (e < 1) throw SyntaxError("exponent must be a positive integer", l, c);
            return b.pow(static_cast<int>(e));
        }
        return b;
    }

    RatExpr base() {
        if (lex.accept('(')) {
            RatExpr e = expr();
            lex.expect(')', "to close the group");
            return e;
        }
        if (lex.peek() == 'u') return variable();
        if (std::isdigit(static_cast<unsigned char>(lex.peek())))
            return RatExpr::from_int(lex.integer());
        throw SyntaxError("expected a variable, number or '('", lex.line, lex.col);
    }

    RatExpr variable() {
        lex.advance();  // 'u'
        lex.skip_space();
        lex.expect('[', "after 'u'");
        int l = lex.line, c = lex.col;
        long alpha = lex.integer();
        if (alpha < 1) throw SyntaxError("dependent index must be >= 1", l, c);
        lex.expect(';', "between index and counts");
        std::vector<int> counts;
        counts.push_back(static_cast<int>(lex.integer()));
        while (lex.accept(',')) counts.push_back(static_cast<int>(lex.integer()));
        lex.expect(']', "to close the variable");
        return RatExpr::variable(
            JetVar(static_cast<int>(alpha), MultiIndex(counts)));
    }
};

bool needs_parens_in_product(const Poly& p) {
    if (p.term_count() != 1) return true;
    const auto& [mono, coeff] = *p.terms().begin();
    // A single monomial is a product chain; fine on either side of '*' or as
    // the left operand of '/', but a negative coefficient needs grouping.
    return coeff < 0;
}

bool needs_parens_as_denominator(const Poly& p) {
    if (p.term_count() != 1) return true;
    const auto& [mono, coeff] = *p.terms().begin();
    if (coeff < 0) return true;
    if (mono.is_unit()) return boost::multiprecision::denominator(coeff) != 1;
    // A lone variable power divides cleanly; anything with a coefficient or
    // several factors would re-associate under '/'.
    return !(coeff == 1 && mono.factors().size() == 1);
}

void print_monomial(std::ostream& os, const Monomial& m) {
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first) os << "*";
        first = false;
        os << v.to_string();
        if (e > 1) os << "^" << e;
    }
}

void print_coeff_times_monomial(std::ostream& os, const Rational& c,
                                const Monomial& m) {
    if (m.is_unit()) {
        os << to_string(c);
        return;
    }
    if (c == -1) {
        os << "-";
    } else if (c != 1) {
        os << to_string(c) << "*";
    }
    print_monomial(os, m);
}

}  // namespace

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading (graded-lex greatest) term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [mono, coeff] = *it;
        if (first) {
            print_coeff_times_monomial(os, coeff, mono);
            first = false;
        } else if (coeff < 0) {
            os << " - ";
            print_coeff_times_monomial(os, -coeff, mono);
        } else {
            os << " + ";
            print_coeff_times_monomial(os, coeff, mono);
        }
    }
    return os.str();
}

std::string print_expr(const RatExpr& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool den_trivial = e.den().is_constant() && e.den().constant_value() == 1;
    if (den_trivial) {
        os << print_poly(e.num());
        return os.str();
    }
    if (needs_parens_in_product(e.num()))
        os << "(" << print_poly(e.num()) << ")";
    else
        os << print_poly(e.num());
    os << "/";
    if (needs_parens_as_denominator(e.den()))
        os << "(" << print_poly(e.den()) << ")";
    else
        os << print_poly(e.den());
    return os.str();
}

RatExpr parse_expr(const std::string& text) { return ExprParser(text).parse(); }

}  // namespace homvar
