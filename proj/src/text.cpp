#include "wn/text.hpp"

#include "wn/errors.hpp"

#include <cctype>

namespace wn {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

constexpr std::uint32_t kMaxExponent = 4096;

enum class Tok { integer, var, dop, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind = Tok::end;
    std::string digits;  // integer literal, or index for var/dop
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string read_digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            s += text_[pos_];
            bump();
        }
        return s;
    }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
        cur_ = Token{Tok::end, {}, line_, col_};
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur_.kind = Tok::integer;
            cur_.digits = read_digits();
            return;
        }
        if (c == 'x' || c == 'd') {
            bump();
            cur_.kind = c == 'x' ? Tok::var : Tok::dop;
            cur_.digits = read_digits();
            if (cur_.digits.empty())
                throw ParseError(cur_.line, cur_.column, std::string("expected an index after '") + c + "'");
            return;
        }
        bump();
        switch (c) {
            case '+': cur_.kind = Tok::plus; return;
            case '-': cur_.kind = Tok::minus; return;
            case '*': cur_.kind = Tok::star; return;
            case '^': cur_.kind = Tok::caret; return;
            case '/': cur_.kind = Tok::slash; return;
            case '(': cur_.kind = Tok::lparen; return;
            case ')': cur_.kind = Tok::rparen; return;
            default: throw ParseError(cur_.line, cur_.column, std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    Token cur_;
};

class Parser {
public:
    Parser(std::string_view text, std::size_t n) : lex_(text), n_(n) {
        if (n == 0) throw PreconditionError("n must be >= 1");
    }

    Polynomial polynomial() {
        Polynomial p = sum();
        expect_end();
        return p;
    }

    Derivation derivation() {
        Derivation d(n_);
        bool first = true;
        while (true) {
            bool negate = false;
            const Token& t = lex_.peek();
            if (t.kind == Tok::plus || t.kind == Tok::minus) {
                negate = t.kind == Tok::minus;
                lex_.take();
            } else if (!first) {
                break;
            }
            // Bare "0" denotes the zero derivation.
            if (first && lex_.peek().kind == Tok::integer && lex_.peek().digits.find_first_not_of('0') == std::string::npos) {
                Token zero = lex_.take();
                if (lex_.peek().kind == Tok::end && !negate) return d;
                coefficient_then_d(d, negate, product_from(number_from(zero)));
            } else {
                coefficient_then_d(d, negate, std::nullopt);
            }
            first = false;
        }
        expect_end();
        return d;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

    void expect_end() {
        if (lex_.peek().kind != Tok::end) fail(lex_.peek(), "unexpected trailing input");
    }

    std::size_t index(const Token& t) {
        // Indices beyond n are rejected no matter how many digits they have.
        if (t.digits.size() > 9) fail(t, "variable index out of range");
        const auto i = static_cast<std::size_t>(std::stoul(t.digits));
        if (i < 1 || i > n_) fail(t, "variable index out of range");
        return i;
    }

    void coefficient_then_d(Derivation& d, bool negate, std::optional<Polynomial> coeff) {
        if (!coeff && lex_.peek().kind != Tok::dop) coeff = product();
        if (lex_.peek().kind == Tok::star) lex_.take();
        const Token t = lex_.peek();
        if (t.kind != Tok::dop) fail(t, "expected a partial derivative d<i>");
        lex_.take();
        const auto slot = index(t);
        Polynomial c = coeff ? std::move(*coeff) : Polynomial(n_, Rational(1));
        if (negate) c = -c;
        d.set_coeff(slot, d.coeff(slot) + c);
    }

    bool starts_atom(Tok k) const { return k == Tok::integer || k == Tok::var || k == Tok::lparen; }

    Polynomial sum() {
        Polynomial acc(n_);
        bool first = true;
        while (true) {
            const Token& t = lex_.peek();
            bool negate = false;
            if (t.kind == Tok::plus || t.kind == Tok::minus) {
                negate = t.kind == Tok::minus;
                lex_.take();
            } else if (!first) {
                break;
            }
            Polynomial p = product();
            acc += negate ? -p : p;
            first = false;
        }
        return acc;
    }

    Polynomial product() { return product_from(factor()); }

    Polynomial product_from(Polynomial acc) {
        acc = exponent_of(std::move(acc));
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Tok::star) {
                lex_.take();
                if (lex_.peek().kind == Tok::dop) break;
                acc = acc * factor();
            } else if (starts_atom(t.kind)) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() { return exponent_of(atom()); }

    Polynomial exponent_of(Polynomial base) {
        if (lex_.peek().kind != Tok::caret) return base;
        lex_.take();
        const Token t = lex_.peek();
        if (t.kind == Tok::minus) fail(t, "negative exponent");
        if (t.kind != Tok::integer) fail(t, "expected an integer exponent");
        lex_.take();
        if (t.digits.size() > 6 || std::stoul(t.digits) > kMaxExponent) fail(t, "exponent too large");
        return pow(base, static_cast<std::uint32_t>(std::stoul(t.digits)));
    }

    Polynomial number_from(const Token& t) {
        mpz_class num(t.digits);
        if (lex_.peek().kind == Tok::slash) {
            lex_.take();
            const Token den = lex_.peek();
            if (den.kind != Tok::integer) fail(den, "expected a denominator");
            lex_.take();
            mpz_class d(den.digits);
            if (d == 0) fail(den, "zero denominator");
            Rational q(num, d);
            q.canonicalize();
            return Polynomial(n_, q);
        }
        return Polynomial(n_, Rational(num));
    }

    Polynomial atom() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::integer: lex_.take(); return number_from(t);
            case Tok::var: lex_.take(); return Polynomial::variable(n_, index(t));
            case Tok::lparen: {
                lex_.take();
                Polynomial p = sum();
                if (lex_.peek().kind != Tok::rparen) fail(lex_.peek(), "expected ')'");
                lex_.take();
                return p;
            }
            case Tok::end: fail(t, "unexpected end of input");
            default: fail(t, "expected a number, variable or '('");
        }
    }

    Lexer lex_;
    std::size_t n_;
};

std::string format_monomial(const Monomial& m) {
    std::string out;
    for (std::size_t i = 1; i <= m.size(); ++i) {
        const auto e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += ' ';
        out += "x" + std::to_string(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n) { return Parser(text, n).polynomial(); }

Derivation parse_derivation(std::string_view text, std::size_t n) { return Parser(text, n).derivation(); }

std::string format_rational(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        std::string body;
        if (m.total_degree() == 0) {
            body = format_rational(mag);
        } else {
            body = mag == 1 ? "" : format_rational(mag) + " ";
            body += format_monomial(m);
        }
        if (first) {
            out = (neg ? "-" : "") + body;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
        first = false;
    }
    return out;
}

std::string format_derivation(const Derivation& d) {
    std::string out;
    for (std::size_t i = 1; i <= d.ambient(); ++i) {
        const auto& f = d.coeff(i);
        if (f.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string dop = "d" + std::to_string(i);
        out += f == Polynomial(d.ambient(), Rational(1)) ? dop : "(" + format_polynomial(f) + ") " + dop;
    }
    return out.empty() ? "0" : out;
}

std::string format_exponents(std::span<const std::uint32_t> alpha) {
    std::string out = "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(alpha[i]);
    }
    return out + ")";
}

}  // namespace wn
