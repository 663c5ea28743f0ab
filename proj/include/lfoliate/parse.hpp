#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lfoliate/exterior.hpp"
#include "lfoliate/foliation.hpp"

namespace lfoliate {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_),
          col(col_) {}
};

// Surface syntax context: ordered variable names (position = engine index)
// and named rational parameters.
struct ParseContext {
    std::vector<std::string> var_names;
    std::map<std::string, Rat> params;

    static ParseContext standard(int nvars) {
        ParseContext ctx;
        for (int i = 0; i < nvars; ++i) ctx.var_names.push_back(default_var_name(i));
        return ctx;
    }
    int nvars() const { return (int)var_names.size(); }
    std::optional<int> var_index(const std::string& name) const {
        for (size_t i = 0; i < var_names.size(); ++i)
            if (var_names[i] == name) return (int)i;
        return std::nullopt;
    }
};

namespace detail {

enum class Tok { number, ident, var, dz, ddz, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;   // ident / var name
    mpz_class value;    // number
    int var_index = -1; // resolved for var/dz/ddz
    int line = 1, col = 1;
};

class Lexer {
public:
    Lexer(const std::string& src, const ParseContext& ctx) : src_(src), ctx_(ctx) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur_.line, cur_.col); }

private:
    void bump(char c) {
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) bump(src_[pos_]);
    }

    // Reads z<digits> or z{digits} starting at pos_ (after 'z' has been seen).
    std::optional<std::string> read_var_name() {
        size_t p = pos_;
        if (p >= src_.size() || src_[p] != 'z') return std::nullopt;
        size_t q = p + 1;
        std::string name = "z";
        if (q < src_.size() && src_[q] == '{') {
            ++q;
            std::string digits;
            while (q < src_.size() && std::isdigit((unsigned char)src_[q])) digits += src_[q++];
            if (digits.empty() || q >= src_.size() || src_[q] != '}') return std::nullopt;
            ++q;
            name += "{" + digits + "}";
        } else {
            std::string digits;
            while (q < src_.size() && std::isdigit((unsigned char)src_[q])) digits += src_[q++];
            if (digits.empty()) return std::nullopt;
            name += digits;
        }
        for (size_t i = p; i < q; ++i) bump(src_[i]);
        return name;
    }

    void advance() {
        skip_ws();
        cur_ = Token{};
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_.kind = Tok::end;
            return;
        }
        char c = src_[pos_];
        // d/dz<k> token
        if (c == 'd' && pos_ + 2 < src_.size() && src_[pos_ + 1] == '/' && src_[pos_ + 2] == 'd') {
            bump('d');
            bump('/');
            bump('d');
            auto name = read_var_name();
            if (!name) throw ParseError("expected variable after d/d", line_, col_);
            auto idx = ctx_.var_index(*name);
            if (!idx) throw ParseError("unknown variable " + *name, line_, col_);
            cur_.kind = Tok::ddz;
            cur_.text = *name;
            cur_.var_index = *idx;
            return;
        }
        // dz<k> token
        if (c == 'd' && pos_ + 1 < src_.size() && src_[pos_ + 1] == 'z') {
            size_t save_pos = pos_;
            int save_line = line_, save_col = col_;
            bump('d');
            auto name = read_var_name();
            if (name) {
                auto idx = ctx_.var_index(*name);
                if (!idx) throw ParseError("unknown variable " + *name, line_, col_);
                cur_.kind = Tok::dz;
                cur_.text = *name;
                cur_.var_index = *idx;
                return;
            }
            pos_ = save_pos;
            line_ = save_line;
            col_ = save_col;
        }
        if (c == 'z') {
            size_t save_pos = pos_;
            int save_line = line_, save_col = col_;
            auto name = read_var_name();
            if (name) {
                auto idx = ctx_.var_index(*name);
                if (idx) {
                    cur_.kind = Tok::var;
                    cur_.text = *name;
                    cur_.var_index = *idx;
                    return;
                }
                // not a declared variable: fall through to identifier
                pos_ = save_pos;
                line_ = save_line;
                col_ = save_col;
            }
        }
        if (std::isdigit((unsigned char)c)) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) {
                digits += src_[pos_];
                bump(src_[pos_]);
            }
            cur_.kind = Tok::number;
            cur_.value = mpz_class(digits);
            return;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_')) {
                id += src_[pos_];
                bump(src_[pos_]);
            }
            cur_.kind = Tok::ident;
            cur_.text = id;
            return;
        }
        switch (c) {
            case '+': cur_.kind = Tok::plus; break;
            case '-': cur_.kind = Tok::minus; break;
            case '*': cur_.kind = Tok::star; break;
            case '/': cur_.kind = Tok::slash; break;
            case '^': cur_.kind = Tok::caret; break;
            case '(': cur_.kind = Tok::lparen; break;
            case ')': cur_.kind = Tok::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        bump(c);
    }

    const std::string& src_;
    const ParseContext& ctx_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

// Rational function carried through the expression grammar; division by a
// non-constant polynomial is legal only where the surface syntax admits
// quotients (integral bases, exp arguments).
struct RF {
    Poly num, den;
    bool den_trivial() const { return den.is_constant() && den.constant_value() == 1; }
};

class Parser {
public:
    Parser(const std::string& src, const ParseContext& ctx) : lex_(src, ctx), ctx_(ctx) {}

    Poly parse_poly_full() {
        Poly p = expr();
        expect_end();
        return p;
    }

    VField parse_field_full() {
        int n = ctx_.nvars();
        VField x(n);
        bool negate = accept_sign();
        while (true) {
            // optional coefficient product, then a d/dz token
            Poly coeff = Poly::constant(n, Rat(1));
            bool have_coeff = false;
            while (lex_.peek().kind != Tok::ddz) {
                if (lex_.peek().kind == Tok::end)
                    lex_.fail(have_coeff ? "expected d/dz<k>" : "expected a field term");
                coeff *= factor();
                have_coeff = true;
                if (lex_.peek().kind == Tok::star) {
                    lex_.take();
                    continue;
                }
                break;
            }
            if (lex_.peek().kind != Tok::ddz) lex_.fail("expected d/dz<k>");
            Token t = lex_.take();
            if (negate) coeff = -coeff;
            x.set_component(t.var_index, x.component(t.var_index) + coeff);
            if (lex_.peek().kind == Tok::plus) {
                lex_.take();
                negate = false;
            } else if (lex_.peek().kind == Tok::minus) {
                lex_.take();
                negate = true;
            } else {
                break;
            }
        }
        expect_end();
        return x;
    }

    KForm parse_form_full() {
        int n = ctx_.nvars();
        std::optional<KForm> acc;
        Poly zero_part(n);
        bool negate = accept_sign();
        while (true) {
            Poly coeff = Poly::constant(n, Rat(1));
            bool have_coeff = false;
            while (lex_.peek().kind != Tok::dz) {
                if (lex_.peek().kind == Tok::end) break;
                coeff *= factor();
                have_coeff = true;
                if (lex_.peek().kind == Tok::star) {
                    lex_.take();
                    continue;
                }
                break;
            }
            if (negate) coeff = -coeff;
            if (lex_.peek().kind == Tok::dz) {
                IdxTuple idx;
                idx.push_back(lex_.take().var_index);
                while (lex_.peek().kind == Tok::caret) {
                    lex_.take();
                    if (lex_.peek().kind != Tok::dz) lex_.fail("expected dz<k> after ^");
                    idx.push_back(lex_.take().var_index);
                }
                if (!acc) acc = KForm((int)idx.size(), n);
                if ((int)idx.size() != acc->form_degree()) lex_.fail("mixed form degrees");
                acc->add_term(idx, coeff);
            } else {
                if (!have_coeff) lex_.fail("expected a form term");
                zero_part += coeff;
            }
            if (lex_.peek().kind == Tok::plus) {
                lex_.take();
                negate = false;
            } else if (lex_.peek().kind == Tok::minus) {
                lex_.take();
                negate = true;
            } else {
                break;
            }
        }
        expect_end();
        if (acc) {
            if (!zero_part.is_zero()) lex_.fail("cannot mix 0-form and k-form terms");
            return *acc;
        }
        return KForm::from_poly(zero_part);
    }

    LogExpIntegral parse_integral_full() {
        int n = ctx_.nvars();
        std::vector<std::pair<Poly, Rat>> log_parts;
        std::optional<std::pair<Poly, Poly>> exp_part;
        while (true) {
            if (lex_.peek().kind == Tok::ident && lex_.peek().text == "exp") {
                lex_.take();
                if (lex_.peek().kind != Tok::lparen) lex_.fail("expected ( after exp");
                lex_.take();
                detail::RF hk = expr_rf();
                if (lex_.peek().kind != Tok::rparen) lex_.fail("expected ) in exp");
                lex_.take();
                if (exp_part) lex_.fail("only one exp factor is allowed");
                exp_part = {hk.num, hk.den};
            } else {
                // base [^ exponent]; the base may be a quotient (P/Q)
                detail::RF base;
                if (lex_.peek().kind == Tok::lparen) {
                    lex_.take();
                    base = expr_rf();
                    if (lex_.peek().kind != Tok::rparen) lex_.fail("expected )");
                    lex_.take();
                } else {
                    base = factor_nopow();
                }
                Rat lambda(1);
                if (lex_.peek().kind == Tok::caret) {
                    lex_.take();
                    lambda = rational_exponent();
                }
                push_log(log_parts, base.num, lambda);
                if (!base.den.is_constant()) push_log(log_parts, base.den, -lambda);
                else if (base.den.constant_value() == 0) lex_.fail("zero denominator");
            }
            if (lex_.peek().kind == Tok::star) {
                lex_.take();
                continue;
            }
            break;
        }
        expect_end();
        LogExpIntegral f;
        f.nvars = n;
        f.log_part = std::move(log_parts);
        if (exp_part) {
            f.exp_num = exp_part->first;
            f.exp_den = exp_part->second;
            f.has_exp = true;
        } else {
            f.exp_num = Poly(n);
            f.exp_den = Poly::constant(n, Rat(1));
        }
        return f;
    }

    Rat parse_rat_full() {
        Poly p = expr();
        expect_end();
        if (!p.is_constant()) lex_.fail("expected a rational expression");
        return p.constant_value();
    }

private:
    bool accept_sign() {
        bool neg = false;
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            if (lex_.take().kind == Tok::minus) neg = !neg;
        }
        return neg;
    }

    void expect_end() {
        if (lex_.peek().kind != Tok::end) lex_.fail("unexpected trailing input");
    }

    static void push_log(std::vector<std::pair<Poly, Rat>>& parts, const Poly& p, const Rat& l) {
        if (l == 0) return;
        if (p.is_constant()) return;  // constant factors do not affect the foliation
        for (auto& [q, mu] : parts)
            if (q == p) {
                mu += l;
                return;
            }
        parts.push_back({p, l});
    }

    Rat rational_exponent() {
        bool neg = false;
        while (lex_.peek().kind == Tok::minus || lex_.peek().kind == Tok::plus)
            if (lex_.take().kind == Tok::minus) neg = !neg;
        Rat v;
        if (lex_.peek().kind == Tok::number) {
            mpz_class num = lex_.take().value;
            if (lex_.peek().kind == Tok::slash) {
                lex_.take();
                if (lex_.peek().kind != Tok::number) lex_.fail("expected denominator");
                mpz_class den = lex_.take().value;
                if (den == 0) lex_.fail("zero denominator");
                v = Rat(num) / Rat(den);
            } else {
                v = Rat(num);
            }
        } else if (lex_.peek().kind == Tok::ident) {
            Token t = lex_.take();
            auto it = ctx_.params.find(t.text);
            if (it == ctx_.params.end()) throw ParseError("unknown parameter " + t.text, t.line, t.col);
            v = it->second;
        } else if (lex_.peek().kind == Tok::lparen) {
            lex_.take();
            Poly p = expr();
            if (lex_.peek().kind != Tok::rparen) lex_.fail("expected )");
            lex_.take();
            if (!p.is_constant()) lex_.fail("exponent must be a rational expression");
            v = p.constant_value();
        } else {
            lex_.fail("expected an exponent");
        }
        return neg ? Rat(-v) : v;
    }

    // expr as a plain polynomial: the rational-function tail must be constant.
    Poly expr() {
        RF r = expr_rf();
        if (!r.den.is_constant() || r.den.constant_value() == 0)
            lex_.fail("expected a polynomial (division by a non-constant)");
        return (Rat(1) / r.den.constant_value()) * r.num;
    }

    RF expr_rf() {
        bool neg = accept_sign();
        RF acc = term_rf();
        if (neg) acc.num = -acc.num;
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            bool minus = lex_.take().kind == Tok::minus;
            RF t = term_rf();
            // cross-multiply; keep it simple, no gcd reduction here
            Poly num = acc.num * t.den + (minus ? -(t.num * acc.den) : t.num * acc.den);
            acc.num = num;
            acc.den = acc.den * t.den;
        }
        return acc;
    }

    RF term_rf() {
        RF acc = factor_rf();
        while (lex_.peek().kind == Tok::star || lex_.peek().kind == Tok::slash) {
            bool div = lex_.take().kind == Tok::slash;
            RF f = factor_rf();
            if (div) {
                if (f.num.is_zero()) lex_.fail("division by zero");
                acc.num = acc.num * f.den;
                acc.den = acc.den * f.num;
            } else {
                acc.num = acc.num * f.num;
                acc.den = acc.den * f.den;
            }
        }
        return acc;
    }

    Poly factor() {
        RF r = factor_rf();
        if (!r.den.is_constant() || r.den.constant_value() == 0)
            lex_.fail("expected a polynomial factor (division by a non-constant)");
        return (Rat(1) / r.den.constant_value()) * r.num;
    }

    RF factor_rf() {
        RF base = factor_nopow();
        while (lex_.peek().kind == Tok::caret) {
            Token caret = lex_.take();
            if (lex_.peek().kind == Tok::minus)
                throw ParseError("negative exponent on a variable or polynomial", caret.line,
                                 caret.col);
            if (lex_.peek().kind != Tok::number) lex_.fail("expected a non-negative integer exponent");
            Token e = lex_.take();
            if (!e.value.fits_sint_p()) lex_.fail("exponent too large");
            int k = (int)e.value.get_si();
            base.num = base.num.pow(k);
            base.den = base.den.pow(k);
        }
        return base;
    }

    RF factor_nopow() {
        int n = ctx_.nvars();
        Poly one = Poly::constant(n, Rat(1));
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::number: {
                Token v = lex_.take();
                return {Poly::constant(n, Rat(v.value)), one};
            }
            case Tok::var: {
                Token v = lex_.take();
                return {Poly::variable(n, v.var_index), one};
            }
            case Tok::ident: {
                Token v = lex_.take();
                auto it = ctx_.params.find(v.text);
                if (it == ctx_.params.end())
                    throw ParseError("unknown identifier " + v.text, v.line, v.col);
                return {Poly::constant(n, it->second), one};
            }
            case Tok::lparen: {
                lex_.take();
                RF p = expr_rf();
                if (lex_.peek().kind != Tok::rparen) lex_.fail("expected )");
                lex_.take();
                return p;
            }
            case Tok::minus:
            case Tok::plus: {
                bool neg = accept_sign();
                RF p = factor_rf();
                if (neg) p.num = -p.num;
                return p;
            }
            default: lex_.fail("expected a polynomial factor");
        }
    }

    Lexer lex_;
    const ParseContext& ctx_;
};

}  // namespace detail

inline Poly parse_poly(const std::string& text, const ParseContext& ctx) {
    return detail::Parser(text, ctx).parse_poly_full();
}
inline VField parse_field(const std::string& text, const ParseContext& ctx) {
    return detail::Parser(text, ctx).parse_field_full();
}
inline KForm parse_form(const std::string& text, const ParseContext& ctx) {
    return detail::Parser(text, ctx).parse_form_full();
}
inline LogExpIntegral parse_integral(const std::string& text, const ParseContext& ctx) {
    return detail::Parser(text, ctx).parse_integral_full();
}
inline Rat parse_rat_expr(const std::string& text, const ParseContext& ctx) {
    return detail::Parser(text, ctx).parse_rat_full();
}

inline std::string render(const LogExpIntegral& f, const std::vector<std::string>* names = nullptr) {
    std::ostringstream os;
    bool first = true;
    for (auto& [p, l] : f.log_part) {
        if (!first) os << " * ";
        first = false;
        os << "(" << render(p, names) << ")^" << to_string(l);
    }
    if (f.has_exp) {
        if (!first) os << " * ";
        first = false;
        os << "exp((" << render(f.exp_num, names) << ")/(" << render(f.exp_den, names) << "))";
    }
    if (first) os << "(1)^1";
    return os.str();
}

}  // namespace lfoliate
