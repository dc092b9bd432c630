#include "folia/parse.hpp"

#include <algorithm>
#include <cctype>

namespace folia {
namespace {

class Parser {
public:
    Parser(std::string_view text, const VarList& vars) : s_(text), vars_(vars) {}

    RatLogExpr parse_all() {
        RatLogExpr v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    static bool is_constant(const RatLogExpr& v) {
        return !v.has_logs() && v.rational().is_polynomial() && v.rational().num().is_constant();
    }

    static Rational constant_value(const RatLogExpr& v) { return v.rational().as_poly().constant_term(); }

    RatLogExpr expr() {
        RatLogExpr v = term();
        for (;;) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    RatLogExpr term() {
        RatLogExpr v = unary();
        for (;;) {
            std::size_t at = pos_;
            if (accept('*')) {
                v = multiply(v, unary(), at);
            } else if (accept('/')) {
                RatLogExpr d = unary();
                if (d.has_logs()) throw ParseError("cannot divide by a logarithm", at + 1);
                if (d.is_zero()) throw ParseError("division by zero", at + 1);
                if (v.has_logs()) {
                    if (!is_constant(d)) throw ParseError("logarithm divided by a non-constant", at + 1);
                    v = Rational(1 / constant_value(d)) * v;
                } else {
                    v = RatLogExpr(v.rational() / d.rational());
                }
            } else {
                return v;
            }
        }
    }

    RatLogExpr multiply(const RatLogExpr& a, const RatLogExpr& b, std::size_t at) {
        if (!a.has_logs() && !b.has_logs()) return RatLogExpr(a.rational() * b.rational());
        if (a.has_logs() && is_constant(b)) return constant_value(b) * a;
        if (b.has_logs() && is_constant(a)) return constant_value(a) * b;
        throw ParseError("logarithms may only be scaled by constants", at + 1);
    }

    RatLogExpr unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatLogExpr power() {
        std::size_t at = pos_;
        RatLogExpr base = atom();
        if (!accept('^')) return base;
        skip_ws();
        bool negative = accept('-');
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        unsigned long k = std::stoul(std::string(s_.substr(start, pos_ - start)));
        if (base.has_logs()) throw ParseError("powers of logarithms are not supported", at + 1);
        const RatFunc& r = base.rational();
        RatFunc num(r.num().pow(static_cast<unsigned>(k))), den(r.den().pow(static_cast<unsigned>(k)));
        if (negative) {
            if (r.is_zero()) throw ParseError("zero raised to a negative power", at + 1);
            return RatLogExpr(RatFunc(den.num(), num.num()));
        }
        return RatLogExpr(RatFunc(num.num(), den.num()));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    RatLogExpr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatLogExpr v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string id = identifier();
            if (id == "ln" || id == "log") return logarithm(at);
            if (vars_) {
                auto it = std::find(vars_->begin(), vars_->end(), id);
                if (it != vars_->end())
                    return RatLogExpr(Poly::variable(vars_, static_cast<std::size_t>(it - vars_->begin())));
            }
            throw ParseError("unknown identifier '" + id + "'", at + 1);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    RatLogExpr logarithm(std::size_t at) {
        expect('(');
        skip_ws();
        Rational scale = 1;
        std::size_t save = pos_;
        bool sqrt_arg = false;
        if (identifier() == "sqrt") {
            expect('(');
            sqrt_arg = true;
            scale = ratio(1, 2);
        } else {
            pos_ = save;
        }
        RatLogExpr arg = expr();
        if (sqrt_arg) expect(')');
        expect(')');
        if (arg.has_logs()) throw ParseError("nested logarithms are not supported", at + 1);
        if (arg.is_zero()) throw ParseError("logarithm of zero", at + 1);
        const RatFunc& r = arg.rational();
        RatLogExpr out = RatLogExpr::log(r.num(), scale);
        if (!r.den().is_constant()) out = out + RatLogExpr::log(r.den(), -scale);
        return out;
    }

    RatLogExpr number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        Rational v(std::string(s_.substr(start, pos_ - start)).empty()
                       ? std::string("0")
                       : std::string(s_.substr(start, pos_ - start)));
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            std::size_t fs = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string frac(s_.substr(fs, pos_ - fs));
            if (!frac.empty()) {
                mpz_class scale;
                mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
                v += Rational(mpz_class(frac), scale);
            }
        }
        v.canonicalize();
        return RatLogExpr(Poly::constant(v));
    }

    std::string_view s_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

RatLogExpr parse_ratlog(std::string_view text, const VarList& vars) {
    return Parser(text, vars).parse_all();
}

Poly parse_poly(std::string_view text, const VarList& vars) {
    RatLogExpr v = parse_ratlog(text, vars);
    if (v.has_logs()) throw ParseError("logarithm in a polynomial expression", 1);
    if (!v.rational().is_polynomial()) throw ParseError("non-polynomial expression", 1);
    Poly p = v.rational().as_poly();
    if (vars) p = p + Poly(vars);
    return p;
}

Rational parse_rational(std::string_view text) {
    Poly p = parse_poly(text, nullptr);
    return p.constant_term();
}

}  // namespace folia
