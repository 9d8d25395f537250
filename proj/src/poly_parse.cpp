#include "eszlab/poly_parse.hpp"

#include <algorithm>
#include <cctype>

namespace eszlab {

namespace {

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

class Parser {
public:
    Parser(std::string_view text, std::vector<std::string> vars, bool infer)
        : text_(text), vars_(std::move(vars)), infer_(infer)
    {
    }

    MPoly run()
    {
        if (infer_) collect_variables();
        MPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p.with_vars(vars_);
    }

private:
    std::string_view text_;
    std::vector<std::string> vars_;
    bool infer_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c)
    {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool declared(const std::string& name) const
    {
        return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    }

    // Pre-pass so that inferred variables appear in textual order.
    void collect_variables()
    {
        std::size_t k = 0;
        while (k < text_.size()) {
            char c = text_[k];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                while (k < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[k])) || text_[k] == '/')) ++k;
                if (k < text_.size() && text_[k] == 'i' && (k + 1 == text_.size() || !is_ident_char(text_[k + 1]))) ++k;
                continue;
            }
            if (is_ident_start(c)) {
                std::size_t start = k;
                while (k < text_.size() && is_ident_char(text_[k])) ++k;
                std::string name(text_.substr(start, k - start));
                if (name != "i" && !declared(name)) vars_.push_back(name);
                continue;
            }
            ++k;
        }
    }

    MPoly constant(const GaussRat& c) const { return MPoly(vars_, c); }

    MPoly expr()
    {
        skip_ws();
        MPoly acc(vars_);
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        MPoly t = term();
        acc = negate ? -t : t;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    MPoly term()
    {
        MPoly acc = power();
        while (true) {
            if (accept('*')) {
                acc = acc * power();
            } else if (peek('/')) {
                std::size_t at = pos_;
                ++pos_;
                MPoly d = power();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail(d.is_zero() ? "division by zero" : "division by a non-constant polynomial");
                }
                acc *= d.constant_term().inverse();
            } else {
                break;
            }
        }
        return acc;
    }

    MPoly power()
    {
        MPoly base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 6) fail("exponent too large");
            base = pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    MPoly atom()
    {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (is_ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (declared(name)) return MPoly::variable(name, vars_);
            if (name == "i") return constant(GaussRat::i());
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    MPoly number()
    {
        std::size_t start = pos_;
        auto digits = [&]() {
            std::size_t s = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return std::string(text_.substr(s, pos_ - s));
        };
        std::string num = digits();
        std::string den = "1";
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            den = digits();
        }
        mpq_class q{mpz_class(num), mpz_class(den)};
        if (q.get_den() == 0) {
            pos_ = start;
            fail("zero denominator");
        }
        q.canonicalize();
        GaussRat value(q);
        if (pos_ < text_.size() && text_[pos_] == 'i' && (pos_ + 1 == text_.size() || !is_ident_char(text_[pos_ + 1]))) {
            ++pos_;
            value = GaussRat(mpq_class(0), q);
        }
        if (pos_ < text_.size() && is_ident_start(text_[pos_])) fail("missing '*' between number and variable");
        return constant(value);
    }
};

} // namespace

MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars)
{
    return Parser(text, vars, vars.empty()).run();
}

} // namespace eszlab
