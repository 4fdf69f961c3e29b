#include "jetcert/parser.hpp"

#include <cctype>

namespace jetcert {

namespace {

class Parser {
public:
    Parser(const std::string &text, const ContextPtr &ctx) : text_(text), ctx_(ctx) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string &text_;
    const ContextPtr &ctx_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial a = atom();
        if (eat('^')) return a.pow(natural("exponent"));
        return a;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (std::isdigit((unsigned char)c)) return rational_literal();
        if (std::isalpha((unsigned char)c)) return identifier();
        fail("expected identifier, number or '('");
    }

    unsigned int natural(const char *what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
            fail(std::string("expected ") + what);
        unsigned long long v = 0;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
            v = v * 10 + (unsigned)(text_[pos_] - '0');
            if (v > 1u << 30) fail("exponent too large");
            ++pos_;
        }
        return (unsigned int)v;
    }

    Polynomial rational_literal() {
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
            digits += text_[pos_++];
        Integer num(digits);
        Integer den(1);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::string d2;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
                d2 += text_[pos_++];
            if (d2.empty()) fail("expected denominator");
            den = Integer(d2);
            if (den == 0) fail("zero denominator");
        }
        return Polynomial::constant(ctx_, Rational(num, den));
    }

    Polynomial identifier() {
        skip_ws();
        std::size_t start = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
            name += text_[pos_++];
        Variable v(name);
        if (pos_ < text_.size() && text_[pos_] == '#') {
            ++pos_;
            v.level = (int)natural("jet level after '#'");
        }
        if (auto idx = ctx_->find(v)) return Polynomial::variable(ctx_, *idx);
        pos_ = start;
        fail("unknown identifier '" + v.str() + "'");
    }
};

} // namespace

Polynomial parse_polynomial(const std::string &text, const ContextPtr &ctx) {
    return Parser(text, ctx).run();
}

Variable parse_variable(const std::string &text) {
    auto hash = text.find('#');
    if (hash == std::string::npos) return Variable(text);
    std::string name = text.substr(0, hash);
    std::string lvl = text.substr(hash + 1);
    if (name.empty() || lvl.empty() ||
        lvl.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed variable '" + text + "'", 0);
    return Variable(name, std::stoi(lvl));
}

} // namespace jetcert
