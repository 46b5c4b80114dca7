#include "milnor/parser.hpp"

#include <cctype>
#include <sstream>

namespace milnor {

namespace {

struct Token {
    enum Kind { Number, Variable, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, size_t pos) const {
        std::ostringstream os;
        os << "syntax error at column " << (pos + 1) << ": " << msg << "\n";
        os << "  " << text_ << "\n";
        os << "  " << std::string(pos, ' ') << "^";
        throw input_error(os.str());
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= text_.size()) {
            tok_ = {Token::End, "", start};
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t j = i_;
            bool seen_slash = false;
            while (j < text_.size()) {
                char d = text_[j];
                if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
                    ++j;
                } else if (d == '/' && !seen_slash && j + 1 < text_.size() &&
                           std::isdigit(static_cast<unsigned char>(text_[j + 1]))) {
                    seen_slash = true;
                    ++j;
                } else {
                    break;
                }
            }
            tok_ = {Token::Number, text_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])))) ++j;
            tok_ = {Token::Variable, text_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+", start}; return;
            case '-': tok_ = {Token::Minus, "-", start}; return;
            case '*': tok_ = {Token::Star, "*", start}; return;
            case '^': tok_ = {Token::Caret, "^", start}; return;
            case '(': tok_ = {Token::LParen, "(", start}; return;
            case ')': tok_ = {Token::RParen, ")", start}; return;
            default: fail(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string text_;
    size_t i_ = 0;
    Token tok_{Token::End, "", 0};
};

class Parser {
public:
    Parser(const std::string& text, VarSet vars) : lex_(text), vars_(vars) {}

    MPoly parse() {
        MPoly e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::End) {
            if (t.kind == Token::Number || t.kind == Token::Variable || t.kind == Token::LParen)
                lex_.fail("implicit multiplication is not supported; write '*'", t.pos);
            lex_.fail("unexpected token '" + t.text + "'", t.pos);
        }
        return e;
    }

private:
    MPoly expr() {
        MPoly acc = term();
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            Token op = lex_.take();
            MPoly rhs = term();
            acc = (op.kind == Token::Plus) ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    MPoly factor() {
        MPoly b = base();
        if (lex_.peek().kind == Token::Caret) {
            Token caret = lex_.take();
            const Token& e = lex_.peek();
            if (e.kind != Token::Number || e.text.find('/') != std::string::npos ||
                e.text.find('.') != std::string::npos)
                lex_.fail("exponent must be a literal non-negative integer", caret.pos + 1);
            Token num = lex_.take();
            unsigned long exp = 0;
            try {
                exp = std::stoul(num.text);
            } catch (...) {
                lex_.fail("exponent out of range", num.pos);
            }
            return b.pow(static_cast<unsigned>(exp));
        }
        return b;
    }

    MPoly base() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Number: {
                Token n = lex_.take();
                return MPoly::constant(vars_, rat_from_string(n.text));
            }
            case Token::Variable: {
                Token v = lex_.take();
                if (v.text != "x" && v.text != "y" && v.text != "t")
                    lex_.fail("unknown identifier '" + v.text + "' (variables are x, y, t)", v.pos);
                return MPoly::variable(vars_, var_from_name(v.text));
            }
            case Token::LParen: {
                lex_.take();
                MPoly e = expr();
                if (lex_.peek().kind != Token::RParen) lex_.fail("expected ')'", lex_.peek().pos);
                lex_.take();
                return e;
            }
            case Token::Minus: {
                lex_.take();
                return -base();
            }
            default:
                lex_.fail("expected a number, variable, '(' or '-'", t.pos);
        }
    }

    Lexer lex_;
    VarSet vars_;
};

}  // namespace

MPoly parse_poly(const std::string& text, VarSet vars) {
    Parser p(text, vars);
    return p.parse();
}

MPoly parse_poly(const std::string& text) {
    MPoly full = parse_poly(text, VarSet{Var::x, Var::y, Var::t});
    VarSet used;
    for (const auto& [m, c] : full.terms())
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i] > 0) used.add(static_cast<Var>(i));
    // x and y stay declared either way; they are the coordinate variables
    used.add(Var::x);
    used.add(Var::y);
    return full.restricted(used);
}

}  // namespace milnor
