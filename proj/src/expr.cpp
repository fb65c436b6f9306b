#include "gencyc/expr.hpp"

#include <cctype>
#include <set>

namespace gencyc {

namespace {

struct Token {
    enum class Type { Ident, Int, Punct, End };
    Type type = Type::End;
    std::string text;
    int line = 1;
    int column = 1;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = column;
        std::size_t j = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            tok.type = Token::Type::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            tok.type = Token::Type::Int;
        } else if (std::string("+-*^(),").find(c) != std::string::npos) {
            j = i + 1;
            tok.type = Token::Type::Punct;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, column);
        }
        tok.text = text.substr(i, j - i);
        out.push_back(tok);
        advance(j - i);
    }
    Token end;
    end.type = Token::Type::End;
    end.line = line;
    end.column = column;
    out.push_back(end);
    return out;
}

const std::set<std::string> kClassCalls = {"diamond", "bulletL", "wedge", "dimpart"};

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    Expr query() {
        Expr e;
        if (peek_call("deg")) {
            e = node(Expr::Kind::Deg, peek());
            next();
            expect("(");
            e.args.push_back(expr());
            expect(")");
        } else if (peek_call("mult")) {
            e = node(Expr::Kind::Mult, peek());
            next();
            expect("(");
            e.args.push_back(expr());
            expect(",");
            e.name = ident("point name");
            expect(")");
        } else {
            e = expr();
        }
        finish();
        return e;
    }

    Expr arith_only() {
        Expr e = arith();
        finish();
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    bool at(const char* punct) const { return peek().type == Token::Type::Punct && peek().text == punct; }
    bool peek_call(const std::string& name) const {
        return peek().type == Token::Type::Ident && peek().text == name && peek(1).type == Token::Type::Punct &&
               peek(1).text == "(";
    }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        const std::string found = t.type == Token::Type::End ? "end of input" : "'" + t.text + "'";
        throw ParseError("expected " + what + ", found " + found, t.line, t.column);
    }

    void expect(const char* punct) {
        if (!at(punct))
            fail(std::string("'") + punct + "'");
        next();
    }

    void finish() {
        if (peek().type != Token::Type::End)
            fail("end of input");
    }

    std::string ident(const char* what) {
        if (peek().type != Token::Type::Ident)
            fail(what);
        return next().text;
    }

    static Expr node(Expr::Kind kind, const Token& at) {
        Expr e;
        e.kind = kind;
        e.line = at.line;
        e.column = at.column;
        return e;
    }

    static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, const Token& op) {
        Expr e = node(kind, op);
        e.args.push_back(std::move(lhs));
        e.args.push_back(std::move(rhs));
        return e;
    }

    // expr := ['-'] term (('+'|'-') term)*
    Expr expr() {
        Expr lhs;
        if (at("-")) {
            const Token op = next();
            lhs = node(Expr::Kind::Neg, op);
            lhs.args.push_back(term());
        } else {
            lhs = term();
        }
        while (at("+") || at("-")) {
            const Token op = next();
            lhs = binary(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs), term(), op);
        }
        return lhs;
    }

    // term := scalar '*' atom | atom | '0'
    Expr term() {
        const std::size_t saved = pos_;
        const Token start = peek();
        try {
            Expr s = scalar();
            if (at("*")) {
                next();
                Expr e = node(Expr::Kind::Scale, start);
                e.args.push_back(std::move(s));
                e.args.push_back(atom());
                return e;
            }
        } catch (const ParseError&) {
            if (start.type == Token::Type::Int)
                throw;
        }
        pos_ = saved;
        if (start.type == Token::Type::Int && start.text == "0") {
            Expr zero = node(Expr::Kind::Int, next());
            return zero;
        }
        if (start.type == Token::Type::Int) {
            next();
            fail("'*' after integer coefficient");
        }
        return atom();
    }

    // scalar := INT | IDENT | '(' arith ')'
    Expr scalar() {
        const Token& t = peek();
        if (t.type == Token::Type::Int) {
            Expr e = node(Expr::Kind::Int, t);
            e.value = Integer(next().text);
            return e;
        }
        if (t.type == Token::Type::Ident && !kClassCalls.count(t.text)) {
            Expr e = node(Expr::Kind::Ref, t);
            e.name = next().text;
            return e;
        }
        if (at("(")) {
            next();
            Expr e = arith();
            expect(")");
            return e;
        }
        fail("scalar");
    }

    Expr atom() {
        const Token t = peek();
        if (t.type == Token::Type::Ident && peek_call(t.text) && kClassCalls.count(t.text)) {
            next();
            expect("(");
            Expr e;
            if (t.text == "diamond" || t.text == "bulletL") {
                e = node(t.text == "diamond" ? Expr::Kind::Diamond : Expr::Kind::BulletL, t);
                e.args.push_back(expr());
                expect(",");
                e.args.push_back(expr());
            } else if (t.text == "wedge") {
                e = node(Expr::Kind::Wedge, t);
                e.args.push_back(arith());
                expect(",");
                e.args.push_back(expr());
            } else {
                e = node(Expr::Kind::DimPart, t);
                e.args.push_back(expr());
                expect(",");
                if (peek().type != Token::Type::Int)
                    fail("dimension");
                e.value = Integer(next().text);
            }
            expect(")");
            return e;
        }
        if (t.type == Token::Type::Ident) {
            if (t.text == "deg" || t.text == "mult")
                if (peek_call(t.text))
                    throw ParseError(t.text + "(...) is only allowed at the top level", t.line, t.column);
            Expr e = node(Expr::Kind::Ref, t);
            e.name = next().text;
            return e;
        }
        if (at("(")) {
            next();
            Expr e = expr();
            expect(")");
            return e;
        }
        fail("class expression");
    }

    // arith := aterm (('+'|'-') aterm)*
    Expr arith() {
        Expr lhs = aterm();
        while (at("+") || at("-")) {
            const Token op = next();
            lhs = binary(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs), aterm(), op);
        }
        return lhs;
    }

    // aterm := afactor ('*' afactor)*
    Expr aterm() {
        Expr lhs = afactor();
        while (at("*")) {
            const Token op = next();
            lhs = binary(Expr::Kind::Mul, std::move(lhs), afactor(), op);
        }
        return lhs;
    }

    // afactor := '-' afactor | abase ['^' ['-'] INT]
    Expr afactor() {
        if (at("-")) {
            const Token op = next();
            Expr e = node(Expr::Kind::Neg, op);
            e.args.push_back(afactor());
            return e;
        }
        Expr base = abase();
        if (!at("^"))
            return base;
        const Token op = next();
        bool negative = false;
        if (at("-")) {
            next();
            negative = true;
        }
        if (peek().type != Token::Type::Int)
            fail("integer exponent");
        Expr e = node(Expr::Kind::Pow, op);
        e.value = Integer(next().text);
        if (negative)
            e.value = -e.value;
        e.args.push_back(std::move(base));
        return e;
    }

    // abase := INT | IDENT | '(' arith ')'
    Expr abase() {
        const Token& t = peek();
        if (t.type == Token::Type::Int) {
            Expr e = node(Expr::Kind::Int, t);
            e.value = Integer(next().text);
            return e;
        }
        if (t.type == Token::Type::Ident) {
            Expr e = node(Expr::Kind::Ref, t);
            e.name = next().text;
            return e;
        }
        if (at("(")) {
            next();
            Expr e = arith();
            expect(")");
            return e;
        }
        fail("integer, name or '('");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

bool is_class_atom(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Ref:
    case Expr::Kind::Diamond:
    case Expr::Kind::BulletL:
    case Expr::Kind::Wedge:
    case Expr::Kind::DimPart:
        return true;
    default:
        return false;
    }
}

bool is_sum(const Expr& e) { return e.kind == Expr::Kind::Add || e.kind == Expr::Kind::Sub; }

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string print_arith(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Int:
        return e.value < 0 ? paren(e.value.str()) : e.value.str();
    case Expr::Kind::Ref:
        return e.name;
    case Expr::Kind::Neg: {
        const Expr& c = e.args[0];
        const std::string inner = print_arith(c);
        return "-" + (is_sum(c) || c.kind == Expr::Kind::Mul ? paren(inner) : inner);
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
        const std::string rhs = print_arith(e.args[1]);
        return print_arith(e.args[0]) + (e.kind == Expr::Kind::Add ? " + " : " - ") +
               (is_sum(e.args[1]) ? paren(rhs) : rhs);
    }
    case Expr::Kind::Mul: {
        const std::string lhs = print_arith(e.args[0]);
        const std::string rhs = print_arith(e.args[1]);
        return (is_sum(e.args[0]) ? paren(lhs) : lhs) + "*" +
               (is_sum(e.args[1]) || e.args[1].kind == Expr::Kind::Mul ? paren(rhs) : rhs);
    }
    case Expr::Kind::Pow: {
        const Expr& b = e.args[0];
        const bool plain = (b.kind == Expr::Kind::Int && b.value >= 0) || b.kind == Expr::Kind::Ref;
        const std::string base = print_arith(b);
        return (plain ? base : paren(base)) + "^" + e.value.str();
    }
    default:
        return paren(print(e));
    }
}

} // namespace

Expr parse(const std::string& text) { return Parser(text).query(); }

Expr parse_arith(const std::string& text) { return Parser(text).arith_only(); }

std::string print(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Ref:
        return e.name;
    case Expr::Kind::Int:
    case Expr::Kind::Mul:
    case Expr::Kind::Pow:
        return print_arith(e);
    case Expr::Kind::Neg: {
        const Expr& c = e.args[0];
        const std::string inner = print(c);
        return "-" + (is_sum(c) || c.kind == Expr::Kind::Neg ? paren(inner) : inner);
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
        const Expr& r = e.args[1];
        const std::string rhs = print(r);
        return print(e.args[0]) + (e.kind == Expr::Kind::Add ? " + " : " - ") +
               (is_sum(r) || r.kind == Expr::Kind::Neg ? paren(rhs) : rhs);
    }
    case Expr::Kind::Scale: {
        const Expr& s = e.args[0];
        const bool plain = (s.kind == Expr::Kind::Int && s.value >= 0) || s.kind == Expr::Kind::Ref;
        const std::string atom = print(e.args[1]);
        return (plain ? print_arith(s) : paren(print_arith(s))) + "*" +
               (is_class_atom(e.args[1]) ? atom : paren(atom));
    }
    case Expr::Kind::Diamond:
        return "diamond(" + print(e.args[0]) + ", " + print(e.args[1]) + ")";
    case Expr::Kind::BulletL:
        return "bulletL(" + print(e.args[0]) + ", " + print(e.args[1]) + ")";
    case Expr::Kind::Wedge:
        return "wedge(" + print_arith(e.args[0]) + ", " + print(e.args[1]) + ")";
    case Expr::Kind::DimPart:
        return "dimpart(" + print(e.args[0]) + ", " + e.value.str() + ")";
    case Expr::Kind::Deg:
        return "deg(" + print(e.args[0]) + ")";
    case Expr::Kind::Mult:
        return "mult(" + print(e.args[0]) + ", " + e.name + ")";
    }
    return {};
}

} // namespace gencyc
