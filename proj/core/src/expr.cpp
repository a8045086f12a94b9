#include "scm/expr.hpp"

#include <cctype>
#include <cstdlib>

#include "scm/error.hpp"

namespace scm::expr {
namespace {

enum class Tok {
    End,
    Number,
    Text,
    Ident, // includes keywords and/or/not/true/false
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
};

struct Lexer {
    std::string_view src;
    std::size_t pos = 0; // byte offset of current token
    std::size_t next = 0;
    Tok tok = Tok::End;
    double number = 0;
    std::string text;

    explicit Lexer(std::string_view s) : src(s) { advance(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(pos + 1, msg);
    }

    void advance() {
        while (next < src.size() && std::isspace((unsigned char)src[next]))
            ++next;
        pos = next;
        if (next >= src.size()) {
            tok = Tok::End;
            return;
        }
        char c = src[next];
        auto two = [&](char second) {
            return next + 1 < src.size() && src[next + 1] == second;
        };
        if (c == '=' && two('=')) { tok = Tok::Eq; next += 2; return; }
        if (c == '!' && two('=')) { tok = Tok::Ne; next += 2; return; }
        if (c == '<') { tok = two('=') ? (next++, Tok::Le) : Tok::Lt; ++next; return; }
        if (c == '>') { tok = two('=') ? (next++, Tok::Ge) : Tok::Gt; ++next; return; }
        switch (c) {
        case '+': tok = Tok::Plus; ++next; return;
        case '-': tok = Tok::Minus; ++next; return;
        case '*': tok = Tok::Star; ++next; return;
        case '/': tok = Tok::Slash; ++next; return;
        case '(': tok = Tok::LParen; ++next; return;
        case ')': tok = Tok::RParen; ++next; return;
        default: break;
        }
        if (c == '\'') {
            std::size_t end = src.find('\'', next + 1);
            if (end == std::string_view::npos)
                throw ParseError(next + 1, "unterminated text literal");
            text = std::string(src.substr(next + 1, end - next - 1));
            tok = Tok::Text;
            next = end + 1;
            return;
        }
        if (std::isdigit((unsigned char)c) ||
            (c == '.' && next + 1 < src.size() &&
             std::isdigit((unsigned char)src[next + 1]))) {
            const char* begin = src.data() + next;
            char* end = nullptr;
            number = std::strtod(begin, &end);
            tok = Tok::Number;
            next += (std::size_t)(end - begin);
            return;
        }
        if (c == '_' || std::islower((unsigned char)c)) {
            std::size_t end = next;
            while (end < src.size() &&
                   (src[end] == '_' || std::islower((unsigned char)src[end]) ||
                    std::isdigit((unsigned char)src[end])))
                ++end;
            text = std::string(src.substr(next, end - next));
            tok = Tok::Ident;
            next = end;
            return;
        }
        throw ParseError(next + 1, std::string("unexpected character '") + c + "'");
    }

    bool is_keyword(const char* kw) const {
        return tok == Tok::Ident && text == kw;
    }
};

std::shared_ptr<Node> leaf(Node::Op op) {
    auto n = std::make_shared<Node>();
    n->op = op;
    return n;
}

NodePtr binary(Node::Op op, NodePtr l, NodePtr r) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

struct Parser {
    Lexer lx;
    explicit Parser(std::string_view s) : lx(s) {}

    NodePtr parse_expr() { return parse_or(); }

    NodePtr parse_or() {
        NodePtr n = parse_and();
        while (lx.is_keyword("or")) {
            lx.advance();
            n = binary(Node::Op::Or, n, parse_and());
        }
        return n;
    }

    NodePtr parse_and() {
        NodePtr n = parse_unary();
        while (lx.is_keyword("and")) {
            lx.advance();
            n = binary(Node::Op::And, n, parse_unary());
        }
        return n;
    }

    NodePtr parse_unary() {
        if (lx.is_keyword("not")) {
            lx.advance();
            auto n = std::make_shared<Node>();
            n->op = Node::Op::Not;
            n->lhs = parse_unary();
            return n;
        }
        return parse_comparison();
    }

    NodePtr parse_comparison() {
        NodePtr lhs = parse_additive();
        Node::Op op;
        switch (lx.tok) {
        case Tok::Eq: op = Node::Op::Eq; break;
        case Tok::Ne: op = Node::Op::Ne; break;
        case Tok::Lt: op = Node::Op::Lt; break;
        case Tok::Le: op = Node::Op::Le; break;
        case Tok::Gt: op = Node::Op::Gt; break;
        case Tok::Ge: op = Node::Op::Ge; break;
        default: return lhs;
        }
        lx.advance();
        return binary(op, lhs, parse_additive());
    }

    NodePtr parse_additive() {
        NodePtr n = parse_term();
        while (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
            Node::Op op = lx.tok == Tok::Plus ? Node::Op::Add : Node::Op::Sub;
            lx.advance();
            n = binary(op, n, parse_term());
        }
        return n;
    }

    NodePtr parse_term() {
        NodePtr n = parse_factor();
        while (lx.tok == Tok::Star || lx.tok == Tok::Slash) {
            Node::Op op = lx.tok == Tok::Star ? Node::Op::Mul : Node::Op::Div;
            lx.advance();
            n = binary(op, n, parse_factor());
        }
        return n;
    }

    NodePtr parse_factor() {
        if (lx.tok == Tok::Minus) {
            lx.advance();
            auto n = std::make_shared<Node>();
            n->op = Node::Op::Neg;
            n->lhs = parse_factor();
            return n;
        }
        return parse_primary();
    }

    NodePtr parse_primary() {
        switch (lx.tok) {
        case Tok::Number: {
            auto n = leaf(Node::Op::Number);
            n->number = lx.number;
            lx.advance();
            return n;
        }
        case Tok::Text: {
            auto n = leaf(Node::Op::Text);
            n->text = lx.text;
            lx.advance();
            return n;
        }
        case Tok::Ident: {
            auto n = std::make_shared<Node>();
            if (lx.text == "true" || lx.text == "false") {
                n->op = Node::Op::Boolean;
                n->boolean = lx.text == "true";
            } else if (lx.text == "and" || lx.text == "or" || lx.text == "not") {
                lx.fail("operand expected, got keyword '" + lx.text + "'");
            } else {
                n->op = Node::Op::Variable;
                n->text = lx.text;
            }
            lx.advance();
            return n;
        }
        case Tok::LParen: {
            lx.advance();
            NodePtr n = parse_expr();
            if (lx.tok != Tok::RParen) lx.fail("expected ')'");
            lx.advance();
            return n;
        }
        case Tok::End:
            throw ParseError(lx.src.size() + 1, "unexpected end of input");
        default:
            lx.fail("operand expected");
        }
    }
};

bool as_bool(const EvalValue& v) {
    if (auto* b = std::get_if<bool>(&v)) return *b;
    throw Error("TYPE_ERROR", "boolean operand expected");
}

double as_number(const EvalValue& v) {
    if (auto* d = std::get_if<double>(&v)) return *d;
    throw Error("TYPE_ERROR", "numeric operand expected");
}

bool equal(const EvalValue& a, const EvalValue& b) {
    if (a.index() != b.index())
        throw Error("TYPE_ERROR", "cannot compare values of different types");
    return a == b;
}

} // namespace

NodePtr parse(std::string_view source) {
    Parser p(source);
    NodePtr n = p.parse_expr();
    if (p.lx.tok != Tok::End) p.lx.fail("trailing input");
    return n;
}

EvalValue evaluate(const Node& node, const Context& context) {
    using Op = Node::Op;
    switch (node.op) {
    case Op::Number: return node.number;
    case Op::Text: return node.text;
    case Op::Boolean: return node.boolean;
    case Op::Variable: {
        auto it = context.find(node.text);
        if (it == context.end())
            throw Error("UNKNOWN_VARIABLE", "unbound variable: " + node.text);
        return it->second;
    }
    case Op::Not: return !as_bool(evaluate(*node.lhs, context));
    case Op::And:
        return as_bool(evaluate(*node.lhs, context)) &&
               as_bool(evaluate(*node.rhs, context));
    case Op::Or:
        return as_bool(evaluate(*node.lhs, context)) ||
               as_bool(evaluate(*node.rhs, context));
    case Op::Eq:
        return equal(evaluate(*node.lhs, context), evaluate(*node.rhs, context));
    case Op::Ne:
        return !equal(evaluate(*node.lhs, context), evaluate(*node.rhs, context));
    case Op::Lt:
        return as_number(evaluate(*node.lhs, context)) <
               as_number(evaluate(*node.rhs, context));
    case Op::Le:
        return as_number(evaluate(*node.lhs, context)) <=
               as_number(evaluate(*node.rhs, context));
    case Op::Gt:
        return as_number(evaluate(*node.lhs, context)) >
               as_number(evaluate(*node.rhs, context));
    case Op::Ge:
        return as_number(evaluate(*node.lhs, context)) >=
               as_number(evaluate(*node.rhs, context));
    case Op::Neg: return -as_number(evaluate(*node.lhs, context));
    case Op::Add:
        return as_number(evaluate(*node.lhs, context)) +
               as_number(evaluate(*node.rhs, context));
    case Op::Sub:
        return as_number(evaluate(*node.lhs, context)) -
               as_number(evaluate(*node.rhs, context));
    case Op::Mul:
        return as_number(evaluate(*node.lhs, context)) *
               as_number(evaluate(*node.rhs, context));
    case Op::Div:
        return as_number(evaluate(*node.lhs, context)) /
               as_number(evaluate(*node.rhs, context));
    }
    throw Error("TYPE_ERROR", "corrupt expression node");
}

bool evaluate_condition(const Node& node, const Context& context) {
    EvalValue v = evaluate(node, context);
    if (auto* b = std::get_if<bool>(&v)) return *b;
    throw Error("TYPE_ERROR", "condition did not evaluate to a boolean");
}

double evaluate_numeric(const Node& node, const Context& context) {
    EvalValue v = evaluate(node, context);
    if (auto* d = std::get_if<double>(&v)) return *d;
    throw Error("EXPRESSION_ERROR", "expression did not evaluate to a number");
}

} // namespace scm::expr
