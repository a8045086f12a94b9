#ifndef SCM_EXPR_HPP
#define SCM_EXPR_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace scm::expr {

// Runtime value of the condition/field expression language.
using EvalValue = std::variant<double, std::string, bool>;
using Context = std::map<std::string, EvalValue>;

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Op {
        Number,
        Text,
        Boolean,
        Variable,
        Not,
        Neg,
        And,
        Or,
        Eq,
        Ne,
        Lt,
        Le,
        Gt,
        Ge,
        Add,
        Sub,
        Mul,
        Div,
    };
    Op op;
    double number = 0;
    std::string text; // literal text or variable name
    bool boolean = false;
    NodePtr lhs, rhs;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at " + std::to_string(position) +
                             ": " + message),
          position_(position), detail_(message) {}

    // 1-based character offset of the offending token.
    std::size_t position() const noexcept { return position_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

// Conditions use comparison/boolean connectives; field expressions use the
// arithmetic subset. One grammar covers both.
NodePtr parse(std::string_view source);

// Throws Error(UNKNOWN_VARIABLE) or Error(TYPE_ERROR).
EvalValue evaluate(const Node& node, const Context& context);

// Result must be boolean, otherwise TYPE_ERROR.
bool evaluate_condition(const Node& node, const Context& context);

// Result must be numeric, otherwise Error(EXPRESSION_ERROR).
double evaluate_numeric(const Node& node, const Context& context);

} // namespace scm::expr

#endif
