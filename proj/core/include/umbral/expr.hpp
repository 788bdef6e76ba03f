#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "umbral/apostol.hpp"
#include "umbral/errors.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"

namespace umbral::expr {

enum class NodeKind {
    RationalLit,
    Var,
    Exp,
    Y,
    Preset,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Bracket,
    Apply,
    Shift,
    Integral,
};

std::string_view to_string(NodeKind kind);

/// What a subtree evaluates to. Scalars mix with either side.
enum class Context { Scalar, Series, Poly };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// One AST node. Fields not used by a kind keep their defaults.
///
///   RationalLit value     Var name ('t' or 'x')   Exp value (the c of exp(c*t))
///   Y index, params       Preset name ('B','E','G'), index, params.v, params.lambda (beta), has_beta
///   Pow children[0], index
///   Shift (poly, amount)  Integral (poly, lo, hi)  Bracket / Apply (series, poly)
struct Expr {
    NodeKind kind = NodeKind::RationalLit;
    Context context = Context::Scalar;
    std::size_t offset = 0;  ///< first byte of the node in the source
    std::size_t end = 0;     ///< one past its last byte
    Rational value;
    char name = 0;
    unsigned index = 0;
    UnifiedParams params;
    bool has_beta = false;
    std::vector<ExprPtr> children;

    /// Structural equality; source offsets are ignored.
    friend bool operator==(const Expr& a, const Expr& b);
};

enum class ParseErrorKind { SyntaxError, TypeError };

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t offset, std::string message, std::vector<std::string> expected = {});

    ParseErrorKind kind() const { return kind_; }
    /// Byte offset into the input; always <= input length.
    std::size_t offset() const { return offset_; }
    /// Sorted token descriptions acceptable at offset (syntax errors only).
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& detail() const { return detail_; }

private:
    ParseErrorKind kind_;
    std::size_t offset_;
    std::string detail_;
    std::vector<std::string> expected_;
};

/// Arithmetic failure during evaluation, tagged with the source span of the
/// node that raised it.
class EvalError : public MathError {
public:
    EvalError(const MathError& cause, std::size_t offset, std::size_t end);

    std::size_t offset() const { return offset_; }
    std::size_t end() const { return end_; }

private:
    std::size_t offset_;
    std::size_t end_;
};

ExprPtr parse(std::string_view input);

/// Canonical source text; parse(print(e)) == e.
std::string print(const Expr& e);

/// Tree form such as "Bracket(Pow(Var t, 2), Pow(Var x, 2))".
std::string describe(const Expr& e);

using Value = std::variant<Rational, Polynomial, TruncatedSeries>;

inline constexpr std::size_t default_precision = 32;

/// Series subtrees are built through t^precision (raised to the degree of
/// the polynomial they meet inside a bracket or apply).
Value evaluate(const Expr& e, std::size_t precision = default_precision);

std::string to_string(const Value& v);
std::string to_latex(const Value& v);

}  // namespace umbral::expr
