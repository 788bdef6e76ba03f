#include "umbral/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "umbral/umbral.hpp"

namespace umbral::expr {

namespace {

constexpr unsigned max_exponent = 4096;
constexpr unsigned max_index = 512;

const std::vector<std::string>& atom_tokens()
{
    static const std::vector<std::string> tokens{"(", "-", "<", "B", "E", "G", "Y", "apply", "exp",
                                                 "integral", "rational", "shift", "t", "x"};
    return tokens;
}

bool is_ident_char(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

/// Offset of the leftmost node that fixes the context of `e`.
std::size_t context_anchor(const Expr& e)
{
    switch (e.kind) {
    case NodeKind::Var:
    case NodeKind::Exp:
    case NodeKind::Y:
    case NodeKind::Preset:
    case NodeKind::Apply:
    case NodeKind::Shift:
        return e.offset;
    default:
        break;
    }
    for (const auto& child : e.children)
        if (child->context != Context::Scalar)
            return context_anchor(*child);
    return e.offset;
}

std::string_view context_name(Context c)
{
    switch (c) {
    case Context::Scalar: return "scalar";
    case Context::Series: return "series (in t)";
    case Context::Poly: return "polynomial (in x)";
    }
    return "unknown";
}

class Parser {
public:
    explicit Parser(std::string_view input) : src_(input) {}

    ExprPtr parse_all()
    {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ < src_.size())
            syntax_error(pos_, "unexpected '" + std::string(1, src_[pos_]) + "'",
                         {"*", "+", "-", "/", "^", "end of input"});
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void syntax_error(std::size_t at, std::string message, std::vector<std::string> expected)
    {
        std::sort(expected.begin(), expected.end());
        throw ParseError(ParseErrorKind::SyntaxError, std::min(at, src_.size()), std::move(message),
                         std::move(expected));
    }

    [[noreturn]] void type_error(std::size_t at, std::string message)
    {
        throw ParseError(ParseErrorKind::TypeError, std::min(at, src_.size()), std::move(message));
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) != 0)
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    std::string found_description()
    {
        skip_ws();
        if (pos_ >= src_.size())
            return "end of input";
        return "'" + std::string(1, src_[pos_]) + "'";
    }

    void expect(char c, std::vector<std::string> expected = {})
    {
        if (peek() != c) {
            if (expected.empty())
                expected.emplace_back(1, c);
            syntax_error(pos_, "expected '" + std::string(1, c) + "', found " + found_description(),
                         std::move(expected));
        }
        ++pos_;
    }

    std::string identifier()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_]))
            ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    unsigned natural(const char* what, unsigned limit)
    {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= src_.size() || !is_digit(src_[pos_]))
            syntax_error(pos_, std::string("expected ") + what + ", found " + found_description(),
                         {"natural number"});
        unsigned long long value = 0;
        while (pos_ < src_.size() && is_digit(src_[pos_])) {
            value = value * 10 + static_cast<unsigned>(src_[pos_] - '0');
            if (value > limit)
                syntax_error(start, std::string(what) + " exceeds " + std::to_string(limit),
                             {"natural number <= " + std::to_string(limit)});
            ++pos_;
        }
        return static_cast<unsigned>(value);
    }

    /// digits ("/" digits)? with no interior whitespace.
    Rational rational_literal()
    {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= src_.size() || !is_digit(src_[pos_]))
            syntax_error(pos_, "expected a rational, found " + found_description(), {"rational"});
        while (pos_ < src_.size() && is_digit(src_[pos_]))
            ++pos_;
        if (pos_ + 1 < src_.size() && src_[pos_] == '/' && is_digit(src_[pos_ + 1])) {
            ++pos_;
            while (pos_ < src_.size() && is_digit(src_[pos_]))
                ++pos_;
        }
        const std::string_view text = src_.substr(start, pos_ - start);
        try {
            return Rational::parse(text);
        } catch (const MathError&) {
            syntax_error(start, "zero denominator in '" + std::string(text) + "'", {"rational"});
        }
    }

    Rational signed_rational()
    {
        const bool negative = peek() == '-';
        if (negative)
            ++pos_;
        if (peek() != '\0' && !is_digit(peek()))
            syntax_error(pos_, "expected a rational, found " + found_description(), {"rational"});
        const Rational r = rational_literal();
        return negative ? -r : r;
    }

    static ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    ExprPtr binary(NodeKind kind, ExprPtr lhs, ExprPtr rhs)
    {
        Context ctx = lhs->context;
        if (rhs->context != Context::Scalar) {
            if (ctx != Context::Scalar && ctx != rhs->context)
                type_error(context_anchor(*rhs), "cannot combine " + std::string(context_name(ctx)) + " with " +
                                                     std::string(context_name(rhs->context)));
            ctx = rhs->context;
        }
        Expr e;
        e.kind = kind;
        e.context = ctx;
        e.offset = lhs->offset;
        e.end = rhs->end;
        e.children = {std::move(lhs), std::move(rhs)};
        return make(std::move(e));
    }

    ExprPtr parse_sum()
    {
        ExprPtr lhs = parse_term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-')
                return lhs;
            ++pos_;
            ExprPtr rhs = parse_term();
            lhs = binary(c == '+' ? NodeKind::Add : NodeKind::Sub, std::move(lhs), std::move(rhs));
        }
    }

    ExprPtr parse_term()
    {
        ExprPtr lhs = parse_factor();
        for (;;) {
            const char c = peek();
            if (c != '*' && c != '/')
                return lhs;
            const std::size_t op = pos_++;
            ExprPtr rhs = parse_factor();
            if (c == '/') {
                if (lhs->context == Context::Poly || rhs->context == Context::Poly)
                    type_error(op, "division is not defined for polynomials in x");
            }
            lhs = binary(c == '*' ? NodeKind::Mul : NodeKind::Div, std::move(lhs), std::move(rhs));
        }
    }

    ExprPtr parse_factor()
    {
        if (peek() == '-') {
            const std::size_t start = pos_++;
            ExprPtr inner = parse_factor();
            Expr e;
            e.kind = NodeKind::Neg;
            e.context = inner->context;
            e.offset = start;
            e.end = inner->end;
            e.children = {std::move(inner)};
            return make(std::move(e));
        }
        ExprPtr base = parse_atom();
        if (peek() != '^')
            return base;
        ++pos_;
        const unsigned exponent = parse_exponent();
        Expr e;
        e.kind = NodeKind::Pow;
        e.context = base->context;
        e.offset = base->offset;
        e.end = pos_;
        e.index = exponent;
        e.children = {std::move(base)};
        return make(std::move(e));
    }

    /// nat ("^" exponent)?, right-associative.
    unsigned parse_exponent()
    {
        const std::size_t start = (skip_ws(), pos_);
        const unsigned base = natural("exponent", max_exponent);
        if (peek() != '^')
            return base;
        ++pos_;
        const unsigned rest = parse_exponent();
        unsigned long long value = 1;
        for (unsigned i = 0; i < rest; ++i) {
            value *= base;
            if (value > max_exponent)
                syntax_error(start, "exponent exceeds " + std::to_string(max_exponent),
                             {"natural number <= " + std::to_string(max_exponent)});
        }
        return static_cast<unsigned>(value);
    }

    ExprPtr parse_atom()
    {
        const char c = peek();
        const std::size_t start = pos_;
        if (is_digit(c)) {
            Expr e;
            e.value = rational_literal();
            e.offset = start;
            e.end = pos_;
            return make(std::move(e));
        }
        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_sum();
            expect(')', {")", "*", "+", "-", "/", "^"});
            return inner;
        }
        if (c == '<')
            return parse_pair(NodeKind::Bracket, start);
        if (is_ident_char(c)) {
            const std::string word = identifier();
            if (word == "t" || word == "x") {
                Expr e;
                e.kind = NodeKind::Var;
                e.name = word[0];
                e.context = word == "t" ? Context::Series : Context::Poly;
                e.offset = start;
                e.end = pos_;
                return make(std::move(e));
            }
            if (word == "exp")
                return parse_exp(start);
            if (word == "Y")
                return parse_y(start);
            if (word == "B" || word == "E" || word == "G")
                return parse_preset(word[0], start);
            if (word == "apply")
                return parse_pair(NodeKind::Apply, start);
            if (word == "shift")
                return parse_shift(start);
            if (word == "integral")
                return parse_integral(start);
            syntax_error(start, "unknown name '" + word + "'", atom_tokens());
        }
        syntax_error(pos_, "expected an operand, found " + found_description(), atom_tokens());
    }

    /// exp(c*t), exp(t), exp(-c*t), exp(-t)
    ExprPtr parse_exp(std::size_t start)
    {
        expect('(');
        const bool negative = peek() == '-';
        if (negative)
            ++pos_;
        Rational coef(1);
        const char c = peek();
        if (is_digit(c)) {
            coef = rational_literal();
            expect('*');
        } else if (c != 't' && c != 'x') {
            syntax_error(pos_, "expected 'c*t' inside exp, found " + found_description(), {"rational", "t"});
        }
        const std::size_t var_at = (skip_ws(), pos_);
        const std::string var = identifier();
        if (var != "t") {
            if (var == "x")
                type_error(var_at, "exp takes a multiple of t");
            syntax_error(var_at, "expected 't' inside exp, found " + (var.empty() ? found_description() : var), {"t"});
        }
        expect(')');
        Expr e;
        e.kind = NodeKind::Exp;
        e.context = Context::Series;
        e.value = negative ? -coef : coef;
        e.offset = start;
        e.end = pos_;
        return make(std::move(e));
    }

    template <class Handler>
    void keyword_args(const std::vector<std::string>& names, Handler handle)
    {
        std::vector<std::string> seen;
        for (;;) {
            const std::size_t at = (skip_ws(), pos_);
            const std::string key = identifier();
            if (std::find(names.begin(), names.end(), key) == names.end())
                syntax_error(at, key.empty() ? "expected a keyword argument, found " + found_description()
                                             : "unknown keyword '" + key + "'",
                             names);
            if (std::find(seen.begin(), seen.end(), key) != seen.end())
                syntax_error(at, "duplicate keyword '" + key + "'", names);
            seen.push_back(key);
            expect('=');
            handle(key);
            if (peek() != ',')
                return;
            ++pos_;
        }
    }

    ExprPtr parse_y(std::size_t start)
    {
        expect('(');
        Expr e;
        e.kind = NodeKind::Y;
        e.context = Context::Poly;
        e.index = natural("index", max_index);
        if (peek() == ';') {
            ++pos_;
            keyword_args({"A", "L", "k", "v"}, [&](const std::string& key) {
                if (key == "k")
                    e.params.k = natural("k", max_index);
                else if (key == "v")
                    e.params.v = natural("v", max_index);
                else if (key == "L")
                    e.params.lambda = signed_rational();
                else
                    e.params.alpha = signed_rational();
            });
        }
        expect(')', {")", ";"});
        e.offset = start;
        e.end = pos_;
        return make(std::move(e));
    }

    ExprPtr parse_preset(char name, std::size_t start)
    {
        expect('(');
        Expr e;
        e.kind = NodeKind::Preset;
        e.context = Context::Poly;
        e.name = name;
        e.index = natural("index", max_index);
        if (peek() == ';') {
            ++pos_;
            keyword_args({"beta", "v"}, [&](const std::string& key) {
                if (key == "v") {
                    e.params.v = natural("v", max_index);
                } else {
                    e.params.lambda = signed_rational();
                    e.has_beta = true;
                }
            });
        }
        expect(')', {")", ";"});
        e.offset = start;
        e.end = pos_;
        return make(std::move(e));
    }

    void require(const ExprPtr& e, Context allowed, const char* slot)
    {
        if (e->context != Context::Scalar && e->context != allowed)
            type_error(context_anchor(*e), std::string(slot) + " must be a " + std::string(context_name(allowed)) +
                                               ", got a " + std::string(context_name(e->context)));
    }

    /// "<" series "|" poly ">" or apply(series, poly)
    ExprPtr parse_pair(NodeKind kind, std::size_t start)
    {
        const bool bracket = kind == NodeKind::Bracket;
        expect(bracket ? '<' : '(');
        ExprPtr series = parse_sum();
        require(series, Context::Series, bracket ? "left side of a bracket" : "first argument of apply");
        expect(bracket ? '|' : ',', {bracket ? "|" : ",", "*", "+", "-", "/", "^"});
        ExprPtr poly = parse_sum();
        require(poly, Context::Poly, bracket ? "right side of a bracket" : "second argument of apply");
        expect(bracket ? '>' : ')', {bracket ? ">" : ")", "*", "+", "-", "/", "^"});
        Expr e;
        e.kind = kind;
        e.context = bracket ? Context::Scalar : Context::Poly;
        e.offset = start;
        e.end = pos_;
        e.children = {std::move(series), std::move(poly)};
        return make(std::move(e));
    }

    ExprPtr parse_shift(std::size_t start)
    {
        expect('(');
        ExprPtr poly = parse_sum();
        require(poly, Context::Poly, "first argument of shift");
        expect(',', {",", "*", "+", "-", "/", "^"});
        ExprPtr amount = parse_sum();
        require(amount, Context::Scalar, "shift amount");
        expect(')', {")", "*", "+", "-", "/", "^"});
        Expr e;
        e.kind = NodeKind::Shift;
        e.context = Context::Poly;
        e.offset = start;
        e.end = pos_;
        e.children = {std::move(poly), std::move(amount)};
        return make(std::move(e));
    }

    ExprPtr parse_integral(std::size_t start)
    {
        expect('(');
        ExprPtr poly = parse_sum();
        require(poly, Context::Poly, "integrand");
        expect(',', {",", "*", "+", "-", "/", "^"});
        ExprPtr lo = parse_sum();
        require(lo, Context::Scalar, "lower limit");
        expect(',', {",", "*", "+", "-", "/", "^"});
        ExprPtr hi = parse_sum();
        require(hi, Context::Scalar, "upper limit");
        expect(')', {")", "*", "+", "-", "/", "^"});
        Expr e;
        e.kind = NodeKind::Integral;
        e.context = Context::Scalar;
        e.offset = start;
        e.end = pos_;
        e.children = {std::move(poly), std::move(lo), std::move(hi)};
        return make(std::move(e));
    }
};

std::string error_message(ParseErrorKind kind, std::size_t offset, const std::string& detail,
                          const std::vector<std::string>& expected)
{
    std::string out = std::string(to_string(kind)) + " at offset " + std::to_string(offset) + ": " + detail;
    if (!expected.empty()) {
        out += " (expected one of:";
        for (const auto& tok : expected)
            out += " " + tok;
        out += ")";
    }
    return out;
}

// --- evaluation -------------------------------------------------------------

TruncatedSeries as_series(const Value& v, std::size_t precision)
{
    if (const auto* r = std::get_if<Rational>(&v))
        return TruncatedSeries::constant(*r, precision);
    return std::get<TruncatedSeries>(v);
}

Polynomial as_poly(const Value& v)
{
    if (const auto* r = std::get_if<Rational>(&v))
        return Polynomial::constant(*r);
    return std::get<Polynomial>(v);
}

Value eval_node(const Expr& e, std::size_t precision);

Value eval_checked(const Expr& e, std::size_t precision)
{
    try {
        return eval_node(e, precision);
    } catch (const EvalError&) {
        throw;
    } catch (const MathError& err) {
        throw EvalError(err, e.offset, e.end);
    }
}

Value arithmetic(const Expr& e, const Value& a, const Value& b, std::size_t precision)
{
    switch (e.context) {
    case Context::Scalar: {
        const Rational& x = std::get<Rational>(a);
        const Rational& y = std::get<Rational>(b);
        switch (e.kind) {
        case NodeKind::Add: return x + y;
        case NodeKind::Sub: return x - y;
        case NodeKind::Mul: return x * y;
        default: return x / y;
        }
    }
    case Context::Series: {
        const TruncatedSeries x = as_series(a, precision);
        const TruncatedSeries y = as_series(b, precision);
        switch (e.kind) {
        case NodeKind::Add: return x + y;
        case NodeKind::Sub: return x - y;
        case NodeKind::Mul: return x * y;
        default: return div_val(x, y);
        }
    }
    case Context::Poly: {
        if (e.kind == NodeKind::Mul) {
            if (const auto* r = std::get_if<Rational>(&a))
                return *r * as_poly(b);
            if (const auto* r = std::get_if<Rational>(&b))
                return as_poly(a) * *r;
            return as_poly(a) * as_poly(b);
        }
        return e.kind == NodeKind::Add ? as_poly(a) + as_poly(b) : as_poly(a) - as_poly(b);
    }
    }
    throw MathError(ErrorKind::OutOfDomain, "unreachable context");
}

Value eval_node(const Expr& e, std::size_t precision)
{
    switch (e.kind) {
    case NodeKind::RationalLit:
        return e.value;
    case NodeKind::Var:
        if (e.name == 't')
            return TruncatedSeries::variable(precision);
        return Polynomial::x();
    case NodeKind::Exp:
        return exp_linear(e.value, precision);
    case NodeKind::Y: {
        e.params.validate();
        return unified_y(e.params, e.index)[e.index];
    }
    case NodeKind::Preset: {
        const bool g = e.name == 'G';
        const bool b = e.name == 'B';
        Family family = b ? Family::ClassicalBernoulli : g ? Family::ClassicalGenocchi : Family::ClassicalEuler;
        if (e.has_beta)
            family = b ? Family::ApostolBernoulli : g ? Family::ApostolGenocchi : Family::ApostolEuler;
        const FamilyPreset preset = make_preset(family, e.params.lambda, e.params.v);
        preset.params.validate();
        return preset_polynomials(preset, e.index)[e.index];
    }
    case NodeKind::Neg: {
        const Value v = eval_checked(*e.children[0], precision);
        return std::visit([](const auto& x) -> Value { return -x; }, v);
    }
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
        const Value a = eval_checked(*e.children[0], precision);
        const Value b = eval_checked(*e.children[1], precision);
        return arithmetic(e, a, b, precision);
    }
    case NodeKind::Pow: {
        const Value v = eval_checked(*e.children[0], precision);
        return std::visit(
            [&](const auto& x) -> Value {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, Rational>)
                    return pow(x, static_cast<std::int64_t>(e.index));
                else
                    return pow(x, e.index);
            },
            v);
    }
    case NodeKind::Bracket:
    case NodeKind::Apply: {
        const Polynomial p = as_poly(eval_checked(*e.children[1], precision));
        const std::size_t needed = std::max(precision, p.degree().value_or(0));
        const TruncatedSeries f = as_series(eval_checked(*e.children[0], needed), needed);
        if (e.kind == NodeKind::Bracket)
            return functional_apply(f, p);
        return operator_apply(f, p);
    }
    case NodeKind::Shift: {
        const Polynomial p = as_poly(eval_checked(*e.children[0], precision));
        return shift(p, std::get<Rational>(eval_checked(*e.children[1], precision)));
    }
    case NodeKind::Integral: {
        const Polynomial p = as_poly(eval_checked(*e.children[0], precision));
        const Rational lo = std::get<Rational>(eval_checked(*e.children[1], precision));
        const Rational hi = std::get<Rational>(eval_checked(*e.children[2], precision));
        return definite_integral(p, lo, hi);
    }
    }
    throw MathError(ErrorKind::OutOfDomain, "unknown node");
}

std::string print_call(std::string_view name, const Expr& e)
{
    std::string out(name);
    out += "(";
    for (std::size_t i = 0; i < e.children.size(); ++i)
        out += (i ? ", " : "") + print(*e.children[i]);
    return out + ")";
}

std::string describe_children(std::string_view name, const Expr& e)
{
    std::string out(name);
    out += "(";
    for (std::size_t i = 0; i < e.children.size(); ++i)
        out += (i ? ", " : "") + describe(*e.children[i]);
    return out + ")";
}

std::string y_args(const Expr& e)
{
    return std::to_string(e.index) + "; k=" + std::to_string(e.params.k) + ", v=" + std::to_string(e.params.v) +
           ", L=" + e.params.lambda.to_string() + ", A=" + e.params.alpha.to_string();
}

std::string preset_args(const Expr& e)
{
    std::string out = std::to_string(e.index) + "; ";
    if (e.has_beta)
        out += "beta=" + e.params.lambda.to_string() + ", ";
    return out + "v=" + std::to_string(e.params.v);
}

}  // namespace

std::string_view to_string(NodeKind kind)
{
    switch (kind) {
    case NodeKind::RationalLit: return "RationalLit";
    case NodeKind::Var: return "Var";
    case NodeKind::Exp: return "Exp";
    case NodeKind::Y: return "Y";
    case NodeKind::Preset: return "Preset";
    case NodeKind::Neg: return "Neg";
    case NodeKind::Add: return "Add";
    case NodeKind::Sub: return "Sub";
    case NodeKind::Mul: return "Mul";
    case NodeKind::Div: return "Div";
    case NodeKind::Pow: return "Pow";
    case NodeKind::Bracket: return "Bracket";
    case NodeKind::Apply: return "Apply";
    case NodeKind::Shift: return "Shift";
    case NodeKind::Integral: return "Integral";
    }
    return "Unknown";
}

std::string_view to_string(ParseErrorKind kind)
{
    return kind == ParseErrorKind::SyntaxError ? "SyntaxError" : "TypeError";
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.index != b.index || a.params != b.params ||
        a.has_beta != b.has_beta || a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!(*a.children[i] == *b.children[i]))
            return false;
    return true;
}

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, std::string message, std::vector<std::string> expected)
    : std::runtime_error(error_message(kind, offset, message, expected)),
      kind_(kind),
      offset_(offset),
      detail_(std::move(message)),
      expected_(std::move(expected))
{
}

EvalError::EvalError(const MathError& cause, std::size_t offset, std::size_t end)
    : MathError(cause), offset_(offset), end_(end)
{
}

ExprPtr parse(std::string_view input)
{
    return Parser(input).parse_all();
}

std::string print(const Expr& e)
{
    switch (e.kind) {
    case NodeKind::RationalLit: return e.value.to_string();
    case NodeKind::Var: return std::string(1, e.name);
    case NodeKind::Exp: return "exp(" + e.value.to_string() + "*t)";
    case NodeKind::Y: return "Y(" + y_args(e) + ")";
    case NodeKind::Preset: return std::string(1, e.name) + "(" + preset_args(e) + ")";
    case NodeKind::Neg: return "-(" + print(*e.children[0]) + ")";
    case NodeKind::Add: return "(" + print(*e.children[0]) + " + " + print(*e.children[1]) + ")";
    case NodeKind::Sub: return "(" + print(*e.children[0]) + " - " + print(*e.children[1]) + ")";
    case NodeKind::Mul: return "(" + print(*e.children[0]) + " * " + print(*e.children[1]) + ")";
    case NodeKind::Div: return "(" + print(*e.children[0]) + " / " + print(*e.children[1]) + ")";
    case NodeKind::Pow: return "(" + print(*e.children[0]) + ")^" + std::to_string(e.index);
    case NodeKind::Bracket: return "<" + print(*e.children[0]) + " | " + print(*e.children[1]) + ">";
    case NodeKind::Apply: return print_call("apply", e);
    case NodeKind::Shift: return print_call("shift", e);
    case NodeKind::Integral: return print_call("integral", e);
    }
    return {};
}

std::string describe(const Expr& e)
{
    switch (e.kind) {
    case NodeKind::RationalLit: return "RationalLit " + e.value.to_string();
    case NodeKind::Var: return "Var " + std::string(1, e.name);
    case NodeKind::Exp: return "Exp " + e.value.to_string();
    case NodeKind::Y: return "Y(" + y_args(e) + ")";
    case NodeKind::Preset: return std::string(1, e.name) + "(" + preset_args(e) + ")";
    case NodeKind::Pow: return "Pow(" + describe(*e.children[0]) + ", " + std::to_string(e.index) + ")";
    default: return describe_children(to_string(e.kind), e);
    }
}

Value evaluate(const Expr& e, std::size_t precision)
{
    return eval_checked(e, precision);
}

std::string to_string(const Value& v)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return x.to_string();
            else
                return umbral::to_string(x);
        },
        v);
}

std::string to_latex(const Value& v)
{
    if (const auto* r = std::get_if<Rational>(&v))
        return umbral::to_latex(*r);
    if (const auto* p = std::get_if<Polynomial>(&v))
        return umbral::to_latex(*p);
    return umbral::to_string(std::get<TruncatedSeries>(v));
}

}  // namespace umbral::expr
