#include "umbral/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace umbral {

namespace {

const Rational& zero_rational()
{
    static const Rational zero;
    return zero;
}

std::string degree_suffix(std::size_t i)
{
    if (i == 0)
        return "";
    if (i == 1)
        return "x";
    return "x^" + std::to_string(i);
}

std::string latex_suffix(std::size_t i)
{
    return i == 1 ? std::string("x") : "x^{" + std::to_string(i) + "}";
}

// Shared by the plain and LaTeX renderers: walks terms in descending order,
// emitting " + " / " - " separators and delegating the magnitude rendering.
template <class MagnitudeFn>
std::string render_terms(const Polynomial& p, MagnitudeFn magnitude)
{
    if (p.is_zero())
        return "0";
    std::string out;
    const auto coeffs = p.coefficients();
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Rational& c = coeffs[i];
        if (c.is_zero())
            continue;
        const bool negative = c.sign() < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += magnitude(negative ? -c : c, i);
        first = false;
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    normalize();
}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c)
{
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

std::optional<std::size_t> Polynomial::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

const Rational& Polynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

Rational Polynomial::operator()(const Rational& x0) const
{
    Rational acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x0 + coeffs_[i];
    return acc;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_)
        a *= c;
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial pow(const Polynomial& base, unsigned exponent)
{
    Polynomial result = Polynomial::constant(1);
    Polynomial square = base;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * square;
        exponent >>= 1U;
        if (exponent > 0)
            square = square * square;
    }
    return result;
}

Polynomial derivative(const Polynomial& p)
{
    const auto coeffs = p.coefficients();
    if (coeffs.size() <= 1)
        return {};
    std::vector<Rational> out(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        out[i - 1] = coeffs[i] * Rational(i);
    return Polynomial(std::move(out));
}

Polynomial antiderivative(const Polynomial& p)
{
    const auto coeffs = p.coefficients();
    if (coeffs.empty())
        return {};
    std::vector<Rational> out(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out[i + 1] = coeffs[i] / Rational(i + 1);
    return Polynomial(std::move(out));
}

Rational definite_integral(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    const Polynomial anti = antiderivative(p);
    return anti(hi) - anti(lo);
}

Polynomial scale_variable(const Polynomial& p, const Rational& c)
{
    const auto coeffs = p.coefficients();
    std::vector<Rational> out(coeffs.begin(), coeffs.end());
    Rational power = 1;
    for (auto& a : out) {
        a *= power;
        power *= c;
    }
    return Polynomial(std::move(out));
}

std::string to_string(const Polynomial& p)
{
    return render_terms(p, [](const Rational& magnitude, std::size_t i) {
        if (i == 0)
            return magnitude.to_string();
        if (magnitude.is_one())
            return degree_suffix(i);
        return magnitude.to_string() + "*" + degree_suffix(i);
    });
}

std::string to_latex(const Rational& r)
{
    if (r.is_integer())
        return r.to_string();
    const std::string sign = r.sign() < 0 ? "-" : "";
    BigInt num = r.numerator();
    if (num < 0)
        num = -num;
    return sign + "\\frac{" + num.get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string to_latex(const Polynomial& p)
{
    return render_terms(p, [](const Rational& magnitude, std::size_t i) {
        if (i == 0)
            return to_latex(magnitude);
        if (magnitude.is_one())
            return latex_suffix(i);
        return to_latex(magnitude) + " " + latex_suffix(i);
    });
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << to_string(p);
}

}  // namespace umbral
