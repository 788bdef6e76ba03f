#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Dense univariate polynomial in x over the rationals. Coefficient i
/// multiplies x^i; the highest stored coefficient is always nonzero and the
/// zero polynomial stores nothing.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(std::size_t degree, const Rational& c = 1);
    static Polynomial x() { return monomial(1); }

    /// std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i; zero beyond the stored range.
    const Rational& coeff(std::size_t i) const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    /// Horner evaluation.
    Rational operator()(const Rational& x0) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

Polynomial derivative(const Polynomial& p);

/// Antiderivative with zero constant term.
Polynomial antiderivative(const Polynomial& p);

/// Exact integral of p over [lo, hi].
Rational definite_integral(const Polynomial& p, const Rational& lo, const Rational& hi);

/// p(c*x).
Polynomial scale_variable(const Polynomial& p, const Rational& c);

/// Descending-degree text such as "x^2 - x + 1/6" or "4*x^2 - 2*x + 1/6".
/// The output is accepted back by the expression parser.
std::string to_string(const Polynomial& p);

/// LaTeX rendering, non-integer coefficients as \frac{p}{q}.
std::string to_latex(const Polynomial& p);
std::string to_latex(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace umbral
