#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Formal power series in t known exactly through t^precision.
///
/// Coefficients are stored plainly: coeff(k) is the coefficient of t^k, not
/// the umbral a_k = k! * coeff(k). Every operation reports the precision it
/// can actually vouch for; nothing beyond the inputs' precision is invented.
class TruncatedSeries {
public:
    /// Missing coefficients up to `precision` are zero; extra ones are dropped.
    TruncatedSeries(std::vector<Rational> coefficients, std::size_t precision);

    static TruncatedSeries zero(std::size_t precision);
    static TruncatedSeries constant(const Rational& c, std::size_t precision);
    /// The series t.
    static TruncatedSeries variable(std::size_t precision);
    static TruncatedSeries monomial(std::size_t power, const Rational& c, std::size_t precision);

    std::size_t precision() const { return coeffs_.size() - 1; }
    std::span<const Rational> coefficients() const { return coeffs_; }

    /// Throws InsufficientPrecision for k > precision().
    const Rational& coeff(std::size_t k) const;

    /// Index of the first nonzero coefficient, std::nullopt if all are zero.
    std::optional<std::size_t> valuation() const;
    bool is_zero() const { return !valuation().has_value(); }

    TruncatedSeries operator-() const;
    TruncatedSeries& operator*=(const Rational& c);

    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator*(TruncatedSeries f, const Rational& c) { return f *= c; }
    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries f) { return f *= c; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Keeps terms through t^precision (precision must not exceed f's).
TruncatedSeries truncate(const TruncatedSeries& f, std::size_t precision);

/// e^{c t}: coefficients c^k / k!.
TruncatedSeries exp_linear(const Rational& c, std::size_t precision);

/// Multiplicative inverse; requires a nonzero constant term (NotInvertible).
TruncatedSeries invert(const TruncatedSeries& f);

/// num / den where both may vanish at t = 0. The result precision drops by
/// valuation(den); ValuationMismatch when valuation(num) < valuation(den).
TruncatedSeries div_val(const TruncatedSeries& num, const TruncatedSeries& den);

TruncatedSeries pow(const TruncatedSeries& f, unsigned exponent);

/// f(c t).
TruncatedSeries scale_arg(const TruncatedSeries& f, const Rational& c);

/// f(g(t)); g must have zero constant term (CompositionRequiresDelta).
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Compositional inverse of a delta series (valuation exactly 1), found by
/// Newton iteration.
TruncatedSeries revert(const TruncatedSeries& f);

/// Term-wise d/dt; precision drops by one.
TruncatedSeries derivative(const TruncatedSeries& f);

/// "c0 + c1*t + c2*t^2 + O(t^{N+1})" with zero terms omitted.
std::string to_string(const TruncatedSeries& f);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f);

}  // namespace umbral
