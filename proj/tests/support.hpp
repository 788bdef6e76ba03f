#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"

namespace test {

using umbral::Polynomial;
using umbral::Rational;
using umbral::TruncatedSeries;

inline Rational q(std::string_view text)
{
    return Rational::parse(text);
}

/// Ascending coefficients given as text, e.g. poly({"1/6", "-1", "1"}) = x^2 - x + 1/6.
inline Polynomial poly(std::initializer_list<std::string_view> coeffs)
{
    std::vector<Rational> c;
    for (auto s : coeffs)
        c.push_back(q(s));
    return Polynomial(std::move(c));
}

inline TruncatedSeries series(std::initializer_list<std::string_view> coeffs, std::size_t precision)
{
    std::vector<Rational> c;
    for (auto s : coeffs)
        c.push_back(q(s));
    return TruncatedSeries(std::move(c), precision);
}

/// Deterministic generator of small exact values.
class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int span = 9)
    {
        return Rational(umbral::BigInt(integer(-span, span)), umbral::BigInt(integer(1, span)));
    }

    Rational nonzero_rational(int span = 9)
    {
        for (;;) {
            Rational r = rational(span);
            if (!r.is_zero())
                return r;
        }
    }

    Polynomial polynomial(int max_degree)
    {
        std::vector<Rational> c;
        const int degree = integer(0, max_degree);
        for (int i = 0; i <= degree; ++i)
            c.push_back(rational());
        return Polynomial(std::move(c));
    }

    /// Random series with the given valuation; the coefficient at the
    /// valuation index is nonzero.
    TruncatedSeries series(std::size_t precision, std::size_t valuation = 0)
    {
        std::vector<Rational> c(precision + 1);
        for (std::size_t i = valuation; i <= precision; ++i)
            c[i] = i == valuation ? nonzero_rational() : rational();
        return TruncatedSeries(std::move(c), precision);
    }

private:
    std::mt19937 rng_;
};

}  // namespace test
