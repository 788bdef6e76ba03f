#include "umbral/series.hpp"

#include <algorithm>
#include <ostream>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

using Coeffs = std::vector<Rational>;

// Truncated product of raw coefficient vectors, result length `len`.
Coeffs mul_raw(const Coeffs& a, const Coeffs& b, std::size_t len)
{
    Coeffs out(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i].is_zero())
            continue;
        const std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

Coeffs invert_raw(const Coeffs& a, std::size_t len)
{
    Coeffs out(len);
    const Rational inv0 = Rational(1) / a[0];
    out[0] = inv0;
    for (std::size_t n = 1; n < len; ++n) {
        Rational acc;
        for (std::size_t i = 1; i <= n && i < a.size(); ++i)
            acc += a[i] * out[n - i];
        out[n] = -acc * inv0;
    }
    return out;
}

// Horner evaluation of f at g, both truncated to `len` coefficients.
Coeffs compose_raw(const Coeffs& f, const Coeffs& g, std::size_t len)
{
    Coeffs acc(len);
    for (std::size_t i = std::min(f.size(), len); i-- > 0;) {
        acc = mul_raw(acc, g, len);
        acc[0] += f[i];
    }
    return acc;
}

std::string t_power(std::size_t k)
{
    if (k == 0)
        return "";
    if (k == 1)
        return "t";
    return "t^" + std::to_string(k);
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, std::size_t precision)
    : coeffs_(std::move(coefficients))
{
    coeffs_.resize(precision + 1);
}

TruncatedSeries TruncatedSeries::zero(std::size_t precision)
{
    return TruncatedSeries({}, precision);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t precision)
{
    return TruncatedSeries({c}, precision);
}

TruncatedSeries TruncatedSeries::variable(std::size_t precision)
{
    return monomial(1, 1, precision);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t power, const Rational& c, std::size_t precision)
{
    std::vector<Rational> coeffs(precision + 1);
    if (power <= precision)
        coeffs[power] = c;
    return TruncatedSeries(std::move(coeffs), precision);
}

const Rational& TruncatedSeries::coeff(std::size_t k) const
{
    if (k >= coeffs_.size())
        throw MathError(ErrorKind::InsufficientPrecision,
                        "coefficient t^" + std::to_string(k) + " beyond precision " + std::to_string(precision()));
    return coeffs_[k];
}

std::optional<std::size_t> TruncatedSeries::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero())
            return k;
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c)
{
    for (auto& a : coeffs_)
        a *= c;
    return *this;
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g)
{
    const std::size_t n = std::min(f.precision(), g.precision());
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        out[k] = f.coeffs_[k] + g.coeffs_[k];
    return TruncatedSeries(std::move(out), n);
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g)
{
    return f + (-g);
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g)
{
    const std::size_t n = std::min(f.precision(), g.precision());
    return TruncatedSeries(mul_raw(f.coeffs_, g.coeffs_, n + 1), n);
}

TruncatedSeries truncate(const TruncatedSeries& f, std::size_t precision)
{
    if (precision > f.precision())
        throw MathError(ErrorKind::InsufficientPrecision, "cannot extend a series beyond its precision");
    const auto c = f.coefficients();
    return TruncatedSeries(std::vector<Rational>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(precision + 1)),
                           precision);
}

TruncatedSeries exp_linear(const Rational& c, std::size_t precision)
{
    std::vector<Rational> out(precision + 1);
    out[0] = 1;
    for (std::size_t k = 1; k <= precision; ++k)
        out[k] = out[k - 1] * c / Rational(k);
    return TruncatedSeries(std::move(out), precision);
}

TruncatedSeries invert(const TruncatedSeries& f)
{
    if (f.coeff(0).is_zero())
        throw MathError(ErrorKind::NotInvertible, "series has zero constant term");
    const auto c = f.coefficients();
    return TruncatedSeries(invert_raw(Coeffs(c.begin(), c.end()), f.precision() + 1), f.precision());
}

TruncatedSeries div_val(const TruncatedSeries& num, const TruncatedSeries& den)
{
    const auto vden = den.valuation();
    if (!vden)
        throw MathError(ErrorKind::NotInvertible, "division by the zero series");
    const auto vnum = num.valuation();
    if (vnum && *vnum < *vden)
        throw MathError(ErrorKind::ValuationMismatch,
                        "numerator valuation " + std::to_string(*vnum) + " < denominator valuation " +
                            std::to_string(*vden));
    const std::size_t n = std::min(num.precision(), den.precision());
    if (*vden > n)
        throw MathError(ErrorKind::InsufficientPrecision, "denominator valuation exceeds precision");
    const std::size_t out_prec = n - *vden;
    const auto nc = num.coefficients();
    const auto dc = den.coefficients();
    Coeffs shifted_num(nc.begin() + static_cast<std::ptrdiff_t>(*vden), nc.begin() + static_cast<std::ptrdiff_t>(n + 1));
    Coeffs shifted_den(dc.begin() + static_cast<std::ptrdiff_t>(*vden), dc.begin() + static_cast<std::ptrdiff_t>(n + 1));
    const Coeffs inv = invert_raw(shifted_den, out_prec + 1);
    return TruncatedSeries(mul_raw(shifted_num, inv, out_prec + 1), out_prec);
}

TruncatedSeries pow(const TruncatedSeries& f, unsigned exponent)
{
    TruncatedSeries result = TruncatedSeries::constant(1, f.precision());
    TruncatedSeries square = f;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * square;
        exponent >>= 1U;
        if (exponent > 0)
            square = square * square;
    }
    return result;
}

TruncatedSeries scale_arg(const TruncatedSeries& f, const Rational& c)
{
    const auto fc = f.coefficients();
    std::vector<Rational> out(fc.begin(), fc.end());
    Rational power = 1;
    for (auto& a : out) {
        a *= power;
        power *= c;
    }
    return TruncatedSeries(std::move(out), f.precision());
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g)
{
    if (!g.coeff(0).is_zero())
        throw MathError(ErrorKind::CompositionRequiresDelta, "inner series has nonzero constant term");
    const std::size_t n = std::min(f.precision(), g.precision());
    const auto fc = f.coefficients();
    const auto gc = g.coefficients();
    return TruncatedSeries(compose_raw(Coeffs(fc.begin(), fc.end()), Coeffs(gc.begin(), gc.end()), n + 1), n);
}

TruncatedSeries revert(const TruncatedSeries& f)
{
    if (f.valuation() != std::optional<std::size_t>(1))
        throw MathError(ErrorKind::NotDeltaSeries, "reversion needs valuation exactly 1");
    const std::size_t len = f.precision() + 1;
    const auto fc = f.coefficients();
    const Coeffs fr(fc.begin(), fc.end());

    // f' padded with a zero top coefficient; the unknown term only meets
    // corrections of valuation >= 2 and so never reaches t^precision.
    Coeffs fprime(len);
    for (std::size_t i = 0; i + 1 < len; ++i)
        fprime[i] = fr[i + 1] * Rational(i + 1);

    Coeffs target(len);
    if (len > 1)
        target[1] = 1;

    Coeffs g(len);
    if (len > 1)
        g[1] = Rational(1) / fr[1];

    // Each Newton step doubles the number of correct terms.
    for (std::size_t correct = 2; ; correct *= 2) {
        Coeffs residual = compose_raw(fr, g, len);
        for (std::size_t i = 0; i < len; ++i)
            residual[i] -= target[i];
        if (std::all_of(residual.begin(), residual.end(), [](const Rational& r) { return r.is_zero(); }))
            break;
        const Coeffs slope_inv = invert_raw(compose_raw(fprime, g, len), len);
        const Coeffs step = mul_raw(residual, slope_inv, len);
        for (std::size_t i = 0; i < len; ++i)
            g[i] -= step[i];
        if (correct > 2 * len + 2)
            throw MathError(ErrorKind::NotDeltaSeries, "reversion failed to converge");
    }
    return TruncatedSeries(std::move(g), f.precision());
}

TruncatedSeries derivative(const TruncatedSeries& f)
{
    if (f.precision() == 0)
        throw MathError(ErrorKind::InsufficientPrecision, "derivative of a precision-0 series");
    const auto fc = f.coefficients();
    std::vector<Rational> out(f.precision());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = fc[k + 1] * Rational(k + 1);
    return TruncatedSeries(std::move(out), f.precision() - 1);
}

std::string to_string(const TruncatedSeries& f)
{
    std::string out;
    const auto fc = f.coefficients();
    bool first = true;
    for (std::size_t k = 0; k < fc.size(); ++k) {
        const Rational& c = fc[k];
        if (c.is_zero())
            continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (k == 0)
            out += mag.to_string();
        else if (mag.is_one())
            out += t_power(k);
        else
            out += mag.to_string() + "*" + t_power(k);
        first = false;
    }
    if (first)
        out += "0";
    out += " + O(t^" + std::to_string(f.precision() + 1) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f)
{
    return os << to_string(f);
}

}  // namespace umbral
