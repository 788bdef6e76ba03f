#include "umbral/umbral.hpp"

#include <string>

#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"

namespace umbral {

namespace {

void require_precision(const TruncatedSeries& f, const Polynomial& p, const char* what)
{
    const auto deg = p.degree();
    if (deg && *deg > f.precision())
        throw MathError(ErrorKind::InsufficientPrecision,
                        std::string(what) + ": series precision " + std::to_string(f.precision()) +
                            " below polynomial degree " + std::to_string(*deg));
}

}  // namespace

Rational functional_apply(const TruncatedSeries& f, const Polynomial& p)
{
    require_precision(f, p, "functional_apply");
    Rational acc;
    BigInt fact = 1;
    const auto coeffs = p.coefficients();
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (n > 0)
            fact *= static_cast<unsigned long>(n);
        if (!coeffs[n].is_zero())
            acc += coeffs[n] * Rational(fact) * f.coeff(n);
    }
    return acc;
}

Polynomial operator_apply(const TruncatedSeries& f, const Polynomial& p)
{
    require_precision(f, p, "operator_apply");
    const auto coeffs = p.coefficients();
    std::vector<Rational> out(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (coeffs[n].is_zero())
            continue;
        // t^k x^n = (n)_k x^{n-k}; accumulate the falling factorial as k grows.
        Rational falling = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0)
                falling *= Rational(n - k + 1);
            const Rational& fk = f.coeff(k);
            if (!fk.is_zero())
                out[n - k] += fk * falling * coeffs[n];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial shift(const Polynomial& p, const Rational& y0)
{
    const auto coeffs = p.coefficients();
    std::vector<Rational> out(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (coeffs[n].is_zero())
            continue;
        Rational ypow = 1;
        for (std::size_t i = n + 1; i-- > 0;) {
            out[i] += coeffs[n] * Rational(binomial(static_cast<unsigned>(n), static_cast<std::int64_t>(i))) * ypow;
            ypow *= y0;
        }
    }
    return Polynomial(std::move(out));
}

Polynomial inv_t_monomialwise(const Polynomial& p)
{
    return antiderivative(p);
}

ShefferPair::ShefferPair(TruncatedSeries g, TruncatedSeries f) : g_(std::move(g)), f_(std::move(f))
{
    if (g_.valuation() != std::optional<std::size_t>(0))
        throw MathError(ErrorKind::NotInvertible, "Sheffer pair needs an invertible g");
    if (f_.valuation() != std::optional<std::size_t>(1))
        throw MathError(ErrorKind::NotDeltaSeries, "Sheffer pair needs a delta series f");
}

ShefferPair ShefferPair::appell(TruncatedSeries g)
{
    const std::size_t n = g.precision();
    return ShefferPair(std::move(g), TruncatedSeries::variable(std::max<std::size_t>(n, 1)));
}

ShefferSequence::ShefferSequence(ShefferPair pair, std::vector<Polynomial> polys)
    : pair_(std::move(pair)), polys_(std::move(polys))
{
    if (polys_.empty())
        throw MathError(ErrorKind::IndexOutOfRange, "empty Sheffer sequence");
    for (std::size_t n = 0; n < polys_.size(); ++n)
        if (polys_[n].degree() != std::optional<std::size_t>(n))
            throw MathError(ErrorKind::OutOfDomain, "s_" + std::to_string(n) + " does not have degree " +
                                                        std::to_string(n));
}

ShefferSequence appell_from_g(const TruncatedSeries& g, std::size_t n_max)
{
    if (g.coeff(0).is_zero())
        throw MathError(ErrorKind::NotInvertible, "Appell sequence needs an invertible g");
    if (g.precision() < n_max)
        throw MathError(ErrorKind::InsufficientPrecision, "g precision below n_max");
    const TruncatedSeries h = invert(g);
    std::vector<Polynomial> polys;
    polys.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        polys.push_back(operator_apply(h, Polynomial::monomial(n)));
    return ShefferSequence(ShefferPair::appell(g), std::move(polys));
}

ShefferSequence sheffer_from_pair(const ShefferPair& pair, std::size_t n_max)
{
    const std::size_t prec = std::min(pair.g().precision(), pair.f().precision());
    if (prec < n_max)
        throw MathError(ErrorKind::InsufficientPrecision, "pair precision below n_max");
    const TruncatedSeries fbar = revert(truncate(pair.f(), prec));
    const TruncatedSeries a = invert(compose(truncate(pair.g(), prec), fbar));

    // [x^j] s_n = n!/j! [t^n] (a * fbar^j)
    std::vector<std::vector<Rational>> coeffs(n_max + 1, std::vector<Rational>(n_max + 1));
    TruncatedSeries term = a;
    for (std::size_t j = 0; j <= n_max; ++j) {
        const Rational inv_jfact = Rational(1) / Rational(factorial(static_cast<unsigned>(j)));
        for (std::size_t n = j; n <= n_max; ++n)
            coeffs[n][j] = term.coeff(n) * Rational(factorial(static_cast<unsigned>(n))) * inv_jfact;
        term = term * fbar;
    }
    std::vector<Polynomial> polys;
    polys.reserve(n_max + 1);
    for (auto& row : coeffs)
        polys.emplace_back(std::move(row));
    return ShefferSequence(pair, std::move(polys));
}

std::optional<OrthogonalityViolation> find_orthogonality_violation(const ShefferSequence& seq)
{
    const std::size_t n_max = seq.n_max();
    const std::size_t prec = std::min(seq.pair().g().precision(), seq.pair().f().precision());
    if (prec < n_max)
        throw MathError(ErrorKind::InsufficientPrecision, "pair precision below n_max");
    const TruncatedSeries g = truncate(seq.pair().g(), prec);
    const TruncatedSeries f = truncate(seq.pair().f(), prec);

    std::vector<TruncatedSeries> functionals;
    functionals.reserve(n_max + 1);
    TruncatedSeries current = g;
    for (std::size_t k = 0; k <= n_max; ++k) {
        functionals.push_back(current);
        current = current * f;
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Rational expected_diag = Rational(factorial(static_cast<unsigned>(n)));
        for (std::size_t k = 0; k <= n_max; ++k) {
            const Rational value = functional_apply(functionals[k], seq[n]);
            const Rational expected = n == k ? expected_diag : Rational(0);
            if (value != expected)
                return OrthogonalityViolation{n, k, value};
        }
    }
    return std::nullopt;
}

Polynomial appell_recurrence_step(const TruncatedSeries& g, const Polynomial& s_n)
{
    const TruncatedSeries dg = derivative(g);
    const TruncatedSeries log_derivative = dg * invert(truncate(g, dg.precision()));
    return Polynomial::x() * s_n - operator_apply(log_derivative, s_n);
}

Polynomial appell_multiplication(const TruncatedSeries& g, const Polynomial& s_n, std::size_t n, const Rational& c)
{
    if (c.is_zero())
        throw MathError(ErrorKind::ZeroScale, "multiplication formula needs a nonzero scale");
    const TruncatedSeries ratio = g * invert(scale_arg(g, Rational(1) / c));
    return pow(c, static_cast<std::int64_t>(n)) * operator_apply(ratio, s_n);
}

Polynomial shift_up(std::span<const Polynomial> polys, std::size_t n)
{
    if (n + 1 >= polys.size())
        throw MathError(ErrorKind::IndexOutOfRange,
                        "shift-up of index " + std::to_string(n) + " needs s_" + std::to_string(n + 1));
    return polys[n + 1] * (Rational(1) / Rational(n + 1));
}

Polynomial sheffer_shift_up(const ShefferSequence& seq, std::size_t n)
{
    return shift_up(seq.polys(), n);
}

}  // namespace umbral
