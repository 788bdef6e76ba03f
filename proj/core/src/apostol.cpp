#include "umbral/apostol.hpp"

#include <string>

#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"
#include "umbral/umbral.hpp"

namespace umbral {

namespace {

Rational two_pow(std::int64_t e)
{
    return pow(Rational(2), e);
}

std::int64_t as_signed(std::size_t n)
{
    return static_cast<std::int64_t>(n);
}

void require_index(std::size_t n, std::size_t shift, const char* relation)
{
    if (n < shift)
        throw MathError(ErrorKind::IndexUnderflow, std::string(relation) + ": n = " + std::to_string(n) +
                                                       " below index shift " + std::to_string(shift));
}

}  // namespace

bool UnifiedParams::valid() const noexcept
{
    if (alpha.is_zero())
        return false;
    return !(k == 0 && lambda == alpha);
}

void UnifiedParams::validate() const
{
    if (alpha.is_zero())
        throw MathError(ErrorKind::SingularParams, "alpha must be nonzero (" + to_string() + ")");
    if (k == 0 && lambda == alpha)
        throw MathError(ErrorKind::SingularParams,
                        "k = 0 with lambda = alpha has no power series (" + to_string() + ")");
}

UnifiedParams UnifiedParams::with_order(unsigned order) const
{
    UnifiedParams out = *this;
    out.v = order;
    return out;
}

std::string UnifiedParams::to_string() const
{
    return "k=" + std::to_string(k) + " v=" + std::to_string(v) + " lambda=" + lambda.to_string() +
           " alpha=" + alpha.to_string();
}

std::size_t working_precision(const UnifiedParams& params, std::size_t n_max)
{
    return n_max + static_cast<std::size_t>(params.v) * std::max(params.k, 1U) + 4;
}

TruncatedSeries unified_generating_series(const UnifiedParams& params, std::size_t n_max)
{
    params.validate();
    const std::size_t prec = working_precision(params, n_max);
    const auto vk = static_cast<std::size_t>(params.v) * params.k;
    const TruncatedSeries numerator =
        TruncatedSeries::monomial(vk, two_pow(static_cast<std::int64_t>(params.v) * (1 - static_cast<std::int64_t>(params.k))), prec);
    const TruncatedSeries base = params.lambda * exp_linear(1, prec) - TruncatedSeries::constant(params.alpha, prec);
    const TruncatedSeries G = div_val(numerator, pow(base, params.v));
    if (G.precision() < n_max)
        throw MathError(ErrorKind::InsufficientPrecision,
                        "generating series precision " + std::to_string(G.precision()) + " below n_max " +
                            std::to_string(n_max));
    return G;
}

std::vector<Polynomial> appell_polynomials(const TruncatedSeries& G, std::size_t n_max)
{
    if (G.precision() < n_max)
        throw MathError(ErrorKind::InsufficientPrecision, "generating series precision below n_max");
    // a_j = j! [t^j] G
    std::vector<Rational> a(n_max + 1);
    BigInt fact = 1;
    for (std::size_t j = 0; j <= n_max; ++j) {
        if (j > 0)
            fact *= static_cast<unsigned long>(j);
        a[j] = G.coeff(j) * Rational(fact);
    }
    std::vector<Polynomial> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<Rational> coeffs(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            coeffs[i] = Rational(binomial(static_cast<unsigned>(n), as_signed(i))) * a[n - i];
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

std::vector<Polynomial> unified_y(const UnifiedParams& params, std::size_t n_max)
{
    return appell_polynomials(unified_generating_series(params, n_max), n_max);
}

Rational y_at(const UnifiedParams& params, std::size_t n, const Rational& x0)
{
    return unified_y(params, n)[n](x0);
}

std::string to_string(Family family)
{
    switch (family) {
    case Family::ClassicalBernoulli: return "classical-bernoulli";
    case Family::ClassicalEuler: return "classical-euler";
    case Family::ClassicalGenocchi: return "classical-genocchi";
    case Family::ApostolBernoulli: return "apostol-bernoulli";
    case Family::ApostolEuler: return "apostol-euler";
    case Family::ApostolGenocchi: return "apostol-genocchi";
    case Family::Unified: return "unified";
    }
    return "unknown";
}

FamilyPreset make_preset(Family family, const Rational& beta, unsigned order)
{
    FamilyPreset out;
    out.family = family;
    out.params.v = order;
    switch (family) {
    case Family::ClassicalBernoulli:
    case Family::ApostolBernoulli:
        out.params.k = 1;
        out.params.lambda = family == Family::ClassicalBernoulli ? Rational(1) : beta;
        out.params.alpha = 1;
        break;
    case Family::ClassicalEuler:
    case Family::ApostolEuler:
        out.params.k = 0;
        out.params.lambda = family == Family::ClassicalEuler ? Rational(1) : beta;
        out.params.alpha = -1;
        break;
    case Family::ClassicalGenocchi:
    case Family::ApostolGenocchi:
        out.params.k = 1;
        out.params.lambda = family == Family::ClassicalGenocchi ? Rational(1) : beta;
        out.params.alpha = -1;
        out.prefactor = two_pow(order);
        break;
    case Family::Unified:
        out.params.lambda = beta;
        break;
    }
    out.params.validate();
    return out;
}

FamilyPreset unified_preset(const UnifiedParams& params)
{
    params.validate();
    return FamilyPreset{Family::Unified, params, 1};
}

std::vector<Polynomial> preset_polynomials(const FamilyPreset& preset, std::size_t n_max)
{
    auto polys = unified_y(preset.params, n_max);
    if (!preset.prefactor.is_one())
        for (auto& p : polys)
            p *= preset.prefactor;
    return polys;
}

Conversion convert_to_apostol_bernoulli(const UnifiedParams& params, std::size_t n)
{
    params.validate();
    if (params.k == 0)
        throw MathError(ErrorKind::OutOfDomain, "Apostol-Bernoulli conversion needs k >= 1");
    const std::size_t shift = static_cast<std::size_t>(params.v) * (params.k - 1);
    require_index(n, shift, "Apostol-Bernoulli conversion");

    Conversion out;
    out.target = make_preset(Family::ApostolBernoulli, params.lambda / params.alpha, params.v);
    out.index_shift = shift;
    out.multiplier = falling_factorial(Rational(n), static_cast<unsigned>(shift)) /
                     (two_pow(as_signed(shift)) * pow(params.alpha, params.v));
    out.stated_multiplier = out.multiplier;
    return out;
}

Conversion convert_to_apostol_euler(const UnifiedParams& params, std::size_t n)
{
    params.validate();
    if (params.lambda == params.alpha)
        throw MathError(ErrorKind::SingularParams, "Apostol-Euler conversion target is singular when lambda = alpha");
    const std::size_t shift = static_cast<std::size_t>(params.v) * params.k;
    require_index(n, shift, "Apostol-Euler conversion");

    Conversion out;
    out.target = make_preset(Family::ApostolEuler, -params.lambda / params.alpha, params.v);
    out.index_shift = shift;
    const Rational falling = falling_factorial(Rational(n), static_cast<unsigned>(shift));
    out.multiplier = falling / (two_pow(as_signed(shift)) * pow(-params.alpha, params.v));
    out.stated_multiplier = -falling / (two_pow(as_signed(shift)) * pow(params.alpha, params.v));
    return out;
}

Conversion convert_to_apostol_genocchi(const UnifiedParams& params, std::size_t n)
{
    params.validate();
    if (params.k == 0)
        throw MathError(ErrorKind::OutOfDomain, "Apostol-Genocchi conversion needs k >= 1");
    const std::size_t shift = static_cast<std::size_t>(params.v) * (params.k - 1);
    require_index(n, shift, "Apostol-Genocchi conversion");

    Conversion out;
    out.target = make_preset(Family::ApostolGenocchi, -params.lambda / params.alpha, params.v);
    out.index_shift = shift;
    const Rational falling = falling_factorial(Rational(n), static_cast<unsigned>(shift));
    const Rational two_kv = two_pow(static_cast<std::int64_t>(params.k) * params.v);
    out.multiplier = falling / (two_kv * pow(-params.alpha, params.v));
    out.stated_multiplier = -falling / (two_kv * pow(params.alpha, params.v));
    return out;
}

UnifiedParams powered_params(const UnifiedParams& params, unsigned m)
{
    UnifiedParams out = params;
    out.lambda = pow(params.lambda, m);
    out.alpha = pow(params.alpha, m);
    return out;
}

Polynomial multiplication_formula_rhs(const UnifiedParams& params, unsigned m, std::size_t n)
{
    params.validate();
    if (m == 0)
        throw MathError(ErrorKind::OutOfDomain, "multiplication formula needs m >= 1");
    const UnifiedParams powered = powered_params(params, m);
    powered.validate();
    return multiplication_formula_rhs(params, m, n, unified_y(powered, n)[n]);
}

Polynomial multiplication_formula_rhs(const UnifiedParams& params, unsigned m, std::size_t n,
                                      const Polynomial& powered_y_n)
{
    params.validate();
    if (m == 0)
        throw MathError(ErrorKind::OutOfDomain, "multiplication formula needs m >= 1");
    powered_params(params, m).validate();

    const Rational ratio = params.lambda / params.alpha;
    const Rational mr(m);
    Polynomial sum;
    for (const Composition& c : enumerate_compositions(params.v, m)) {
        const Rational weight = Rational(c.coefficient) * pow(ratio, c.weight);
        sum += weight * shift(powered_y_n, Rational(c.weight) / mr);
    }
    const Rational scale = pow(mr, as_signed(n) - static_cast<std::int64_t>(params.k) * params.v) *
                           pow(params.alpha, static_cast<std::int64_t>(params.v) * (m - 1));
    return scale * sum;
}

Polynomial substitute_scaled(const Polynomial& p, const Rational& c)
{
    return scale_variable(p, c);
}

}  // namespace umbral
