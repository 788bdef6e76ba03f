#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"

namespace umbral {

/// Parameters of the unified Apostol-type family
///
///   (2^{1-k} t^k / (lambda e^t - alpha))^v e^{xt} = sum_n Y_n^{(v)}(x) t^n / n!
///
/// where lambda = beta^b and alpha = a^b. Only these two powers enter any of
/// the family's identities, so beta, a and b are never stored separately.
struct UnifiedParams {
    unsigned k = 1;
    unsigned v = 1;  ///< order; v = 0 gives Y_n = x^n
    Rational lambda = 1;
    Rational alpha = 1;

    /// alpha != 0, and lambda != alpha when k = 0.
    bool valid() const noexcept;
    /// Throws SingularParams when !valid().
    void validate() const;

    /// Same k and (lambda, alpha), different order.
    UnifiedParams with_order(unsigned order) const;

    std::string to_string() const;

    friend bool operator==(const UnifiedParams&, const UnifiedParams&) = default;
};

/// Series precision used to extract Y_0..Y_{n_max}: n_max + v max(k, 1) + 4.
std::size_t working_precision(const UnifiedParams& params, std::size_t n_max);

/// G(t) = (2^{1-k} t^k)^v / (lambda e^t - alpha)^v, exact through at least t^{n_max}.
TruncatedSeries unified_generating_series(const UnifiedParams& params, std::size_t n_max);

/// Appell polynomials of an exponential generating function G(t) e^{xt}:
/// p_n(x) = sum_i C(n, i) (n-i)! [t^{n-i}]G x^i, for n = 0..n_max.
std::vector<Polynomial> appell_polynomials(const TruncatedSeries& G, std::size_t n_max);

/// Y_0 .. Y_{n_max} for the given parameters.
std::vector<Polynomial> unified_y(const UnifiedParams& params, std::size_t n_max);

/// Y_n(x0).
Rational y_at(const UnifiedParams& params, std::size_t n, const Rational& x0);

enum class Family {
    ClassicalBernoulli,
    ClassicalEuler,
    ClassicalGenocchi,
    ApostolBernoulli,
    ApostolEuler,
    ApostolGenocchi,
    Unified,
};

std::string to_string(Family family);

/// A named family expressed through Y: family_n(x) = prefactor * Y_n(x).
struct FamilyPreset {
    Family family = Family::Unified;
    UnifiedParams params;
    Rational prefactor = 1;
};

/// Classical families ignore beta (it is fixed at 1). Genocchi carries the
/// 2^order prefactor since Y(x; 1, -1) = G(x) / 2 at order one.
FamilyPreset make_preset(Family family, const Rational& beta = 1, unsigned order = 1);
FamilyPreset unified_preset(const UnifiedParams& params);

std::vector<Polynomial> preset_polynomials(const FamilyPreset& preset, std::size_t n_max);

/// Y_n = multiplier * F_{n - index_shift}(x) for the target family F.
///
/// `multiplier` is the constant forced by rewriting the generating function;
/// `stated_multiplier` is the closed form as usually printed for these
/// conversions (it carries an unconditional minus sign for the Euler and
/// Genocchi targets). The two agree except for even orders in those cases.
struct Conversion {
    FamilyPreset target;
    Rational multiplier;
    Rational stated_multiplier;
    std::size_t index_shift = 0;
};

/// Target Apostol-Bernoulli (k=1, lambda/alpha, 1). Needs k >= 1 (OutOfDomain)
/// and n >= v (k - 1) (IndexUnderflow).
Conversion convert_to_apostol_bernoulli(const UnifiedParams& params, std::size_t n);

/// Target Apostol-Euler (k=0, -lambda/alpha, -1). Needs lambda != alpha
/// (SingularParams) and n >= k v (IndexUnderflow).
Conversion convert_to_apostol_euler(const UnifiedParams& params, std::size_t n);

/// Target Apostol-Genocchi (k=1, -lambda/alpha, -1). Needs k >= 1 and
/// n >= v (k - 1).
Conversion convert_to_apostol_genocchi(const UnifiedParams& params, std::size_t n);

/// Parameters with lambda^m and alpha^m (the family on the right-hand side of
/// the multiplication formula). Not validated.
UnifiedParams powered_params(const UnifiedParams& params, unsigned m);

/// Right-hand side of the Raabe-type multiplication formula for Y_n(m x):
///
///   m^{n-kv} alpha^{v(m-1)} sum_u multinomial(u) (lambda/alpha)^j Y_n(x + j/m; lambda^m, alpha^m)
///
/// summed over compositions u of v into m parts with j = sum_i i u_i.
/// Throws SingularParams when the powered family is singular.
Polynomial multiplication_formula_rhs(const UnifiedParams& params, unsigned m, std::size_t n);

/// As above with Y_n of the powered family supplied by the caller.
Polynomial multiplication_formula_rhs(const UnifiedParams& params, unsigned m, std::size_t n,
                                      const Polynomial& powered_y_n);

/// p(c x).
Polynomial substitute_scaled(const Polynomial& p, const Rational& c);

}  // namespace umbral
