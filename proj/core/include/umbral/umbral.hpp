#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"

namespace umbral {

/// <f(t) | p(x)> = sum_n p_n * n! * [t^n] f.
/// Requires precision(f) >= degree(p) (InsufficientPrecision).
Rational functional_apply(const TruncatedSeries& f, const Polynomial& p);

/// f(t) acting on p(x) as an operator, t^k x^n = (n)_k x^{n-k}.
/// Requires precision(f) >= degree(p) (InsufficientPrecision).
Polynomial operator_apply(const TruncatedSeries& f, const Polynomial& p);

/// p(x + y0), i.e. e^{y0 t} p(x).
Polynomial shift(const Polynomial& p, const Rational& y0);

/// Monomial-wise inverse of t: x^n -> x^{n+1} / (n+1). A right inverse of t
/// that fixes the constant of integration at zero.
Polynomial inv_t_monomialwise(const Polynomial& p);

/// Invertible g (valuation 0) and delta f (valuation 1).
class ShefferPair {
public:
    /// Throws NotInvertible / NotDeltaSeries when the orders are wrong.
    ShefferPair(TruncatedSeries g, TruncatedSeries f);

    static ShefferPair appell(TruncatedSeries g);

    const TruncatedSeries& g() const { return g_; }
    const TruncatedSeries& f() const { return f_; }

private:
    TruncatedSeries g_;
    TruncatedSeries f_;
};

/// s_0 .. s_{n_max} for a pair; deg(s_n) = n.
class ShefferSequence {
public:
    ShefferSequence(ShefferPair pair, std::vector<Polynomial> polys);

    const ShefferPair& pair() const { return pair_; }
    std::span<const Polynomial> polys() const { return polys_; }
    const Polynomial& operator[](std::size_t n) const { return polys_.at(n); }
    std::size_t n_max() const { return polys_.size() - 1; }

private:
    ShefferPair pair_;
    std::vector<Polynomial> polys_;
};

/// s_n = g(t)^{-1} x^n for n = 0..n_max.
ShefferSequence appell_from_g(const TruncatedSeries& g, std::size_t n_max);

/// Sheffer sequence for (g, f) from the conjugate generating function
/// sum_n s_n(x) t^n / n! = e^{x fbar(t)} / g(fbar(t)) with fbar = revert(f).
ShefferSequence sheffer_from_pair(const ShefferPair& pair, std::size_t n_max);

struct OrthogonalityViolation {
    std::size_t n;
    std::size_t k;
    Rational value;  ///< <g f^k | s_n>, which should be n! [n == k]
};

/// First (n, k) in row-major order where <g f^k | s_n> != n! delta_{n,k}.
std::optional<OrthogonalityViolation> find_orthogonality_violation(const ShefferSequence& seq);

/// s_{n+1} = (x - g'(t)/g(t)) s_n.
Polynomial appell_recurrence_step(const TruncatedSeries& g, const Polynomial& s_n);

/// s_n(c x) = c^n (g(t) / g(t/c)) s_n(x). Throws ZeroScale for c = 0.
Polynomial appell_multiplication(const TruncatedSeries& g, const Polynomial& s_n, std::size_t n, const Rational& c);

/// (1/f(t)) realized on sequence elements: s_{n+1} / (n+1).
/// Works for any sequence obeying the derivative law t s_{n+1} = (n+1) s_n.
Polynomial shift_up(std::span<const Polynomial> polys, std::size_t n);
Polynomial sheffer_shift_up(const ShefferSequence& seq, std::size_t n);

}  // namespace umbral
