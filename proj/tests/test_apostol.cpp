#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "umbral/apostol.hpp"
#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"
#include "umbral/umbral.hpp"

using namespace umbral;
using test::poly;
using test::q;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const MathError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no MathError thrown";
    return ErrorKind::OutOfDomain;
}

/// Apostol-type oracle: numerator / (mu e^t + sign)^v by long division.
std::vector<Polynomial> apostol_oracle(const std::vector<Rational>& numerator, const Rational& mu, int sign,
                                       unsigned v, unsigned n_max)
{
    const std::size_t terms = n_max + 2 * v + 3;
    std::vector<Rational> base = oracle::exp_coeffs(1, terms);
    for (auto& c : base)
        c *= mu;
    base[0] += Rational(sign);
    std::vector<Rational> den{Rational(1)};
    std::vector<Rational> num{Rational(1)};
    for (unsigned i = 0; i < v; ++i) {
        std::vector<Rational> next(terms), next_num(terms);
        for (std::size_t a = 0; a < den.size(); ++a)
            for (std::size_t b = 0; a + b < terms; ++b)
                next[a + b] += den[a] * base[b];
        for (std::size_t a = 0; a < num.size(); ++a)
            for (std::size_t b = 0; b < numerator.size() && a + b < terms; ++b)
                next_num[a + b] += num[a] * numerator[b];
        den = std::move(next);
        num = std::move(next_num);
    }
    num.resize(terms);
    return oracle::appell_from_coeffs(oracle::series_quotient(num, den, n_max + 1), n_max);
}

std::vector<UnifiedParams> sample_params()
{
    std::vector<UnifiedParams> out;
    for (unsigned k = 0; k <= 3; ++k)
        for (unsigned v = 0; v <= 3; ++v)
            for (const char* l : {"1", "-1", "2", "1/2", "-2/3"})
                for (const char* a : {"1", "-1", "3", "-2/3"}) {
                    UnifiedParams p{k, v, q(l), q(a)};
                    if (p.valid())
                        out.push_back(p);
                }
    return out;
}

}  // namespace

TEST(UnifiedParams, Validity)
{
    EXPECT_TRUE((UnifiedParams{1, 1, 1, 1}.valid()));
    EXPECT_FALSE((UnifiedParams{0, 1, 1, 1}.valid()));
    EXPECT_FALSE((UnifiedParams{1, 1, 1, 0}.valid()));
    EXPECT_TRUE((UnifiedParams{0, 1, 1, -1}.valid()));
    EXPECT_EQ(kind_of([] { UnifiedParams{0, 2, 3, 3}.validate(); }), ErrorKind::SingularParams);
    EXPECT_EQ(kind_of([] { unified_y(UnifiedParams{0, 1, 1, 1}, 3); }), ErrorKind::SingularParams);
    EXPECT_EQ((UnifiedParams{2, 3, q("1/2"), -1}.to_string()), "k=2 v=3 lambda=1/2 alpha=-1");
}

TEST(UnifiedY, Examples)
{
    EXPECT_EQ(unified_y(UnifiedParams{1, 1, 1, 1}, 2)[2], poly({"1/6", "-1", "1"}));
    EXPECT_TRUE(unified_y(UnifiedParams{1, 1, 2, 1}, 2)[0].is_zero());
    EXPECT_EQ(unified_y(UnifiedParams{0, 1, 1, -1}, 2)[2], poly({"0", "-1", "1"}));
    EXPECT_EQ(unified_y(UnifiedParams{2, 1, 1, 1}, 2)[2], poly({"-1/2", "1"}));
    for (const auto& p : sample_params()) {
        if (p.v != 0)
            continue;
        const auto ys = unified_y(p, 6);
        for (std::size_t n = 0; n <= 6; ++n)
            EXPECT_EQ(ys[n], Polynomial::monomial(n)) << p.to_string();
    }
}

TEST(UnifiedY, ValuesAtPoints)
{
    const UnifiedParams bernoulli{1, 1, 1, 1};
    const UnifiedParams euler{0, 1, 1, -1};
    EXPECT_EQ(y_at(bernoulli, 1, 0), q("-1/2"));
    EXPECT_EQ(y_at(UnifiedParams{1, 1, 2, 1}, 0, q("5/7")), Rational(0));
    EXPECT_EQ(y_at(euler, 2, q("1/2")), q("-1/4"));
    EXPECT_EQ(y_at(UnifiedParams{1, 1, 2, 1}, 1, 0), Rational(1));
}

TEST(Presets, Parameters)
{
    const auto ab = make_preset(Family::ApostolBernoulli, q("3/2"));
    EXPECT_EQ(ab.params, (UnifiedParams{1, 1, q("3/2"), 1}));
    EXPECT_EQ(ab.prefactor, Rational(1));
    const auto ae = make_preset(Family::ApostolEuler, q("3/2"), 2);
    EXPECT_EQ(ae.params, (UnifiedParams{0, 2, q("3/2"), -1}));
    const auto ag = make_preset(Family::ApostolGenocchi, q("3/2"));
    EXPECT_EQ(ag.params, (UnifiedParams{1, 1, q("3/2"), -1}));
    EXPECT_EQ(ag.prefactor, Rational(2));
    const auto cb = make_preset(Family::ClassicalBernoulli, q("5"));
    EXPECT_EQ(cb.params.lambda, Rational(1));
    EXPECT_EQ(make_preset(Family::ClassicalGenocchi, 1, 3).prefactor, Rational(8));
    EXPECT_EQ(to_string(Family::ApostolEuler), "apostol-euler");
}

TEST(Presets, ClassicalFamiliesMatchRecurrences)
{
    const auto b = oracle::bernoulli_polynomials(12);
    const auto e = oracle::euler_polynomials(12);
    const auto g = oracle::genocchi_polynomials(12);
    const auto yb = preset_polynomials(make_preset(Family::ClassicalBernoulli), 12);
    const auto ye = preset_polynomials(make_preset(Family::ClassicalEuler), 12);
    const auto yg = preset_polynomials(make_preset(Family::ClassicalGenocchi), 12);
    for (std::size_t n = 0; n <= 12; ++n) {
        EXPECT_EQ(yb[n], b[n]) << n;
        EXPECT_EQ(ye[n], e[n]) << n;
        EXPECT_EQ(yg[n], g[n]) << n;
        EXPECT_EQ(ye[n] + shift(ye[n], 1), Polynomial::monomial(n, 2)) << n;
    }
}

TEST(Presets, ApostolFamiliesMatchLongDivision)
{
    for (const char* beta : {"2", "-1/3", "5/2"}) {
        for (unsigned v = 1; v <= 3; ++v) {
            const Rational mu = q(beta);
            const auto ab = preset_polynomials(make_preset(Family::ApostolBernoulli, mu, v), 10);
            const auto ae = preset_polynomials(make_preset(Family::ApostolEuler, mu, v), 10);
            const auto ag = preset_polynomials(make_preset(Family::ApostolGenocchi, mu, v), 10);
            const auto ob = apostol_oracle({Rational(0), Rational(1)}, mu, -1, v, 10);
            const auto oe = apostol_oracle({Rational(2)}, mu, 1, v, 10);
            const auto og = apostol_oracle({Rational(0), Rational(2)}, mu, 1, v, 10);
            for (std::size_t n = 0; n <= 10; ++n) {
                EXPECT_EQ(ab[n], ob[n]) << beta << " v=" << v << " n=" << n;
                EXPECT_EQ(ae[n], oe[n]) << beta << " v=" << v << " n=" << n;
                EXPECT_EQ(ag[n], og[n]) << beta << " v=" << v << " n=" << n;
            }
        }
    }
}

TEST(UnifiedY, GeneralParamsMatchLongDivision)
{
    for (const auto& p : sample_params()) {
        if (p.v == 0)
            continue;
        // (2^{1-k} t^k)^v / (lambda e^t - alpha)^v with the numerator expanded by hand.
        const std::size_t terms = 8 + 3 * p.v + 3;
        std::vector<Rational> base = oracle::exp_coeffs(1, terms);
        for (auto& c : base)
            c *= p.lambda;
        base[0] -= p.alpha;
        std::vector<Rational> den{Rational(1)};
        for (unsigned i = 0; i < p.v; ++i) {
            std::vector<Rational> next(terms);
            for (std::size_t a = 0; a < den.size(); ++a)
                for (std::size_t b = 0; a + b < terms; ++b)
                    next[a + b] += den[a] * base[b];
            den = std::move(next);
        }
        std::vector<Rational> num(terms);
        num[p.k * p.v] = pow(Rational(2), static_cast<std::int64_t>(p.v) * (1 - static_cast<std::int64_t>(p.k)));
        const auto want = oracle::appell_from_coeffs(oracle::series_quotient(num, den, 9), 8);
        const auto got = unified_y(p, 8);
        for (std::size_t n = 0; n <= 8; ++n)
            EXPECT_EQ(got[n], want[n]) << p.to_string() << " n=" << n;
    }
}

TEST(UnifiedY, Invariants)
{
    for (const auto& p : sample_params()) {
        const auto ys = unified_y(p, 10);
        const TruncatedSeries G = unified_generating_series(p, 10);
        const bool full_degree = G.coeff(0) != Rational(0);
        const Rational y0 = q("-3/4");
        for (std::size_t n = 0; n <= 10; ++n) {
            const Polynomial expected_derivative = n == 0 ? Polynomial() : Rational(n) * ys[n - 1];
            EXPECT_EQ(derivative(ys[n]), expected_derivative) << p.to_string();
            EXPECT_LE(ys[n].degree().value_or(0), n);
            if (full_degree) {
                EXPECT_EQ(ys[n].degree(), n);
                EXPECT_EQ(ys[n].coeff(n), G.coeff(0));
            }
            Polynomial sum;
            for (std::size_t i = 0; i <= n; ++i)
                sum += Rational(binomial(static_cast<unsigned>(n), static_cast<std::int64_t>(i))) *
                       pow(y0, static_cast<std::int64_t>(n - i)) * ys[i];
            EXPECT_EQ(shift(ys[n], y0), sum) << p.to_string();
        }
        const std::size_t ord = p.lambda == p.alpha ? 1 : 0;
        const std::size_t zeros = p.v * (p.k >= ord ? p.k - ord : 0);
        for (std::size_t n = 0; n < std::min<std::size_t>(zeros, 11); ++n)
            EXPECT_TRUE(ys[n].is_zero()) << p.to_string() << " n=" << n;
    }
}

TEST(Conversions, ApostolBernoulli)
{
    for (const char* a : {"1", "-2", "1/3"}) {
        const UnifiedParams p{1, 2, q("5"), q(a)};
        const Conversion c = convert_to_apostol_bernoulli(p, 4);
        EXPECT_EQ(c.index_shift, 0U);
        EXPECT_EQ(c.multiplier, Rational(1) / pow(q(a), 2));
        EXPECT_EQ(c.target.params, (UnifiedParams{1, 2, q("5") / q(a), 1}));
    }
    const Conversion c = convert_to_apostol_bernoulli(UnifiedParams{2, 1, 1, 1}, 2);
    EXPECT_EQ(c.index_shift, 1U);
    EXPECT_EQ(c.multiplier, Rational(1));
    const auto b = oracle::bernoulli_polynomials(3);
    EXPECT_EQ(c.multiplier * b[2 - c.index_shift], poly({"-1/2", "1"}));
    EXPECT_EQ(kind_of([] { convert_to_apostol_bernoulli(UnifiedParams{2, 2, 1, 1}, 1); }), ErrorKind::IndexUnderflow);
    EXPECT_EQ(kind_of([] { convert_to_apostol_bernoulli(UnifiedParams{0, 1, 2, 1}, 3); }), ErrorKind::OutOfDomain);
}

TEST(Conversions, ReproduceUnifiedTables)
{
    for (const auto& p : sample_params()) {
        const auto ys = unified_y(p, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
            using Converter = Conversion (*)(const UnifiedParams&, std::size_t);
            for (Converter convert : {Converter(convert_to_apostol_bernoulli), Converter(convert_to_apostol_euler),
                                      Converter(convert_to_apostol_genocchi)}) {
                Conversion c;
                try {
                    c = convert(p, n);
                } catch (const MathError&) {
                    continue;
                }
                const auto target = preset_polynomials(c.target, n);
                EXPECT_EQ(c.multiplier * target[n - c.index_shift], ys[n]) << p.to_string() << " n=" << n;
                const bool stated_agrees = c.stated_multiplier == c.multiplier;
                const bool odd_order = p.v % 2 == 1;
                if (c.target.family == Family::ApostolBernoulli)
                    EXPECT_TRUE(stated_agrees);
                else
                    EXPECT_EQ(stated_agrees, odd_order) << p.to_string();
            }
        }
    }
}

TEST(Conversions, EulerAndGenocchiExamples)
{
    EXPECT_EQ(convert_to_apostol_euler(UnifiedParams{0, 1, 2, 1}, 0).index_shift, 0U);
    EXPECT_EQ(kind_of([] { convert_to_apostol_euler(UnifiedParams{1, 1, 2, 2}, 3); }), ErrorKind::SingularParams);
    EXPECT_EQ(kind_of([] { convert_to_apostol_euler(UnifiedParams{2, 1, 2, 1}, 1); }), ErrorKind::IndexUnderflow);

    const Conversion g = convert_to_apostol_genocchi(UnifiedParams{1, 1, 1, -1}, 3);
    EXPECT_EQ(g.target.family, Family::ApostolGenocchi);
    EXPECT_EQ(g.target.params.lambda, Rational(1));
    EXPECT_EQ(g.multiplier, q("1/2"));
    EXPECT_EQ(g.stated_multiplier, q("1/2"));
    const auto genocchi = oracle::genocchi_polynomials(5);
    const auto y = unified_y(UnifiedParams{1, 1, 1, -1}, 5);
    for (std::size_t n = 0; n <= 5; ++n)
        EXPECT_EQ(q("1/2") * genocchi[n], y[n]);

    const UnifiedParams p{1, 1, 2, 1};
    const Conversion e = convert_to_apostol_euler(p, 3);
    EXPECT_EQ(e.multiplier * preset_polynomials(e.target, 2)[2], unified_y(p, 3)[3]);
}

TEST(Multiplication, Examples)
{
    for (const auto& p : sample_params()) {
        const auto ys = unified_y(p, 5);
        for (std::size_t n = 0; n <= 5; ++n)
            EXPECT_EQ(multiplication_formula_rhs(p, 1, n), ys[n]);
    }
    const UnifiedParams bernoulli{1, 1, 1, 1};
    const Polynomial b2 = poly({"1/6", "-1", "1"});
    EXPECT_EQ(multiplication_formula_rhs(bernoulli, 2, 2), poly({"1/6", "-2", "4"}));
    EXPECT_EQ(Rational(2) * (b2 + shift(b2, q("1/2"))), poly({"1/6", "-2", "4"}));

    const UnifiedParams euler{0, 1, 1, -1};
    const Polynomial e1 = poly({"-1/2", "1"});
    Polynomial manual;
    for (int j = 0; j < 3; ++j)
        manual += Rational(j % 2 == 0 ? 1 : -1) * shift(e1, Rational(j) / Rational(3));
    manual *= Rational(3);
    EXPECT_EQ(multiplication_formula_rhs(euler, 3, 1), manual);
    EXPECT_EQ(manual, substitute_scaled(e1, 3));

    EXPECT_EQ(kind_of([&] { multiplication_formula_rhs(euler, 2, 3); }), ErrorKind::SingularParams);
    EXPECT_EQ(kind_of([&] { multiplication_formula_rhs(bernoulli, 0, 3); }), ErrorKind::OutOfDomain);
}

TEST(Multiplication, MatchesSubstitution)
{
    for (const auto& p : sample_params()) {
        if (p.v > 2)
            continue;
        for (unsigned m = 1; m <= 3; ++m) {
            if (!powered_params(p, m).valid())
                continue;
            const auto ys = unified_y(p, 10);
            const auto powered = unified_y(powered_params(p, m), 10);
            for (std::size_t n = 0; n <= 10; ++n)
                EXPECT_EQ(multiplication_formula_rhs(p, m, n, powered[n]), substitute_scaled(ys[n], m))
                    << p.to_string() << " m=" << m << " n=" << n;
        }
    }
}

TEST(Multiplication, SubstituteScaled)
{
    const Polynomial p = poly({"1/6", "-1", "1"});
    EXPECT_EQ(substitute_scaled(p, 1), p);
    EXPECT_EQ(substitute_scaled(p, 0), Polynomial::constant(p(0)));
    EXPECT_EQ(substitute_scaled(p, 2), poly({"1/6", "-2", "4"}));
}
