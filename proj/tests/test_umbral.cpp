#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"
#include "umbral/umbral.hpp"

using namespace umbral;
using test::poly;
using test::q;

namespace {

constexpr std::size_t N = 16;

TruncatedSeries exp_minus_one(std::size_t n = N)
{
    return exp_linear(1, n) - TruncatedSeries::constant(1, n);
}

/// (e^t - 1)/t
TruncatedSeries bernoulli_g()
{
    return div_val(exp_minus_one(N + 1), TruncatedSeries::variable(N + 1));
}

/// (e^t + 1)/2
TruncatedSeries euler_g()
{
    return Rational(1, 2) * (exp_linear(1, N) + TruncatedSeries::constant(1, N));
}

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

}  // namespace

TEST(Functional, Examples)
{
    EXPECT_EQ(functional_apply(pow(TruncatedSeries::variable(4), 2), Polynomial::monomial(2)), Rational(2));
    EXPECT_EQ(functional_apply(exp_linear(2, 4), Polynomial::monomial(2)), Rational(4));
    EXPECT_EQ(functional_apply(pow(exp_minus_one(4), 2), Polynomial::monomial(3)), Rational(6));
    EXPECT_EQ(functional_apply(exp_linear(1, 0), Polynomial()), Rational(0));
}

TEST(Functional, PrecisionChecked)
{
    EXPECT_EQ(kind_of([] { functional_apply(exp_linear(1, 2), Polynomial::monomial(3)); }),
              ErrorKind::InsufficientPrecision);
    EXPECT_EQ(kind_of([] { operator_apply(exp_linear(1, 2), Polynomial::monomial(3)); }),
              ErrorKind::InsufficientPrecision);
}

TEST(Operator, Examples)
{
    EXPECT_EQ(operator_apply(TruncatedSeries::variable(3), Polynomial::monomial(3)), Polynomial::monomial(2, 3));
    const Polynomial p = poly({"2", "-1", "0", "5"});
    EXPECT_EQ(operator_apply(exp_linear(1, 3), p), shift(p, 1));
    EXPECT_EQ(operator_apply(exp_minus_one(2), Polynomial::monomial(2)), poly({"1", "2"}));
}

TEST(Shift, Examples)
{
    const Polynomial p = poly({"1/3", "-2", "1"});
    EXPECT_EQ(shift(p, 0), p);
    EXPECT_EQ(shift(Polynomial::monomial(2), 1), poly({"1", "2", "1"}));
    EXPECT_EQ(shift(poly({"-1/2", "1"}), q("1/2")), Polynomial::x());
}

TEST(InverseT, Examples)
{
    EXPECT_EQ(inv_t_monomialwise(Polynomial::constant(1)), Polynomial::x());
    EXPECT_EQ(inv_t_monomialwise(Polynomial::monomial(2)), Polynomial::monomial(3, q("1/3")));
    const Polynomial p = poly({"-1", "0", "3"});
    EXPECT_EQ(operator_apply(TruncatedSeries::variable(3), inv_t_monomialwise(p)), p);
}

TEST(Appell, FromG)
{
    const auto identity = appell_from_g(TruncatedSeries::constant(1, N), 6);
    for (std::size_t n = 0; n <= 6; ++n)
        EXPECT_EQ(identity[n], Polynomial::monomial(n));
    EXPECT_EQ(appell_from_g(bernoulli_g(), 4)[2], poly({"1/6", "-1", "1"}));
    EXPECT_EQ(appell_from_g(euler_g(), 4)[1], poly({"-1/2", "1"}));
    EXPECT_EQ(kind_of([] { appell_from_g(TruncatedSeries::variable(4), 3); }), ErrorKind::NotInvertible);
}

TEST(Appell, MatchesClassicalOracles)
{
    const auto b = oracle::bernoulli_polynomials(12);
    const auto e = oracle::euler_polynomials(12);
    const auto bs = appell_from_g(bernoulli_g(), 12);
    const auto es = appell_from_g(euler_g(), 12);
    for (std::size_t n = 0; n <= 12; ++n) {
        EXPECT_EQ(bs[n], b[n]) << n;
        EXPECT_EQ(es[n], e[n]) << n;
    }
}

TEST(Sheffer, FromPair)
{
    const auto monomials = sheffer_from_pair(ShefferPair(TruncatedSeries::constant(1, N), TruncatedSeries::variable(N)), 6);
    for (std::size_t n = 0; n <= 6; ++n)
        EXPECT_EQ(monomials[n], Polynomial::monomial(n));

    const auto bern = sheffer_from_pair(ShefferPair::appell(bernoulli_g()), 10);
    const auto direct = appell_from_g(bernoulli_g(), 10);
    for (std::size_t n = 0; n <= 10; ++n)
        EXPECT_EQ(bern[n], direct[n]);

    const auto falling = sheffer_from_pair(ShefferPair(TruncatedSeries::constant(1, N), exp_minus_one()), 10);
    for (unsigned n = 0; n <= 10; ++n)
        EXPECT_EQ(falling[n], oracle::falling(n)) << n;
}

TEST(Sheffer, PairValidation)
{
    EXPECT_EQ(kind_of([] { ShefferPair(TruncatedSeries::variable(4), TruncatedSeries::variable(4)); }),
              ErrorKind::NotInvertible);
    EXPECT_EQ(kind_of([] { ShefferPair(TruncatedSeries::constant(1, 4), exp_linear(1, 4)); }),
              ErrorKind::NotDeltaSeries);
    EXPECT_EQ(kind_of([] {
                  ShefferPair(TruncatedSeries::constant(1, 4), pow(TruncatedSeries::variable(4), 2));
              }),
              ErrorKind::NotDeltaSeries);
}

TEST(Sheffer, SequenceRequiresExactDegrees)
{
    const ShefferPair pair = ShefferPair::appell(TruncatedSeries::constant(1, 4));
    EXPECT_THROW(ShefferSequence(pair, {Polynomial::constant(1), Polynomial::monomial(2)}), MathError);
    EXPECT_THROW(ShefferSequence(pair, {}), MathError);
}

TEST(Sheffer, Orthogonality)
{
    const std::vector<ShefferSequence> sequences{
        appell_from_g(bernoulli_g(), 10),
        appell_from_g(euler_g(), 10),
        sheffer_from_pair(ShefferPair(TruncatedSeries::constant(1, N), exp_minus_one()), 10),
        sheffer_from_pair(ShefferPair(euler_g(), exp_minus_one()), 10),
    };
    for (const auto& seq : sequences)
        EXPECT_FALSE(find_orthogonality_violation(seq).has_value());
}

TEST(Sheffer, OrthogonalityViolationReported)
{
    std::vector<Polynomial> polys{Polynomial::constant(1), poly({"1", "1"})};
    const ShefferSequence wrong(ShefferPair::appell(TruncatedSeries::constant(1, 4)), polys);
    const auto violation = find_orthogonality_violation(wrong);
    ASSERT_TRUE(violation.has_value());
    EXPECT_EQ(violation->n, 1U);
    EXPECT_EQ(violation->k, 0U);
    EXPECT_EQ(violation->value, Rational(1));
}

TEST(Appell, RecurrenceStep)
{
    const TruncatedSeries one = TruncatedSeries::constant(1, N);
    for (std::size_t n = 0; n <= 5; ++n)
        EXPECT_EQ(appell_recurrence_step(one, Polynomial::monomial(n)), Polynomial::monomial(n + 1));
    EXPECT_EQ(appell_recurrence_step(bernoulli_g(), Polynomial::constant(1)), poly({"-1/2", "1"}));
    EXPECT_EQ(appell_recurrence_step(euler_g(), poly({"-1/2", "1"})), poly({"0", "-1", "1"}));
    const auto b = oracle::bernoulli_polynomials(10);
    for (std::size_t n = 0; n < 10; ++n)
        EXPECT_EQ(appell_recurrence_step(bernoulli_g(), b[n]), b[n + 1]);
}

TEST(Appell, Multiplication)
{
    const Polynomial b2 = poly({"1/6", "-1", "1"});
    EXPECT_EQ(appell_multiplication(bernoulli_g(), b2, 2, 1), b2);
    EXPECT_EQ(appell_multiplication(TruncatedSeries::constant(1, N), Polynomial::monomial(2), 2, 2),
              Polynomial::monomial(2, 4));
    EXPECT_EQ(appell_multiplication(bernoulli_g(), b2, 2, 2), poly({"1/6", "-2", "4"}));
    EXPECT_EQ(kind_of([&] { appell_multiplication(bernoulli_g(), b2, 2, 0); }), ErrorKind::ZeroScale);
    const auto e = oracle::euler_polynomials(9);
    for (std::size_t n = 0; n <= 9; ++n)
        for (const Rational& c : {q("3"), q("-1/2"), q("2/3")})
            EXPECT_EQ(appell_multiplication(euler_g(), e[n], n, c), scale_variable(e[n], c));
}

TEST(ShiftUp, Examples)
{
    const auto monomials = appell_from_g(TruncatedSeries::constant(1, N), 4);
    EXPECT_EQ(sheffer_shift_up(monomials, 1), Polynomial::monomial(2, q("1/2")));
    const auto bern = appell_from_g(bernoulli_g(), 4);
    EXPECT_EQ(sheffer_shift_up(bern, 0), poly({"-1/2", "1"}));
    EXPECT_EQ(sheffer_shift_up(bern, 0) - inv_t_monomialwise(bern[0]), Polynomial::constant(q("-1/2")));
    EXPECT_EQ(kind_of([&] { sheffer_shift_up(bern, 4); }), ErrorKind::IndexOutOfRange);
}

class UmbralProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(UmbralProperties, AdjointLaw)
{
    test::Gen gen(GetParam());
    for (int trial = 0; trial < 15; ++trial) {
        const TruncatedSeries f = gen.series(8, static_cast<std::size_t>(gen.integer(0, 2)));
        const TruncatedSeries g = gen.series(8, static_cast<std::size_t>(gen.integer(0, 2)));
        const Polynomial p = gen.polynomial(8);
        EXPECT_EQ(functional_apply(f * g, p), functional_apply(f, operator_apply(g, p)));
    }
}

TEST_P(UmbralProperties, EvaluationFunctional)
{
    test::Gen gen(GetParam());
    for (int trial = 0; trial < 15; ++trial) {
        const Polynomial p = gen.polynomial(9);
        const Rational y0 = gen.rational();
        EXPECT_EQ(functional_apply(exp_linear(y0, 9), p), p(y0));
        EXPECT_EQ(operator_apply(exp_linear(y0, 9), p), shift(p, y0));
    }
}

TEST_P(UmbralProperties, AppellLaws)
{
    test::Gen gen(GetParam());
    for (int trial = 0; trial < 4; ++trial) {
        const TruncatedSeries g = gen.series(12);
        const auto seq = appell_from_g(g, 10);
        EXPECT_FALSE(find_orthogonality_violation(seq).has_value());
        const Rational y0 = gen.rational();
        const TruncatedSeries t = TruncatedSeries::variable(12);
        for (std::size_t n = 0; n <= 10; ++n) {
            const Polynomial expected_derivative = n == 0 ? Polynomial() : Rational(n) * seq[n - 1];
            EXPECT_EQ(operator_apply(t, seq[n]), expected_derivative);
            Polynomial binomial_sum;
            for (std::size_t i = 0; i <= n; ++i)
                binomial_sum += Rational(binomial(static_cast<unsigned>(n), static_cast<std::int64_t>(i))) *
                                pow(y0, static_cast<std::int64_t>(n - i)) * seq[i];
            EXPECT_EQ(shift(seq[n], y0), binomial_sum);
        }
        for (std::size_t n = 0; n < 10; ++n) {
            const Polynomial up = sheffer_shift_up(seq, n);
            EXPECT_EQ(operator_apply(t, up), seq[n]);
            const Polynomial gap = up - inv_t_monomialwise(seq[n]);
            EXPECT_LE(gap.degree().value_or(0), 0U);
            for (const Rational& c : {q("1"), q("1/2"), q("-1"), gen.rational()})
                EXPECT_EQ(functional_apply(exp_linear(c, 12) - TruncatedSeries::constant(1, 12), gap), Rational(0));
        }
    }
}

TEST_P(UmbralProperties, GeneralShefferOrthogonality)
{
    test::Gen gen(GetParam());
    for (int trial = 0; trial < 3; ++trial) {
        const ShefferPair pair(gen.series(10), gen.series(10, 1));
        EXPECT_FALSE(find_orthogonality_violation(sheffer_from_pair(pair, 8)).has_value());
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, UmbralProperties, ::testing::Values(5U, 17U, 99U));
