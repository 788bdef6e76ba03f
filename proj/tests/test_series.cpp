#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "umbral/errors.hpp"
#include "umbral/series.hpp"

using namespace umbral;
using test::q;
using test::series;

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

TruncatedSeries exp_minus_one(std::size_t n)
{
    return exp_linear(1, n) - TruncatedSeries::constant(1, n);
}

}  // namespace

TEST(Series, ConstructionPadsAndTruncates)
{
    const TruncatedSeries f({Rational(1), Rational(2)}, 3);
    EXPECT_EQ(f.precision(), 3U);
    EXPECT_EQ(f.coeff(3), Rational(0));
    EXPECT_EQ(TruncatedSeries({1, 2, 3, 4}, 1), series({"1", "2"}, 1));
    EXPECT_EQ(kind_of([&] { (void)f.coeff(4); }), ErrorKind::InsufficientPrecision);
}

TEST(Series, Valuation)
{
    EXPECT_EQ(series({"0", "0", "3"}, 4).valuation(), 2U);
    EXPECT_FALSE(TruncatedSeries::zero(5).valuation().has_value());
    EXPECT_EQ(pow(TruncatedSeries::variable(5), 2).valuation(), 2U);
}

TEST(Series, AddMulExamples)
{
    EXPECT_EQ(series({"1", "1"}, 2) * series({"1", "-1"}, 2), series({"1", "0", "-1"}, 2));
    const TruncatedSeries f = series({"3", "-1", "1/2"}, 2);
    EXPECT_EQ(f * TruncatedSeries::constant(1, 2), f);
    EXPECT_EQ(exp_linear(1, 3) * exp_linear(1, 3), series({"1", "2", "2", "4/3"}, 3));
    EXPECT_EQ((series({"1"}, 5) + series({"0", "1"}, 2)).precision(), 2U);
    EXPECT_EQ((series({"1"}, 5) * series({"0", "1"}, 2)).precision(), 2U);
}

TEST(Series, InvertExamples)
{
    EXPECT_EQ(invert(TruncatedSeries::constant(1, 4)), TruncatedSeries::constant(1, 4));
    EXPECT_EQ(invert(series({"1", "1"}, 3)), series({"1", "-1", "1", "-1"}, 3));
    const TruncatedSeries two_exp_minus_one = 2 * exp_linear(1, 2) - TruncatedSeries::constant(1, 2);
    EXPECT_EQ(invert(two_exp_minus_one), series({"1", "-2", "3"}, 2));
}

TEST(Series, InvertErrors)
{
    EXPECT_EQ(kind_of([] { invert(TruncatedSeries::variable(3)); }), ErrorKind::NotInvertible);
    EXPECT_EQ(kind_of([] { invert(TruncatedSeries::zero(3)); }), ErrorKind::NotInvertible);
}

TEST(Series, DivValExamples)
{
    const TruncatedSeries t = TruncatedSeries::variable(4);
    EXPECT_EQ(div_val(t, t), TruncatedSeries::constant(1, 3));
    EXPECT_EQ(div_val(TruncatedSeries::variable(3), exp_minus_one(3)), series({"1", "-1/2", "1/12"}, 2));
    EXPECT_EQ(kind_of([] { div_val(TruncatedSeries::constant(1, 3), exp_minus_one(3)); }),
              ErrorKind::ValuationMismatch);
    EXPECT_EQ(kind_of([] { div_val(TruncatedSeries::constant(1, 3), TruncatedSeries::zero(3)); }),
              ErrorKind::NotInvertible);
}

TEST(Series, DivValMatchesLongDivisionOracle)
{
    // t^2 / (e^t - 1)^2 against plain long division.
    const std::size_t n = 10;
    const TruncatedSeries got = div_val(pow(TruncatedSeries::variable(n), 2), pow(exp_minus_one(n), 2));
    EXPECT_EQ(got.precision(), n - 2);
    auto e = oracle::exp_coeffs(1, n + 1);
    e[0] = 0;
    std::vector<Rational> den(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j)
            den[i + j] += e[i] * e[j];
    std::vector<Rational> num(n + 1);
    num[2] = 1;
    const auto want = oracle::series_quotient(num, den, n - 1);
    for (std::size_t i = 0; i <= n - 2; ++i)
        EXPECT_EQ(got.coeff(i), want[i]) << i;
}

TEST(Series, ExpLinearExamples)
{
    EXPECT_EQ(exp_linear(0, 3), TruncatedSeries::constant(1, 3));
    EXPECT_EQ(exp_linear(1, 3), series({"1", "1", "1/2", "1/6"}, 3));
    EXPECT_EQ(exp_linear(q("1/2"), 2), series({"1", "1/2", "1/8"}, 2));
}

TEST(Series, PowExamples)
{
    const TruncatedSeries f = series({"2", "3", "-1"}, 4);
    EXPECT_EQ(pow(f, 0), TruncatedSeries::constant(1, 4));
    EXPECT_EQ(pow(series({"1", "1"}, 3), 3), series({"1", "3", "3", "1"}, 3));
    EXPECT_EQ(pow(f, 5), f * f * f * f * f);
}

TEST(Series, ScaleArgExamples)
{
    const TruncatedSeries f = series({"1", "-2", "5"}, 2);
    EXPECT_EQ(scale_arg(f, 1), f);
    EXPECT_EQ(scale_arg(exp_linear(1, 4), 2), exp_linear(2, 4));
    EXPECT_EQ(scale_arg(series({"0", "1", "-2"}, 2), q("1/2")), series({"0", "1/2", "-1/2"}, 2));
}

TEST(Series, ComposeExamples)
{
    const TruncatedSeries f = series({"1", "2", "3", "4"}, 3);
    EXPECT_EQ(compose(f, TruncatedSeries::variable(3)), f);
    EXPECT_EQ(compose(series({"1", "1"}, 4), series({"0", "0", "1"}, 4)), series({"1", "0", "1"}, 4));
    EXPECT_EQ(compose(exp_linear(1, 3), exp_minus_one(3)), series({"1", "1", "1", "5/6"}, 3));
    EXPECT_EQ(kind_of([] { compose(exp_linear(1, 3), exp_linear(1, 3)); }), ErrorKind::CompositionRequiresDelta);
}

TEST(Series, RevertExamples)
{
    EXPECT_EQ(revert(TruncatedSeries::variable(5)), TruncatedSeries::variable(5));
    EXPECT_EQ(revert(exp_minus_one(3)), series({"0", "1", "-1/2", "1/3"}, 3));
    EXPECT_EQ(kind_of([] { revert(series({"1", "1"}, 3)); }), ErrorKind::NotDeltaSeries);
    EXPECT_EQ(kind_of([] { revert(series({"0", "0", "1"}, 3)); }), ErrorKind::NotDeltaSeries);
}

TEST(Series, DerivativeLowersPrecision)
{
    EXPECT_EQ(derivative(exp_linear(1, 3)), exp_linear(1, 2));
    EXPECT_EQ(kind_of([] { derivative(TruncatedSeries::constant(1, 0)); }), ErrorKind::InsufficientPrecision);
}

TEST(Series, TextForm)
{
    EXPECT_EQ(to_string(series({"1", "-1/2", "1/12"}, 2)), "1 - 1/2*t + 1/12*t^2 + O(t^3)");
    EXPECT_EQ(to_string(TruncatedSeries::zero(1)), "0 + O(t^2)");
}

class SeriesProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(SeriesProperties, InverseIsInverse)
{
    test::Gen gen(GetParam());
    for (int trial = 0; trial < 10; ++trial) {
        const TruncatedSeries f = gen.series(8);
        EXPECT_EQ(f * invert(f), TruncatedSeries::constant(1, 8));
    }
}

TEST_P(SeriesProperties, ReversionRoundTrips)
{
    test::Gen gen(GetParam());
    for (int trial = 0; trial < 6; ++trial) {
        const TruncatedSeries f = gen.series(7, 1);
        const TruncatedSeries g = revert(f);
        EXPECT_EQ(compose(g, f), TruncatedSeries::variable(7));
        EXPECT_EQ(compose(f, g), TruncatedSeries::variable(7));
    }
}

TEST_P(SeriesProperties, DivValUndoesMultiplication)
{
    test::Gen gen(GetParam());
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t v = static_cast<std::size_t>(gen.integer(0, 3));
        const TruncatedSeries a = gen.series(9, static_cast<std::size_t>(gen.integer(0, 2)));
        const TruncatedSeries b = gen.series(9, v);
        const TruncatedSeries quotient = div_val(a * b, b);
        EXPECT_EQ(quotient.precision(), 9 - v);
        EXPECT_EQ(quotient, truncate(a, 9 - v));
    }
}

TEST_P(SeriesProperties, ScaleArgRoundTrips)
{
    test::Gen gen(GetParam());
    for (int trial = 0; trial < 10; ++trial) {
        const TruncatedSeries f = gen.series(8);
        const Rational c = gen.nonzero_rational();
        EXPECT_EQ(scale_arg(scale_arg(f, c), Rational(1) / c), f);
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SeriesProperties, ::testing::Values(3U, 11U, 2024U));
