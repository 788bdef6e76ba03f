#include "umbral/rational.hpp"

#include <cctype>
#include <ostream>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
{
    if (sgn(denominator) == 0)
        throw MathError(ErrorKind::DivisionByZero, "rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw MathError(ErrorKind::InvalidFormat, "not a rational: '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (negative)
        n = -n;
    return Rational(n, d);
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw MathError(ErrorKind::DivisionByZero, "division of " + to_string() + " by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational pow(const Rational& base, std::int64_t exponent)
{
    if (exponent < 0) {
        if (base.is_zero())
            throw MathError(ErrorKind::DivisionByZero, "zero raised to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    const auto e = static_cast<unsigned long>(exponent);
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), e);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

}  // namespace umbral
