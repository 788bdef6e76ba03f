#include "umbral/combinatorics.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "umbral/errors.hpp"

namespace umbral {

BigInt factorial(unsigned n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(unsigned n, std::int64_t k)
{
    if (k < 0 || k > static_cast<std::int64_t>(n))
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

BigInt multinomial(std::span<const unsigned> parts)
{
    const unsigned total = std::accumulate(parts.begin(), parts.end(), 0U);
    BigInt out = factorial(total);
    for (unsigned p : parts)
        out /= factorial(p);
    return out;
}

Rational falling_factorial(const Rational& x0, unsigned b)
{
    Rational out = 1;
    for (unsigned i = 0; i < b; ++i)
        out *= x0 - Rational(i);
    return out;
}

Polynomial falling_factorial_polynomial(unsigned b)
{
    Polynomial out = Polynomial::constant(1);
    for (unsigned i = 0; i < b; ++i)
        out = out * Polynomial({-Rational(i), Rational(1)});
    return out;
}

StirlingTable::StirlingTable(StirlingKind kind, unsigned n_max) : kind_(kind), n_max_(n_max)
{
    rows_.resize(n_max + 1);
    rows_[0] = {BigInt(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
        auto& row = rows_[n];
        const auto& prev = rows_[n - 1];
        row.assign(n + 1, BigInt(0));
        for (unsigned m = 1; m <= n; ++m) {
            const BigInt same = m < n ? prev[m] : BigInt(0);
            if (kind == StirlingKind::Second)
                row[m] = BigInt(m) * same + prev[m - 1];
            else
                row[m] = prev[m - 1] - BigInt(n - 1) * same;
        }
    }
}

const BigInt& StirlingTable::at(unsigned n, unsigned m) const
{
    if (n > n_max_ || m > n)
        throw MathError(ErrorKind::IndexOutOfTriangle,
                        "(" + std::to_string(n) + ", " + std::to_string(m) + ") outside triangle of size " +
                            std::to_string(n_max_));
    return rows_[n][m];
}

std::span<const BigInt> StirlingTable::row(unsigned n) const
{
    if (n > n_max_)
        throw MathError(ErrorKind::IndexOutOfTriangle, "row " + std::to_string(n) + " beyond table");
    return rows_[n];
}

namespace {

// Grows by rebuilding into a fresh immutable table; readers keep whatever
// snapshot they already hold.
class StirlingCache {
public:
    explicit StirlingCache(StirlingKind kind) : kind_(kind) {}

    BigInt lookup(unsigned n, unsigned m)
    {
        if (m > n)
            throw MathError(ErrorKind::IndexOutOfTriangle,
                            "(" + std::to_string(n) + ", " + std::to_string(m) + ") has m > n");
        std::shared_ptr<const StirlingTable> table;
        {
            std::lock_guard lock(mutex_);
            if (!table_ || table_->n_max() < n)
                table_ = std::make_shared<const StirlingTable>(kind_, std::max(n, 2 * (table_ ? table_->n_max() : 16U)));
            table = table_;
        }
        return table->at(n, m);
    }

private:
    StirlingKind kind_;
    std::mutex mutex_;
    std::shared_ptr<const StirlingTable> table_;
};

}  // namespace

BigInt stirling_second(unsigned n, unsigned l)
{
    static StirlingCache cache(StirlingKind::Second);
    return cache.lookup(n, l);
}

BigInt stirling_first_signed(unsigned n, unsigned m)
{
    static StirlingCache cache(StirlingKind::FirstSigned);
    return cache.lookup(n, m);
}

namespace {

void compositions_into(unsigned remaining, unsigned slot, std::vector<unsigned>& parts, std::vector<Composition>& out)
{
    const auto m = static_cast<unsigned>(parts.size());
    if (slot + 1 == m) {
        parts[slot] = remaining;
        Composition c;
        c.parts = parts;
        for (unsigned i = 0; i < m; ++i)
            c.weight += i * parts[i];
        c.coefficient = multinomial(parts);
        out.push_back(std::move(c));
        return;
    }
    for (unsigned u = remaining + 1; u-- > 0;) {
        parts[slot] = u;
        compositions_into(remaining - u, slot + 1, parts, out);
    }
}

}  // namespace

std::vector<Composition> enumerate_compositions(unsigned v, unsigned m)
{
    if (m == 0)
        throw MathError(ErrorKind::OutOfDomain, "compositions need at least one part");
    std::vector<Composition> out;
    std::vector<unsigned> parts(m, 0);
    compositions_into(v, 0, parts, out);
    return out;
}

}  // namespace umbral
