#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral {

BigInt factorial(unsigned n);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(unsigned n, std::int64_t k);

/// (sum parts)! / prod(parts!).
BigInt multinomial(std::span<const unsigned> parts);

/// x0 (x0 - 1) ... (x0 - b + 1); (x0)_0 = 1.
Rational falling_factorial(const Rational& x0, unsigned b);

/// The same product as a polynomial in x.
Polynomial falling_factorial_polynomial(unsigned b);

enum class StirlingKind { FirstSigned, Second };

/// Triangle of Stirling numbers for 0 <= m <= n <= n_max.
///
/// Second kind: S(n, l) = l S(n-1, l) + S(n-1, l-1).
/// First kind (signed): s(n, m) = s(n-1, m-1) - (n-1) s(n-1, m), so that
/// sum_m s(n, m) x^m = (x)_n.
class StirlingTable {
public:
    StirlingTable(StirlingKind kind, unsigned n_max);

    StirlingKind kind() const { return kind_; }
    unsigned n_max() const { return n_max_; }

    /// Throws IndexOutOfTriangle outside 0 <= m <= n <= n_max.
    const BigInt& at(unsigned n, unsigned m) const;
    std::span<const BigInt> row(unsigned n) const;

private:
    StirlingKind kind_;
    unsigned n_max_;
    std::vector<std::vector<BigInt>> rows_;
};

/// Memoized lookups backed by a process-wide table that grows on demand;
/// safe to call concurrently. Throw IndexOutOfTriangle when l > n.
BigInt stirling_second(unsigned n, unsigned l);
BigInt stirling_first_signed(unsigned n, unsigned m);

/// One term of the multinomial expansion of (z_0 + ... + z_{m-1})^v.
struct Composition {
    std::vector<unsigned> parts;  ///< u_0 .. u_{m-1}, summing to v
    unsigned weight = 0;          ///< sum_i i * u_i
    BigInt coefficient;           ///< v! / prod u_i!
};

/// All compositions of v into m ordered nonnegative parts, in descending
/// lexicographic order of the parts tuple.
std::vector<Composition> enumerate_compositions(unsigned v, unsigned m);

}  // namespace umbral
