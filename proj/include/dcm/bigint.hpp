#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dcm {

using Int = mpz_class;
using Rat = mpq_class;

/// Default number of group elements an enumeration may stream.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

Int ipow(const Int& base, unsigned long exp);
Int ipow2(unsigned long exp);

/// binom(n, k); zero when k > n or n < 0.
Int binom(const Int& n, unsigned long k);

Int factorial(unsigned long n);

/// Order of GL(n, q): prod_{j=0}^{n-1} (q^n - q^j).
Int gl_order(const Int& q, unsigned n);

/// Gaussian binomial [n choose r]_q; zero outside 0 <= r <= n.
Int qbinom(const Int& q, int n, int r);

/// Converts an exact rational to an integer, throwing IntegralityError when
/// the denominator is not one. `what` names the quantity in the message.
Int to_integer(const Rat& x, const std::string& what);

inline std::string to_string(const Int& x) { return x.get_str(); }

/// Fits in uint64 without loss.
bool fits_u64(const Int& x);
std::uint64_t to_u64(const Int& x);

}  // namespace dcm
