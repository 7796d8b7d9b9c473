#pragma once

// Stirling numbers, the binary Pless power moment identity, and the
// recursions it yields for power moments of Kloosterman sums: the full
// moments MK^h via the symplectic companion code, and the trace-one moments
// T1K^h via the difference of the orthogonal and symplectic codes.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "dcm/bigint.hpp"
#include "dcm/gf2r.hpp"
#include "dcm/wcode.hpp"

namespace dcm {

/// S(h, t) from the alternating sum (1/t!) sum_j (-1)^{t-j} binom(t, j) j^h.
Int stirling2(unsigned h, unsigned t);

struct PlessSides {
    Int lhs;
    Int rhs;
    bool equal() const { return lhs == rhs; }
};

/// Binary Pless identity for a length-N code of dimension k with the given
/// codeword weights (one entry per distinct codeword):
///   sum_c w(c)^h = sum_{j <= min(N,h)} (-1)^j C_j sum_{t=j}^{h} t! S(h,t) 2^{k-t} binom(N-j, t-j)
/// where C_j is the weight distribution of the dual. Throws DomainError if
/// the prefix is shorter than min(N, h).
PlessSides pless_check(const Int& length, unsigned k, std::span<const Int> dual_weights, const WeightPrefix& prefix,
                       unsigned h);

/// Throws DomainError unless n is odd with n >= 3, or n = 1 with q >= 8.
void require_recursion_range(int n, const Field& field);

struct RecursionReport {
    int n = 0;
    Int q;
    unsigned h = 0;
    /// D_j = C_j - Chat_j for j = 0..min(N, h).
    std::vector<Int> d;
    /// T1K^l for odd l < h, as consumed by the recursion.
    std::map<unsigned, Int> lower;
    Int recursive;
    std::optional<Int> oracle;
    std::optional<bool> match;
};

/// Memo of trace-one moments keyed by (n, field degree, modulus, h). One
/// instance is a session; it is safe to share between threads.
class MomentRecursion {
public:
    /// T1K^h from the code weight distributions; h odd. With compare set,
    /// also sums K(lambda; a)^h over tr(a) = 1 directly.
    RecursionReport t1k(int n, const FieldRef& field, unsigned h, bool compare = true);

    /// MK^h solved from the symplectic identity, starting at MK^0 = q - 1.
    Int mk(int n, const FieldRef& field, unsigned h);

private:
    Int t1k_value(int n, const FieldRef& field, unsigned h, RecursionReport* report);

    using Key = std::tuple<int, int, std::uint32_t, unsigned>;
    std::mutex mu_;
    std::map<Key, Int> t1k_memo_;
    std::map<Key, Int> mk_memo_;
};

/// Single-call convenience over a fresh MomentRecursion.
RecursionReport t1k_recursive(int n, const FieldRef& field, unsigned h, bool compare = true);

/// Both sides of the symplectic moment identity:
///   2^{-h} A^h sum_l (-1)^l binom(h,l) B^{h-l} MK^l
///     = q sum_j (-1)^j Chat_j sum_t t! S(h,t) 2^{-t} binom(N-j, t-j).
PlessSides thm_p_check(int n, const FieldRef& field, unsigned h);

Int mk_recursive(int n, const FieldRef& field, unsigned h);

}  // namespace dcm
