#pragma once

// The binary codes C(DC(n, q)) = { u in F_2^N : sum_i u_i Tr g_i = 0 },
// their trace duals, and weight distributions computed from trace
// histograms.

#include <cstdint>
#include <span>
#include <vector>

#include "dcm/bigint.hpp"
#include "dcm/gf2r.hpp"
#include "dcm/histogram.hpp"

namespace dcm {

/// Compressed form of a code: its length and the per-trace coordinate counts
/// of the defining vector. Codeword counts depend only on these counts.
struct CodeSpec {
    int n;
    FieldRef field;
    Int length;
    TraceHistogram histogram;
};

/// C(DC(n, q)) with the closed-form trace distribution.
CodeSpec code_spec(int n, const FieldRef& field);

struct DualWeight {
    Int weight;
    /// a = 0: c(0) is the zero codeword.
    bool zero_codeword = false;
};

/// Hamming weight of c(a) = (tr(a Tr g_1), ..., tr(a Tr g_N)) from
/// A(B - lambda(a) K(lambda; a)) / 2, cross-checked against the histogram
/// count sum_{tr(a beta) = 1} n(beta). Throws Error if the two disagree.
DualWeight dual_weight(int n, const FieldRef& field, const FieldElement& a);

/// sum over beta with tr(a beta) = 1 of h(beta).
Int dual_weight_from_histogram(const TraceHistogram& h, std::uint32_t a);

/// All a with tr(a beta) = 0 on the support of h.
std::vector<std::uint32_t> dual_kernel(const TraceHistogram& h);
std::vector<std::uint32_t> dual_kernel(int n, const FieldRef& field);

struct DualEntry {
    std::uint32_t a;
    Int weight;
};

/// (a, w(c(a))) for every a in F_q, in bit-pattern order.
std::vector<DualEntry> dual_enumerate(int n, const FieldRef& field);

struct WeightPrefix {
    unsigned jmax = 0;
    std::vector<Int> values;  // C_0 .. C_jmax

    const Int& operator[](std::size_t j) const { return values.at(j); }
};

/// C_j = sum over {nu_beta} with sum nu_beta = j and sum nu_beta beta = 0 of
/// prod_beta binom(h(beta), nu_beta), for j <= jmax. Dynamic programming over
/// field elements with state (partial count, partial F_q-sum).
WeightPrefix weight_prefix(const TraceHistogram& h, unsigned jmax);

/// Weight prefix of C(DC(n, q)) from the closed-form n(beta).
WeightPrefix weight_prefix_thmO(int n, const FieldRef& field, unsigned jmax);
/// Weight prefix of the symplectic companion code from nhat(beta).
WeightPrefix weight_prefix_thmP(int n, const FieldRef& field, unsigned jmax);

inline constexpr std::size_t kMaxBruteforceLength = 24;

/// Full weight distribution of { u : sum u_i v_i = 0 in F_q } by enumerating
/// all 2^N binary vectors. N <= 24.
std::vector<Int> code_bruteforce_wd(std::span<const std::uint32_t> v, const Field& field);
/// Same, for the enumerated defining vector of C(DC(n, q)).
std::vector<Int> code_bruteforce_wd(int n, const FieldRef& field, std::uint64_t budget = kDefaultBudget);

struct DelsarteReport {
    std::size_t length = 0;
    /// F_2-dimension of the dual from binary row reduction.
    std::size_t dual_dimension = 0;
    /// Number of distinct vectors among c(a), a in F_q.
    std::size_t distinct_trace_codewords = 0;
    /// Row space of the bit-plane matrix equals { c(a) } as a set.
    bool sets_equal = false;
    /// Weights of the distinct dual codewords, ascending.
    std::vector<Int> dual_weights;
};

/// Compares the binary dual (row space of the bit planes of v) with the
/// trace image { c(a) : a in F_q }. N <= 24.
DelsarteReport delsarte_check(std::span<const std::uint32_t> v, const Field& field);

}  // namespace dcm
