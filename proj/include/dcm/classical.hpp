#pragma once

// The groups O(2n+1, q) and Sp(2n, q) in characteristic 2, their maximal
// parabolic subgroups, the Weyl representatives sigma_r, and streaming
// enumeration of the Bruhat double cosets P sigma_r P.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dcm/bigint.hpp"
#include "dcm/gf2r.hpp"
#include "dcm/histogram.hpp"
#include "dcm/matfq.hpp"

namespace dcm {

enum class Family { Orthogonal, Symplectic };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct GroupContext {
    int n;
    FieldRef field;
    Family family;

    /// Matrix size: 2n+1 for O(2n+1, q), 2n for Sp(2n, q).
    std::size_t dim() const { return family == Family::Orthogonal ? 2 * n + 1 : 2 * n; }
};

/// theta(x) = sum_{i<=n} x_i x_{n+i} + x_{2n+1}^2 on a (2n+1)-vector.
FieldElement theta_form(std::span<const FieldElement> x, int n);

/// J = [[0, 1_n], [1_n, 0]].
MatrixFq symplectic_form(const Field& field, int n);

/// tw J w = J.
bool is_symplectic(const MatrixFq& w, int n);

/// Last column e^{2n+1} plus the three block relations (tAC + tgg and
/// tBD + thh alternating, tAD + tCB = 1).
bool is_orthogonal(const MatrixFq& w, int n);

/// Upper-left 2n x 2n block; the isomorphism O(2n+1, q) -> Sp(2n, q).
/// Throws DomainError if w is not orthogonal.
MatrixFq iota(const MatrixFq& w, int n);

/// Permutation matrix swapping e^i and e^{n+i} for i = 1..r.
MatrixFq sigma_r(const Field& field, int n, int r, Family family);

/// Group membership plus vanishing lower-left block (and g-row).
bool in_parabolic(const MatrixFq& w, int n, Family family);

/// Rank of the lower-left n x n block. For a group element this is the r
/// with w in P sigma_r P.
std::size_t bruhat_cell_index(const MatrixFq& w, int n);

/// Invertible n x n matrices in lexicographic (row-major) entry order.
std::vector<MatrixFq> general_linear_elements(const Field& field, int n, std::uint64_t budget = kDefaultBudget);

/// Calls sink once per element of P, in the fixed generation order: A over
/// GL(n, q) lexicographically, then h and the alternating part of B
/// (orthogonal), or the upper triangle of symmetric B (symplectic).
/// Throws BudgetExceeded if |P| exceeds budget.
void enumerate_parabolic(const GroupContext& ctx, const std::function<void(const MatrixFq&)>& sink,
                         std::uint64_t budget = kDefaultBudget);
std::vector<MatrixFq> parabolic_elements(const GroupContext& ctx, std::uint64_t budget = kDefaultBudget);

struct CosetData {
    int n = 0;
    int r = 0;
    Int parabolic_order;
    /// |A_r| as counted by filtering P.
    Int a_r_order;
    /// Right coset representatives of A_r in P, in generation order.
    std::vector<MatrixFq> transversal;
    /// |P| * |transversal|.
    Int double_coset_size;
};

CosetData transversal(const GroupContext& ctx, int r, std::uint64_t budget = kDefaultBudget);

struct EnumerationOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
};

/// Trace counts over P sigma_r P, streamed as p * sigma_r * x. The result is
/// independent of the worker count.
TraceHistogram dc_trace_histogram(const GroupContext& ctx, int r, const EnumerationOptions& opts = {});

/// Traces of the double coset elements in the fixed ordering: transversal
/// elements outer, P elements inner.
std::vector<std::uint32_t> dc_trace_vector(const GroupContext& ctx, int r, std::uint64_t budget = kDefaultBudget);

/// Materializes each element p * sigma_r * x in the same fixed ordering.
void for_each_double_coset_element(const GroupContext& ctx, int r,
                                   const std::function<void(const MatrixFq&)>& sink,
                                   std::uint64_t budget = kDefaultBudget);

/// Every element of the group by filtering candidate matrices. For the
/// orthogonal family only matrices with last column e^{2n+1} are tried.
/// The budget bounds the number of candidates.
std::vector<MatrixFq> classical_group_bruteforce(const GroupContext& ctx, std::uint64_t budget = kDefaultBudget);

/// Number of nonsingular alternating r x r matrices over F_q (a_0 = 1).
Int alternating_count(int r, const Field& field);
/// Exhaustive count; r <= 4.
Int alternating_count_bruteforce(int r, const Field& field);

struct GroupOrderData {
    int n = 0;
    Int q;
    Int gl_order;                   // g_n
    std::vector<Int> qbinom;        // [n choose r]_q, r = 0..n
    Int parabolic_order;            // |P|
    std::vector<Int> a_r_order;     // |A_r|
    std::vector<Int> transversal;   // |A_r \ P|
    std::vector<Int> cell_size;     // |P sigma_r P|
    Int group_order;                // sum of the cells
};

GroupOrderData group_order_data(int n, const Field& field);

}  // namespace dcm
