#include "dcm/classical.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "dcm/error.hpp"

namespace dcm {

namespace {

void require_dim(const MatrixFq& w, std::size_t d, const char* what) {
    if (w.rows() != d || w.cols() != d)
        throw MismatchError(std::string(what) + " expects a " + std::to_string(d) + "x" + std::to_string(d) +
                            " matrix, got " + std::to_string(w.rows()) + "x" + std::to_string(w.cols()));
}

void require_n(int n) {
    if (n < 1) throw DomainError("group rank n must be positive, got " + std::to_string(n));
}

/// Advances a base-q odometer, last digit fastest. Returns false on wrap.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t q) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < q) return true;
        digits[i] = 0;
    }
    return false;
}

Int candidate_count(const Field& f, std::size_t entries) { return ipow(f.order(), entries); }

void check_budget(const Int& needed, std::uint64_t budget, const std::string& what) {
    if (needed > Int(std::to_string(budget)))
        throw BudgetExceeded(what + " needs " + needed.get_str() + " elements, budget is " + std::to_string(budget));
}

/// sigma_r as an index permutation (an involution).
std::vector<std::size_t> sigma_permutation(int n, int r, std::size_t dim) {
    std::vector<std::size_t> perm(dim);
    for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
    for (int i = 0; i < r; ++i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(n + i)]);
    return perm;
}

/// Rows of the group matrix that must vanish on the first n columns for
/// membership in P.
std::size_t parabolic_row_end(int n, Family family) {
    return family == Family::Orthogonal ? static_cast<std::size_t>(2 * n + 1) : static_cast<std::size_t>(2 * n);
}

/// Whether sigma * (p * kinv) * sigma^{-1} has the parabolic shape, computing
/// only the entries that must vanish.
bool conjugate_product_in_parabolic(const Field& f, const MatrixFq& p, const MatrixFq& kinv,
                                    const std::vector<std::size_t>& perm, int n, Family family) {
    const std::size_t d = p.rows();
    const std::size_t row_end = parabolic_row_end(n, family);
    for (std::size_t i = static_cast<std::size_t>(n); i < row_end; ++i) {
        const std::size_t a = perm[i];
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
            const std::size_t b = perm[j];
            std::uint32_t s = 0;
            for (std::size_t k = 0; k < d; ++k) s ^= f.mul(p.raw(a, k), kinv.raw(k, b));
            if (s != 0) return false;
        }
    }
    return true;
}

bool conjugate_in_parabolic(const MatrixFq& w, const std::vector<std::size_t>& perm, int n, Family family) {
    const std::size_t row_end = parabolic_row_end(n, family);
    for (std::size_t i = static_cast<std::size_t>(n); i < row_end; ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
            if (w.raw(perm[i], perm[j]) != 0) return false;
    return true;
}

/// Pairs (i, j), i < j, of the strict upper triangle.
std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n, bool with_diagonal) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = with_diagonal ? i : i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

void require_r(int n, int r) {
    if (r < 0 || r > n)
        throw DomainError("coset index r must satisfy 0 <= r <= n, got r=" + std::to_string(r) +
                          " n=" + std::to_string(n));
}

}  // namespace

std::string_view family_name(Family f) { return f == Family::Orthogonal ? "orthogonal" : "symplectic"; }

std::optional<Family> parse_family(std::string_view name) {
    if (name == "orthogonal" || name == "O") return Family::Orthogonal;
    if (name == "symplectic" || name == "Sp") return Family::Symplectic;
    return std::nullopt;
}

FieldElement theta_form(std::span<const FieldElement> x, int n) {
    require_n(n);
    if (x.size() != static_cast<std::size_t>(2 * n + 1))
        throw MismatchError("theta_form expects " + std::to_string(2 * n + 1) + " coordinates, got " +
                            std::to_string(x.size()));
    FieldElement s = x[0].field().zero();
    for (int i = 0; i < n; ++i) s += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(n + i)];
    const auto& last = x[static_cast<std::size_t>(2 * n)];
    return s + last * last;
}

MatrixFq symplectic_form(const Field& field, int n) {
    require_n(n);
    const auto un = static_cast<std::size_t>(n);
    MatrixFq j(field, 2 * un, 2 * un);
    for (std::size_t i = 0; i < un; ++i) {
        j.set_raw(i, un + i, 1);
        j.set_raw(un + i, i, 1);
    }
    return j;
}

bool is_symplectic(const MatrixFq& w, int n) {
    require_n(n);
    const auto un = static_cast<std::size_t>(n);
    require_dim(w, 2 * un, "is_symplectic");
    const Field& f = w.field();
    // (tw J w)_{ij} = sum_k w_{k,i} w_{n+k,j} + w_{n+k,i} w_{k,j}
    for (std::size_t i = 0; i < 2 * un; ++i)
        for (std::size_t j = 0; j < 2 * un; ++j) {
            std::uint32_t s = 0;
            for (std::size_t k = 0; k < un; ++k)
                s ^= f.mul(w.raw(k, i), w.raw(un + k, j)) ^ f.mul(w.raw(un + k, i), w.raw(k, j));
            const std::uint32_t expected = (j == i + un || i == j + un) ? 1u : 0u;
            if (s != expected) return false;
        }
    return true;
}

bool is_orthogonal(const MatrixFq& w, int n) {
    require_n(n);
    const auto un = static_cast<std::size_t>(n);
    const std::size_t d = 2 * un + 1;
    require_dim(w, d, "is_orthogonal");
    const Field& f = w.field();
    for (std::size_t i = 0; i + 1 < d; ++i)
        if (w.raw(i, d - 1) != 0) return false;
    if (w.raw(d - 1, d - 1) != 1) return false;

    // Column blocks: X = [A; C; g] (first n columns), Y = [B; D; h].
    // (tX1 X2)_{ij} restricted to the top two row blocks, plus the last row.
    auto form = [&](std::size_t ci, std::size_t cj, bool with_last_row) {
        std::uint32_t s = 0;
        for (std::size_t k = 0; k < un; ++k) s ^= f.mul(w.raw(k, ci), w.raw(un + k, cj));
        if (with_last_row) s ^= f.mul(w.raw(d - 1, ci), w.raw(d - 1, cj));
        return s;
    };
    // tAC + tgg and tBD + thh alternating.
    for (std::size_t base : {std::size_t{0}, un}) {
        for (std::size_t i = 0; i < un; ++i) {
            if (form(base + i, base + i, true) != 0) return false;
            for (std::size_t j = i + 1; j < un; ++j)
                if (form(base + i, base + j, true) != form(base + j, base + i, true)) return false;
        }
    }
    // tAD + tCB = 1: (tAD)_{ij} = sum_k A_ki D_kj, (tCB)_{ij} = sum_k C_ki B_kj.
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j) {
            std::uint32_t s = 0;
            for (std::size_t k = 0; k < un; ++k)
                s ^= f.mul(w.raw(k, i), w.raw(un + k, un + j)) ^ f.mul(w.raw(un + k, i), w.raw(k, un + j));
            if (s != (i == j ? 1u : 0u)) return false;
        }
    return true;
}

MatrixFq iota(const MatrixFq& w, int n) {
    if (!is_orthogonal(w, n)) throw DomainError("iota expects an element of O(2n+1, q)");
    const auto un = static_cast<std::size_t>(n);
    return w.block(0, 0, 2 * un, 2 * un);
}

MatrixFq sigma_r(const Field& field, int n, int r, Family family) {
    require_n(n);
    require_r(n, r);
    const std::size_t d = GroupContext{n, nullptr, family}.dim();
    const auto perm = sigma_permutation(n, r, d);
    MatrixFq s(field, d, d);
    for (std::size_t j = 0; j < d; ++j) s.set_raw(perm[j], j, 1);
    return s;
}

bool in_parabolic(const MatrixFq& w, int n, Family family) {
    const bool member = family == Family::Orthogonal ? is_orthogonal(w, n) : is_symplectic(w, n);
    if (!member) return false;
    const std::size_t row_end = parabolic_row_end(n, family);
    for (std::size_t i = static_cast<std::size_t>(n); i < row_end; ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
            if (w.raw(i, j) != 0) return false;
    return true;
}

std::size_t bruhat_cell_index(const MatrixFq& w, int n) {
    require_n(n);
    const auto un = static_cast<std::size_t>(n);
    if (w.rows() < 2 * un || w.cols() < 2 * un) throw MismatchError("matrix too small for rank n");
    return mat_rank(w.block(un, 0, un, un));
}

std::vector<MatrixFq> general_linear_elements(const Field& field, int n, std::uint64_t budget) {
    if (n < 0) throw DomainError("negative matrix size");
    const auto un = static_cast<std::size_t>(n);
    check_budget(candidate_count(field, un * un), budget, "GL(" + std::to_string(n) + ") candidate scan");
    std::vector<MatrixFq> out;
    if (n == 0) {
        out.emplace_back(field, 0, 0);
        return out;
    }
    std::vector<std::uint32_t> digits(un * un, 0);
    do {
        MatrixFq m(field, un, un, digits);
        if (mat_rank(m) == un) out.push_back(std::move(m));
    } while (advance(digits, field.size()));
    return out;
}

void enumerate_parabolic(const GroupContext& ctx, const std::function<void(const MatrixFq&)>& sink,
                         std::uint64_t budget) {
    require_n(ctx.n);
    const Field& f = *ctx.field;
    const auto un = static_cast<std::size_t>(ctx.n);
    const Int order = ipow(f.order(), un * (un + 1) / 2) * gl_order(f.order(), static_cast<unsigned>(ctx.n));
    check_budget(order, budget, "parabolic subgroup enumeration");

    const std::size_t d = ctx.dim();
    const bool orth = ctx.family == Family::Orthogonal;
    const auto pairs = upper_pairs(un, !orth);
    const std::size_t params = pairs.size() + (orth ? un : 0);

    for (const MatrixFq& a : general_linear_elements(f, ctx.n, budget)) {
        const MatrixFq a_inv_t = mat_inv(a).transpose();
        std::vector<std::uint32_t> digits(params, 0);
        do {
            // Orthogonal: digits = (h_1..h_n, alternating part above the
            // diagonal); B = S + th h. Symplectic: upper triangle of B.
            MatrixFq b(f, un, un);
            std::size_t off = 0;
            if (orth) {
                for (std::size_t i = 0; i < un; ++i)
                    for (std::size_t j = 0; j < un; ++j) b.set_raw(i, j, f.mul(digits[i], digits[j]));
                off = un;
            }
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                const auto [i, j] = pairs[k];
                const std::uint32_t v = digits[off + k];
                b.set_raw(i, j, b.raw(i, j) ^ v);
                if (i != j) b.set_raw(j, i, b.raw(j, i) ^ v);
            }
            const MatrixFq ab = mat_mul(a, b);
            MatrixFq w(f, d, d);
            for (std::size_t i = 0; i < un; ++i)
                for (std::size_t j = 0; j < un; ++j) {
                    w.set_raw(i, j, a.raw(i, j));
                    w.set_raw(i, un + j, ab.raw(i, j));
                    w.set_raw(un + i, un + j, a_inv_t.raw(i, j));
                }
            if (orth) {
                for (std::size_t j = 0; j < un; ++j) w.set_raw(d - 1, un + j, digits[j]);
                w.set_raw(d - 1, d - 1, 1);
            }
            sink(w);
        } while (advance(digits, f.size()));
    }
}

std::vector<MatrixFq> parabolic_elements(const GroupContext& ctx, std::uint64_t budget) {
    std::vector<MatrixFq> out;
    enumerate_parabolic(ctx, [&](const MatrixFq& w) { out.push_back(w); }, budget);
    return out;
}

namespace {

struct CosetWork {
    std::vector<MatrixFq> parabolic;
    CosetData data;
};

CosetWork build_cosets(const GroupContext& ctx, int r, std::uint64_t budget) {
    require_n(ctx.n);
    require_r(ctx.n, r);
    const Field& f = *ctx.field;
    CosetWork work;
    work.parabolic = parabolic_elements(ctx, budget);
    const auto perm = sigma_permutation(ctx.n, r, ctx.dim());

    CosetData& data = work.data;
    data.n = ctx.n;
    data.r = r;
    data.parabolic_order = Int(static_cast<unsigned long>(work.parabolic.size()));
    std::size_t a_r = 0;
    for (const auto& w : work.parabolic)
        if (conjugate_in_parabolic(w, perm, ctx.n, ctx.family)) ++a_r;
    data.a_r_order = Int(static_cast<unsigned long>(a_r));

    // Greedy right-coset sifting: keep p unless p * k^{-1} lies in A_r for
    // some kept k. Membership in A_r reduces to the shape test after
    // conjugation since p * k^{-1} is already in P.
    std::vector<MatrixFq> kept_inv;
    for (const auto& p : work.parabolic) {
        const bool covered = std::any_of(kept_inv.begin(), kept_inv.end(), [&](const MatrixFq& kinv) {
            return conjugate_product_in_parabolic(f, p, kinv, perm, ctx.n, ctx.family);
        });
        if (covered) continue;
        data.transversal.push_back(p);
        kept_inv.push_back(mat_inv(p));
    }
    data.double_coset_size = data.parabolic_order * Int(static_cast<unsigned long>(data.transversal.size()));
    return work;
}

Int double_coset_bound(const GroupContext& ctx, int r) {
    const GroupOrderData g = group_order_data(ctx.n, *ctx.field);
    return g.cell_size[static_cast<std::size_t>(r)];
}

}  // namespace

CosetData transversal(const GroupContext& ctx, int r, std::uint64_t budget) {
    return build_cosets(ctx, r, budget).data;
}

TraceHistogram dc_trace_histogram(const GroupContext& ctx, int r, const EnumerationOptions& opts) {
    require_n(ctx.n);
    require_r(ctx.n, r);
    check_budget(double_coset_bound(ctx, r), opts.budget, "double coset enumeration");
    const Field& f = *ctx.field;
    const CosetWork work = build_cosets(ctx, r, opts.budget);
    const MatrixFq sigma = sigma_r(f, ctx.n, r, ctx.family);

    std::vector<MatrixFq> shifted;
    shifted.reserve(work.data.transversal.size());
    for (const auto& x : work.data.transversal) shifted.push_back(mat_mul(sigma, x));

    const unsigned workers = std::max(1u, opts.workers);
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(f.size(), 0));
    const std::size_t d = ctx.dim();

    auto run = [&](unsigned id) {
        auto& counts = partial[id];
        for (std::size_t xi = id; xi < shifted.size(); xi += workers) {
            const MatrixFq& y = shifted[xi];
            for (const MatrixFq& p : work.parabolic) {
                std::uint32_t t = 0;
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t k = 0; k < d; ++k) t ^= f.mul(p.raw(i, k), y.raw(k, i));
                ++counts[t];
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
        for (auto& t : pool) t.join();
    }

    TraceHistogram hist(ctx.field);
    for (const auto& counts : partial)
        for (std::uint32_t b = 0; b < f.size(); ++b) hist[b] += Int(static_cast<unsigned long>(counts[b]));
    return hist;
}

std::vector<std::uint32_t> dc_trace_vector(const GroupContext& ctx, int r, std::uint64_t budget) {
    std::vector<std::uint32_t> out;
    for_each_double_coset_element(
        ctx, r, [&](const MatrixFq& w) { out.push_back(mat_trace(w).bits()); }, budget);
    return out;
}

void for_each_double_coset_element(const GroupContext& ctx, int r,
                                   const std::function<void(const MatrixFq&)>& sink, std::uint64_t budget) {
    require_n(ctx.n);
    require_r(ctx.n, r);
    check_budget(double_coset_bound(ctx, r), budget, "double coset enumeration");
    const CosetWork work = build_cosets(ctx, r, budget);
    const MatrixFq sigma = sigma_r(*ctx.field, ctx.n, r, ctx.family);
    for (const auto& x : work.data.transversal) {
        const MatrixFq y = mat_mul(sigma, x);
        for (const auto& p : work.parabolic) sink(mat_mul(p, y));
    }
}

std::vector<MatrixFq> classical_group_bruteforce(const GroupContext& ctx, std::uint64_t budget) {
    require_n(ctx.n);
    const Field& f = *ctx.field;
    const std::size_t d = ctx.dim();
    const bool orth = ctx.family == Family::Orthogonal;
    const std::size_t free_entries = orth ? d * (d - 1) : d * d;
    check_budget(candidate_count(f, free_entries), budget, "classical group candidate scan");

    std::vector<MatrixFq> out;
    std::vector<std::uint32_t> digits(free_entries, 0);
    MatrixFq w(f, d, d);
    if (orth) w.set_raw(d - 1, d - 1, 1);
    do {
        std::size_t k = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < (orth ? d - 1 : d); ++j) w.set_raw(i, j, digits[k++]);
        if (orth ? is_orthogonal(w, ctx.n) : is_symplectic(w, ctx.n)) out.push_back(w);
    } while (advance(digits, f.size()));
    return out;
}

Int alternating_count(int r, const Field& field) {
    if (r < 0) throw DomainError("alternating_count needs r >= 0");
    if (r % 2 == 1) return 0;
    const Int q = field.order();
    const unsigned long half = static_cast<unsigned long>(r / 2);
    Int out = ipow(q, half * (half == 0 ? 0 : half - 1));
    for (unsigned long j = 1; j <= half; ++j) out *= ipow(q, 2 * j - 1) - 1;
    return out;
}

Int alternating_count_bruteforce(int r, const Field& field) {
    if (r < 0 || r > 4) throw DomainError("brute-force alternating count supports 0 <= r <= 4");
    if (r == 0) return 1;
    const auto ur = static_cast<std::size_t>(r);
    const auto pairs = upper_pairs(ur, false);
    std::vector<std::uint32_t> digits(pairs.size(), 0);
    unsigned long count = 0;
    do {
        MatrixFq m(field, ur, ur);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            m.set_raw(pairs[k].first, pairs[k].second, digits[k]);
            m.set_raw(pairs[k].second, pairs[k].first, digits[k]);
        }
        if (mat_rank(m) == ur) ++count;
    } while (advance(digits, field.size()));
    return Int(count);
}

GroupOrderData group_order_data(int n, const Field& field) {
    require_n(n);
    GroupOrderData g;
    g.n = n;
    g.q = field.order();
    const auto un = static_cast<unsigned long>(n);
    g.gl_order = gl_order(g.q, static_cast<unsigned>(n));
    g.parabolic_order = ipow(g.q, un * (un + 1) / 2) * g.gl_order;
    Int prod = 1;
    for (unsigned long j = 1; j <= un; ++j) prod *= ipow(g.q, j) - 1;
    g.group_order = 0;
    for (int r = 0; r <= n; ++r) {
        const auto ur = static_cast<unsigned long>(r);
        g.qbinom.push_back(qbinom(g.q, n, r));
        // binom(n+1, 2) + r(2n - 3r - 1)/2 is a nonnegative integer on 0 <= r <= n.
        const long exp_a = static_cast<long>(un * (un + 1) / 2) + (static_cast<long>(r) * (2 * n - 3 * r - 1)) / 2;
        g.a_r_order.push_back(gl_order(g.q, static_cast<unsigned>(r)) *
                              gl_order(g.q, static_cast<unsigned>(n - r)) *
                              ipow(g.q, static_cast<unsigned long>(exp_a)));
        g.transversal.push_back(ipow(g.q, ur * (ur + 1) / 2) * g.qbinom.back());
        const unsigned long exp_cell = un * un + ur * (ur == 0 ? 0 : ur - 1) / 2 + ur;
        g.cell_size.push_back(ipow(g.q, exp_cell) * g.qbinom.back() * prod);
        g.group_order += g.cell_size.back();
    }
    return g;
}

}  // namespace dcm
