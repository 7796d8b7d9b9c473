#include "dcm/wcode.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "dcm/classical.hpp"
#include "dcm/dcsum.hpp"
#include "dcm/error.hpp"
#include "dcm/ksum.hpp"

namespace dcm {

namespace {

void require_short(std::size_t length) {
    if (length > kMaxBruteforceLength)
        throw BudgetExceeded("code length " + std::to_string(length) + " exceeds the brute-force limit of " +
                             std::to_string(kMaxBruteforceLength));
}

}  // namespace

CodeSpec code_spec(int n, const FieldRef& field) {
    TraceHistogram h = dc_histogram_closed(n, field);
    Int length = h.total();
    return CodeSpec{n, field, std::move(length), std::move(h)};
}

Int dual_weight_from_histogram(const TraceHistogram& h, std::uint32_t a) {
    const Field& f = h.field();
    Int w = 0;
    for (std::uint32_t b = 0; b < f.size(); ++b)
        if (f.trace(f.mul(a, b)) == 1) w += h[b];
    return w;
}

DualWeight dual_weight(int n, const FieldRef& field, const FieldElement& a) {
    if (!a.field().same_as(*field)) throw MismatchError("element from a different field");
    const CoefSet cs = coefs(n, *field);
    if (a.is_zero()) return DualWeight{0, true};
    const Int k = Int(static_cast<long>(kloosterman_table(field)[a.bits()]));
    const Int twice = cs.A * (cs.B - Int(field->lambda(a.bits())) * k);
    const Int w = twice / 2;
    const Int check = dual_weight_from_histogram(dc_histogram_closed(n, field), a.bits());
    if (twice % 2 != 0 || w != check)
        throw Error("dual weight closed form " + twice.get_str() + "/2 disagrees with histogram count " +
                    check.get_str());
    return DualWeight{w, false};
}

std::vector<std::uint32_t> dual_kernel(const TraceHistogram& h) {
    const Field& f = h.field();
    const auto support = h.support();
    std::vector<std::uint32_t> out;
    for (std::uint32_t a = 0; a < f.size(); ++a)
        if (std::all_of(support.begin(), support.end(), [&](std::uint32_t b) { return f.trace(f.mul(a, b)) == 0; }))
            out.push_back(a);
    return out;
}

std::vector<std::uint32_t> dual_kernel(int n, const FieldRef& field) {
    return dual_kernel(dc_histogram_closed(n, field));
}

std::vector<DualEntry> dual_enumerate(int n, const FieldRef& field) {
    std::vector<DualEntry> out;
    for (std::uint32_t a = 0; a < field->size(); ++a)
        out.push_back(DualEntry{a, dual_weight(n, field, field->elem(a)).weight});
    return out;
}

WeightPrefix weight_prefix(const TraceHistogram& h, unsigned jmax) {
    const Field& f = h.field();
    const std::size_t q = f.size();
    const std::size_t levels = jmax + 1;
    // dp[s * q + x]: ways to pick s coordinates from the beta processed so
    // far with F_q-sum x. Since 2 beta = 0, only the parity of nu_beta moves x.
    std::vector<Int> dp(levels * q, 0), next(levels * q);
    dp[0] = 1;
    std::vector<Int> choose(levels);
    for (std::uint32_t beta = 0; beta < q; ++beta) {
        if (h[beta] == 0) continue;
        for (unsigned nu = 0; nu <= jmax; ++nu) choose[nu] = binom(h[beta], nu);
        std::fill(next.begin(), next.end(), Int(0));
        for (unsigned s = 0; s <= jmax; ++s)
            for (std::uint32_t x = 0; x < q; ++x) {
                const Int& ways = dp[s * q + x];
                if (ways == 0) continue;
                for (unsigned nu = 0; s + nu <= jmax; ++nu) {
                    if (choose[nu] == 0) break;
                    const std::uint32_t y = (nu & 1u) ? (x ^ beta) : x;
                    next[(s + nu) * q + y] += ways * choose[nu];
                }
            }
        dp.swap(next);
    }
    WeightPrefix out;
    out.jmax = jmax;
    for (unsigned j = 0; j <= jmax; ++j) out.values.push_back(dp[j * q]);
    return out;
}

WeightPrefix weight_prefix_thmO(int n, const FieldRef& field, unsigned jmax) {
    return weight_prefix(dc_histogram_closed(n, field), jmax);
}

WeightPrefix weight_prefix_thmP(int n, const FieldRef& field, unsigned jmax) {
    return weight_prefix(nhat_histogram_closed(n, field), jmax);
}

std::vector<Int> code_bruteforce_wd(std::span<const std::uint32_t> v, const Field& field) {
    require_short(v.size());
    for (auto x : v)
        if (x >= field.size()) throw DomainError("defining vector entry outside the field");
    const std::size_t len = v.size();
    std::vector<std::uint64_t> counts(len + 1, 0);
    // Gray-code walk: consecutive u differ in one coordinate.
    std::uint32_t dot = 0;
    const std::uint64_t total = std::uint64_t{1} << len;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (i != 0) dot ^= v[static_cast<std::size_t>(std::countr_zero(i))];
        if (dot == 0) ++counts[static_cast<std::size_t>(std::popcount(i ^ (i >> 1)))];
    }
    std::vector<Int> out;
    for (auto c : counts) out.push_back(Int(static_cast<unsigned long>(c)));
    return out;
}

std::vector<Int> code_bruteforce_wd(int n, const FieldRef& field, std::uint64_t budget) {
    const CoefSet cs = coefs(n, *field);
    if (cs.N > Int(static_cast<unsigned long>(kMaxBruteforceLength)))
        throw BudgetExceeded("code length " + cs.N.get_str() + " exceeds the brute-force limit");
    const auto v = dc_trace_vector(GroupContext{n, field, Family::Orthogonal}, n - 1, budget);
    return code_bruteforce_wd(v, *field);
}

DelsarteReport delsarte_check(std::span<const std::uint32_t> v, const Field& field) {
    require_short(v.size());
    DelsarteReport rep;
    rep.length = v.size();
    const int r = field.degree();

    // Bit-plane rows: u . v = 0 in F_q iff u is orthogonal to every plane.
    std::vector<std::uint32_t> planes(static_cast<std::size_t>(r), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (int k = 0; k < r; ++k)
            if ((v[i] >> k) & 1u) planes[static_cast<std::size_t>(k)] |= 1u << i;

    std::set<std::uint32_t> row_space{0};
    for (auto p : planes) {
        std::set<std::uint32_t> grown = row_space;
        for (auto x : row_space) grown.insert(x ^ p);
        row_space.swap(grown);
    }
    rep.dual_dimension = static_cast<std::size_t>(std::countr_zero(row_space.size()));

    std::set<std::uint32_t> traced;
    for (std::uint32_t a = 0; a < field.size(); ++a) {
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (field.trace(field.mul(a, v[i])) == 1) c |= 1u << i;
        traced.insert(c);
    }
    rep.distinct_trace_codewords = traced.size();
    rep.sets_equal = traced == row_space;
    for (auto c : traced) rep.dual_weights.push_back(Int(static_cast<unsigned long>(std::popcount(c))));
    std::sort(rep.dual_weights.begin(), rep.dual_weights.end());
    return rep;
}

}  // namespace dcm
