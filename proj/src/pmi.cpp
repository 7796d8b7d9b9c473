#include "dcm/pmi.hpp"

#include <algorithm>
#include <string>

#include "dcm/dcsum.hpp"
#include "dcm/error.hpp"
#include "dcm/ksum.hpp"

namespace dcm {

namespace {

Rat pow2_signed(long e) {
    if (e >= 0) return Rat(ipow2(static_cast<unsigned long>(e)));
    return Rat(Int(1), ipow2(static_cast<unsigned long>(-e)));
}

unsigned top_index(const Int& length, unsigned h) {
    return length < h ? static_cast<unsigned>(length.get_ui()) : h;
}

/// sum_{t=j}^{h} t! S(h,t) 2^{shift - t} binom(N - j, t - j).
Rat pless_inner(const Int& length, unsigned j, unsigned h, long shift) {
    Rat s = 0;
    for (unsigned t = j; t <= h; ++t) {
        const Int base = factorial(t) * stirling2(h, t) * binom(length - j, t - j);
        if (base == 0) continue;
        s += Rat(base) * pow2_signed(shift - static_cast<long>(t));
    }
    return s;
}

/// sum_{j <= min(N,h)} (-1)^j X_j * pless_inner(j).
Rat pless_outer(const Int& length, std::span<const Int> x, unsigned h, long shift) {
    Rat s = 0;
    const unsigned top = top_index(length, h);
    for (unsigned j = 0; j <= top; ++j) {
        const Rat term = Rat(x[j]) * pless_inner(length, j, h, shift);
        if (j % 2 == 0)
            s += term;
        else
            s -= term;
    }
    return s;
}

std::vector<Int> difference(const WeightPrefix& c, const WeightPrefix& chat) {
    std::vector<Int> d;
    for (std::size_t j = 0; j < c.values.size(); ++j) d.push_back(c.values[j] - chat.values[j]);
    return d;
}

}  // namespace

Int stirling2(unsigned h, unsigned t) {
    if (t > h) return 0;
    Int s = 0;
    for (unsigned j = 0; j <= t; ++j) {
        const Int term = binom(Int(t), j) * ipow(Int(j), h);
        if ((t - j) % 2 == 0)
            s += term;
        else
            s -= term;
    }
    return s / factorial(t);
}

PlessSides pless_check(const Int& length, unsigned k, std::span<const Int> dual_weights, const WeightPrefix& prefix,
                       unsigned h) {
    const unsigned top = top_index(length, h);
    if (prefix.values.size() < top + 1)
        throw DomainError("weight prefix has " + std::to_string(prefix.values.size()) + " terms, need " +
                          std::to_string(top + 1));
    PlessSides out;
    out.lhs = 0;
    for (const auto& w : dual_weights) out.lhs += ipow(w, h);
    out.rhs = to_integer(pless_outer(length, prefix.values, h, static_cast<long>(k)), "Pless right-hand side");
    return out;
}

void require_recursion_range(int n, const Field& field) {
    const bool ok = (n >= 3 && n % 2 == 1) || (n == 1 && field.size() >= 8);
    if (!ok)
        throw DomainError("outside the recursion range: need n odd with n >= 3 (any q), or n = 1 with q >= 8; got n=" +
                          std::to_string(n) + " q=" + std::to_string(field.size()));
}

Int MomentRecursion::t1k_value(int n, const FieldRef& field, unsigned h, RecursionReport* report) {
    const Key key{n, field->degree(), field->modulus(), h};
    if (!report) {
        const std::lock_guard lock(mu_);
        if (auto it = t1k_memo_.find(key); it != t1k_memo_.end()) return it->second;
    }

    const CoefSet cs = coefs(n, *field);
    const Int q = field->order();
    const WeightPrefix c = weight_prefix_thmO(n, field, h);
    const WeightPrefix chat = weight_prefix_thmP(n, field, h);
    const std::vector<Int> d = difference(c, chat);

    Rat value = Rat(q) * pless_outer(cs.N, d, h, static_cast<long>(h) - 1) / Rat(ipow(cs.A, h));
    std::map<unsigned, Int> lower;
    for (unsigned l = 1; l + 2 <= h; l += 2) {
        const Int tl = t1k_value(n, field, l, nullptr);
        lower[l] = tl;
        value -= Rat(binom(Int(h), l) * ipow(cs.B, h - l) * tl);
    }
    Int result = to_integer(value, "recursive T1K^" + std::to_string(h));

    if (report) {
        report->n = n;
        report->q = q;
        report->h = h;
        report->d.assign(d.begin(), d.begin() + top_index(cs.N, h) + 1);
        report->lower = std::move(lower);
        report->recursive = result;
    }
    const std::lock_guard lock(mu_);
    t1k_memo_[key] = result;
    return result;
}

RecursionReport MomentRecursion::t1k(int n, const FieldRef& field, unsigned h, bool compare) {
    require_recursion_range(n, *field);
    if (h % 2 == 0) throw DomainError("the trace-one recursion is stated for odd h only, got h=" + std::to_string(h));
    RecursionReport rep;
    t1k_value(n, field, h, &rep);
    if (compare) {
        rep.oracle = moments(field, h).t1k;
        rep.match = (*rep.oracle == rep.recursive);
    }
    return rep;
}

Int MomentRecursion::mk(int n, const FieldRef& field, unsigned h) {
    require_recursion_range(n, *field);
    const Int q = field->order();
    if (h == 0) return q - 1;
    const Key key{n, field->degree(), field->modulus(), h};
    {
        const std::lock_guard lock(mu_);
        if (auto it = mk_memo_.find(key); it != mk_memo_.end()) return it->second;
    }
    const CoefSet cs = coefs(n, *field);
    const WeightPrefix chat = weight_prefix_thmP(n, field, h);
    const Rat scale = Rat(ipow(cs.A, h)) / Rat(ipow2(h));
    Rat rhs = Rat(q) * pless_outer(cs.N, chat.values, h, 0);
    for (unsigned l = 0; l < h; ++l) {
        const Rat term = scale * Rat(binom(Int(h), l) * ipow(cs.B, h - l) * mk(n, field, l));
        if (l % 2 == 0)
            rhs -= term;
        else
            rhs += term;
    }
    // The l = h term carries (-1)^h * scale.
    Rat top = rhs / scale;
    if (h % 2 == 1) top = -top;
    Int result = to_integer(top, "recursive MK^" + std::to_string(h));
    const std::lock_guard lock(mu_);
    mk_memo_[key] = result;
    return result;
}

RecursionReport t1k_recursive(int n, const FieldRef& field, unsigned h, bool compare) {
    MomentRecursion session;
    return session.t1k(n, field, h, compare);
}

PlessSides thm_p_check(int n, const FieldRef& field, unsigned h) {
    require_recursion_range(n, *field);
    if (h == 0) throw DomainError("the symplectic moment identity is stated for h >= 1");
    const CoefSet cs = coefs(n, *field);
    const Int q = field->order();
    Rat lhs = 0;
    for (unsigned l = 0; l <= h; ++l) {
        const Rat term = Rat(binom(Int(h), l) * ipow(cs.B, h - l) * moments(field, l).mk);
        if (l % 2 == 0)
            lhs += term;
        else
            lhs -= term;
    }
    lhs *= Rat(ipow(cs.A, h)) / Rat(ipow2(h));
    const WeightPrefix chat = weight_prefix_thmP(n, field, h);
    const Rat rhs = Rat(q) * pless_outer(cs.N, chat.values, h, 0);
    return PlessSides{to_integer(lhs, "symplectic identity left side"),
                      to_integer(rhs, "symplectic identity right side")};
}

Int mk_recursive(int n, const FieldRef& field, unsigned h) {
    MomentRecursion session;
    return session.mk(n, field, h);
}

}  // namespace dcm
