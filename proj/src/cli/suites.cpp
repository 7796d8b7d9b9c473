#include "dcm/cli/suites.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

#include "dcm/classical.hpp"
#include "dcm/dcsum.hpp"
#include "dcm/error.hpp"
#include "dcm/gf2r.hpp"
#include "dcm/histogram.hpp"
#include "dcm/ksum.hpp"
#include "dcm/pmi.hpp"
#include "dcm/wcode.hpp"

namespace dcm::cli {
namespace {

using std::to_string;

FieldRef fq(std::uint32_t q) { return field_new(std::countr_zero(q)); }

std::string tag(int n, std::uint32_t q) { return "n=" + to_string(n) + ",q=" + to_string(q); }

void eq(Report& rep, const std::string& name, const Int& expected, const Int& actual) {
    rep.check(name, expected.get_str(), actual.get_str());
}

void holds(Report& rep, const std::string& name, bool ok, const std::string& what) {
    rep.check(name, ok, what, ok ? what : "violated");
}

std::string join(const std::vector<std::uint32_t>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_string(xs[i]);
    return s + "}";
}

std::string join(const std::vector<Int>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
    return s + "]";
}

bool is_primitive(const Field& f, std::uint32_t x) {
    const std::uint64_t order = f.size() - 1;
    std::uint64_t m = order;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        if (f.pow(x, order / p) == 1) return false;
        while (m % p == 0) m /= p;
    }
    return m == 1 || f.pow(x, order / m) != 1;
}

void suite_field(Report& rep, const SuiteOptions&) {
    for (int r = 1; r <= Field::kMaxDegree; ++r) {
        const auto m = Field::default_modulus(r);
        holds(rep, "field/modulus_irreducible/r=" + to_string(r), Field::is_irreducible(m) && field_new(r)->degree() == r,
              "irreducible of degree " + to_string(r));
    }
    for (int r = 1; r <= 12; ++r) {
        const auto F = field_new(r);
        const Field& f = *F;
        const std::uint32_t q = f.size();
        bool inverses = true, fermat = true;
        std::uint64_t trace_one = 0;
        bool frobenius = true;
        for (std::uint32_t x = 1; x < q; ++x) {
            inverses = inverses && f.mul(x, f.inv(x)) == 1;
            fermat = fermat && f.pow(x, q - 1) == 1;
            frobenius = frobenius && f.trace(f.mul(x, x)) == f.trace(x);
            trace_one += f.trace(x);
        }
        std::uint32_t primitive = 0;
        for (std::uint32_t x = 1; x < q && !primitive; ++x)
            if (is_primitive(f, x)) primitive = x;
        const std::string t = "/q=" + to_string(q);
        holds(rep, "field/inverses" + t, inverses, "x * inv(x) = 1 for all x != 0");
        holds(rep, "field/order_divides" + t, fermat, "x^(q-1) = 1 for all x != 0");
        holds(rep, "field/cyclic" + t, primitive != 0, "an element of order q-1 exists");
        holds(rep, "field/trace_frobenius" + t, frobenius, "tr(x^2) = tr(x)");
        rep.check("field/trace_one_count" + t, to_string(q / 2), to_string(trace_one));
        if (r <= 8) {
            bool additive = true;
            for (std::uint32_t x = 0; x < q; ++x)
                for (std::uint32_t y = 0; y < q; ++y) additive = additive && f.trace(x ^ y) == (f.trace(x) ^ f.trace(y));
            holds(rep, "field/trace_additive" + t, additive, "tr(x+y) = tr(x)+tr(y)");
        }
    }
}

void suite_kloosterman(Report& rep, const SuiteOptions& opts) {
    eq(rep, "kloosterman/K/q=2,a=1", 1, kloosterman_table(fq(2))[1]);
    eq(rep, "kloosterman/K/q=4,a=1", 3, kloosterman_table(fq(4))[1]);
    eq(rep, "kloosterman/K/q=8,a=1", -5, kloosterman_table(fq(8))[1]);
    {
        const auto m = moments(fq(8), 1);
        eq(rep, "kloosterman/moments/q=8,h=1/MK", 1, m.mk);
        eq(rep, "kloosterman/moments/q=8,h=1/T0K", -3, m.t0k);
        eq(rep, "kloosterman/moments/q=8,h=1/T1K", 4, m.t1k);
        const auto m4 = moments(fq(4), 1);
        eq(rep, "kloosterman/moments/q=4,h=1/MK", 1, m4.mk);
        eq(rep, "kloosterman/moments/q=4,h=1/T0K", 3, m4.t0k);
        eq(rep, "kloosterman/moments/q=4,h=1/T1K", -2, m4.t1k);
        eq(rep, "kloosterman/moments/q=8,h=3/T1K", -44, moments(fq(8), 3).t1k);
    }

    for (int r = 1; r <= 10; ++r) {
        const auto F = field_new(r);
        const auto& tab = kloosterman_table(F);
        std::int64_t worst = 0;
        for (std::uint32_t a = 1; a < F->size(); ++a) worst = std::max(worst, tab[a] * tab[a]);
        const std::int64_t bound = 4 * static_cast<std::int64_t>(F->size());
        rep.check("kloosterman/weil_bound/q=" + to_string(F->size()), worst <= bound, "max K^2 <= " + to_string(bound),
                  "max K^2 = " + to_string(worst));
    }

    for (int r = 1; r <= 8; ++r) {
        const auto F = field_new(r);
        const Field& f = *F;
        const auto& tab = kloosterman_table(F);
        const std::string t = "/q=" + to_string(f.size());
        for (int s = 1; s <= 3; ++s) {
            bool ok = true;
            for (std::uint32_t a = 1; a < f.size(); ++a) ok = ok && tab[f.pow(a, 1ull << s)] == tab[a];
            holds(rep, "kloosterman/frobenius_invariance" + t + ",s=" + to_string(s), ok, "K(a^(2^s)) = K(a)");
        }
        bool thm_i = true;
        for (std::uint32_t b = 1; b < f.size(); ++b)
            thm_i = thm_i && theta_character_sum(f, f.elem(b)) == Int(static_cast<long>(tab[b] - 1));
        holds(rep, "kloosterman/theta_character_sum" + t, thm_i, "sum lambda(b/(x^2+x)) = K(b) - 1 for all b != 0");
        bool twisted = true;
        for (std::uint32_t b = 0; b < f.size(); ++b) {
            const Int expected = b == 0 ? Int(1) : Int(static_cast<long>(f.size()) * f.lambda(f.inv(b)) + 1);
            twisted = twisted && twisted_sum(F, f.elem(b)) == expected;
        }
        holds(rep, "kloosterman/twisted_sum" + t, twisted, "sum_a lambda(ab) K(a) = q lambda(1/b) + 1, or 1 at b = 0");
        bool split = true;
        for (unsigned h = 0; h <= 10; ++h) {
            Int all = 0, t0 = 0, t1 = 0;
            for (std::uint32_t a = 1; a < f.size(); ++a) {
                const Int v = ipow(Int(static_cast<long>(tab[a])), h);
                all += v;
                (f.trace(a) ? t1 : t0) += v;
            }
            const auto m = moments(F, h);
            split = split && m.mk == all && m.t0k == t0 && m.t1k == t1 && m.mk == m.t0k + m.t1k;
        }
        holds(rep, "kloosterman/moment_split" + t, split, "MK = T0K + T1K for h <= 10");
    }

    const std::pair<unsigned, std::uint32_t> gl_targets[] = {{2, 2}, {2, 4}, {3, 2}};
    for (auto [t, q] : gl_targets) {
        const auto F = fq(q);
        const Field& f = *F;
        bool ok = true;
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t c = 1; c < q; ++c)
                ok = ok && kloosterman_gl(f, t, f.elem(a), f.elem(c)) ==
                               kloosterman_gl_bruteforce(f, t, f.elem(a), f.elem(c), opts.budget);
        holds(rep, "kloosterman/gl_recursion/t=" + to_string(t) + ",q=" + to_string(q), ok,
              "recursion equals direct sum over GL(t,q) for all a, c");
    }
    eq(rep, "kloosterman/gl/t=2,q=2,a=c=1", 6, kloosterman_gl(*fq(2), 2, fq(2)->one(), fq(2)->one()));
}

void suite_groups(Report& rep, const SuiteOptions& opts) {
    const auto F2 = fq(2);
    const auto d22 = group_order_data(2, *F2);
    eq(rep, "groups/gl_order/n=2,q=2", 6, d22.gl_order);
    eq(rep, "groups/qbinom/3,1,q=2", 7, group_order_data(3, *F2).qbinom[1]);
    for (int r = 0; r <= 2; ++r)
        eq(rep, "groups/cell_size/n=2,q=2,r=" + to_string(r), std::vector<Int>{48, 288, 384}[r], d22.cell_size[r]);
    eq(rep, "groups/group_order/n=2,q=2", 720, d22.group_order);

    // Sp(4,2) by brute force, partitioned by Bruhat cell, against the
    // enumerated double cosets.
    {
        const GroupContext sp{2, F2, Family::Symplectic};
        const auto all = classical_group_bruteforce(sp, opts.budget);
        eq(rep, "groups/sp4_2/order", 720, Int(static_cast<unsigned long>(all.size())));
        std::vector<std::unordered_set<MatrixFq, MatrixHash>> cells(3);
        for (const auto& w : all) cells.at(bruhat_cell_index(w, 2)).insert(w);
        for (int r = 0; r <= 2; ++r) {
            eq(rep, "groups/sp4_2/cell_size/r=" + to_string(r), d22.cell_size[r],
               Int(static_cast<unsigned long>(cells[r].size())));
            std::unordered_set<MatrixFq, MatrixHash> enumerated;
            for_each_double_coset_element(sp, r, [&](const MatrixFq& w) { enumerated.insert(w); }, opts.budget);
            holds(rep, "groups/sp4_2/cell_equals_double_coset/r=" + to_string(r), enumerated == cells[r],
                  "brute-force cell equals enumerated P'sigma_rP'");
        }
    }

    // O(5,2): trace relation and the isomorphism onto Sp(4,2).
    {
        const GroupContext o{2, F2, Family::Orthogonal};
        const auto all = classical_group_bruteforce(o, opts.budget);
        eq(rep, "groups/o5_2/order", 720, Int(static_cast<unsigned long>(all.size())));
        bool trace_rel = true;
        std::unordered_set<MatrixFq, MatrixHash> image;
        for (const auto& w : all) {
            const auto s = iota(w, 2);
            trace_rel = trace_rel && mat_trace(w).bits() == (mat_trace(s).bits() ^ 1u);
            image.insert(s);
        }
        holds(rep, "groups/o5_2/trace_relation", trace_rel, "Tr w = Tr iota(w) + 1 for all w");
        holds(rep, "groups/o5_2/iota_injective", image.size() == all.size(), "720 distinct images");
    }

    for (int n = 1; n <= 2; ++n) {
        const auto P = parabolic_elements({n, F2, Family::Orthogonal}, opts.budget);
        const auto Pp = parabolic_elements({n, F2, Family::Symplectic}, opts.budget);
        std::unordered_set<MatrixFq, MatrixHash> image, target(Pp.begin(), Pp.end());
        bool hom = true;
        for (const auto& v : P) {
            image.insert(iota(v, n));
            for (const auto& w : P) hom = hom && iota(v * w, n) == iota(v, n) * iota(w, n);
        }
        holds(rep, "groups/iota_parabolic_bijection/n=" + to_string(n), image == target && image.size() == P.size(),
              "iota maps P onto P'");
        holds(rep, "groups/iota_homomorphism/n=" + to_string(n), hom, "iota(vw) = iota(v) iota(w) on P");
    }

    const std::pair<int, std::uint32_t> coset_targets[] = {{1, 2}, {2, 2}, {3, 2}, {1, 4}, {2, 4}};
    for (auto [n, q] : coset_targets) {
        const auto F = fq(q);
        const auto d = group_order_data(n, *F);
        for (int r = 0; r <= n; ++r) {
            const GroupContext ctx{n, F, Family::Orthogonal};
            const std::string t = "/" + tag(n, q) + ",r=" + to_string(r);
            const auto cd = transversal(ctx, r, opts.budget);
            eq(rep, "groups/parabolic_order" + t, d.parabolic_order, cd.parabolic_order);
            eq(rep, "groups/a_r_order" + t, d.a_r_order[r], cd.a_r_order);
            eq(rep, "groups/transversal_size" + t, d.transversal[r], Int(static_cast<unsigned long>(cd.transversal.size())));
            if (n == 3 && r != 2) continue;
            const auto h = dc_trace_histogram(ctx, r, {opts.budget, opts.workers});
            eq(rep, "groups/histogram_total" + t, d.cell_size[r], h.total());
        }
    }

    const std::pair<int, std::uint32_t> dc_targets[] = {{1, 2}, {3, 2}, {1, 4}, {1, 8}, {1, 16}};
    for (auto [n, q] : dc_targets) {
        const auto F = fq(q);
        const auto h = dc_trace_histogram({n, F, Family::Orthogonal}, n - 1, {opts.budget, opts.workers});
        const auto c = coefs(n, *F);
        eq(rep, "groups/dc_size_equals_AB/" + tag(n, q), c.A * c.B, h.total());
    }
}

void suite_expsum(Report& rep, const SuiteOptions& opts) {
    struct Cell {
        int n;
        std::uint32_t q;
    };
    const Cell cells[] = {{1, 2}, {2, 2}, {1, 4}, {2, 4}, {1, 8}, {1, 16}};
    for (auto [n, q] : cells) {
        const auto F = fq(q);
        const Field& f = *F;
        for (Family fam : {Family::Orthogonal, Family::Symplectic}) {
            for (int r = 0; r <= n; ++r) {
                const auto h = dc_trace_histogram({n, F, fam}, r, {opts.budget, opts.workers});
                bool ok = true;
                for (std::uint32_t c = 1; c < q; ++c)
                    ok = ok && histogram_expsum(h, c) == expsum_closed(n, r, f, f.elem(c), fam);
                holds(rep,
                      "expsum/closed_form/" + std::string(family_name(fam)) + "/" + tag(n, q) + ",r=" + to_string(r),
                      ok, "closed form equals enumerated sum for all c != 0");
            }
        }
    }
    eq(rep, "expsum/example/n=1,r=0,q=2,c=1", -2, expsum_closed(1, 0, *fq(2), fq(2)->one()));
    eq(rep, "expsum/example/n=1,q=8,c=1", 40, expsum_dc(1, *fq(8), fq(8)->one()));
    eq(rep, "expsum/example/n=3,q=2,c=1", -14336, expsum_dc(3, *fq(2), fq(2)->one()));

    const std::pair<int, std::uint32_t> dc_targets[] = {{1, 2}, {1, 4}, {1, 8}, {1, 16}, {3, 2}};
    for (auto [n, q] : dc_targets) {
        const auto F = fq(q);
        const Field& f = *F;
        const auto h = dc_trace_histogram({n, F, Family::Orthogonal}, n - 1, {opts.budget, opts.workers});
        const auto hs = dc_trace_histogram({n, F, Family::Symplectic}, n - 1, {opts.budget, opts.workers});
        const std::string t = "/" + tag(n, q);
        bool cor_d = true;
        for (std::uint32_t a = 1; a < q; ++a) {
            const Int v = expsum_dc(n, f, f.elem(a));
            cor_d = cor_d && v == expsum_dc_kloosterman_form(n, F, f.elem(a)) && v == histogram_expsum(h, a);
        }
        holds(rep, "expsum/kloosterman_form" + t, cor_d, "lambda(a) A K(a) equals the double-coset sum for all a");
        holds(rep, "expsum/n_beta_closed_equals_enumerated" + t, h == dc_histogram_closed(n, F),
              "enumerated histogram equals n(beta)");
        holds(rep, "expsum/nhat_beta_closed_equals_enumerated" + t, hs == nhat_histogram_closed(n, F),
              "enumerated symplectic histogram equals nhat(beta)");
        if (n == 1 && q > 8) continue;
        const auto c = coefs(n, f);
        bool inversion = true;
        for (std::uint32_t b = 0; b < q; ++b) {
            Int rhs = c.N;
            for (std::uint32_t a = 1; a < q; ++a) rhs += f.lambda(f.mul(a, b)) * expsum_dc(n, f, f.elem(a));
            inversion = inversion && Int(static_cast<unsigned long>(q)) * n_beta(n, f, f.elem(b)) == rhs;
        }
        holds(rep, "expsum/fourier_inversion" + t, inversion, "q n(b) = N + sum_a lambda(ab) S(a)");
    }
    {
        const auto h = dc_trace_histogram({3, fq(2), Family::Orthogonal}, 2, {opts.budget, opts.workers});
        eq(rep, "expsum/dc_3_2/total", 602112, h.total());
        eq(rep, "expsum/dc_3_2/beta=0", 293888, h[0]);
        eq(rep, "expsum/dc_3_2/beta=1", 308224, h[1]);
    }
    const std::pair<int, std::uint32_t> positive[] = {{3, 2}, {3, 4}, {5, 2}};
    for (auto [n, q] : positive) {
        const auto F = fq(q);
        bool ok = true;
        for (std::uint32_t b = 0; b < q; ++b) ok = ok && n_beta(n, *F, F->elem(b)) > 0;
        holds(rep, "expsum/n_beta_positive/" + tag(n, q), ok, "n(beta) > 0 for all beta");
    }
}

void suite_codes(Report& rep, const SuiteOptions& opts) {
    for (std::uint32_t q : {2u, 4u}) {
        const auto F = fq(q);
        const auto wd = code_bruteforce_wd(1, F, opts.budget);
        const unsigned N = static_cast<unsigned>(wd.size() - 1);
        const auto pre = weight_prefix_thmO(1, F, N);
        const std::string t = "/" + tag(1, q);
        rep.check("codes/weight_distribution" + t, join(pre.values), join(wd));
        bool sym = true;
        for (unsigned j = 0; j <= N; ++j) sym = sym && wd[j] == wd[N - j];
        holds(rep, "codes/symmetry" + t, sym, "C_j = C_{N-j}");
        Int total = 0;
        for (const auto& c : wd) total += c;
        eq(rep, "codes/codeword_count" + t, q == 2 ? Int(2) : Int(2048), total);

        const GroupContext ctx{1, F, Family::Orthogonal};
        const auto v = dc_trace_vector(ctx, 0, opts.budget);
        const auto dr = delsarte_check(v, *F);
        holds(rep, "codes/delsarte" + t, dr.sets_equal, "binary dual equals { c(a) }");
        rep.check("codes/dual_dimension" + t, to_string(q == 4 ? 1 : F->degree()), to_string(dr.dual_dimension));
        rep.check("codes/distinct_dual_codewords" + t, to_string(q == 4 ? q / 2 : q),
                  to_string(dr.distinct_trace_codewords));
    }
    const std::pair<int, std::uint32_t> kernels[] = {{1, 2}, {1, 4}, {1, 8}, {1, 16}, {3, 2}};
    for (auto [n, q] : kernels)
        rep.check("codes/dual_kernel/" + tag(n, q), q == 4 ? "{0,1}" : "{0}", join(dual_kernel(n, fq(q))));

    {
        std::map<Int, int> mult;
        for (const auto& e : dual_enumerate(1, fq(8))) ++mult[e.weight];
        std::string s;
        for (const auto& [w, k] : mult) s += (s.empty() ? "" : ",") + w.get_str() + ":" + to_string(k);
        rep.check("codes/dual_weights/n=1,q=8", "0:1,8:1,32:3,40:3", s);
    }

    const std::pair<int, std::uint32_t> targets[] = {{1, 2}, {1, 4}, {1, 8}, {1, 16}, {1, 32}, {3, 2}, {3, 4}};
    for (auto [n, q] : targets) {
        const auto F = fq(q);
        const auto h = dc_histogram_closed(n, F);
        bool ok = true;
        for (std::uint32_t a = 0; a < q; ++a)
            ok = ok && dual_weight(n, F, F->elem(a)).weight == dual_weight_from_histogram(h, a);
        holds(rep, "codes/dual_weight_closed_form/" + tag(n, q), ok, "A(B - lambda(a)K(a))/2 matches the histogram");
        holds(rep, "codes/weighted_sum_zero/" + tag(n, q),
              h.weighted_sum() == 0 && nhat_histogram_closed(n, F).weighted_sum() == 0,
              "sum n(beta) beta = sum nhat(beta) beta = 0");
    }
}

void suite_pless(Report& rep, const SuiteOptions&) {
    for (std::uint32_t q : {8u, 16u}) {
        const auto F = fq(q);
        const auto c = coefs(1, *F);
        std::vector<Int> dual;
        for (const auto& e : dual_enumerate(1, F)) dual.push_back(e.weight);
        const auto pre = weight_prefix_thmO(1, F, 10);
        for (unsigned h = 1; h <= 10; ++h) {
            const auto s = pless_check(c.N, static_cast<unsigned>(F->degree()), dual, pre, h);
            rep.check("pless/identity/" + tag(1, q) + ",h=" + to_string(h), s.equal(), s.lhs.get_str(), s.rhs.get_str());
        }
    }
    {
        const auto F = fq(8);
        std::vector<Int> dual;
        for (const auto& e : dual_enumerate(1, F)) dual.push_back(e.weight);
        const auto s = pless_check(coefs(1, *F).N, 3, dual, weight_prefix_thmO(1, F, 1), 1);
        eq(rep, "pless/worked/n=1,q=8,h=1/lhs", 224, s.lhs);
        eq(rep, "pless/worked/n=1,q=8,h=1/rhs", 224, s.rhs);
    }
    const std::pair<int, std::uint32_t> targets[] = {{1, 8}, {1, 16}, {1, 32}, {3, 2}, {3, 4}};
    MomentRecursion session;
    for (auto [n, q] : targets) {
        const auto F = fq(q);
        for (unsigned h = 1; h <= 7; ++h) {
            const std::string t = "/" + tag(n, q) + ",h=" + to_string(h);
            const auto s = thm_p_check(n, F, h);
            rep.check("pless/symplectic_identity" + t, s.equal(), s.lhs.get_str(), s.rhs.get_str());
            eq(rep, "pless/mk_recursive" + t, moments(F, h).mk, session.mk(n, F, h));
        }
    }
    eq(rep, "pless/mk/q=8,h=2", 55, mk_recursive(1, fq(8), 2));
}

void suite_thma(Report& rep, const SuiteOptions& opts) {
    MomentRecursion session;
    for (auto [n, q] : opts.thma_targets) {
        const auto F = fq(q);
        for (unsigned h : opts.thma_h) {
            const auto r = session.t1k(n, F, h, true);
            rep.check("thma/t1k/" + tag(n, q) + ",h=" + to_string(h), r.oracle->get_str(), r.recursive.get_str());
        }
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"field", "kloosterman", "groups", "expsum",
                                                "codes", "pless",       "thma",   "all"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

void run_suite(const std::string& name, Report& report, const SuiteOptions& opts) {
    if (name == "field") return suite_field(report, opts);
    if (name == "kloosterman") return suite_kloosterman(report, opts);
    if (name == "groups") return suite_groups(report, opts);
    if (name == "expsum") return suite_expsum(report, opts);
    if (name == "codes") return suite_codes(report, opts);
    if (name == "pless") return suite_pless(report, opts);
    if (name == "thma") return suite_thma(report, opts);
    if (name == "all") {
        for (const auto& s : suite_names())
            if (s != "all") run_suite(s, report, opts);
        return;
    }
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace dcm::cli
