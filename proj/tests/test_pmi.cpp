#include <thread>

#include <gtest/gtest.h>

#include "dcm/dcsum.hpp"
#include "dcm/error.hpp"
#include "dcm/pmi.hpp"
#include "oracle.hpp"

using namespace dcm;

namespace {

// sum over tr(a) = 1 of K(a)^h, from the naive field.
Int direct_t1k(std::uint32_t modulus, unsigned h) {
    const oracle::Gf o(modulus);
    Int s = 0;
    for (std::uint32_t a = 1; a < o.q; ++a) {
        if (!o.trace(a)) continue;
        Int v;
        mpz_pow_ui(v.get_mpz_t(), Int(o.kloosterman(a)).get_mpz_t(), h);
        s += v;
    }
    return s;
}

Int direct_mk(std::uint32_t modulus, unsigned h) {
    const oracle::Gf o(modulus);
    Int s = 0;
    for (std::uint32_t a = 1; a < o.q; ++a) {
        Int v;
        mpz_pow_ui(v.get_mpz_t(), Int(o.kloosterman(a)).get_mpz_t(), h);
        s += v;
    }
    return s;
}

std::vector<Int> dual_weights(int n, const FieldRef& f) {
    std::vector<Int> w;
    for (const auto& e : dual_enumerate(n, f)) w.push_back(e.weight);
    return w;
}

const std::pair<int, int> kTargets[] = {{1, 3}, {1, 4}, {1, 5}, {3, 1}, {3, 2}};

}  // namespace

TEST(Pmi, StirlingExamples) {
    for (unsigned h = 1; h <= 10; ++h) EXPECT_EQ(stirling2(h, 1), 1);
    EXPECT_EQ(stirling2(3, 2), 3);
    EXPECT_EQ(stirling2(4, 2), 7);
    EXPECT_EQ(stirling2(0, 0), 1);
    for (unsigned h = 0; h <= 15; ++h)
        for (unsigned t = 0; t <= 16; ++t) EXPECT_EQ(stirling2(h, t), oracle::stirling2(h, t)) << h << "," << t;
}

TEST(Pmi, PlessWorkedValue) {
    const auto f8 = field_new(3);
    const auto s = pless_check(56, 3, dual_weights(1, f8), weight_prefix_thmO(1, f8, 1), 1);
    EXPECT_EQ(s.lhs, 224);
    EXPECT_EQ(s.rhs, 224);
}

TEST(Pmi, PlessDegenerateCode) {
    const long N = 9;
    WeightPrefix all{10, {}};
    for (long j = 0; j <= 10; ++j) all.values.push_back(oracle::binom(N, j));
    for (unsigned h = 1; h <= 10; ++h) {
        const std::vector<Int> zero{0};
        const auto s = pless_check(N, 0, zero, all, h);
        EXPECT_EQ(s.lhs, 0);
        EXPECT_TRUE(s.equal()) << h;
    }
}

TEST(Pmi, PlessIdentityOnCodes) {
    // (1,2) and (1,4): one nonzero dual codeword. (1,8), (1,16): dimension r.
    const std::vector<Int> d12{0, 2}, d14{0, 4};
    for (unsigned h = 1; h <= 10; ++h) {
        EXPECT_TRUE(pless_check(2, 1, d12, weight_prefix_thmO(1, field_new(1), 10), h).equal()) << h;
        EXPECT_TRUE(pless_check(12, 1, d14, weight_prefix_thmO(1, field_new(2), 10), h).equal()) << h;
    }
    for (int r : {3, 4}) {
        const auto f = field_new(r);
        const auto dual = dual_weights(1, f);
        const auto pre = weight_prefix_thmO(1, f, 10);
        for (unsigned h = 1; h <= 10; ++h) {
            const auto s = pless_check(coefs(1, *f).N, static_cast<unsigned>(r), dual, pre, h);
            Int direct = 0;
            for (const auto& w : dual) {
                Int v;
                mpz_pow_ui(v.get_mpz_t(), w.get_mpz_t(), h);
                direct += v;
            }
            EXPECT_EQ(s.lhs, direct);
            EXPECT_EQ(s.lhs, s.rhs) << r << " " << h;
        }
    }
    EXPECT_THROW(pless_check(56, 3, dual_weights(1, field_new(3)), weight_prefix_thmO(1, field_new(3), 2), 5),
                 DomainError);
}

TEST(Pmi, RecursionExamples) {
    EXPECT_EQ(t1k_recursive(3, field_new(1), 1).recursive, 1);
    EXPECT_EQ(t1k_recursive(1, field_new(3), 1).recursive, 4);
    EXPECT_EQ(t1k_recursive(1, field_new(3), 3).recursive, -44);
    const auto rep = t1k_recursive(3, field_new(1), 1);
    ASSERT_EQ(rep.d.size(), 2u);
    EXPECT_EQ(rep.d[1], -14336);
    EXPECT_TRUE(rep.match.value());
}

TEST(Pmi, RecursionRange) {
    EXPECT_THROW(t1k_recursive(1, field_new(2), 1), DomainError);
    EXPECT_THROW(t1k_recursive(1, field_new(1), 1), DomainError);
    EXPECT_THROW(t1k_recursive(2, field_new(3), 1), DomainError);
    EXPECT_THROW(t1k_recursive(3, field_new(1), 2), DomainError);
    EXPECT_NO_THROW(require_recursion_range(1, *field_new(3)));
    EXPECT_NO_THROW(require_recursion_range(5, *field_new(1)));
}

TEST(Pmi, RecursionMatchesIndependentOracle) {
    MomentRecursion session;
    for (auto [n, r] : kTargets) {
        const auto f = field_new(r);
        for (unsigned h : {1u, 3u, 5u, 7u}) {
            const auto rep = session.t1k(n, f, h, false);
            EXPECT_FALSE(rep.oracle.has_value());
            EXPECT_EQ(rep.recursive, direct_t1k(f->modulus(), h)) << n << " q=" << f->size() << " h=" << h;
        }
    }
}

TEST(Pmi, RecursionIsThreadSafe) {
    MomentRecursion session;
    const auto f = field_new(4);
    std::vector<Int> results(8);
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&, i] { results[i] = session.t1k(1, f, 7, false).recursive; });
    for (auto& t : threads) t.join();
    for (const auto& v : results) EXPECT_EQ(v, direct_t1k(f->modulus(), 7));
}

TEST(Pmi, SymplecticIdentity) {
    const auto s = thm_p_check(1, field_new(3), 1);
    EXPECT_EQ(s.lhs, 192);
    EXPECT_EQ(s.rhs, 192);
    for (auto [n, r] : kTargets) {
        const auto f = field_new(r);
        for (unsigned h = 1; h <= 7; ++h) EXPECT_TRUE(thm_p_check(n, f, h).equal()) << n << " " << r << " " << h;
    }
}

TEST(Pmi, MkRecursion) {
    EXPECT_EQ(mk_recursive(1, field_new(3), 1), 1);
    EXPECT_EQ(mk_recursive(1, field_new(3), 2), 55);
    EXPECT_EQ(mk_recursive(3, field_new(1), 1), 1);
    for (auto [n, r] : kTargets) {
        const auto f = field_new(r);
        for (unsigned h = 1; h <= 7; ++h) EXPECT_EQ(mk_recursive(n, f, h), direct_mk(f->modulus(), h));
    }
}
