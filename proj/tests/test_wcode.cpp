#include <map>
#include <random>

#include <gtest/gtest.h>

#include "dcm/classical.hpp"
#include "dcm/dcsum.hpp"
#include "dcm/error.hpp"
#include "dcm/wcode.hpp"
#include "oracle.hpp"

using namespace dcm;

TEST(Wcode, DualWeightExamples) {
    const auto f8 = field_new(3), f4 = field_new(2);
    EXPECT_EQ(dual_weight(1, f8, f8->one()).weight, 8);
    for (std::uint32_t a = 1; a < 8; ++a)
        if (f8->trace(a) == 0) {
            EXPECT_EQ(dual_weight(1, f8, f8->elem(a)).weight, 32);
        }
    EXPECT_EQ(dual_weight(1, f4, f4->gen()).weight, 4);
    const auto z = dual_weight(1, f8, f8->zero());
    EXPECT_EQ(z.weight, 0);
    EXPECT_TRUE(z.zero_codeword);
}

TEST(Wcode, DualWeightMatchesHistogramCount) {
    for (int n : {1, 3})
        for (int r = 1; r <= 6; ++r) {
            const auto f = field_new(r);
            const auto h = dc_histogram_closed(n, f);
            for (std::uint32_t a = 0; a < f->size(); ++a)
                EXPECT_EQ(dual_weight(n, f, f->elem(a)).weight, dual_weight_from_histogram(h, a));
        }
}

TEST(Wcode, DualKernel) {
    EXPECT_EQ(dual_kernel(1, field_new(3)), (std::vector<std::uint32_t>{0}));
    EXPECT_EQ(dual_kernel(1, field_new(2)), (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(dual_kernel(3, field_new(1)), (std::vector<std::uint32_t>{0}));
    for (int r : {1, 3, 4, 5}) EXPECT_EQ(dual_kernel(1, field_new(r)), (std::vector<std::uint32_t>{0})) << r;
}

TEST(Wcode, DualEnumerateExamples) {
    std::map<Int, int> mult;
    for (const auto& e : dual_enumerate(1, field_new(3))) ++mult[e.weight];
    EXPECT_EQ(mult, (std::map<Int, int>{{0, 1}, {8, 1}, {32, 3}, {40, 3}}));
    const auto d2 = dual_enumerate(1, field_new(1));
    ASSERT_EQ(d2.size(), 2u);
    EXPECT_EQ(d2[0].weight, 0);
    EXPECT_EQ(d2[1].weight, 2);
}

TEST(Wcode, WeightPrefixExamples) {
    const auto f8 = field_new(3), f2 = field_new(1), f4 = field_new(2);
    const auto c = weight_prefix_thmO(1, f8, 2);
    EXPECT_EQ(c[0], 1);
    EXPECT_EQ(c[1], 0);
    EXPECT_EQ(c[2], 388);
    EXPECT_EQ(weight_prefix_thmP(3, f2, 1)[1], 308224);
    EXPECT_EQ(weight_prefix_thmO(3, f2, 1)[1], 293888);
    EXPECT_EQ(weight_prefix_thmO(1, f2, 2).values, (std::vector<Int>{1, 0, 1}));
    const auto full = weight_prefix_thmO(1, f4, 12);
    for (long j = 0; j <= 12; ++j) {
        Int expected = 0;
        for (long nu = 0; nu <= 4; nu += 2) expected += oracle::binom(4, nu) * oracle::binom(8, j - nu);
        EXPECT_EQ(full[j], expected) << j;
    }
    EXPECT_THROW(weight_prefix_thmO(2, f2, 3), DomainError);
}

TEST(Wcode, WeightPrefixMatchesNaiveCompositions) {
    std::mt19937 rng(2024);
    for (int r = 1; r <= 4; ++r) {
        const auto f = field_new(r);
        std::vector<TraceHistogram> hs{dc_histogram_closed(1, f), nhat_histogram_closed(1, f),
                                       dc_histogram_closed(3, f)};
        std::uniform_int_distribution<int> pick(0, 9);
        for (int t = 0; t < 3; ++t) {
            std::vector<Int> counts(f->size());
            for (auto& c : counts) c = pick(rng);
            hs.emplace_back(f, counts);
        }
        for (const auto& h : hs) {
            const std::vector<Int> counts(h.counts().begin(), h.counts().end());
            EXPECT_EQ(weight_prefix(h, 5).values, oracle::weight_prefix_naive(counts, 5)) << r;
        }
    }
}

TEST(Wcode, BruteForceMatchesFormulaAndSymmetry) {
    for (int r : {1, 2}) {
        const auto f = field_new(r);
        const auto wd = code_bruteforce_wd(1, f);
        const unsigned N = static_cast<unsigned>(wd.size() - 1);
        EXPECT_EQ(Int(N), coefs(1, *f).N);
        EXPECT_EQ(wd, weight_prefix_thmO(1, f, N).values);
        for (unsigned j = 0; j <= N; ++j) EXPECT_EQ(wd[j], wd[N - j]);
    }
    Int total = 0;
    for (const auto& c : code_bruteforce_wd(1, field_new(2))) total += c;
    EXPECT_EQ(total, 2048);
    EXPECT_THROW(code_bruteforce_wd(1, field_new(3)), BudgetExceeded);
}

TEST(Wcode, BruteForceOnArbitraryVectors) {
    std::mt19937 rng(99);
    for (int r = 1; r <= 3; ++r) {
        const auto f = field_new(r);
        std::uniform_int_distribution<std::uint32_t> pick(0, f->size() - 1);
        for (int t = 0; t < 5; ++t) {
            std::vector<std::uint32_t> v(14);
            for (auto& x : v) x = pick(rng);
            TraceHistogram h(f);
            for (auto x : v) h[x] += 1;
            EXPECT_EQ(code_bruteforce_wd(v, *f), weight_prefix(h, 14).values);
        }
    }
}

TEST(Wcode, DelsarteDuality) {
    for (int r : {1, 2}) {
        const auto f = field_new(r);
        const auto v = dc_trace_vector({1, f, Family::Orthogonal}, 0);
        const auto rep = delsarte_check(v, *f);
        EXPECT_TRUE(rep.sets_equal);
        EXPECT_EQ(rep.length, v.size());
        // q = 2: dimension r = 1. q = 4: kernel {0, 1} halves the 4 codewords.
        EXPECT_EQ(rep.dual_dimension, 1u);
        EXPECT_EQ(rep.distinct_trace_codewords, 2u);
    }
    std::mt19937 rng(5);
    for (int r = 2; r <= 4; ++r) {
        const auto f = field_new(r);
        std::uniform_int_distribution<std::uint32_t> pick(0, f->size() - 1);
        for (int t = 0; t < 10; ++t) {
            std::vector<std::uint32_t> v(10);
            for (auto& x : v) x = pick(rng);
            EXPECT_TRUE(delsarte_check(v, *f).sets_equal);
        }
    }
}
