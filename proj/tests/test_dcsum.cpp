#include <gtest/gtest.h>

#include "dcm/classical.hpp"
#include "dcm/dcsum.hpp"
#include "dcm/error.hpp"
#include "dcm/ksum.hpp"
#include "oracle.hpp"

using namespace dcm;

TEST(Dcsum, CoefExamples) {
    const auto c18 = coefs(1, *field_new(3));
    EXPECT_EQ(c18.A, 8);
    EXPECT_EQ(c18.B, 7);
    EXPECT_EQ(c18.N, 56);
    const auto c32 = coefs(3, *field_new(1));
    EXPECT_EQ(c32.A, 14336);
    EXPECT_EQ(c32.B, 42);
    EXPECT_EQ(c32.N, 602112);
    const auto c12 = coefs(1, *field_new(1));
    EXPECT_EQ(c12.A, 2);
    EXPECT_EQ(c12.B, 1);
    EXPECT_THROW(coefs(2, *field_new(1)), DomainError);
    EXPECT_THROW(coefs(-1, *field_new(1)), DomainError);
}

TEST(Dcsum, CoefsMatchCellSizes) {
    for (int n : {1, 3, 5})
        for (int r = 1; r <= 5; ++r) {
            const auto f = field_new(r);
            const auto c = coefs(n, *f);
            EXPECT_GT(c.A, 0);
            EXPECT_GT(c.B, 0);
            EXPECT_EQ(c.N, c.A * c.B);
            EXPECT_EQ(c.N, group_order_data(n, *f).cell_size[n - 1]);
        }
}

TEST(Dcsum, ExpsumExamples) {
    const auto f2 = field_new(1), f4 = field_new(2), f8 = field_new(3);
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= n; r += 2) EXPECT_EQ(expsum_closed(n, r, *f4, f4->gen()), 0);
    EXPECT_EQ(expsum_closed(1, 0, *f2, f2->one()), -2);
    EXPECT_EQ(expsum_closed(3, 2, *f2, f2->one()), -14336);
    EXPECT_EQ(expsum_dc(1, *f8, f8->one()), 40);
    EXPECT_EQ(expsum_dc(3, *f2, f2->one()), -14336);
    EXPECT_EQ(expsum_dc(1, *f4, f4->gen()), 4);
    EXPECT_THROW(expsum_closed(2, 3, *f2, f2->one()), DomainError);
    EXPECT_THROW(expsum_closed(2, 0, *f2, f2->zero()), DomainError);
}

TEST(Dcsum, ExpsumMatchesEnumeration) {
    const std::pair<int, int> cells[] = {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {1, 3}, {1, 4}};
    for (auto [n, r] : cells) {
        const auto f = field_new(r);
        for (Family fam : {Family::Orthogonal, Family::Symplectic})
            for (int k = 0; k <= n; ++k) {
                if (n == 3 && k == 3) continue;
                const auto h = dc_trace_histogram({n, f, fam}, k);
                for (std::uint32_t c = 1; c < f->size(); ++c)
                    EXPECT_EQ(histogram_expsum(h, c), expsum_closed(n, k, *f, f->elem(c), fam))
                        << n << " q=" << f->size() << " r=" << k << " c=" << c;
            }
    }
}

TEST(Dcsum, KloostermanForm) {
    const std::pair<int, int> targets[] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {3, 1}, {3, 2}, {5, 1}};
    for (auto [n, r] : targets) {
        const auto f = field_new(r);
        for (std::uint32_t a = 1; a < f->size(); ++a)
            EXPECT_EQ(expsum_dc(n, *f, f->elem(a)), expsum_dc_kloosterman_form(n, f, f->elem(a)));
    }
}

TEST(Dcsum, NBetaExamples) {
    const auto f2 = field_new(1), f4 = field_new(2), f8 = field_new(3);
    EXPECT_EQ(n_beta(1, *f8, f8->one()), 8);
    EXPECT_EQ(n_beta(3, *f2, f2->zero()), 293888);
    EXPECT_EQ(n_beta(3, *f2, f2->one()), 308224);
    EXPECT_EQ(n_beta(1, *f4, f4->zero()), 8);
    EXPECT_EQ(nhat_beta(1, *f8, f8->zero()), 8);
    EXPECT_EQ(nhat_beta(1, *f2, f2->one()), 0);
    const auto h = nhat_histogram_closed(1, f4);
    for (std::uint32_t b = 0; b < 4; ++b) {
        const Int expected = b == 0 ? 4 : (f4->trace(f4->inv(b)) == 0 ? 8 : 0);
        EXPECT_EQ(h[b], expected) << b;
    }
    EXPECT_EQ(h.total(), 12);
    EXPECT_THROW(n_beta(2, *f2, f2->one()), DomainError);
}

// P'(2, q) consists of [[a, ab], [0, 1/a]]; its traces are a + 1/a.
TEST(Dcsum, NhatN1AgainstSymplecticParabolicTraces) {
    for (int r = 1; r <= 6; ++r) {
        const auto f = field_new(r);
        const oracle::Gf o(f->modulus());
        std::vector<Int> counts(f->size(), 0);
        for (std::uint32_t a = 1; a < f->size(); ++a) counts[a ^ o.inv(a)] += f->size();
        EXPECT_EQ(nhat_histogram_closed(1, f), TraceHistogram(f, counts));
    }
}

TEST(Dcsum, ClosedHistogramsMatchEnumeration) {
    const std::pair<int, int> targets[] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {3, 1}};
    for (auto [n, r] : targets) {
        const auto f = field_new(r);
        EXPECT_EQ(dc_trace_histogram({n, f, Family::Orthogonal}, n - 1), dc_histogram_closed(n, f));
        EXPECT_EQ(dc_trace_histogram({n, f, Family::Symplectic}, n - 1), nhat_histogram_closed(n, f));
    }
}

TEST(Dcsum, PositivityAndWeightedSum) {
    const std::pair<int, int> positive[] = {{3, 1}, {3, 2}, {5, 1}};
    for (auto [n, r] : positive) {
        const auto f = field_new(r);
        for (std::uint32_t b = 0; b < f->size(); ++b) EXPECT_GT(n_beta(n, *f, f->elem(b)), 0);
    }
    for (int n : {1, 3, 5})
        for (int r = 1; r <= 6; ++r) {
            const auto f = field_new(r);
            const auto h = dc_histogram_closed(n, f), hh = nhat_histogram_closed(n, f);
            EXPECT_EQ(h.weighted_sum(), 0u);
            EXPECT_EQ(hh.weighted_sum(), 0u);
            EXPECT_EQ(h.total(), coefs(n, *f).N);
            EXPECT_EQ(hh.total(), coefs(n, *f).N);
        }
}

TEST(Dcsum, FourierInversion) {
    const std::pair<int, int> targets[] = {{1, 1}, {1, 2}, {1, 3}, {3, 1}};
    for (auto [n, r] : targets) {
        const auto f = field_new(r);
        const auto c = coefs(n, *f);
        for (std::uint32_t b = 0; b < f->size(); ++b) {
            Int rhs = c.N;
            for (std::uint32_t a = 1; a < f->size(); ++a) rhs += f->lambda(f->mul(a, b)) * expsum_dc(n, *f, f->elem(a));
            EXPECT_EQ(Int(static_cast<unsigned long>(f->size())) * n_beta(n, *f, f->elem(b)), rhs);
        }
    }
}

// x^4 + x + 1 and x^4 + x^3 + 1 give isomorphic fields; the histograms must
// agree along the explicit isomorphism.
TEST(Dcsum, IsomorphismInvariance) {
    const auto f1 = field_new(4, 0x13), f2 = field_new(4, 0x19);
    const auto phi = oracle::isomorphism(oracle::Gf(0x13), oracle::Gf(0x19));
    for (std::uint32_t x = 0; x < 16; ++x)
        for (std::uint32_t y = 0; y < 16; ++y) ASSERT_EQ(phi[f1->mul(x, y)], f2->mul(phi[x], phi[y]));
    for (int n : {1, 3}) {
        const auto h1 = dc_histogram_closed(n, f1), h2 = dc_histogram_closed(n, f2);
        const auto g1 = nhat_histogram_closed(n, f1), g2 = nhat_histogram_closed(n, f2);
        for (std::uint32_t b = 0; b < 16; ++b) {
            EXPECT_EQ(h1[b], h2[phi[b]]);
            EXPECT_EQ(g1[b], g2[phi[b]]);
        }
    }
    const auto e1 = dc_trace_histogram({1, f1, Family::Orthogonal}, 0);
    const auto e2 = dc_trace_histogram({1, f2, Family::Orthogonal}, 0);
    for (std::uint32_t b = 0; b < 16; ++b) EXPECT_EQ(e1[b], e2[phi[b]]);
    for (std::uint32_t a = 1; a < 16; ++a) {
        EXPECT_EQ(kloosterman_table(f1)[a], kloosterman_table(f2)[phi[a]]);
        EXPECT_EQ(expsum_dc(3, *f1, f1->elem(a)), expsum_dc(3, *f2, f2->elem(phi[a])));
    }
}
