#include <random>

#include <gtest/gtest.h>

#include "dcm/error.hpp"
#include "dcm/gf2r.hpp"
#include "oracle.hpp"

using namespace dcm;

TEST(Gf2r, ExamplesFromConstruction) {
    EXPECT_EQ(field_new(3)->size(), 8u);
    EXPECT_EQ(field_new(1)->size(), 2u);
    EXPECT_THROW(field_new(25), DomainError);
    EXPECT_THROW(field_new(0), DomainError);
}

TEST(Gf2r, RejectsBadModulus) {
    EXPECT_THROW(field_new(4, 0x15), DomainError);  // (x^2+x+1)^2
    EXPECT_THROW(field_new(4, 0x0B), DomainError);  // degree 3
    EXPECT_NO_THROW(field_new(4, 0x19));
}

TEST(Gf2r, MultiplicationExamples) {
    const auto f4 = field_new(2);
    EXPECT_EQ(ff_mul(f4->gen(), f4->gen()).bits(), 3u);
    const auto f8 = field_new(3);
    const auto g = f8->gen();
    EXPECT_EQ((g * g * g).bits(), 3u);
    for (std::uint32_t x = 0; x < 8; ++x) EXPECT_EQ(ff_mul(f8->elem(x), f8->one()).bits(), x);
}

TEST(Gf2r, InverseExamples) {
    const auto f4 = field_new(2);
    EXPECT_EQ(ff_inv(f4->one()).bits(), 1u);
    EXPECT_EQ(ff_inv(f4->gen()).bits(), 3u);
    EXPECT_THROW(ff_inv(f4->zero()), DivisionByZero);
}

TEST(Gf2r, TraceAndCharacterExamples) {
    const auto f2 = field_new(1), f4 = field_new(2), f8 = field_new(3);
    EXPECT_EQ(trace(f4->zero()), 0);
    EXPECT_EQ(trace(f4->gen()), 1);
    EXPECT_EQ(trace(f4->one()), 0);
    EXPECT_EQ(trace(f8->one()), 1);
    EXPECT_EQ(lambda_char(f4->zero()), 1);
    EXPECT_EQ(lambda_char(f2->one()), -1);
    EXPECT_EQ(lambda_char(f4->one()), 1);
}

TEST(Gf2r, MixedFieldsRejected) {
    const auto a = field_new(4, 0x13), b = field_new(4, 0x19);
    EXPECT_THROW(ff_add(a->one(), b->one()), MismatchError);
    EXPECT_THROW(a->elem(16), DomainError);
}

TEST(Gf2r, DefaultModuliIrreducible) {
    for (int r = 1; r <= Field::kMaxDegree; ++r) {
        const auto m = Field::default_modulus(r);
        EXPECT_EQ(oracle::degree_of(m), r);
        EXPECT_TRUE(Field::is_irreducible(m)) << r;
    }
}

TEST(Gf2r, IrreducibilityAgainstRootlessOracle) {
    // Degree 2 and 3 polynomials are irreducible iff they have no root in F_2.
    for (std::uint32_t p = 4; p < 16; ++p) {
        const bool rootless = (p & 1) && (__builtin_popcount(p) % 2 == 1);
        EXPECT_EQ(Field::is_irreducible(p), rootless) << p;
    }
}

TEST(Gf2r, ExhaustiveAgainstOracleSmallFields) {
    for (int r = 1; r <= 7; ++r) {
        const auto f = field_new(r);
        const oracle::Gf o(f->modulus());
        for (std::uint32_t x = 0; x < f->size(); ++x) {
            EXPECT_EQ(f->trace(x), o.trace(x));
            if (x) {
                EXPECT_EQ(f->inv(x), o.inv(x));
            }
            for (std::uint32_t y = 0; y < f->size(); ++y) ASSERT_EQ(f->mul(x, y), o.mul(x, y)) << r;
        }
    }
}

TEST(Gf2r, SampledAgainstOracleLargeFields) {
    std::mt19937 rng(12345);
    for (int r = 8; r <= Field::kMaxDegree; ++r) {
        const auto f = field_new(r);
        const oracle::Gf o(f->modulus());
        std::uniform_int_distribution<std::uint32_t> pick(1, f->size() - 1);
        for (int i = 0; i < 300; ++i) {
            const auto x = pick(rng), y = pick(rng);
            ASSERT_EQ(f->mul(x, y), o.mul(x, y)) << r;
            ASSERT_EQ(f->trace(x), o.trace(x)) << r;
            ASSERT_EQ(f->mul(x, f->inv(x)), 1u) << r;
        }
    }
}

TEST(Gf2r, TraceIsBalancedAndLinear) {
    for (int r = 1; r <= 10; ++r) {
        const auto f = field_new(r);
        std::uint32_t ones = 0;
        for (std::uint32_t x = 0; x < f->size(); ++x) {
            ones += f->trace(x);
            EXPECT_EQ(f->trace(f->mul(x, x)), f->trace(x));
        }
        EXPECT_EQ(ones, f->size() / 2);
    }
}

TEST(Gf2r, PowMatchesRepeatedMultiplication) {
    const auto f = field_new(5);
    for (std::uint32_t x = 0; x < f->size(); ++x) {
        std::uint32_t acc = 1;
        for (unsigned e = 0; e < 40; ++e) {
            EXPECT_EQ(f->pow(x, e), acc);
            acc = f->mul(acc, x);
        }
    }
}
