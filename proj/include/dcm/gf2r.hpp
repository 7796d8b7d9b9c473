#pragma once

// Arithmetic in F_{2^r} using a polynomial basis over F_2, the absolute
// trace to F_2, and the canonical additive character lambda(x) = (-1)^tr(x).

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dcm/bigint.hpp"

namespace dcm {

class FieldElement;

/// The field F_q, q = 2^r, 1 <= r <= 24. Immutable once built; share it
/// through FieldRef. Elements are bit patterns below q whose bit i is the
/// coefficient of x^i.
class Field {
public:
    static constexpr int kMaxDegree = 24;

    /// Built-in low-weight irreducible modulus for degree r.
    static std::uint32_t default_modulus(int r);

    /// Exhaustive trial division by every polynomial of degree <= deg/2.
    static bool is_irreducible(std::uint32_t poly);

    int degree() const { return r_; }
    std::uint32_t size() const { return q_; }
    Int order() const { return Int(static_cast<unsigned long>(q_)); }
    std::uint32_t modulus() const { return modulus_; }

    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        if (!mul_table_.empty()) return mul_table_[(x << r_) | y];
        return mul_slow(x, y);
    }
    std::uint32_t inv(std::uint32_t x) const;
    std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
    int trace(std::uint32_t x) const { return __builtin_parity(x & trace_mask_); }
    int lambda(std::uint32_t x) const { return 1 - 2 * trace(x); }

    FieldElement elem(std::uint32_t bits) const;
    FieldElement zero() const;
    FieldElement one() const;
    /// The class of x, a root of the modulus (equal to 1 when r = 1).
    FieldElement gen() const;

    /// Same degree and modulus.
    bool same_as(const Field& other) const {
        return this == &other || (r_ == other.r_ && modulus_ == other.modulus_);
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(int r, std::uint32_t modulus);
    friend std::shared_ptr<const Field> field_new(int, std::optional<std::uint32_t>);

    std::uint32_t mul_slow(std::uint32_t x, std::uint32_t y) const;

    int r_;
    std::uint32_t q_;
    std::uint32_t modulus_;
    std::uint32_t trace_mask_ = 0;
    std::vector<std::uint8_t> mul_table_;   // r <= 8
    std::vector<std::uint32_t> inv_table_;  // r <= 16
};

using FieldRef = std::shared_ptr<const Field>;

/// Builds F_{2^r}; the modulus defaults to the built-in table entry. Throws
/// DomainError for r outside [1, 24] or a modulus that is not an irreducible
/// polynomial of degree exactly r.
FieldRef field_new(int r, std::optional<std::uint32_t> modulus = std::nullopt);

/// Element of a field. Holds a non-owning pointer to its Field, which must
/// outlive it.
class FieldElement {
public:
    FieldElement(const Field& field, std::uint32_t bits);

    std::uint32_t bits() const { return bits_; }
    const Field& field() const { return *field_; }
    bool is_zero() const { return bits_ == 0; }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
    FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.bits_ == y.bits_ && x.field_->same_as(*y.field_);
    }

private:
    const Field* field_;
    std::uint32_t bits_;
};

FieldElement ff_add(const FieldElement& x, const FieldElement& y);
FieldElement ff_mul(const FieldElement& x, const FieldElement& y);
/// Throws DivisionByZero for x = 0.
FieldElement ff_inv(const FieldElement& x);
/// Absolute trace x + x^2 + ... + x^(2^(r-1)), as 0 or 1.
int trace(const FieldElement& x);
/// (-1)^tr(x).
int lambda_char(const FieldElement& x);

}  // namespace dcm
