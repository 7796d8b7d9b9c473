#pragma once

// Kloosterman sums over F_{2^r}, their GL(t, q) analogues, trace-restricted
// power moments, and the character-sum identities they satisfy.

#include <cstdint>
#include <vector>

#include "dcm/bigint.hpp"
#include "dcm/gf2r.hpp"

namespace dcm {

/// K(lambda; a) for every a in F_q^*, by direct summation. values[0] is
/// unused and zero.
class KloostermanTable {
public:
    explicit KloostermanTable(FieldRef field);

    const Field& field() const { return *field_; }
    std::int64_t operator[](std::uint32_t a) const { return values_.at(a); }
    std::int64_t at(const FieldElement& a) const;
    const std::vector<std::int64_t>& values() const { return values_; }

private:
    FieldRef field_;
    std::vector<std::int64_t> values_;
};

/// Process-wide cache keyed by (degree, modulus); thread-safe.
const KloostermanTable& kloosterman_table(const FieldRef& field);

/// K(psi; a) = sum_{alpha != 0} psi(alpha + a/alpha) with psi = lambda(c .).
/// Throws DomainError for a = 0 or c = 0.
Int kloosterman(const Field& field, const FieldElement& a, const FieldElement& c);

struct Moments {
    Int mk;   // sum over a != 0 of K(lambda; a)^h
    Int t0k;  // restricted to tr(a) = 0
    Int t1k;  // restricted to tr(a) = 1
};

Moments moments(const FieldRef& field, unsigned h);

/// K_{GL(t,q)}(psi; a) by the three-term recursion from K_{GL(0)} = 1 and
/// K_{GL(1)} = K(psi; a).
Int kloosterman_gl(const Field& field, unsigned t, const FieldElement& a, const FieldElement& c);

/// Direct sum of psi(Tr w + a Tr w^{-1}) over GL(t, q).
Int kloosterman_gl_bruteforce(const Field& field, unsigned t, const FieldElement& a, const FieldElement& c,
                              std::uint64_t budget = kDefaultBudget);

/// sum_{alpha not in {0,1}} lambda(beta / (alpha^2 + alpha)); beta != 0.
Int theta_character_sum(const Field& field, const FieldElement& beta);

/// sum_{a != 0} lambda(a beta) K(lambda; a).
Int twisted_sum(const FieldRef& field, const FieldElement& beta);

}  // namespace dcm
