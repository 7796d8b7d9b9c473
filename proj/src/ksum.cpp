#include "dcm/ksum.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "dcm/classical.hpp"
#include "dcm/error.hpp"
#include "dcm/matfq.hpp"

namespace dcm {

namespace {

std::int64_t kloosterman_raw(const Field& f, std::uint32_t a, std::uint32_t c) {
    std::int64_t s = 0;
    for (std::uint32_t alpha = 1; alpha < f.size(); ++alpha)
        s += f.lambda(f.mul(c, alpha ^ f.mul(a, f.inv(alpha))));
    return s;
}

void require_same_field(const Field& f, const FieldElement& x) {
    if (!x.field().same_as(f)) throw MismatchError("element from a different field");
}

}  // namespace

KloostermanTable::KloostermanTable(FieldRef field) : field_(std::move(field)), values_(field_->size(), 0) {
    for (std::uint32_t a = 1; a < field_->size(); ++a) values_[a] = kloosterman_raw(*field_, a, 1);
}

std::int64_t KloostermanTable::at(const FieldElement& a) const {
    require_same_field(*field_, a);
    if (a.is_zero()) throw DomainError("Kloosterman sum at a = 0");
    return values_[a.bits()];
}

const KloostermanTable& kloosterman_table(const FieldRef& field) {
    static std::mutex mu;
    static std::map<std::pair<int, std::uint32_t>, std::unique_ptr<KloostermanTable>> cache;
    const std::lock_guard lock(mu);
    auto& slot = cache[{field->degree(), field->modulus()}];
    if (!slot) slot = std::make_unique<KloostermanTable>(field);
    return *slot;
}

Int kloosterman(const Field& field, const FieldElement& a, const FieldElement& c) {
    require_same_field(field, a);
    require_same_field(field, c);
    if (a.is_zero()) throw DomainError("Kloosterman sum needs a != 0");
    if (c.is_zero()) throw DomainError("Kloosterman sum needs a nontrivial character (c != 0)");
    return Int(static_cast<long>(kloosterman_raw(field, a.bits(), c.bits())));
}

Moments moments(const FieldRef& field, unsigned h) {
    const auto& table = kloosterman_table(field);
    Moments m{0, 0, 0};
    for (std::uint32_t a = 1; a < field->size(); ++a) {
        const Int term = ipow(Int(static_cast<long>(table[a])), h);
        (field->trace(a) == 0 ? m.t0k : m.t1k) += term;
    }
    m.mk = m.t0k + m.t1k;
    return m;
}

Int kloosterman_gl(const Field& field, unsigned t, const FieldElement& a, const FieldElement& c) {
    const Int k1 = kloosterman(field, a, c);
    const Int q = field.order();
    Int prev = 1;  // K_GL(0)
    if (t == 0) return prev;
    Int cur = k1;
    for (unsigned s = 2; s <= t; ++s) {
        Int next = ipow(q, s - 1) * cur * k1 + ipow(q, 2 * s - 2) * (ipow(q, s - 1) - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int kloosterman_gl_bruteforce(const Field& field, unsigned t, const FieldElement& a, const FieldElement& c,
                              std::uint64_t budget) {
    require_same_field(field, a);
    require_same_field(field, c);
    if (a.is_zero()) throw DomainError("GL Kloosterman sum needs a != 0");
    if (c.is_zero()) throw DomainError("GL Kloosterman sum needs a nontrivial character (c != 0)");
    if (t == 0) return 1;
    long s = 0;
    for (const MatrixFq& w : general_linear_elements(field, static_cast<int>(t), budget)) {
        const std::uint32_t tr = mat_trace(w).bits();
        const std::uint32_t tr_inv = mat_trace(mat_inv(w)).bits();
        s += field.lambda(field.mul(c.bits(), tr ^ field.mul(a.bits(), tr_inv)));
    }
    return Int(s);
}

Int theta_character_sum(const Field& field, const FieldElement& beta) {
    require_same_field(field, beta);
    if (beta.is_zero()) throw DomainError("theta_character_sum needs beta != 0");
    long s = 0;
    for (std::uint32_t alpha = 2; alpha < field.size(); ++alpha) {
        const std::uint32_t denom = field.mul(alpha, alpha) ^ alpha;
        s += field.lambda(field.mul(beta.bits(), field.inv(denom)));
    }
    return Int(s);
}

Int twisted_sum(const FieldRef& field, const FieldElement& beta) {
    require_same_field(*field, beta);
    const auto& table = kloosterman_table(field);
    long s = 0;
    for (std::uint32_t a = 1; a < field->size(); ++a)
        s += field->lambda(field->mul(a, beta.bits())) * table[a];
    return Int(s);
}

}  // namespace dcm
