#include "dcm/gf2r.hpp"

#include <array>
#include <bit>
#include <string>

#include "dcm/error.hpp"

namespace dcm {

namespace {

// Low-weight irreducible polynomials, bit i = coefficient of x^i.
constexpr std::array<std::uint32_t, Field::kMaxDegree + 1> kModuli = {
    0,
    0x3,        // x + 1
    0x7,        // x^2 + x + 1
    0xB,        // x^3 + x + 1
    0x13,       // x^4 + x + 1
    0x25,       // x^5 + x^2 + 1
    0x43,       // x^6 + x + 1
    0x83,       // x^7 + x + 1
    0x11B,      // x^8 + x^4 + x^3 + x + 1
    0x211,      // x^9 + x^4 + 1
    0x409,      // x^10 + x^3 + 1
    0x805,      // x^11 + x^2 + 1
    0x1053,     // x^12 + x^6 + x^4 + x + 1
    0x201B,     // x^13 + x^4 + x^3 + x + 1
    0x4443,     // x^14 + x^10 + x^6 + x + 1
    0x8003,     // x^15 + x + 1
    0x1002D,    // x^16 + x^5 + x^3 + x^2 + 1
    0x20009,    // x^17 + x^3 + 1
    0x40081,    // x^18 + x^7 + 1
    0x80027,    // x^19 + x^5 + x^2 + x + 1
    0x100009,   // x^20 + x^3 + 1
    0x200005,   // x^21 + x^2 + 1
    0x400003,   // x^22 + x + 1
    0x800021,   // x^23 + x^5 + 1
    0x100001B,  // x^24 + x^4 + x^3 + x + 1
};

std::string hex(std::uint32_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    do {
        out.insert(out.begin(), digits[v & 0xF]);
        v >>= 4;
    } while (v != 0);
    return "0x" + out;
}

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    const int dm = poly_degree(m);
    for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
    return a;
}

}  // namespace

std::uint32_t Field::default_modulus(int r) {
    if (r < 1 || r > kMaxDegree)
        throw DomainError("unsupported field degree " + std::to_string(r) + " (need 1 <= r <= 24)");
    return kModuli[static_cast<std::size_t>(r)];
}

bool Field::is_irreducible(std::uint32_t poly) {
    const int d = poly_degree(poly);
    if (d < 1) return false;
    for (std::uint64_t g = 2; poly_degree(g) <= d / 2; ++g)
        if (poly_mod(poly, g) == 0) return false;
    return true;
}

Field::Field(int r, std::uint32_t modulus) : r_(r), q_(1u << r), modulus_(modulus) {
    if (r_ <= 8) {
        mul_table_.resize(std::size_t{q_} * q_);
        for (std::uint32_t x = 0; x < q_; ++x)
            for (std::uint32_t y = 0; y < q_; ++y)
                mul_table_[(x << r_) | y] = static_cast<std::uint8_t>(mul_slow(x, y));
    }
    // Bit i of the mask is tr(x^i); trace is then a parity of masked bits.
    for (int i = 0; i < r_; ++i) {
        std::uint32_t acc = 0, power = 1u << i;
        for (int k = 0; k < r_; ++k) {
            acc ^= power;
            power = mul(power, power);
        }
        if (acc > 1) throw Error("trace of a basis element left F_2; modulus is broken");
        trace_mask_ |= acc << i;
    }
    if (r_ <= 16) {
        inv_table_.resize(q_);
        for (std::uint32_t x = 1; x < q_; ++x) inv_table_[x] = pow(x, q_ - 2);
    }
}

std::uint32_t Field::mul_slow(std::uint32_t x, std::uint32_t y) const {
    std::uint64_t p = 0;
    for (std::uint64_t a = x; y != 0; y >>= 1, a <<= 1)
        if (y & 1u) p ^= a;
    for (int d = 2 * r_ - 2; d >= r_; --d)
        if ((p >> d) & 1u) p ^= std::uint64_t{modulus_} << (d - r_);
    return static_cast<std::uint32_t>(p);
}

std::uint32_t Field::pow(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t out = 1;
    for (; e != 0; e >>= 1) {
        if (e & 1u) out = mul(out, x);
        x = mul(x, x);
    }
    return out;
}

std::uint32_t Field::inv(std::uint32_t x) const {
    if (x == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
    if (!inv_table_.empty()) return inv_table_[x];
    return pow(x, q_ - 2);
}

FieldElement Field::elem(std::uint32_t bits) const { return FieldElement(*this, bits); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }
FieldElement Field::gen() const { return FieldElement(*this, r_ == 1 ? 1u : 2u); }

FieldRef field_new(int r, std::optional<std::uint32_t> modulus) {
    const std::uint32_t m = modulus.value_or(Field::default_modulus(r));
    if (r < 1 || r > Field::kMaxDegree)
        throw DomainError("unsupported field degree " + std::to_string(r) + " (need 1 <= r <= 24)");
    if (poly_degree(m) != r)
        throw DomainError("modulus " + hex(m) + " does not have degree " + std::to_string(r));
    if (!Field::is_irreducible(m)) throw DomainError("modulus " + hex(m) + " is reducible over F_2");
    return FieldRef(new Field(r, m));
}

FieldElement::FieldElement(const Field& field, std::uint32_t bits) : field_(&field), bits_(bits) {
    if (bits >= field.size())
        throw DomainError("bit pattern " + std::to_string(bits) + " is not an element of F_" +
                          std::to_string(field.size()));
}

namespace {
void require_same(const FieldElement& x, const FieldElement& y) {
    if (!x.field().same_as(y.field())) throw MismatchError("field elements from different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    require_same(x, y);
    return FieldElement(*x.field_, x.bits_ ^ y.bits_);
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    require_same(x, y);
    return FieldElement(*x.field_, x.field_->mul(x.bits_, y.bits_));
}

FieldElement ff_add(const FieldElement& x, const FieldElement& y) { return x + y; }
FieldElement ff_mul(const FieldElement& x, const FieldElement& y) { return x * y; }
FieldElement ff_inv(const FieldElement& x) { return x.field().elem(x.field().inv(x.bits())); }
int trace(const FieldElement& x) { return x.field().trace(x.bits()); }
int lambda_char(const FieldElement& x) { return x.field().lambda(x.bits()); }

}  // namespace dcm
