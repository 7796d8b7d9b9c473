#include "dcm/dcsum.hpp"

#include <string>

#include "dcm/error.hpp"
#include "dcm/ksum.hpp"

namespace dcm {

namespace {

void require_odd(int n) {
    if (n < 1 || n % 2 == 0) throw DomainError("n must be an odd positive integer, got " + std::to_string(n));
}

void require_same_field(const Field& f, const FieldElement& x) {
    if (!x.field().same_as(f)) throw MismatchError("element from a different field");
}

Int exact_div(const Int& num, const Int& den) {
    if (num % den != 0) throw IntegralityError(num.get_str() + " is not divisible by " + den.get_str());
    return num / den;
}

}  // namespace

CoefSet coefs(int n, const Field& field) {
    require_odd(n);
    const Int q = field.order();
    const auto un = static_cast<unsigned long>(n);
    const unsigned long half = (un - 1) / 2;
    CoefSet c;
    c.n = n;
    c.A = ipow(q, (5 * un * un - 1) / 4) * qbinom(q, n, 1);
    c.B = ipow(q, (un - 1) * (un - 1) / 4) * (ipow(q, un) - 1);
    for (unsigned long j = 1; j <= half; ++j) {
        c.A *= ipow(q, 2 * j - 1) - 1;
        c.B *= ipow(q, 2 * j) - 1;
    }
    c.N = c.A * c.B;
    return c;
}

Int expsum_closed(int n, int r, const Field& field, const FieldElement& c, Family family) {
    if (n < 1) throw DomainError("n must be positive");
    if (r < 0 || r > n) throw DomainError("expsum_closed needs 0 <= r <= n");
    require_same_field(field, c);
    if (c.is_zero()) throw DomainError("expsum_closed needs a nontrivial character (c != 0)");
    if (r % 2 == 1) return 0;
    const Int q = field.order();
    const auto un = static_cast<unsigned long>(n);
    const auto ur = static_cast<unsigned long>(r);
    Int v = ipow(q, un * (un + 1) / 2 + ur * un - ur * ur / 4) * qbinom(q, n, r);
    for (unsigned long j = 1; j <= ur / 2; ++j) v *= ipow(q, 2 * j - 1) - 1;
    v *= kloosterman_gl(field, static_cast<unsigned>(n - r), field.one(), c);
    if (family == Family::Orthogonal && field.lambda(c.bits()) < 0) v = -v;
    return v;
}

Int expsum_dc(int n, const Field& field, const FieldElement& c) {
    require_odd(n);
    return expsum_closed(n, n - 1, field, c, Family::Orthogonal);
}

Int expsum_dc_kloosterman_form(int n, const FieldRef& field, const FieldElement& c) {
    require_odd(n);
    require_same_field(*field, c);
    if (c.is_zero()) throw DomainError("needs c != 0");
    const Int k = Int(static_cast<long>(kloosterman_table(field)[c.bits()]));
    return Int(field->lambda(c.bits())) * coefs(n, *field).A * k;
}

Int n_beta(int n, const Field& field, const FieldElement& beta) {
    require_same_field(field, beta);
    const CoefSet cs = coefs(n, field);
    const Int q = field.order();
    Int slot;
    if (beta.bits() == 1)
        slot = 1;
    else if (field.trace(field.inv(beta.bits() ^ 1u)) == 0)
        slot = q + 1;
    else
        slot = 1 - q;
    return exact_div(cs.A * (cs.B + slot), q);
}

Int nhat_beta(int n, const Field& field, const FieldElement& beta) {
    require_same_field(field, beta);
    const CoefSet cs = coefs(n, field);
    const Int q = field.order();
    Int slot;
    if (beta.is_zero())
        slot = 1;
    else if (field.trace(field.inv(beta.bits())) == 0)
        slot = q + 1;
    else
        slot = 1 - q;
    return exact_div(cs.A * (cs.B + slot), q);
}

TraceHistogram dc_histogram_closed(int n, const FieldRef& field) {
    TraceHistogram h(field);
    for (std::uint32_t b = 0; b < field->size(); ++b) h[b] = n_beta(n, *field, field->elem(b));
    return h;
}

TraceHistogram nhat_histogram_closed(int n, const FieldRef& field) {
    TraceHistogram h(field);
    for (std::uint32_t b = 0; b < field->size(); ++b) h[b] = nhat_beta(n, *field, field->elem(b));
    return h;
}

}  // namespace dcm
