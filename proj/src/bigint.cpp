#include "dcm/bigint.hpp"

#include "dcm/error.hpp"

namespace dcm {

Int ipow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Int ipow2(unsigned long exp) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, exp);
    return out;
}

Int binom(const Int& n, unsigned long k) {
    if (n < 0 || n < k) return 0;
    Int out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Int gl_order(const Int& q, unsigned n) {
    const Int qn = ipow(q, n);
    Int out = 1;
    for (unsigned j = 0; j < n; ++j) out *= qn - ipow(q, j);
    return out;
}

Int qbinom(const Int& q, int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    Int num = 1, den = 1;
    for (int j = 0; j < r; ++j) {
        num *= ipow(q, static_cast<unsigned long>(n - j)) - 1;
        den *= ipow(q, static_cast<unsigned long>(r - j)) - 1;
    }
    return num / den;
}

Int to_integer(const Rat& x, const std::string& what) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() != 1)
        throw IntegralityError(what + " is not an integer: " + c.get_str());
    return c.get_num();
}

bool fits_u64(const Int& x) {
    return x >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Int& x) {
    if (!fits_u64(x)) throw DomainError("integer does not fit in 64 bits: " + x.get_str());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
    return out;
}

}  // namespace dcm
