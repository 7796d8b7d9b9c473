#pragma once

// Closed forms attached to the double cosets DC(n, q) = P sigma_{n-1} P of
// O(2n+1, q): the coefficients A, B, N, exponential sums over Bruhat cells,
// and the trace distributions n(beta) and nhat(beta).

#include "dcm/bigint.hpp"
#include "dcm/classical.hpp"
#include "dcm/gf2r.hpp"
#include "dcm/histogram.hpp"

namespace dcm {

struct CoefSet {
    int n = 0;
    Int A;
    Int B;
    Int N;  // A * B = |DC(n, q)|
};

/// Throws DomainError unless n is odd and positive.
CoefSet coefs(int n, const Field& field);

/// sum over w in P sigma_r P of psi(Tr w), psi = lambda(c .). Zero for odd r.
/// The orthogonal sum carries the extra factor psi(1) relative to the
/// symplectic one.
Int expsum_closed(int n, int r, const Field& field, const FieldElement& c, Family family = Family::Orthogonal);

/// expsum_closed at r = n - 1, n odd.
Int expsum_dc(int n, const Field& field, const FieldElement& c);

/// lambda(c) A(n, q) K(lambda; c).
Int expsum_dc_kloosterman_form(int n, const FieldRef& field, const FieldElement& c);

/// Number of w in DC(n, q) with Tr w = beta.
Int n_beta(int n, const Field& field, const FieldElement& beta);

/// Trace distribution of the symplectic double coset P' sigma'_{n-1} P'.
Int nhat_beta(int n, const Field& field, const FieldElement& beta);

TraceHistogram dc_histogram_closed(int n, const FieldRef& field);
TraceHistogram nhat_histogram_closed(int n, const FieldRef& field);

}  // namespace dcm
