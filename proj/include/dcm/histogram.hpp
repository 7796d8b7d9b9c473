#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dcm/bigint.hpp"
#include "dcm/gf2r.hpp"

namespace dcm {

/// Exact count of group elements per trace value beta in F_q, indexed by the
/// bit pattern of beta.
class TraceHistogram {
public:
    explicit TraceHistogram(FieldRef field);
    TraceHistogram(FieldRef field, std::vector<Int> counts);

    const Field& field() const { return *field_; }
    const FieldRef& field_ref() const { return field_; }

    const Int& operator[](std::uint32_t beta) const { return counts_.at(beta); }
    Int& operator[](std::uint32_t beta) { return counts_.at(beta); }
    std::span<const Int> counts() const { return counts_; }

    Int total() const;
    /// sum_beta count(beta) * beta, evaluated in F_q.
    std::uint32_t weighted_sum() const;
    /// Elements beta with count(beta) > 0.
    std::vector<std::uint32_t> support() const;

    friend bool operator==(const TraceHistogram& a, const TraceHistogram& b) {
        return a.field_->same_as(*b.field_) && a.counts_ == b.counts_;
    }

private:
    FieldRef field_;
    std::vector<Int> counts_;
};

/// sum_beta count(beta) * lambda(c * beta): the additive character sum
/// psi(Tr w) over the counted elements, psi = lambda(c .).
Int histogram_expsum(const TraceHistogram& h, std::uint32_t c);

}  // namespace dcm
