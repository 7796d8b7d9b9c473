#include "dcm/histogram.hpp"

#include <utility>

#include "dcm/error.hpp"

namespace dcm {

TraceHistogram::TraceHistogram(FieldRef field) : field_(std::move(field)), counts_(field_->size()) {}

TraceHistogram::TraceHistogram(FieldRef field, std::vector<Int> counts)
    : field_(std::move(field)), counts_(std::move(counts)) {
    if (counts_.size() != field_->size()) throw MismatchError("histogram needs one count per field element");
    for (const auto& c : counts_)
        if (c < 0) throw DomainError("negative histogram count");
}

Int TraceHistogram::total() const {
    Int t = 0;
    for (const auto& c : counts_) t += c;
    return t;
}

std::uint32_t TraceHistogram::weighted_sum() const {
    std::uint32_t s = 0;
    for (std::uint32_t b = 0; b < counts_.size(); ++b)
        if (mpz_odd_p(counts_[b].get_mpz_t())) s ^= b;
    return s;
}

std::vector<std::uint32_t> TraceHistogram::support() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t b = 0; b < counts_.size(); ++b)
        if (counts_[b] > 0) out.push_back(b);
    return out;
}

Int histogram_expsum(const TraceHistogram& h, std::uint32_t c) {
    const Field& f = h.field();
    Int s = 0;
    for (std::uint32_t b = 0; b < f.size(); ++b) {
        if (f.lambda(f.mul(c, b)) > 0)
            s += h[b];
        else
            s -= h[b];
    }
    return s;
}

}  // namespace dcm
