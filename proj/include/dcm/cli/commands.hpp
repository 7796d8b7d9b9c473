#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dcm/bigint.hpp"
#include "dcm/classical.hpp"
#include "dcm/cli/report.hpp"
#include "dcm/gf2r.hpp"

namespace dcm::cli {

/// Flags shared by every command.
struct RunOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
    /// Modulus override as a bit pattern, e.g. 0x19 for x^4 + x^3 + 1.
    std::optional<std::uint32_t> modulus;
    std::optional<std::filesystem::path> cache_dir;
    std::vector<std::string> argv;
};

/// F_q for q a power of two in [2, 2^24]; throws DomainError otherwise.
FieldRef field_for_q(std::uint64_t q, std::optional<std::uint32_t> modulus);

/// Runs a verification suite. Unknown suite names and budget overruns
/// produce a report with status 2.
Report cmd_verify(const std::string& suite, const RunOptions& opts);

/// T1K^h by the code recursion; with compare, also the direct sum and the
/// match verdict.
Report cmd_recursion(int n, std::uint64_t q, unsigned h, bool compare, const RunOptions& opts);

struct HistogramRequest {
    int n = 3;
    int r_coset = 2;
    std::uint64_t q = 2;
    Family family = Family::Orthogonal;
    /// Skip enumeration and emit n(beta) or nhat(beta).
    bool closed_form = false;
    /// Also emit the weight prefix C_0..C_jmax of the histogram.
    std::optional<unsigned> jmax;
};

/// Trace histogram of P sigma_r P by enumeration (through the cache when a
/// directory is given), compared per beta with the closed form when r = n-1
/// and n is odd.
Report cmd_histogram(const HistogramRequest& req, const RunOptions& opts);

/// K(lambda; a) for every a != 0 and the moments MK, T0K, T1K for h <= hmax.
/// Requires q <= 2^10.
Report cmd_tables(std::uint64_t q, unsigned hmax, const RunOptions& opts);

/// Header "a,trace,K" followed by one row per a != 0.
std::string tables_csv(std::uint64_t q, const RunOptions& opts);

}  // namespace dcm::cli
