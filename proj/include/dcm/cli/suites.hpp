#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dcm/bigint.hpp"
#include "dcm/cli/report.hpp"

namespace dcm::cli {

struct SuiteOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
    /// (n, q) pairs for the thma suite.
    std::vector<std::pair<int, std::uint32_t>> thma_targets{{1, 8}, {1, 16}, {3, 2}};
    std::vector<unsigned> thma_h{1, 3, 5, 7};
};

/// field, kloosterman, groups, expsum, codes, pless, thma, all.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Appends the suite's checks to the report. "all" runs every suite in
/// order. Library errors such as BudgetExceeded propagate to the caller.
void run_suite(const std::string& name, Report& report, const SuiteOptions& opts);

}  // namespace dcm::cli
