#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppc/oracle.hpp"

namespace ppc {

struct VerifyCheck {
    std::string name;
    std::string range_label;  // which totals lo..hi range over
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool pass = true;
    std::string counterexample;
};

struct VerifyReport {
    std::uint64_t max_total = 0;
    std::uint64_t cap = kDefaultCap;
    std::vector<VerifyCheck> checks;
    bool pass = true;
};

/// Runs the whole suite over both parities up to max_total: brute counts
/// against the closed form, the produced-exactly-once bijection, the thirds
/// census, the fan-out table, and parent_of round trips. Requires
/// 4 <= max_total <= cap. jobs > 1 spreads the per-total work across
/// threads; the report is identical whatever the job count.
VerifyReport run_verification(std::uint64_t max_total, unsigned jobs = 1,
                              std::uint64_t cap = kDefaultCap);

std::string format_report(const VerifyReport& report);

}  // namespace ppc
