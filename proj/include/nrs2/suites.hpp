#pragma once

#include "nrs2/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace nrs2 {

struct SuiteOptions {
    int max_n = 6;           // orbit depth ceiling (each suite clamps further)
    int grid_bound = 0;      // 0 = per-identity defaults
    std::uint64_t seed = 20260822;
    bool deep = false;       // enables the height-3 streaming enumeration
    std::ostream* progress = nullptr;
};

// Registered suites in fixed execution order.
std::vector<std::string> suite_names();

// check id -> citation tag; every emitted check resolves its citation here.
const std::map<std::string, std::string>& citation_registry();

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);
VerificationReport run_all_suites(const SuiteOptions& opts);

}  // namespace nrs2
