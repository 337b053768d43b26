#pragma once

#include <map>
#include <string>
#include <vector>

namespace nrs2 {

enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    std::string citation;  // registry tag naming the verified statement
    CheckStatus status = CheckStatus::pass;
    std::string counterexample;  // first witness on failure, or skip reason
    long long millis = 0;
};

struct SuiteReport {
    std::string suite;
    std::map<std::string, std::string> params;  // key-sorted, hence stable
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::size_t failures() const;
};

struct VerificationReport {
    std::vector<SuiteReport> suites;

    bool all_passed() const;
    std::size_t failures() const;

    std::string to_json() const;  // array of {suite, params, checks:[...]}
    std::string to_csv() const;
    std::string to_text() const;

    // Canonical form for comparing two runs: timing fields removed.
    std::string normalized() const;
};

}  // namespace nrs2
