#include "nrs2/report.hpp"

#include "json.hpp"

#include <sstream>

namespace nrs2 {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

bool SuiteReport::all_passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    std::size_t n = 0;
    for (const CheckResult& c : checks)
        if (c.status == CheckStatus::fail) ++n;
    return n;
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    std::size_t n = 0;
    for (const SuiteReport& s : suites) n += s.failures();
    return n;
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r, bool with_millis) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const SuiteReport& s : r.suites) {
        nlohmann::ordered_json js;
        js["suite"] = s.suite;
        js["params"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : s.params) js["params"][k] = v;
        js["checks"] = nlohmann::ordered_json::array();
        for (const CheckResult& c : s.checks) {
            nlohmann::ordered_json jc;
            jc["id"] = c.id;
            jc["citation"] = c.citation;
            jc["status"] = to_string(c.status);
            if (!c.counterexample.empty()) jc["counterexample"] = c.counterexample;
            if (with_millis) jc["millis"] = c.millis;
            js["checks"].push_back(std::move(jc));
        }
        out.push_back(std::move(js));
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    bool needs_quotes = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quotes) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string VerificationReport::to_json() const { return report_json(*this, true).dump(2) + "\n"; }

std::string VerificationReport::normalized() const {
    return report_json(*this, false).dump(2) + "\n";
}

std::string VerificationReport::to_csv() const {
    std::ostringstream os;
    os << "suite,check,citation,status,millis,counterexample\n";
    for (const SuiteReport& s : suites)
        for (const CheckResult& c : s.checks)
            os << s.suite << ',' << c.id << ',' << c.citation << ',' << to_string(c.status) << ','
               << c.millis << ',' << csv_escape(c.counterexample) << '\n';
    return os.str();
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    std::size_t checks = 0, passed = 0, skips = 0;
    for (const SuiteReport& s : suites) {
        os << "== " << s.suite;
        if (!s.params.empty()) {
            os << " (";
            bool first = true;
            for (const auto& [k, v] : s.params) {
                if (!first) os << ", ";
                os << k << '=' << v;
                first = false;
            }
            os << ')';
        }
        os << '\n';
        for (const CheckResult& c : s.checks) {
            ++checks;
            if (c.status == CheckStatus::pass) ++passed;
            if (c.status == CheckStatus::skip) ++skips;
            const char* mark = c.status == CheckStatus::pass   ? "PASS"
                               : c.status == CheckStatus::fail ? "FAIL"
                                                               : "skip";
            os << "  [" << mark << "] " << c.id << "  {" << c.citation << "}  " << c.millis
               << " ms\n";
            if (!c.counterexample.empty()) os << "         " << c.counterexample << '\n';
        }
    }
    os << passed << '/' << checks << " checks passed";
    if (skips) os << " (" << skips << " skipped)";
    os << '\n';
    return os.str();
}

}  // namespace nrs2
