#include "doctest.h"

#include "nrs2/report.hpp"
#include "nrs2/suites.hpp"

using namespace nrs2;

namespace {
VerificationReport sample(long long millis) {
    VerificationReport rep;
    SuiteReport s;
    s.suite = "demo";
    s.params = {{"bound", "3"}};
    CheckResult a;
    a.id = "first";
    a.citation = "sample-tag";
    a.status = CheckStatus::pass;
    a.millis = millis;
    CheckResult b;
    b.id = "second";
    b.citation = "sample-tag";
    b.status = CheckStatus::fail;
    b.counterexample = "value with, comma and \"quote\"";
    b.millis = millis + 1;
    s.checks = {a, b};
    rep.suites.push_back(s);
    return rep;
}
}  // namespace

TEST_CASE("report aggregation") {
    VerificationReport rep = sample(5);
    CHECK_FALSE(rep.all_passed());
    CHECK(rep.failures() == 1);
    rep.suites[0].checks[1].status = CheckStatus::pass;
    CHECK(rep.all_passed());
}

TEST_CASE("json serialization carries all fields") {
    std::string j = sample(5).to_json();
    CHECK(j.find("\"suite\": \"demo\"") != std::string::npos);
    CHECK(j.find("\"citation\": \"sample-tag\"") != std::string::npos);
    CHECK(j.find("\"millis\"") != std::string::npos);
    CHECK(j.find("counterexample") != std::string::npos);
}

TEST_CASE("csv serialization escapes embedded punctuation") {
    std::string c = sample(5).to_csv();
    CHECK(c.find("suite,check,citation,status,millis,counterexample") == 0);
    CHECK(c.find("\"value with, comma and \"\"quote\"\"\"") != std::string::npos);
}

TEST_CASE("text rendering counts outcomes") {
    VerificationReport rep = sample(5);
    rep.suites[0].checks[1].status = CheckStatus::skip;
    std::string t = rep.to_text();
    CHECK(t.find("1/2 checks passed (1 skipped)") != std::string::npos);
}

TEST_CASE("normalized form is stable across wall-time differences") {
    CHECK(sample(5).normalized() == sample(999).normalized());
    CHECK(sample(5).to_json() != sample(999).to_json());
}

TEST_CASE("every suite is named and every check id carries a registered tag") {
    auto names = suite_names();
    CHECK(names.size() == 12);
    // a cheap suite run exercises the registry lookups in the runner itself
    SuiteOptions opts;
    opts.grid_bound = 2;
    SuiteReport rep = run_suite("centered-paths", opts);
    for (const CheckResult& c : rep.checks) {
        CHECK(citation_registry().count(c.id) == 1);
        CHECK(c.citation == citation_registry().at(c.id));
        CHECK_FALSE(c.citation.empty());
    }
    CHECK(rep.all_passed());
    CHECK_THROWS(run_suite("no-such-suite", opts));
}

TEST_CASE("identical options give byte-identical normalized reports") {
    SuiteOptions opts;
    opts.grid_bound = 2;
    VerificationReport a, b;
    a.suites.push_back(run_suite("centered-paths", opts));
    b.suites.push_back(run_suite("centered-paths", opts));
    CHECK(a.normalized() == b.normalized());
}
