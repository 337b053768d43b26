// Acceptance gate: runs every verification suite once and folds the results
// into ten pass/fail lines, one per acceptance criterion.  Exits nonzero if
// any criterion fails.  Pass --deep to include the full height-3 tree walk.

#include "nrs2/report.hpp"
#include "nrs2/suites.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

struct Need {
    std::string suite;
    std::string check;  // "*" means every check of the suite
};

struct Criterion {
    int id;
    std::string what;
    std::vector<Need> needs;
    long long millis_budget = -1;
};

}  // namespace

int main(int argc, char** argv) {
    bool deep = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--deep") deep = true;

    nrs2::SuiteOptions opts;
    opts.deep = deep;
    opts.progress = &std::cerr;
    nrs2::VerificationReport rep = nrs2::run_all_suites(opts);

    const std::vector<Criterion> criteria{
        {1,
         "base levels of the raw, reduced and top-layer recurrences match hand-built closed forms",
         {{"raw-orbit", "raw-base-forms"},
          {"raw-orbit", "raw-base-eval-oracle"},
          {"reduced-orbit", "reduced-base-forms"},
          {"lead-orbit", "lead-base-forms"},
          {"tilde-orbit", "tilde-base-pair"}},
         1000},
        {2,
         "u3-degree formula for the reduced orbit holds level by level",
         {{"reduced-orbit", "u3-degree-formula"}}},
        {3,
         "top-layer orbit equals the reduced orbit's leading coefficients and its -1 and 1 "
         "components coincide",
         {{"lead-orbit", "top-layer-agreement"}, {"lead-orbit", "minus-component-collapse"}}},
        {4,
         "error-fraction identities verified at 20 random rational parameter triples",
         {{"raw-orbit", "fraction-identity-symbolic"},
          {"raw-orbit", "fraction-identity-seed-triple"},
          {"raw-orbit", "fraction-identity-degenerate"},
          {"raw-orbit", "fraction-identity-random"}}},
        {5, "ring identity grids complete with zero violations", {{"ring-identities", "*"}}},
        {6, "centered-path pairing facts exhaustive through radius 6", {{"centered-paths", "*"}}},
        {7,
         "ring orbit folds and embeds onto the top-layer polynomials, both components",
         {{"bridge", "bridge-component-0"}, {"bridge", "bridge-component-1"}}},
        {8,
         "signed tree sums reproduce the ring orbit (exhaustive through height 2, height 3 by "
         "census)",
         {{"trees", "tree-vs-ring-small"},
          {"trees", "level3-factored"},
          {"trees", "level3-cancellation"},
          {"trees", "level3-streamed"}}},
        {9,
         "coefficient tables agree along both routes and satisfy the shape properties",
         {{"coeff-tables", "route-agreement"},
          {"coeff-tables", "canonical-reconstruction"},
          {"coeff-tables", "table-properties"}}},
        {10,
         "path partition of the positive tree subset verified with its index pairing",
         {{"partition", "builder-properties"},
          {"partition", "radius-fixtures"},
          {"partition", "pairing-cancellation"}}},
    };

    auto find = [&](const std::string& suite,
                    const std::string& check) -> const nrs2::CheckResult* {
        for (const nrs2::SuiteReport& s : rep.suites) {
            if (s.suite != suite) continue;
            for (const nrs2::CheckResult& c : s.checks)
                if (c.id == check) return &c;
        }
        return nullptr;
    };

    int failed = 0;
    for (const Criterion& crit : criteria) {
        bool ok = true;
        std::string why;
        long long spent = 0;
        std::vector<const nrs2::CheckResult*> results;
        for (const Need& need : crit.needs) {
            if (need.check == "*") {
                bool suite_found = false;
                for (const nrs2::SuiteReport& s : rep.suites)
                    if (s.suite == need.suite) {
                        suite_found = true;
                        for (const nrs2::CheckResult& c : s.checks) results.push_back(&c);
                    }
                if (!suite_found) {
                    ok = false;
                    why = "suite " + need.suite + " missing";
                }
            } else {
                const nrs2::CheckResult* c = find(need.suite, need.check);
                if (!c) {
                    ok = false;
                    why = "check " + need.suite + "/" + need.check + " missing";
                } else {
                    results.push_back(c);
                }
            }
        }
        for (const nrs2::CheckResult* c : results) {
            spent += c->millis;
            if (c->status == nrs2::CheckStatus::pass) continue;
            if (c->status == nrs2::CheckStatus::skip) {
                // the height-3 walk is gated behind --deep; its census stand-in ran
                if (c->id == "level3-streamed" && !deep) continue;
                ok = false;
                why = c->id + " skipped: " + c->counterexample;
                break;
            }
            ok = false;
            why = c->id + ": " + c->counterexample;
            break;
        }
        if (ok && crit.millis_budget >= 0 && spent > crit.millis_budget) {
            ok = false;
            why = "took " + std::to_string(spent) + " ms against a budget of " +
                  std::to_string(crit.millis_budget);
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << crit.id << ((crit.id < 10) ? "  " : " ")
                  << crit.what << '\n';
        if (!ok) {
            std::cout << "      " << why << '\n';
            ++failed;
        }
    }
    std::cout << (10 - failed) << "/10 criteria satisfied\n";
    return failed == 0 ? 0 : 1;
}
