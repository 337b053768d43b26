// Command-line front end: verification suites, coefficient-table export,
// tree listing, and a runner for the two-variable iteration itself.

#include "CLI11.hpp"
#include "json.hpp"

#include "nrs2/ch_rings.hpp"
#include "nrs2/cubic.hpp"
#include "nrs2/err_recurrences.hpp"
#include "nrs2/rational.hpp"
#include "nrs2/report.hpp"
#include "nrs2/rv_trees.hpp"
#include "nrs2/suites.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

int write_out(const std::string& text, const std::string& emit_path) {
    if (emit_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(emit_path);
    if (!f) {
        std::cerr << "cannot open " << emit_path << " for writing\n";
        return 2;
    }
    f << text;
    return 0;
}

std::string rat_str(const nrs2::Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// ---- verify ----

struct VerifyArgs {
    std::vector<std::string> suites;
    int max_n = 6;
    int grid_bound = 0;
    std::uint64_t seed = 20260822ULL;
    bool deep = false;
    bool quiet = false;
    std::string format = "text";
    std::string emit;
};

int run_verify(const VerifyArgs& a) {
    nrs2::SuiteOptions opts;
    opts.max_n = a.max_n;
    opts.grid_bound = a.grid_bound;
    opts.seed = a.seed;
    opts.deep = a.deep;
    opts.progress = a.quiet ? nullptr : &std::cerr;

    nrs2::VerificationReport rep;
    try {
        if (a.suites.empty()) {
            rep = nrs2::run_all_suites(opts);
        } else {
            for (const std::string& name : a.suites) {
                if (opts.progress) *opts.progress << "[suite] " << name << '\n';
                rep.suites.push_back(nrs2::run_suite(name, opts));
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    std::string text;
    if (a.format == "json")
        text = rep.to_json();
    else if (a.format == "csv")
        text = rep.to_csv();
    else
        text = rep.to_text();
    if (int rc = write_out(text, a.emit)) return rc;
    return rep.all_passed() ? 0 : 1;
}

// ---- coeffs ----

struct CoeffArgs {
    int n = 0;
    bool lead = false;
    std::string format = "csv";
    std::string emit;
};

int run_coeffs(const CoeffArgs& a) {
    std::ostringstream out;
    if (!a.lead) {
        auto table = nrs2::coeff_table_paths(a.n);
        if (a.format == "csv") {
            out << "n,index,coefficient\n";
            for (const auto& [k, c] : table) out << a.n << ',' << k << ',' << c << '\n';
        } else if (a.format == "json") {
            ordered_json doc;
            doc["n"] = a.n;
            doc["entries"] = ordered_json::array();
            for (const auto& [k, c] : table)
                doc["entries"].push_back({{"index", k}, {"coefficient", c.str()}});
            out << doc.dump(2) << '\n';
        } else {
            for (const auto& [k, c] : table) out << k << ": " << c << '\n';
        }
    } else {
        auto orbit = nrs2::lead_orbit_poly(a.n);
        if (a.format == "csv") out << "n,component,e1,e2,coefficient\n";
        ordered_json rows = ordered_json::array();
        for (int lvl = 0; lvl <= a.n; ++lvl) {
            const auto& t = orbit[static_cast<std::size_t>(lvl)];
            for (int comp = 0; comp <= 1; ++comp) {
                const nrs2::Poly3& p = comp == 0 ? t.e0 : t.e1;
                std::vector<std::pair<nrs2::Monomial3, nrs2::Rational>> terms(p.terms().begin(),
                                                                              p.terms().end());
                for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
                    const auto& [m, c] = *it;
                    if (a.format == "csv")
                        out << lvl << ',' << comp << ',' << m.e1 << ',' << m.e2 << ','
                            << nrs2::num(c) << '\n';
                    else if (a.format == "json")
                        rows.push_back({{"n", lvl},
                                        {"component", comp},
                                        {"e1", m.e1},
                                        {"e2", m.e2},
                                        {"coefficient", nrs2::num(c).str()}});
                    else
                        out << lvl << ' ' << comp << ' ' << m.e1 << ' ' << m.e2 << ' '
                            << nrs2::num(c) << '\n';
                }
            }
        }
        if (a.format == "json") out << rows.dump(2) << '\n';
    }
    return write_out(out.str(), a.emit);
}

// ---- trees ----

struct TreeArgs {
    int n = 0;
    std::uint64_t limit = 1000000;
    std::string emit;
};

int run_trees(const TreeArgs& a) {
    static constexpr std::array<std::uint64_t, 4> totals{1, 3, 135, 22179825};
    std::uint64_t total = totals[static_cast<std::size_t>(a.n)];
    if (total > a.limit) {
        std::cerr << "height " << a.n << " has " << total << " trees; raise --limit past "
                  << total << " to list them\n";
        return 2;
    }
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!a.emit.empty()) {
        file.open(a.emit);
        if (!file) {
            std::cerr << "cannot open " << a.emit << " for writing\n";
            return 2;
        }
        out = &file;
    }
    nrs2::stream_trees(a.n, [&](const nrs2::RvTree& t) {
        *out << t.str() << '\n';
        return true;
    });
    return 0;
}

// ---- nrs2 ----

struct RunArgs {
    std::string u;
    int steps = 3;
    std::string format = "json";
    std::string emit;
};

int run_iteration(const RunArgs& a) {
    std::array<nrs2::Rational, 3> u;
    {
        std::istringstream in(a.u);
        std::string part;
        std::size_t i = 0;
        while (std::getline(in, part, ',')) {
            if (i >= 3) break;
            try {
                u[i] = nrs2::rational_from_string(part);
            } catch (const std::exception& e) {
                std::cerr << "bad value '" << part << "': " << e.what() << '\n';
                return 2;
            }
            ++i;
        }
        if (i != 3) {
            std::cerr << "--u needs exactly three comma-separated rationals\n";
            return 2;
        }
    }

    std::unique_ptr<nrs2::Cubic> cubic;
    try {
        cubic = std::make_unique<nrs2::Cubic>(u);
    } catch (const std::exception& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return 2;
    }

    std::vector<nrs2::IterState> states{cubic->start()};
    int singular_at = -1;
    for (int n = 0; n < a.steps; ++n) {
        try {
            states.push_back(cubic->step(states.back(), n));
        } catch (const nrs2::SingularJacobian& e) {
            singular_at = e.level();
            break;
        }
    }

    nrs2::UValues<nrs2::Rational> uv = nrs2::rational_u(u[0], u[1], u[2]);
    std::vector<nrs2::ErrTriple<nrs2::Rational>> err{nrs2::orr_base(uv)};
    while (err.back().n + 1 < static_cast<int>(states.size()))
        err.push_back(nrs2::orr_step(err.back(), uv));

    nrs2::IterState alpha = cubic->fixed_point();
    bool all_ok = true;
    auto verdict = [&](std::size_t n, int comp) -> std::string {
        const auto& e = err[n];
        if (e.em1 == nrs2::Rational(0)) return "skipped";
        bool ok = comp == 0 ? alpha.x0 - states[n].x0 == e.e0 / e.em1
                            : alpha.x1 - states[n].x1 == e.e1 / e.em1;
        if (!ok) all_ok = false;
        return ok ? "ok" : "violated";
    };

    std::ostringstream out;
    if (a.format == "json") {
        ordered_json doc;
        doc["u"] = {rat_str(u[0]), rat_str(u[1]), rat_str(u[2])};
        doc["coefficients"] = {rat_str(cubic->a(0)), rat_str(cubic->a(1)), rat_str(cubic->a(2)),
                               rat_str(cubic->a(3))};
        doc["fixed_point"] = {{"x0", rat_str(alpha.x0)}, {"x1", rat_str(alpha.x1)}};
        doc["steps"] = ordered_json::array();
        for (std::size_t n = 0; n < states.size(); ++n)
            doc["steps"].push_back({{"n", n},
                                    {"x0", rat_str(states[n].x0)},
                                    {"x1", rat_str(states[n].x1)},
                                    {"fraction0", verdict(n, 0)},
                                    {"fraction1", verdict(n, 1)}});
        if (singular_at >= 0) doc["singular_at_level"] = singular_at;
        out << doc.dump(2) << '\n';
    } else {
        for (std::size_t n = 0; n < states.size(); ++n)
            out << "n=" << n << " x0=" << rat_str(states[n].x0) << " x1=" << rat_str(states[n].x1)
                << " fraction0=" << verdict(n, 0) << " fraction1=" << verdict(n, 1) << '\n';
        if (singular_at >= 0)
            out << "linearization singular entering level " << singular_at + 1 << '\n';
    }
    if (int rc = write_out(out.str(), a.emit)) return rc;
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for cubic-iteration recurrences"};
    app.require_subcommand(1);

    std::string suite_list;
    for (const std::string& s : nrs2::suite_names())
        suite_list += (suite_list.empty() ? "" : ", ") + s;

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites and emit a report");
    verify->add_option("--suite", va.suites, "suites to run (default all): " + suite_list);
    verify->add_option("--max-n", va.max_n, "deepest recurrence level (default 6)")
        ->check(CLI::Range(0, 6));
    verify->add_option("--grid-bound", va.grid_bound,
                       "override the index bound of the identity grids")
        ->check(CLI::Range(1, 16));
    verify->add_option("--seed", va.seed, "seed for randomized checks");
    verify->add_flag("--deep", va.deep, "include the full height-3 tree walk");
    verify->add_option("--format", va.format, "report format (default text)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--emit", va.emit, "write the report to FILE instead of stdout");
    verify->add_flag("--quiet", va.quiet, "suppress progress lines on stderr");

    CoeffArgs ca;
    CLI::App* coeffs = app.add_subcommand("coeffs", "emit exact coefficient tables");
    coeffs->add_option("--n", ca.n, "recurrence level")->required()->check(CLI::Range(0, 6));
    coeffs->add_flag("--lead", ca.lead,
                     "emit the two-component top-layer tables for levels 0..n instead");
    coeffs->add_option("--format", ca.format, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    coeffs->add_option("--emit", ca.emit, "write to FILE instead of stdout");

    TreeArgs ta;
    CLI::App* trees = app.add_subcommand("trees", "list label trees of a given height");
    trees->add_option("--n", ta.n, "tree height")->required()->check(CLI::Range(0, 3));
    trees->add_option("--limit", ta.limit, "refuse to print more than this many trees");
    trees->add_option("--emit", ta.emit, "write to FILE instead of stdout");

    RunArgs ra;
    CLI::App* runner = app.add_subcommand("nrs2", "run the two-variable iteration on a cubic");
    runner->alias("nrs2-run");
    runner->add_option("--u", ra.u, "three comma-separated rational reciprocal roots, e.g. 1,2,3")
        ->required();
    runner->add_option("--steps", ra.steps, "iteration steps (default 3)")->check(CLI::Range(0, 10));
    runner->add_option("--format", ra.format, "output format (default json)")
        ->check(CLI::IsMember({"json", "text"}));
    runner->add_option("--emit", ra.emit, "write to FILE instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*verify) return run_verify(va);
    if (*coeffs) return run_coeffs(ca);
    if (*trees) return run_trees(ta);
    if (*runner) return run_iteration(ra);
    return 2;
}
