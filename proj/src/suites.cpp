#include "nrs2/suites.hpp"

#include "nrs2/ch_rings.hpp"
#include "nrs2/cubic.hpp"
#include "nrs2/err_recurrences.hpp"
#include "nrs2/layered_poly.hpp"
#include "nrs2/poly3.hpp"
#include "nrs2/rv_trees.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nrs2 {

namespace {

// ---------------------------------------------------------------- plumbing

class Runner {
public:
    Runner(SuiteReport& rep, std::ostream* progress) : rep_(rep), progress_(progress) {}

    // body returns empty on pass, else the first counterexample found.
    void check(const std::string& id, const std::function<std::string()>& body) {
        CheckResult c;
        c.id = id;
        c.citation = citation_registry().at(id);
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.counterexample = body();
            c.status = c.counterexample.empty() ? CheckStatus::pass : CheckStatus::fail;
        } catch (const std::exception& e) {
            c.status = CheckStatus::fail;
            c.counterexample = std::string("exception: ") + e.what();
        }
        c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
        if (progress_ && c.status == CheckStatus::fail)
            *progress_ << "    FAIL " << rep_.suite << '/' << id << ": " << c.counterexample
                       << '\n';
        rep_.checks.push_back(std::move(c));
    }

    void skip(const std::string& id, const std::string& reason) {
        CheckResult c;
        c.id = id;
        c.citation = citation_registry().at(id);
        c.status = CheckStatus::skip;
        c.counterexample = reason;
        rep_.checks.push_back(std::move(c));
    }

private:
    SuiteReport& rep_;
    std::ostream* progress_;
};

// Heavy orbits shared across suites, grown on demand.
struct WorkData {
    std::vector<TildeErrPair> tilde;
    std::vector<ErrTriple<Poly3>> lead;
    std::vector<LayeredTriple> layered;
    std::vector<ErrTriple<Poly3>> mrr_full;
    std::vector<ErrTriple<Poly3>> raw;
    std::map<int, std::map<std::int64_t, BigInt>> paths_tables;

    const std::vector<TildeErrPair>& tilde_to(int n) {
        if (tilde.empty()) tilde.push_back(tilde_err_base());
        while (static_cast<int>(tilde.size()) - 1 < n) tilde.push_back(tilde_err_step(tilde.back()));
        return tilde;
    }
    const std::vector<ErrTriple<Poly3>>& lead_to(int n) {
        if (static_cast<int>(lead.size()) - 1 < n) lead = lead_orbit_poly(n);
        return lead;
    }
    const std::vector<LayeredTriple>& layered_to(int n) {
        if (static_cast<int>(layered.size()) - 1 < n)
            layered = mrr_orbit_layered(std::min(n, 3), n, 4);
        return layered;
    }
    const std::vector<ErrTriple<Poly3>>& mrr_full_to(int n) {
        if (static_cast<int>(mrr_full.size()) - 1 < n) mrr_full = mrr_orbit_poly(n);
        return mrr_full;
    }
    const std::vector<ErrTriple<Poly3>>& raw_to(int n) {
        if (static_cast<int>(raw.size()) - 1 < n) raw = orr_orbit_poly(n);
        return raw;
    }
    const std::map<std::int64_t, BigInt>& paths_table(int n) {
        auto it = paths_tables.find(n);
        if (it == paths_tables.end()) it = paths_tables.emplace(n, coeff_table_paths(n)).first;
        return it->second;
    }
};

std::int64_t pow3i(int n) {
    std::int64_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

TildeChVec table_vec(const std::map<std::int64_t, BigInt>& table) {
    TildeChVec v;
    for (const auto& [k, c] : table) v.add(k, c);
    return v;
}

std::string table_str(const std::map<std::int64_t, BigInt>& table, std::size_t limit = 8) {
    std::ostringstream os;
    os << '{';
    std::size_t i = 0;
    for (const auto& [k, c] : table) {
        if (i++) os << ", ";
        if (i > limit) {
            os << "...";
            break;
        }
        os << k << ':' << c;
    }
    os << '}';
    return os.str();
}

// Integer coefficients of a u3-free homogeneous polynomial of degree d,
// indexed by the u2 exponent.
std::vector<BigInt> dense_u12(const Poly3& p, std::int64_t d) {
    std::vector<BigInt> out(static_cast<std::size_t>(d) + 1);
    for (const auto& [m, c] : p.terms()) {
        if (m.e3 != 0) throw std::invalid_argument("dense_u12: term depends on u3");
        if (std::int64_t{m.e1} + m.e2 != d)
            throw std::invalid_argument("dense_u12: degree mismatch");
        if (!is_integer(c)) throw std::invalid_argument("dense_u12: fractional coefficient");
        out[m.e2] = num(c);
    }
    return out;
}

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    std::int64_t in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rat(std::int64_t span = 20, std::int64_t dmax = 12) {
        return Rational(in(-span, span)) / Rational(in(1, dmax));
    }
    Rational rat_nonzero(std::int64_t span = 9, std::int64_t dmax = 6) {
        std::int64_t n = in(-span, span);
        if (n == 0) n = span;
        return Rational(n) / Rational(in(1, dmax));
    }
    Poly3 poly() {
        Poly3 p;
        std::int64_t terms = in(1, 4);
        for (std::int64_t t = 0; t < terms; ++t) {
            std::int64_t n = in(-9, 9);
            if (n == 0) n = 7;
            Monomial3 m{static_cast<std::uint32_t>(in(0, 3)), static_cast<std::uint32_t>(in(0, 3)),
                        static_cast<std::uint32_t>(in(0, 3))};
            p += Poly3(Rational(n) / Rational(in(1, 4)), m);
        }
        return p;
    }
    TildeChVec tvec(std::int64_t idx_bound = 15) {
        TildeChVec v;
        std::int64_t terms = in(1, 4);
        for (std::int64_t t = 0; t < terms; ++t) {
            std::int64_t c = in(-5, 5);
            if (c == 0) c = 3;
            v.add(in(-idx_bound, idx_bound), BigInt(c));
        }
        return v;
    }
    ChVec cvec(std::int64_t idx_bound = 12) {
        ChVec v;
        std::int64_t terms = in(1, 4);
        for (std::int64_t t = 0; t < terms; ++t) {
            std::int64_t c = in(-5, 5);
            if (c == 0) c = 3;
            v.add(in(0, idx_bound), BigInt(c));
        }
        return v;
    }
};

// ------------------------------------------------------------- poly-core

SuiteReport suite_poly_core(const SuiteOptions& o, WorkData&) {
    SuiteReport rep;
    rep.suite = "poly-core";
    rep.params = {{"cases", "1000"}, {"seed", std::to_string(o.seed)}};
    Runner run(rep, o.progress);
    Rng rng(o.seed ^ 0x706f6c79ULL);

    run.check("ring-axioms-random", [&]() -> std::string {
        for (int i = 0; i < 1000; ++i) {
            Poly3 a = rng.poly(), b = rng.poly(), c = rng.poly();
            if (!((a + b) + c == a + (b + c))) return "addition associativity: " + a.str();
            if (!(a + b == b + a)) return "addition commutativity: " + a.str();
            if (!((a * b) * c == a * (b * c))) return "multiplication associativity: " + a.str();
            if (!(a * b == b * a)) return "multiplication commutativity: " + a.str();
            if (!(a * (b + c) == a * b + a * c)) return "distributivity: " + a.str();
            if (!(a + Poly3::zero() == a)) return "additive identity: " + a.str();
            if (!(a * Poly3::one() == a)) return "multiplicative identity: " + a.str();
            if (!(a - a == Poly3::zero())) return "additive inverse: " + a.str();
        }
        return "";
    });

    run.check("eval-homomorphism", [&]() -> std::string {
        for (int i = 0; i < 400; ++i) {
            Poly3 p = rng.poly(), q = rng.poly();
            Rational v1 = rng.rat(), v2 = rng.rat(), v3 = rng.rat();
            if ((p + q).eval(v1, v2, v3) != p.eval(v1, v2, v3) + q.eval(v1, v2, v3))
                return "sum evaluation: " + p.str() + " | " + q.str();
            if ((p * q).eval(v1, v2, v3) != p.eval(v1, v2, v3) * q.eval(v1, v2, v3))
                return "product evaluation: " + p.str() + " | " + q.str();
        }
        Poly3 m = Poly3::u1() * Poly3::u2() * Poly3::u3();
        if (m.eval(Rational(2), Rational(3), Rational(5)) != Rational(30))
            return "monomial evaluation at (2,3,5)";
        if (!(Poly3::zero().eval(Rational(7), Rational(1), Rational(2)) == Rational(0)))
            return "zero evaluation";
        return "";
    });

    run.check("u3-lead-split", [&]() -> std::string {
        for (int i = 0; i < 400; ++i) {
            Poly3 p = rng.poly();
            if (p.is_zero()) continue;
            std::int64_t d = p.deg_u3();
            Poly3 rest =
                p - p.lead_u3().scale_by_monomial(0, 0, static_cast<std::uint32_t>(d));
            if (!rest.is_zero() && rest.deg_u3() >= d)
                return "remainder degree did not drop for " + p.str();
            if (p.lead_u3().depends_on_u3()) return "leading part depends on u3: " + p.str();
        }
        Poly3 sq = Poly3::u1() * Poly3::u1();
        if (sq.deg_u3() != 0) return "u1^2 has u3-degree 0";
        try {
            Poly3::zero().deg_u3();
            return "zero polynomial degree did not signal";
        } catch (const std::exception&) {
        }
        return "";
    });

    run.check("canonical-text-forms", [&]() -> std::string {
        Poly3 h2 = Poly3::u1() * Poly3::u1() + Poly3::u1() * Poly3::u2() + Poly3::u2() * Poly3::u2();
        if (h2.str() != "u1^2 + u1*u2 + u2^2") return "got: " + h2.str();
        if (Poly3::zero().str() != "0") return "zero prints as: " + Poly3::zero().str();
        Poly3 half(Rational(1) / Rational(2), Monomial3{0, 0, 1});
        if (half.str() != "1/2*u3") return "rational coefficient prints as: " + half.str();
        Poly3 diff = Poly3::u1() - Poly3::u2();
        if (diff.str() != "u1 - u2") return "difference prints as: " + diff.str();
        return "";
    });

    run.check("exact-division-roundtrip", [&]() -> std::string {
        for (int i = 0; i < 300; ++i) {
            Poly3 p = rng.poly(), q = rng.poly();
            if (q.is_zero()) continue;
            auto back = (p * q).divide_exact(q);
            if (!back || !(*back == p))
                return "quotient mismatch for " + p.str() + " by " + q.str();
        }
        if (Poly3::u1().divide_exact(Poly3::u2()))
            return "u1 divided exactly by u2";
        return "";
    });
    return rep;
}

// -------------------------------------------------------- ring-identities

SuiteReport suite_ring_identities(const SuiteOptions& o, WorkData&) {
    SuiteReport rep;
    rep.suite = "ring-identities";
    std::int64_t g12 = o.grid_bound > 0 ? o.grid_bound : 12;
    std::int64_t g10 = o.grid_bound > 0 ? o.grid_bound : 10;
    std::int64_t g8 = o.grid_bound > 0 ? o.grid_bound : 8;
    rep.params = {{"grid", std::to_string(g12) + "/" + std::to_string(g10) + "/" + std::to_string(g8)},
                  {"seed", std::to_string(o.seed)}};
    Runner run(rep, o.progress);
    Rng rng(o.seed ^ 0x72696e67ULL);
    auto tg = [](std::int64_t i) { return tilde_gen(i); };

    run.check("fold-map-values", [&]() -> std::string {
        if (tau(2) != 2) return "tau(2)";
        if (tau(-1) != -1) return "tau(-1)";
        if (tau(-4) != 2) return "tau(-4)";
        for (std::int64_t i = -20; i <= 20; ++i) {
            if (tau(tau(i)) != tau(i)) return "tau not idempotent at " + std::to_string(i);
            if (tau(-i - 2) != tau(i)) return "tau mirror broken at " + std::to_string(i);
            if (tau(i) < -1) return "tau below -1 at " + std::to_string(i);
        }
        return "";
    });

    run.check("tilde-product-examples", [&]() -> std::string {
        if (!mul_tilde(tg(-1), tg(5)).is_zero()) return "h~[-1]*h~[5] nonzero";
        if (!(mul_tilde(tg(2), tg(2)) == tg(0) + tg(2) + tg(4)))
            return "h~[2]^2 = " + mul_tilde(tg(2), tg(2)).str();
        TildeChVec want;
        want.add(-1, BigInt(-1));
        want.add(1, BigInt(-1));
        if (!(mul_tilde(tg(-3), tg(0)) == want))
            return "h~[-3]*h~[0] = " + mul_tilde(tg(-3), tg(0)).str();
        return "";
    });

    run.check("ch-product-examples", [&]() -> std::string {
        if (!(mul_ch(ch_gen(1), ch_gen(2)) == ch_gen(1) + ch_gen(3)))
            return "h[1]h[2] = " + mul_ch(ch_gen(1), ch_gen(2)).str();
        for (std::int64_t j = 0; j <= 8; ++j)
            if (!(mul_ch(ch_gen(0), ch_gen(j)) == ch_gen(j)))
                return "h[0] not neutral at j=" + std::to_string(j);
        if (!(mul_ch(ch_gen(2), ch_gen(2)) == ch_gen(0) + ch_gen(2) + ch_gen(4)))
            return "h[2]^2 = " + mul_ch(ch_gen(2), ch_gen(2)).str();
        return "";
    });

    run.check("associativity-generators", [&]() -> std::string {
        for (std::int64_t a = -g12; a <= g12; ++a)
            for (std::int64_t b = -g12; b <= g12; ++b)
                for (std::int64_t c = -g12; c <= g12; ++c) {
                    TildeChVec lhs = mul_tilde(mul_tilde(tg(a), tg(b)), tg(c));
                    TildeChVec rhs = mul_tilde(tg(a), mul_tilde(tg(b), tg(c)));
                    if (!(lhs == rhs))
                        return "tilde (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + "): " + lhs.str() + " vs " + rhs.str();
                }
        for (std::int64_t a = 0; a <= g12; ++a)
            for (std::int64_t b = 0; b <= g12; ++b)
                for (std::int64_t c = 0; c <= g12; ++c)
                    if (!(mul_ch(mul_ch(ch_gen(a), ch_gen(b)), ch_gen(c)) ==
                          mul_ch(ch_gen(a), mul_ch(ch_gen(b), ch_gen(c)))))
                        return "folded (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ")";
        return "";
    });

    run.check("associativity-random", [&]() -> std::string {
        for (int i = 0; i < 1000; ++i) {
            TildeChVec a = rng.tvec(), b = rng.tvec(), c = rng.tvec();
            if (!(mul_tilde(mul_tilde(a, b), c) == mul_tilde(a, mul_tilde(b, c))))
                return "tilde vectors: " + a.str() + " | " + b.str() + " | " + c.str();
            ChVec x = rng.cvec(), y = rng.cvec(), z = rng.cvec();
            if (!(mul_ch(mul_ch(x, y), z) == mul_ch(x, mul_ch(y, z))))
                return "folded vectors: " + x.str() + " | " + y.str() + " | " + z.str();
        }
        return "";
    });

    run.check("fold-hom-generators", [&]() -> std::string {
        for (std::int64_t a = -g12; a <= g12; ++a)
            for (std::int64_t b = -g12; b <= g12; ++b)
                if (!(L_map(mul_tilde(tg(a), tg(b))) == mul_ch(L_map(tg(a)), L_map(tg(b)))))
                    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        return "";
    });

    run.check("fold-hom-random", [&]() -> std::string {
        for (int i = 0; i < 1000; ++i) {
            TildeChVec a = rng.tvec(), b = rng.tvec();
            if (!(L_map(mul_tilde(a, b)) == mul_ch(L_map(a), L_map(b))))
                return a.str() + " | " + b.str();
        }
        return "";
    });

    run.check("kernel-annihilation", [&]() -> std::string {
        std::vector<TildeChVec> gens{tg(-1)};
        for (std::int64_t i = 2; i <= g12; ++i) gens.push_back(tg(-i) + tg(i - 2));
        for (const TildeChVec& k : gens) {
            for (std::int64_t j = -g12; j <= g12; ++j)
                if (!mul_tilde(k, tg(j)).is_zero())
                    return k.str() + " * h~[" + std::to_string(j) + "] = " +
                           mul_tilde(k, tg(j)).str();
            TildeChVec v = rng.tvec();
            if (!mul_tilde(k, v).is_zero()) return k.str() + " * " + v.str();
        }
        return "";
    });

    run.check("telescoping-diagonal", [&]() -> std::string {
        for (std::int64_t a = -g12; a <= g12; ++a)
            for (std::int64_t b = -g12; b <= g12; ++b) {
                TildeChVec lhs = mul_tilde(tg(a), tg(b)) - mul_tilde(tg(a - 1), tg(b - 1));
                if (!(lhs == tg(a + b)))
                    return "(" + std::to_string(a) + "," + std::to_string(b) + "): " + lhs.str();
            }
        return "";
    });

    run.check("telescoping-double-step", [&]() -> std::string {
        for (std::int64_t a = -g12; a <= g12; ++a)
            for (std::int64_t b = -g12; b <= g12; ++b) {
                TildeChVec lhs = mul_tilde(tg(a), tg(b)) - mul_tilde(tg(a - 2), tg(b));
                TildeChVec rhs = tg(b + a) + tg(b - a);
                if (!(lhs == rhs))
                    return "(" + std::to_string(a) + "," + std::to_string(b) + "): " + lhs.str() +
                           " vs " + rhs.str();
            }
        return "";
    });

    run.check("bracket-examples", [&]() -> std::string {
        if (!U_elem(0, 7, -3).is_zero()) return "U(0,7,-3) nonzero";
        if (!(U_elem(2, 0, 0) == tg(-2) + tg(0))) return "U(2,0,0) = " + U_elem(2, 0, 0).str();
        TildeChVec want;
        want.add(-1, BigInt(-1));
        if (!(U_elem(-1, 1, 1) == want)) return "U(-1,1,1) = " + U_elem(-1, 1, 1).str();
        return "";
    });

    run.check("exchange-bracket-even", [&]() -> std::string {
        for (std::int64_t a = -g10; a <= g10; ++a)
            for (std::int64_t b = -g10; b <= g10; ++b)
                for (std::int64_t c = -g10; c <= g10; ++c) {
                    TildeChVec lhs = mul_tilde(tg(a + b), tg(c)) - mul_tilde(tg(b), tg(a + c));
                    if (!(lhs == U_elem(a, b, c)))
                        return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + "): " + lhs.str() + " vs " +
                               U_elem(a, b, c).str();
                }
        return "";
    });

    run.check("exchange-bracket-odd", [&]() -> std::string {
        for (std::int64_t a = -g10; a <= g10; ++a)
            for (std::int64_t b = -g10; b <= g10; ++b)
                for (std::int64_t c = -g10; c <= g10; ++c) {
                    TildeChVec lhs = mul_tilde(tg(b + a) + tg(b - a), tg(c - 1)) -
                                     mul_tilde(tg(b), tg(a + c - 1));
                    if (!(lhs == U_elem(b + 1, a, c)))
                        return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + "): " + lhs.str() + " vs " +
                               U_elem(b + 1, a, c).str();
                }
        return "";
    });

    run.check("bracket-kernel-pair", [&]() -> std::string {
        for (std::int64_t a = -g8; a <= g8; ++a)
            for (std::int64_t b = -g8; b <= g8; ++b)
                for (std::int64_t c1 = -g8; c1 <= g8; ++c1)
                    for (std::int64_t c2 = -g8; c2 <= g8; ++c2)
                        if (!ker_membership(U_elem(a, b, c1) + U_elem(a, c1 + c2 - b, c2)))
                            return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c1) + "," + std::to_string(c2) + ")";
        return "";
    });

    run.check("bracket-kernel-equal-args", [&]() -> std::string {
        for (std::int64_t a = -g8; a <= g8; ++a)
            for (std::int64_t b = -g8; b <= g8; ++b)
                if (!ker_membership(U_elem(a, b, b)))
                    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        return "";
    });

    run.check("shift-operator", [&]() -> std::string {
        if (!(shift(tg(2) + tg(4), -1) == tg(1) + tg(3))) return "downshift of h~[2]+h~[4]";
        for (int i = 0; i < 200; ++i) {
            TildeChVec v = rng.tvec();
            if (!(shift(v, 0) == v)) return "zero shift changed " + v.str();
            if (!(shift(shift(v, -1), 1) == v)) return "shift inverse pair on " + v.str();
            if (!(shift(shift(v, 5), -5) == v)) return "shift five-step pair on " + v.str();
        }
        return "";
    });

    run.check("canonical-form-properties", [&]() -> std::string {
        if (!canonicalize(tg(-2) + tg(0)).is_zero()) return "h~[-2]+h~[0] not flattened";
        TildeChVec m3;
        m3.add(3, BigInt(-1));
        if (!(canonicalize(tg(-5)) == m3)) return "h~[-5] -> " + canonicalize(tg(-5)).str();
        for (int i = 0; i < 500; ++i) {
            TildeChVec v = rng.tvec();
            TildeChVec c = canonicalize(v);
            if (!c.c.empty() && c.c.begin()->first < 0) return "negative index kept: " + c.str();
            if (!(L_map(c) == L_map(v))) return "fold image changed: " + v.str();
            if (!(canonicalize(c) == c)) return "not idempotent: " + v.str();
            if (ker_membership(v) != c.is_zero()) return "kernel test disagrees: " + v.str();
        }
        return "";
    });

    run.check("canonical-injectivity", [&]() -> std::string {
        if (!L_map(tg(-1)).is_zero()) return "fold of h~[-1]";
        ChVec mh1;
        mh1.add(1, BigInt(-1));
        if (!(L_map(tg(-3)) == mh1)) return "fold of h~[-3]";
        if (!(L_map(tg(5)) == ch_gen(5))) return "fold of h~[5]";
        for (int i = 0; i < 500; ++i) {
            TildeChVec c = canonicalize(rng.tvec());
            ChVec img = L_map(c);
            if (img.c.size() != c.c.size()) return "support changed: " + c.str();
            for (const auto& [k, coef] : c.c)
                if (img.coeff(k) != coef) return "coefficient moved: " + c.str();
        }
        return "";
    });

    run.check("embed-examples", [&]() -> std::string {
        Poly3 h2 = Poly3::u1() * Poly3::u1() + Poly3::u1() * Poly3::u2() + Poly3::u2() * Poly3::u2();
        if (!(embed(ch_gen(2), 2) == h2)) return "embed(h[2], 2)";
        if (!(embed(ch_gen(0), 2) == Poly3::u1() * Poly3::u2())) return "embed(h[0], 2)";
        try {
            embed(ch_gen(1), 2);
            return "parity violation not signaled";
        } catch (const std::exception&) {
        }
        try {
            embed(ch_gen(4), 2);
            return "degree violation not signaled";
        } catch (const std::exception&) {
        }
        return "";
    });

    run.check("embed-product-agreement", [&]() -> std::string {
        for (std::int64_t i = 0; i <= g10; ++i)
            for (std::int64_t j = 0; j <= g10; ++j) {
                Poly3 lhs = embed(mul_ch(ch_gen(i), ch_gen(j)), i + j);
                Poly3 rhs = embed(ch_gen(i), i) * embed(ch_gen(j), j);
                if (!(lhs == rhs))
                    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        return "";
    });
    return rep;
}

// --------------------------------------------------------- centered-paths

SuiteReport suite_centered_paths(const SuiteOptions& o, WorkData&) {
    SuiteReport rep;
    rep.suite = "centered-paths";
    std::int64_t bound = o.grid_bound > 0 ? o.grid_bound : 6;
    rep.params = {{"radius_bound", std::to_string(bound)}};
    Runner run(rep, o.progress);

    auto path_of = [](std::int64_t r) {
        std::vector<std::int64_t> own;
        for (std::int64_t i = -r; i <= r; i += 2) own.push_back(i);
        return CenteredPath<std::int64_t>(r, std::move(own));
    };

    run.check("radius-function-examples", [&]() -> std::string {
        if (rho(2, 4, -2, 4) != 6) return "rho(2,4,-2,4)";
        if (rho(2, 4, -2, 0) != 6) return "rho(2,4,-2,0)";
        for (std::int64_t r = 0; r <= 5; ++r)
            if (rho(r, r, -r, r) != 2 * r) return "rho(r,r,-r,r) at r=" + std::to_string(r);
        return "";
    });

    run.check("product-path-radius", [&]() -> std::string {
        for (std::int64_t r1 = 0; r1 <= bound; ++r1)
            for (std::int64_t r2 = 0; r2 <= bound; ++r2)
                for (std::int64_t k = 0; k <= std::min(r1, r2); ++k)
                    if (product_path(path_of(r1), path_of(r2), k).radius() != r1 + r2 - 2 * k)
                        return "(" + std::to_string(r1) + "," + std::to_string(r2) + "," +
                               std::to_string(k) + ")";
        return "";
    });

    run.check("pair-partition", [&]() -> std::string {
        for (std::int64_t r1 = 0; r1 <= bound; ++r1)
            for (std::int64_t r2 = 0; r2 <= bound; ++r2) {
                auto p1 = path_of(r1), p2 = path_of(r2);
                std::map<std::pair<std::int64_t, std::int64_t>, int> hits;
                for (std::int64_t k = 0; k <= std::min(r1, r2); ++k) {
                    auto prod = product_path(p1, p2, k);
                    for (std::int64_t j = -prod.radius(); j <= prod.radius(); j += 2) {
                        auto [x, y] = prod.at(j);
                        hits[{x, y}] += 1;
                        PairLocation loc = locate(r1, r2, x, y);
                        if (loc.k != k || loc.j != j)
                            return "located (" + std::to_string(x) + "," + std::to_string(y) +
                                   ") in path " + std::to_string(loc.k) + " not " +
                                   std::to_string(k);
                    }
                }
                for (std::int64_t x = -r1; x <= r1; x += 2)
                    for (std::int64_t y = -r2; y <= r2; y += 2) {
                        auto it = hits.find({x, y});
                        if (it == hits.end() || it->second != 1)
                            return "(" + std::to_string(x) + "," + std::to_string(y) +
                                   ") covered " + std::to_string(it == hits.end() ? 0 : it->second) +
                                   " times at radii (" + std::to_string(r1) + "," +
                                   std::to_string(r2) + ")";
                    }
            }
        return "";
    });

    run.check("containing-radius", [&]() -> std::string {
        for (std::int64_t r1 = 0; r1 <= bound; ++r1)
            for (std::int64_t r2 = 0; r2 <= bound; ++r2)
                for (std::int64_t x = -r1; x <= r1; x += 2)
                    for (std::int64_t y = -r2; y <= r2; y += 2) {
                        PairLocation loc = locate(r1, r2, x, y);
                        if (r1 + r2 - 2 * loc.k != rho(r1, r2, x, y))
                            return "(" + std::to_string(r1) + "," + std::to_string(r2) + "," +
                                   std::to_string(x) + "," + std::to_string(y) + ")";
                    }
        return "";
    });

    run.check("index-sum", [&]() -> std::string {
        for (std::int64_t r1 = 0; r1 <= bound; ++r1)
            for (std::int64_t r2 = 0; r2 <= bound; ++r2)
                for (std::int64_t x = -r1; x <= r1; x += 2)
                    for (std::int64_t y = -r2; y <= r2; y += 2) {
                        PairLocation loc = locate(r1, r2, x, y);
                        if (loc.j != x + y) return "index off at (" + std::to_string(x) + "," +
                                                   std::to_string(y) + ")";
                        if ((loc.j % 2 + 2) % 2 != ((r1 + r2) % 2 + 2) % 2)
                            return "parity off at (" + std::to_string(x) + "," + std::to_string(y) +
                                   ")";
                    }
        return "";
    });

    run.check("corner-location", [&]() -> std::string {
        for (std::int64_t r1 = 0; r1 <= bound; ++r1)
            for (std::int64_t r2 = 0; r2 <= bound; ++r2) {
                PairLocation loc = locate(r1, r2, -r1, r2);
                if (loc.k != 0 || loc.j != r2 - r1)
                    return "(" + std::to_string(r1) + "," + std::to_string(r2) + ")";
            }
        return "";
    });
    return rep;
}

// ------------------------------------------------------------- mrr-orbit

SuiteReport suite_mrr_orbit(const SuiteOptions& o, WorkData& w) {
    SuiteReport rep;
    rep.suite = "reduced-orbit";
    int deep_n = std::min(o.max_n, 6);
    int full_n = std::min(o.max_n, 3);
    rep.params = {{"max_n", std::to_string(deep_n)}, {"full_n", std::to_string(full_n)}};
    Runner run(rep, o.progress);
    Poly3 U1 = Poly3::u1(), U2 = Poly3::u2(), U3 = Poly3::u3();

    run.check("reduced-base-forms", [&]() -> std::string {
        ErrTriple<Poly3> base = mrr_base_poly();
        if (!(base.e0 == U1 * U1 + U1 * U2 + U2 * U2)) return "component 0: " + base.e0.str();
        if (!(base.e1 == U1 + U2)) return "component 1: " + base.e1.str();
        if (!(base.em1 == Poly3::one() + U3 * (U1 + U2))) return "component -1: " + base.em1.str();
        return "";
    });

    run.check("reduction-pipeline", [&]() -> std::string {
        int top = std::min(o.max_n, 2);
        const auto& raw = w.raw_to(top);
        const auto& red = w.mrr_full_to(std::max(top, 1));
        for (int n = 0; n <= top; ++n) {
            ReductionTrace tr = reduce_raw_level(raw[static_cast<std::size_t>(n)]);
            const auto& want = red[static_cast<std::size_t>(n)];
            if (!(tr.reduced.e0 == want.e0 && tr.reduced.e1 == want.e1 &&
                  tr.reduced.em1 == want.em1))
                return "level " + std::to_string(n) + ": reduced forms differ";
            std::int64_t A = (pow3i(n) - 1) / 2;
            std::int64_t B = (5 * pow3i(n) - 3) / 2;
            std::int64_t C = (std::int64_t{2} << n) - 1;
            std::array<std::int64_t, 3> s_want{A, A + 1, A};
            std::array<std::int64_t, 3> u12_want{B, B, B + 1};
            std::array<std::int64_t, 3> u3_want{C, C, 0};
            if (tr.s_exp != s_want || tr.u12_exp != u12_want || tr.u3_exp != u3_want)
                return "level " + std::to_string(n) + ": stripped exponents off";
        }
        return "";
    });

    run.check("u3-degree-formula", [&]() -> std::string {
        const auto& orbit = w.layered_to(deep_n);
        for (int n = 0; n <= deep_n; ++n) {
            const LayeredTriple& t = orbit[static_cast<std::size_t>(n)];
            std::int64_t want01 = 2 * (pow3i(n) - (std::int64_t{1} << n));
            std::int64_t wantm = 2 * pow3i(n) - 1;
            if (t.e0.deg3() != want01)
                return "level " + std::to_string(n) + " component 0: " +
                       std::to_string(t.e0.deg3()) + " != " + std::to_string(want01);
            if (t.e1.deg3() != want01)
                return "level " + std::to_string(n) + " component 1: " +
                       std::to_string(t.e1.deg3()) + " != " + std::to_string(want01);
            if (t.em1.deg3() != wantm)
                return "level " + std::to_string(n) + " component -1: " +
                       std::to_string(t.em1.deg3()) + " != " + std::to_string(wantm);
        }
        return "";
    });

    run.check("weighted-homogeneity", [&]() -> std::string {
        const auto& full = w.mrr_full_to(full_n);
        for (int n = 0; n <= full_n; ++n) {
            const auto& t = full[static_cast<std::size_t>(n)];
            auto weight_of = [](const Poly3& p, std::int64_t want) -> bool {
                for (const auto& [m, c] : p.terms())
                    if (std::int64_t{m.e1} + m.e2 - m.e3 != want) return false;
                return true;
            };
            std::int64_t w0 = std::int64_t{2} << n;
            if (!weight_of(t.e0, w0)) return "level " + std::to_string(n) + " component 0";
            if (!weight_of(t.e1, w0 - 1)) return "level " + std::to_string(n) + " component 1";
            if (!weight_of(t.em1, 0)) return "level " + std::to_string(n) + " component -1";
        }
        const auto& orbit = w.layered_to(deep_n);
        for (int n = 0; n <= deep_n; ++n) {
            const LayeredTriple& t = orbit[static_cast<std::size_t>(n)];
            std::int64_t w0 = std::int64_t{2} << n;
            if (t.e0.weight() != w0 || t.e1.weight() != w0 - 1 || t.em1.weight() != 0)
                return "tracked weights off at level " + std::to_string(n);
        }
        return "";
    });

    run.check("mirror-symmetry", [&]() -> std::string {
        const auto& full = w.mrr_full_to(full_n);
        for (int n = 0; n <= full_n; ++n) {
            const auto& t = full[static_cast<std::size_t>(n)];
            if (!(t.e0.swap_u1_u2() == t.e0 && t.e1.swap_u1_u2() == t.e1 &&
                  t.em1.swap_u1_u2() == t.em1))
                return "swap changes level " + std::to_string(n);
        }
        const auto& orbit = w.layered_to(deep_n);
        for (int n = 0; n <= deep_n; ++n) {
            const LayeredTriple& t = orbit[static_cast<std::size_t>(n)];
            if (!t.e0.layers_palindromic() || !t.e1.layers_palindromic() ||
                !t.em1.layers_palindromic())
                return "layer rows not palindromic at level " + std::to_string(n);
        }
        return "";
    });

    run.check("layered-vs-direct", [&]() -> std::string {
        const auto& full = w.mrr_full_to(full_n);
        const auto& orbit = w.layered_to(deep_n);
        for (int n = 0; n <= full_n; ++n) {
            const auto& t = full[static_cast<std::size_t>(n)];
            const LayeredTriple& lt = orbit[static_cast<std::size_t>(n)];
            if (!(lt.e0 == LayeredPoly::from_poly3(t.e0) && lt.e1 == LayeredPoly::from_poly3(t.e1) &&
                  lt.em1 == LayeredPoly::from_poly3(t.em1)))
                return "representations split at level " + std::to_string(n);
            if (!(lt.e0.to_poly3() == t.e0)) return "roundtrip differs at level " + std::to_string(n);
        }
        return "";
    });
    return rep;
}

// ------------------------------------------------------------ lead-orbit

SuiteReport suite_lead_orbit(const SuiteOptions& o, WorkData& w) {
    SuiteReport rep;
    rep.suite = "lead-orbit";
    int top = std::min(o.max_n, 6);
    int full_n = std::min(o.max_n, 3);
    rep.params = {{"max_n", std::to_string(top)}};
    Runner run(rep, o.progress);
    Poly3 U1 = Poly3::u1(), U2 = Poly3::u2();

    run.check("lead-base-forms", [&]() -> std::string {
        ErrTriple<Poly3> base = lead_base(poly_u2());
        if (!(base.e0 == U1 * U1 + U1 * U2 + U2 * U2)) return "component 0: " + base.e0.str();
        if (!(base.e1 == U1 + U2)) return "component 1: " + base.e1.str();
        if (!(base.em1 == U1 + U2)) return "component -1: " + base.em1.str();
        return "";
    });

    run.check("top-layer-agreement", [&]() -> std::string {
        const auto& leads = w.lead_to(top);
        const auto& full = w.mrr_full_to(full_n);
        for (int n = 0; n <= full_n; ++n) {
            ErrTriple<Poly3> lt = top_layer(full[static_cast<std::size_t>(n)]);
            const auto& ln = leads[static_cast<std::size_t>(n)];
            if (!(lt.e0 == ln.e0 && lt.e1 == ln.e1 && lt.em1 == ln.em1))
                return "level " + std::to_string(n) + " (direct form)";
        }
        const auto& orbit = w.layered_to(top);
        for (int n = full_n + 1; n <= top; ++n) {
            const LayeredTriple& t = orbit[static_cast<std::size_t>(n)];
            const auto& ln = leads[static_cast<std::size_t>(n)];
            auto agree = [](const LayeredPoly& lp, const Poly3& p) {
                return lp.top_layer() == dense_u12(p, lp.deg3() + lp.weight());
            };
            if (!agree(t.e0, ln.e0) || !agree(t.e1, ln.e1) || !agree(t.em1, ln.em1))
                return "level " + std::to_string(n) + " (layered form)";
        }
        return "";
    });

    run.check("minus-component-collapse", [&]() -> std::string {
        const auto& leads = w.lead_to(top);
        for (int n = 0; n <= top; ++n)
            if (!(leads[static_cast<std::size_t>(n)].em1 == leads[static_cast<std::size_t>(n)].e1))
                return "level " + std::to_string(n);
        return "";
    });

    run.check("two-component-form", [&]() -> std::string {
        const auto& leads = w.lead_to(top);
        LeadPair<Poly3> pair = lead_pair_base(poly_u2());
        for (int n = 0; n <= top; ++n) {
            const auto& ln = leads[static_cast<std::size_t>(n)];
            if (!(pair.e0 == ln.e0 && pair.e1 == ln.e1)) return "level " + std::to_string(n);
            if (n < top) pair = lead_pair_step(pair, poly_u2());
        }
        return "";
    });

    run.check("coefficient-row-fixture", [&]() -> std::string {
        auto rows = lead_coeff_rows(1);
        std::vector<BigInt> want0{BigInt(1), BigInt(1), BigInt(1)};
        std::vector<BigInt> want1{BigInt(1), BigInt(2), BigInt(3), BigInt(3),
                                  BigInt(3), BigInt(2), BigInt(1)};
        if (rows.size() != 2 || rows[0] != want0 || rows[1] != want1)
            return "rows for levels 0..1 are off";
        return "";
    });
    return rep;
}

// ----------------------------------------------------------- tilde-orbit

SuiteReport suite_tilde_orbit(const SuiteOptions& o, WorkData& w) {
    SuiteReport rep;
    rep.suite = "tilde-orbit";
    int top = std::min(o.max_n, 6);
    rep.params = {{"max_n", std::to_string(top)}};
    Runner run(rep, o.progress);

    run.check("tilde-base-pair", [&]() -> std::string {
        TildeErrPair base = tilde_err_base();
        if (!(base.e0 == tilde_gen(2))) return "component 0: " + base.e0.str();
        if (!(base.e1 == tilde_gen(1))) return "component 1: " + base.e1.str();
        return "";
    });

    run.check("tilde-level-one", [&]() -> std::string {
        const auto& orbit = w.tilde_to(std::max(top, 1));
        TildeChVec e0 = tilde_gen(2) + tilde_gen(4) + tilde_gen(6);
        TildeChVec e1 = tilde_gen(1) + tilde_gen(3) + tilde_gen(5);
        if (!(orbit[1].e0 == e0)) return "component 0: " + orbit[1].e0.str();
        if (!(orbit[1].e1 == e1)) return "component 1: " + orbit[1].e1.str();
        if (!(orbit[1].e1 == shift(orbit[1].e0, -1))) return "downshift relation at level 1";
        return "";
    });

    run.check("tilde-level-two-canonical", [&]() -> std::string {
        const auto& orbit = w.tilde_to(std::max(top, 2));
        const std::vector<std::pair<std::int64_t, std::int64_t>> want{
            {0, 3}, {2, 10}, {4, 17}, {6, 23}, {8, 25},
            {10, 23}, {12, 17}, {14, 10}, {16, 4}, {18, 1}};
        TildeChVec expect;
        for (auto [k, c] : want) expect.add(k, BigInt(c));
        if (!(orbit[2].e0 == expect)) return "level 2: " + orbit[2].e0.str();
        return "";
    });

    run.check("shifted-pair-relation", [&]() -> std::string {
        const auto& orbit = w.tilde_to(top);
        for (int n = 0; n <= top; ++n) {
            TildeChVec full = table_vec(w.paths_table(n));
            TildeChVec want = canonicalize(shift(full, -1));
            if (!(orbit[static_cast<std::size_t>(n)].e1 == want))
                return "level " + std::to_string(n) + ": " +
                       orbit[static_cast<std::size_t>(n)].e1.str() + " vs " + want.str();
        }
        return "";
    });
    return rep;
}

// ---------------------------------------------------------------- bridge

SuiteReport suite_bridge(const SuiteOptions& o, WorkData& w) {
    SuiteReport rep;
    rep.suite = "bridge";
    int top = std::min(o.max_n, 5);
    rep.params = {{"max_n", std::to_string(top)}};
    Runner run(rep, o.progress);

    run.check("bridge-component-0", [&]() -> std::string {
        const auto& tilde = w.tilde_to(top);
        const auto& leads = w.lead_to(top);
        for (int n = 0; n <= top; ++n) {
            Poly3 got = embed(L_map(tilde[static_cast<std::size_t>(n)].e0), 2 * pow3i(n));
            if (!(got == leads[static_cast<std::size_t>(n)].e0))
                return "level " + std::to_string(n);
        }
        return "";
    });

    run.check("bridge-component-1", [&]() -> std::string {
        const auto& tilde = w.tilde_to(top);
        const auto& leads = w.lead_to(top);
        for (int n = 0; n <= top; ++n) {
            Poly3 got = embed(L_map(tilde[static_cast<std::size_t>(n)].e1), 2 * pow3i(n) - 1);
            if (!(got == leads[static_cast<std::size_t>(n)].e1))
                return "level " + std::to_string(n);
        }
        return "";
    });
    return rep;
}

// ---------------------------------------------------------- newton-cubic

SuiteReport suite_newton_cubic(const SuiteOptions& o, WorkData&) {
    SuiteReport rep;
    rep.suite = "newton-cubic";
    rep.params = {{"difference_states", "100"}, {"seed", std::to_string(o.seed)}};
    Runner run(rep, o.progress);
    Rng rng(o.seed ^ 0x6e657774ULL);

    auto random_cubic = [&]() -> Cubic {
        for (;;) {
            std::array<Rational, 3> u{rng.rat_nonzero(), rng.rat_nonzero(), rng.rat_nonzero()};
            try {
                return Cubic(u);
            } catch (const std::exception&) {
            }
        }
    };

    run.check("input-validation", [&]() -> std::string {
        try {
            Cubic({Rational(0), Rational(1), Rational(2)});
            return "zero reciprocal root accepted";
        } catch (const std::exception&) {
        }
        try {
            Cubic({Rational(1), Rational(-1), Rational(0)});
            return "vanishing linear coefficient accepted";
        } catch (const std::exception&) {
        }
        Cubic ok({Rational(1), Rational(2), Rational(3)});
        if (ok.a(0) != Rational(1) || ok.a(1) != Rational(-6) || ok.a(2) != Rational(11) ||
            ok.a(3) != Rational(-6))
            return "coefficients of (1,2,3) are off";
        return "";
    });

    run.check("aux-map-examples", [&]() -> std::string {
        Cubic ones({Rational(1), Rational(1), Rational(1)});
        auto [f0, f1] = ones.aux({Rational(0), Rational(0)});
        if (f1 != Rational(-1)) return "second component at origin: " + rat_str(f1);
        if (f0 != Rational(-1)) return "first component at origin: " + rat_str(f0);
        for (int i = 0; i < 50; ++i) {
            Cubic c = random_cubic();
            Rational y = rng.rat();
            auto [g0, g1] = c.aux({Rational(0), y});
            if (g1 != y + c.a(1) / c.a(2))
                return "second component not affine in x1 at x0 = 0";
        }
        return "";
    });

    run.check("aux-zero-at-fixed-point", [&]() -> std::string {
        for (int i = 0; i < 50; ++i) {
            Cubic c = random_cubic();
            auto [f0, f1] = c.aux(c.fixed_point());
            if (f0 != Rational(0) || f1 != Rational(0))
                return "not a zero at the fixed point, u = (" + rat_str(c.u()[0]) + "," +
                       rat_str(c.u()[1]) + "," + rat_str(c.u()[2]) + ")";
        }
        return "";
    });

    run.check("jacobian-at-origin", [&]() -> std::string {
        for (int i = 0; i < 50; ++i) {
            Cubic c = random_cubic();
            auto J = c.jacobian({Rational(0), Rational(0)});
            Rational want01 = c.a(0) * c.a(3) / (c.a(1) * c.a(2));
            if (J[0] != Rational(1) || J[1] != want01 || J[2] != Rational(0) ||
                J[3] != Rational(1))
                return "origin matrix off";
            if (c.jacobian_det({Rational(0), Rational(0)}) != Rational(1))
                return "origin determinant not 1";
        }
        return "";
    });

    run.check("jacobian-difference-oracle", [&]() -> std::string {
        // The auxiliary map is quadratic, so the centred difference at any
        // rational h is not merely second-order accurate: it is exact.
        Rational h = Rational(1) / Rational(1024);
        auto fd_check = [&](const Cubic& c, const IterState& s) -> bool {
            auto J = c.jacobian(s);
            auto at = [&](const Rational& x0, const Rational& x1) {
                return c.aux({x0, x1});
            };
            Rational d00 = (at(s.x0 + h, s.x1).first - at(s.x0 - h, s.x1).first) / (2 * h);
            Rational d01 = (at(s.x0, s.x1 + h).first - at(s.x0, s.x1 - h).first) / (2 * h);
            Rational d10 = (at(s.x0 + h, s.x1).second - at(s.x0 - h, s.x1).second) / (2 * h);
            Rational d11 = (at(s.x0, s.x1 + h).second - at(s.x0, s.x1 - h).second) / (2 * h);
            return d00 == J[0] && d01 == J[1] && d10 == J[2] && d11 == J[3];
        };
        Cubic seed({Rational(1), Rational(2), Rational(3)});
        if (!fd_check(seed, {Rational(1), Rational(1)})) return "seed case (1,2,3) at (1,1)";
        for (int i = 0; i < 100; ++i) {
            Cubic c = random_cubic();
            IterState s{rng.rat(), rng.rat()};
            if (!fd_check(c, s))
                return "state (" + rat_str(s.x0) + "," + rat_str(s.x1) + ")";
        }
        return "";
    });

    run.check("fixed-point-step", [&]() -> std::string {
        for (int i = 0; i < 30; ++i) {
            Cubic c = random_cubic();
            IterState fp = c.fixed_point();
            try {
                if (!(c.step(fp) == fp)) return "fixed point moved";
            } catch (const SingularJacobian&) {
                // a singular linearization at the fixed point is reported, not hidden
                continue;
            }
        }
        return "";
    });

    run.check("deterministic-step", [&]() -> std::string {
        Cubic c({Rational(1), Rational(2), Rational(3)});
        auto a = c.iterate(4), b = c.iterate(4);
        if (a.size() != b.size()) return "orbit lengths differ";
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == b[i])) return "orbit differs at step " + std::to_string(i);
        return "";
    });

    run.check("singular-jacobian-signaled", [&]() -> std::string {
        Cubic c({Rational(1), Rational(2), Rational(3)});
        IterState bad{Rational(0), Rational(-121) / Rational(6)};
        if (c.jacobian_det(bad) != Rational(0)) return "constructed state is not singular";
        try {
            c.step(bad, 7);
            return "singular step did not signal";
        } catch (const SingularJacobian& e) {
            if (e.level() != 7 || !(e.state() == bad)) return "error payload incomplete";
        }
        return "";
    });
    return rep;
}

// ------------------------------------------------------------- err-orbit

struct FracProbe {
    int checked = 0;
    int skipped = 0;
    std::string violation;  // empty when the identities held wherever defined
    std::string note;
};

FracProbe errfrac_probe(const std::array<Rational, 3>& u, int n_max) {
    FracProbe out;
    Cubic cubic(u);
    UValues<Rational> uv = rational_u(u[0], u[1], u[2]);
    std::vector<ErrTriple<Rational>> orbit{orr_base(uv)};
    while (orbit.back().n < n_max) orbit.push_back(orr_step(orbit.back(), uv));
    std::vector<IterState> states{cubic.start()};
    for (int n = 0; n < n_max; ++n) {
        try {
            states.push_back(cubic.step(states.back(), n));
        } catch (const SingularJacobian& e) {
            out.note = "linearization singular entering level " + std::to_string(e.level() + 1);
            break;
        }
    }
    Rational alpha0 = (u[0] + u[1]) / (u[0] * u[1]);
    Rational alpha1 = (u[0] + u[1] + u[2]) / (u[0] * u[1]);
    for (std::size_t n = 0; n < states.size(); ++n) {
        const ErrTriple<Rational>& e = orbit[n];
        if (e.em1 == Rational(0)) {
            ++out.skipped;
            continue;
        }
        bool ok0 = alpha0 - states[n].x0 == e.e0 / e.em1;
        bool ok1 = alpha1 - states[n].x1 == e.e1 / e.em1;
        if (!ok0 || !ok1) {
            out.violation = "level " + std::to_string(n) + " at u = (" + rat_str(u[0]) + "," +
                            rat_str(u[1]) + "," + rat_str(u[2]) + ")";
            return out;
        }
        ++out.checked;
    }
    return out;
}

SuiteReport suite_err_orbit(const SuiteOptions& o, WorkData& w) {
    SuiteReport rep;
    rep.suite = "raw-orbit";
    int frac_n = std::min(o.max_n, 4);
    rep.params = {{"fraction_levels", std::to_string(frac_n)},
                  {"random_points", "20"},
                  {"seed", std::to_string(o.seed)}};
    Runner run(rep, o.progress);
    Rng rng(o.seed ^ 0x65727273ULL);
    Poly3 U1 = Poly3::u1(), U2 = Poly3::u2(), U3 = Poly3::u3();

    run.check("raw-base-forms", [&]() -> std::string {
        ErrTriple<Poly3> base = orr_base(poly_u());
        Poly3 s = U1 + U2 + U3;
        Poly3 e2 = U1 * U2 + U1 * U3 + U2 * U3;
        if (!(base.e0 == (U1 * U1 + U1 * U2 + U2 * U2) * U3)) return "component 0: " + base.e0.str();
        if (!(base.e1 == (U1 + U2) * U3 * s)) return "component 1: " + base.e1.str();
        if (!(base.em1 == U1 * U2 * e2)) return "component -1: " + base.em1.str();
        return "";
    });

    run.check("raw-base-eval-oracle", [&]() -> std::string {
        ErrTriple<Poly3> base = orr_base(poly_u());
        Rational one(1);
        if (base.em1.eval(one, one, one) != Rational(3)) return "component -1 at (1,1,1)";
        if (base.e0.eval(one, one, one) + base.e1.eval(one, one, one) != Rational(9))
            return "component sum at (1,1,1)";
        // term-by-term convolution, independent of the production multiply
        Poly3 naive;
        for (const auto& [ma, ca] : base.e1.terms())
            for (const auto& [mb, cb] : base.em1.terms())
                naive += Poly3(ca * cb, Monomial3{ma.e1 + mb.e1, ma.e2 + mb.e2, ma.e3 + mb.e3});
        if (!(naive == base.e1 * base.em1)) return "product differs from convolution";
        return "";
    });

    run.check("scalar-orbit-at-ones", [&]() -> std::string {
        UValues<Rational> ones = rational_u(Rational(1), Rational(1), Rational(1));
        std::vector<ErrTriple<Rational>> orbit{orr_base(ones)};
        for (int n = 0; n < 3; ++n) orbit.push_back(orr_step(orbit.back(), ones));
        if (orbit[1].e0 != Rational(108) || orbit[1].e1 != Rational(243) ||
            orbit[1].em1 != Rational(189))
            return "level 1 = (" + rat_str(orbit[1].e0) + "," + rat_str(orbit[1].e1) + "," +
                   rat_str(orbit[1].em1) + ")";
        const auto& poly = w.raw_to(2);
        for (int n = 0; n <= 2; ++n) {
            const auto& p = poly[static_cast<std::size_t>(n)];
            Rational one(1);
            if (p.e0.eval(one, one, one) != orbit[static_cast<std::size_t>(n)].e0 ||
                p.e1.eval(one, one, one) != orbit[static_cast<std::size_t>(n)].e1 ||
                p.em1.eval(one, one, one) != orbit[static_cast<std::size_t>(n)].em1)
                return "polynomial orbit disagrees with scalars at level " + std::to_string(n);
        }
        return "";
    });

    run.check("fraction-identity-symbolic", [&]() -> std::string {
        Poly3 lhs = (U1 + U2) * elem_sym2() - U1 * U2 * elem_sym1();
        Poly3 rhs = U3 * (U1 * U1 + U1 * U2 + U2 * U2);
        if (!(lhs == rhs)) return "base identity: " + lhs.str();
        return "";
    });

    run.check("fraction-identity-seed-triple", [&]() -> std::string {
        FracProbe p = errfrac_probe({Rational(1), Rational(2), Rational(3)}, std::min(frac_n, 3));
        if (!p.violation.empty()) return p.violation;
        if (p.checked < std::min(frac_n, 3) + 1)
            return "only " + std::to_string(p.checked) + " levels checked (" + p.note + ")";
        return "";
    });

    run.check("fraction-identity-degenerate", [&]() -> std::string {
        for (auto& u : std::vector<std::array<Rational, 3>>{
                 {Rational(1), Rational(1), Rational(2)}, {Rational(2), Rational(2), Rational(3)}}) {
            FracProbe p = errfrac_probe(u, std::min(frac_n, 3));
            if (!p.violation.empty()) return p.violation;
        }
        return "";
    });

    run.check("fraction-identity-random", [&]() -> std::string {
        int done = 0, skipped_levels = 0;
        while (done < 20) {
            std::array<Rational, 3> u{rng.rat_nonzero(), rng.rat_nonzero(), rng.rat_nonzero()};
            if (u[0] == u[1] || u[0] == u[2] || u[1] == u[2]) continue;
            try {
                Cubic{u};
            } catch (const std::exception&) {
                continue;
            }
            FracProbe p = errfrac_probe(u, frac_n);
            if (!p.violation.empty()) return p.violation;
            skipped_levels += p.skipped;
            ++done;
        }
        // vanishing denominators are tolerated per level, never silently hidden
        if (skipped_levels > 0 && o.progress)
            *o.progress << "    note: " << skipped_levels << " levels skipped for zero denominators\n";
        return "";
    });
    return rep;
}

// ------------------------------------------------------------------ trees

SuiteReport suite_trees(const SuiteOptions& o, WorkData& w) {
    SuiteReport rep;
    rep.suite = "trees";
    rep.params = {{"exhaustive_n", "2"}, {"deep", o.deep ? "true" : "false"}};
    Runner run(rep, o.progress);

    run.check("enumeration-counts", [&]() -> std::string {
        if (enumerate_trees(0).size() != 1) return "height 0";
        auto l1 = enumerate_trees(1);
        if (l1.size() != 3) return "height 1 count " + std::to_string(l1.size());
        for (std::size_t i = 0; i < 3; ++i)
            if (l1[i].val() != static_cast<std::int64_t>(2 * i + 2))
                return "height 1 labels not 2,4,6";
        if (enumerate_trees(2).size() != 135)
            return "height 2 count " + std::to_string(enumerate_trees(2).size());
        return "";
    });

    run.check("statistics-examples", [&]() -> std::string {
        RvTree leaf = RvTree::leaf(2);
        if (leaf.rad() != 0 || leaf.sgn() != 1 || leaf.ind() != 0) return "leaf statistics";
        for (const RvTree& t : enumerate_trees(1)) {
            if (t.ind() != t.val() - 4) return "height-1 index of " + t.str();
            if (t.sgn() != 1) return "height-1 sign of " + t.str();
            if (t.rad() != 2) return "height-1 radius of " + t.str();
        }
        return "";
    });

    run.check("serialization-roundtrip", [&]() -> std::string {
        for (const RvTree& t : enumerate_trees(2))
            if (!(RvTree::parse(t.str()) == t)) return "roundtrip of " + t.str();
        if (RvTree::parse("2").str() != "2") return "leaf roundtrip";
        for (const std::string& bad : {"(2", "3", "(2 2 2)", "(4 2 2 2"})
            try {
                RvTree::parse(bad);
                return "accepted malformed input: " + bad;
            } catch (const std::exception&) {
            }
        return "";
    });

    run.check("mirror-involution", [&]() -> std::string {
        for (int n = 0; n <= 2; ++n) {
            std::int64_t total = std::int64_t{2} << (n + 1);
            for (const RvTree& t : enumerate_trees(n)) {
                RvTree m = inv(t);
                if (m.height() != t.height()) return "height changed: " + t.str();
                if (!(inv(m) == t)) return "not an involution: " + t.str();
                if (t.val() + m.val() != total) return "value sum off: " + t.str();
                if (!t.is_leaf() && !(m.child(2) == t.child(2)))
                    return "middle subtree changed: " + t.str();
            }
        }
        auto l1 = enumerate_trees(1);
        if (!(inv(l1[0]) == l1[2]) || !(inv(l1[2]) == l1[0]) || !(inv(l1[1]) == l1[1]))
            return "height-1 swap pattern";
        if (!(inv(RvTree::leaf(2)) == RvTree::leaf(2))) return "height-0 identity";
        return "";
    });

    run.check("plus-subset-small", [&]() -> std::string {
        for (const RvTree& t : enumerate_trees(1))
            if (!is_plus(t)) return "height-1 tree excluded: " + t.str();
        std::size_t plus2 = 0;
        for (const RvTree& t : enumerate_trees(2))
            if (is_plus(t)) ++plus2;
        if (plus2 != 135) return "height-2 plus count " + std::to_string(plus2);
        return "";
    });

    run.check("signed-sums-small", [&]() -> std::string {
        TreeSums s0 = tree_sums(0);
        if (!(s0.signed_sum == tilde_gen(2))) return "height 0: " + s0.signed_sum.str();
        TreeSums s1 = tree_sums(1);
        if (!(s1.signed_sum == tilde_gen(2) + tilde_gen(4) + tilde_gen(6)))
            return "height 1: " + s1.signed_sum.str();
        if (s0.total != 1 || s1.total != 3) return "totals off";
        return "";
    });

    run.check("tree-vs-ring-small", [&]() -> std::string {
        const auto& tilde = w.tilde_to(2);
        for (int n = 0; n <= 2; ++n) {
            TreeSums s = tree_sums(n);
            if (!(L_map(s.signed_sum) == L_map(tilde[static_cast<std::size_t>(n)].e0)))
                return "folded images differ at height " + std::to_string(n);
        }
        return "";
    });

    run.check("first-negative-sign", [&]() -> std::string {
        for (int n = 0; n <= 2; ++n)
            for (const RvTree& t : enumerate_trees(n))
                if (t.sgn() != 1) return "unexpected negative sign at height " +
                                         std::to_string(n) + ": " + t.str();
        auto l1 = enumerate_trees(1);
        RvTree t2 = RvTree::node(-2, l1[0], l1[2], l1[0]);
        RvTree t1 = RvTree::node(2, l1[0], l1[0], l1[0]);
        RvTree witness = RvTree::node(4, t1, t2, t1);
        if (witness.sgn() != -1) return "height-3 witness has sign " + std::to_string(witness.sgn());
        return "";
    });

    run.check("shifted-pair-by-trees", [&]() -> std::string {
        const auto& tilde = w.tilde_to(2);
        for (int n = 0; n <= 2; ++n) {
            TreeSums s = tree_sums(n);
            TildeChVec want = canonicalize(shift(s.signed_sum, -1));
            if (!(tilde[static_cast<std::size_t>(n)].e1 == want))
                return "height " + std::to_string(n);
        }
        return "";
    });

    run.check("level3-factored", [&]() -> std::string {
        TreeSums f = tree_sums_level3_factored();
        if (f.total != 22179825ULL) return "total " + std::to_string(f.total);
        if (f.plus_count != 22143375ULL) return "plus count " + std::to_string(f.plus_count);
        const auto& tilde = w.tilde_to(3);
        if (!(L_map(f.signed_sum) == L_map(tilde[3].e0)))
            return "folded height-3 sum differs from the recurrence";
        if (!(f.plus_sum == table_vec(w.paths_table(3))))
            return "plus sum differs from the path census";
        return "";
    });

    run.check("level3-cancellation", [&]() -> std::string {
        TreeSums f = tree_sums_level3_factored();
        if (!(f.signed_sum == f.plus_sum))
            return "signed sum and plus sum differ: " + f.signed_sum.str();
        return "";
    });

    if (o.deep) {
        run.check("level3-streamed", [&]() -> std::string {
            TreeSums f = tree_sums_level3_factored();
            auto progress = [&](std::uint64_t seen) {
                if (o.progress) *o.progress << "    streamed " << seen << " trees\n";
            };
            TreeSums s = tree_sums_level3_streamed(progress);
            if (s.total != f.total) return "streamed total " + std::to_string(s.total);
            if (s.plus_count != f.plus_count)
                return "streamed plus count " + std::to_string(s.plus_count);
            if (!(s.signed_sum == f.signed_sum)) return "streamed signed sum differs";
            if (!(s.plus_sum == f.plus_sum)) return "streamed plus sum differs";
            return "";
        });
    } else {
        run.skip("level3-streamed", "full height-3 walk runs with --deep");
    }
    return rep;
}

// -------------------------------------------------------------- partition

SuiteReport suite_partition(const SuiteOptions& o, WorkData& w) {
    SuiteReport rep;
    rep.suite = "partition";
    rep.params = {{"levels", "0..2"}};
    Runner run(rep, o.progress);

    run.check("builder-properties", [&]() -> std::string {
        for (int n = 0; n <= 2; ++n) {
            PartitionCheck pc = check_partition(build_partition(n), n);
            if (!pc.ok) return "level " + std::to_string(n) + ": " + pc.counterexample;
        }
        return "";
    });

    run.check("radius-fixtures", [&]() -> std::string {
        PartitionCheck p1 = check_partition(build_partition(1), 1);
        if (p1.radius_histogram != std::map<std::int64_t, std::uint64_t>{{2, 1}})
            return "level-1 radii off";
        PartitionCheck p2 = check_partition(build_partition(2), 2);
        std::map<std::int64_t, std::uint64_t> want{{0, 2}, {2, 6}, {4, 7}, {6, 6}, {8, 3}, {10, 1}};
        if (p2.radius_histogram != want) return "level-2 radii off";
        if (p2.paths != 25 || p2.vertices != 135) return "level-2 totals off";
        return "";
    });

    run.check("window-mass-fixtures", [&]() -> std::string {
        std::uint64_t all = 0, kept = 0;
        for (const RvTree& t : enumerate_trees(2)) {
            all += static_cast<std::uint64_t>(tau(t.val()) + 1);
            if (is_plus(t) && t.val() >= std::max<std::int64_t>(t.rad() - 8, 0))
                kept += static_cast<std::uint64_t>(tau(t.val()) + 1);
        }
        if (all != 1217) return "total label mass " + std::to_string(all);
        if (kept != 1215) return "kept label mass " + std::to_string(kept);
        if (135ULL * 135 * all != 22179825ULL) return "height-3 census mismatch";
        if (135ULL * 135 * kept != 22143375ULL) return "height-3 plus census mismatch";
        return "";
    });

    run.check("pairing-cancellation", [&]() -> std::string {
        std::array<std::uint64_t, 3> want_pairs{0, 0, 1};
        for (int n = 0; n <= 2; ++n) {
            IotaCheck ic = check_iota(build_partition(n), n);
            if (!ic.ok) return "level " + std::to_string(n) + ": " + ic.counterexample;
            if (ic.pair_count != want_pairs[static_cast<std::size_t>(n)])
                return "level " + std::to_string(n) + " pair count " +
                       std::to_string(ic.pair_count);
        }
        return "";
    });

    run.check("kept-sum-reading", [&]() -> std::string {
        for (int n = 0; n <= 2; ++n) {
            IotaCheck ic = check_iota(build_partition(n), n);
            ChVec folded = L_map(tree_sums(n).signed_sum);
            if (!(ic.kept_top == folded))
                return "level " + std::to_string(n) + ": top-level window misses the folded sum";
            if (n <= 1 && !(ic.kept_subtree == folded))
                return "level " + std::to_string(n) + ": readings should coincide here";
            if (n == 2 && ic.kept_subtree == folded)
                return "level 2: halved window unexpectedly matches too";
        }
        return "";
    });
    return rep;
}

// ----------------------------------------------------------- coeff-tables

SuiteReport suite_coeff_tables(const SuiteOptions& o, WorkData& w) {
    SuiteReport rep;
    rep.suite = "coeff-tables";
    int top = std::min(o.max_n, 6);
    rep.params = {{"max_n", std::to_string(top)}};
    Runner run(rep, o.progress);

    run.check("path-census-totals", [&]() -> std::string {
        const std::array<BigInt, 4> want{BigInt(1), BigInt(3), BigInt(135), BigInt(22143375)};
        for (int n = 0; n <= std::min(top, 3); ++n) {
            BigInt total = 0;
            for (const auto& [r, m] : radius_multiset(n)) total += m * BigInt(r + 1);
            if (total != want[static_cast<std::size_t>(n)])
                return "level " + std::to_string(n) + " total " + total.str();
        }
        return "";
    });

    run.check("route-agreement", [&]() -> std::string {
        const auto& tilde = w.tilde_to(top);
        for (int n = 0; n <= top; ++n) {
            const auto& via_paths = w.paths_table(n);
            auto via_ring = coeff_table_ring(tilde[static_cast<std::size_t>(n)].e0, n);
            if (via_paths != via_ring)
                return "level " + std::to_string(n) + ": " + table_str(via_paths) + " vs " +
                       table_str(via_ring);
        }
        for (int n = 0; n <= std::min(top, 2); ++n) {
            TreeSums s = tree_sums(n);
            if (!(table_vec(w.paths_table(n)) == s.plus_sum))
                return "level " + std::to_string(n) + ": census differs from enumeration";
            if (!(s.plus_sum == s.signed_sum))
                return "level " + std::to_string(n) + ": cancellation failed in enumeration";
        }
        return "";
    });

    run.check("canonical-reconstruction", [&]() -> std::string {
        const auto& tilde = w.tilde_to(top);
        for (int n = 0; n <= top; ++n) {
            const auto& table = w.paths_table(n);
            const TildeChVec& can = tilde[static_cast<std::size_t>(n)].e0;
            std::int64_t hi = std::max(can.c.empty() ? 0 : can.c.rbegin()->first,
                                       table.empty() ? 0 : table.rbegin()->first);
            for (std::int64_t k = 0; k <= hi; k += 2) {
                auto look = [&](std::int64_t v) {
                    auto it = table.find(v);
                    return it == table.end() ? BigInt(0) : it->second;
                };
                if (can.coeff(k) != look(k) - look(-k - 2))
                    return "level " + std::to_string(n) + " index " + std::to_string(k);
            }
        }
        return "";
    });

    run.check("table-properties", [&]() -> std::string {
        for (int n = 0; n <= top; ++n) {
            TableCheck tc = check_coeff_table(w.paths_table(n), n);
            if (!tc.ok()) return "level " + std::to_string(n) + ": " + tc.detail;
        }
        return "";
    });

    run.check("folded-image-nonnegative", [&]() -> std::string {
        const auto& tilde = w.tilde_to(top);
        for (int n = 0; n <= top; ++n)
            for (const auto& [k, c] : tilde[static_cast<std::size_t>(n)].e0.c)
                if (c < 0)
                    return "level " + std::to_string(n) + " index " + std::to_string(k) +
                           " coefficient " + c.str();
        return "";
    });
    return rep;
}

// ----------------------------------------------------------- registry

struct SuiteEntry {
    std::string name;
    SuiteReport (*fn)(const SuiteOptions&, WorkData&);
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries{
        {"poly-core", suite_poly_core},
        {"ring-identities", suite_ring_identities},
        {"centered-paths", suite_centered_paths},
        {"reduced-orbit", suite_mrr_orbit},
        {"lead-orbit", suite_lead_orbit},
        {"tilde-orbit", suite_tilde_orbit},
        {"bridge", suite_bridge},
        {"newton-cubic", suite_newton_cubic},
        {"raw-orbit", suite_err_orbit},
        {"trees", suite_trees},
        {"partition", suite_partition},
        {"coeff-tables", suite_coeff_tables},
    };
    return entries;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const SuiteEntry& e : registry()) out.push_back(e.name);
    return out;
}

const std::map<std::string, std::string>& citation_registry() {
    static const std::map<std::string, std::string> tags{
        {"ring-axioms-random", "polynomial-ring-axioms"},
        {"eval-homomorphism", "evaluation-homomorphism"},
        {"u3-lead-split", "u3-leading-term-split"},
        {"canonical-text-forms", "canonical-term-order"},
        {"exact-division-roundtrip", "exact-division"},
        {"fold-map-values", "index-fold-map"},
        {"tilde-product-examples", "extended-basis-product-rule"},
        {"ch-product-examples", "folded-basis-product-rule"},
        {"associativity-generators", "product-associativity"},
        {"associativity-random", "product-associativity"},
        {"fold-hom-generators", "fold-homomorphism"},
        {"fold-hom-random", "fold-homomorphism"},
        {"kernel-annihilation", "kernel-annihilation"},
        {"telescoping-diagonal", "telescoping-product-difference"},
        {"telescoping-double-step", "telescoping-product-difference"},
        {"bracket-examples", "exchange-bracket"},
        {"exchange-bracket-even", "exchange-bracket"},
        {"exchange-bracket-odd", "exchange-bracket"},
        {"bracket-kernel-pair", "bracket-kernel-sums"},
        {"bracket-kernel-equal-args", "bracket-kernel-sums"},
        {"shift-operator", "index-shift-operator"},
        {"canonical-form-properties", "kernel-canonical-form"},
        {"canonical-injectivity", "kernel-canonical-form"},
        {"embed-examples", "suppressed-power-convention"},
        {"embed-product-agreement", "suppressed-power-convention"},
        {"radius-function-examples", "path-radius-function"},
        {"product-path-radius", "product-path-radius"},
        {"pair-partition", "path-product-partition"},
        {"containing-radius", "pair-radius-location"},
        {"index-sum", "pair-index-sum"},
        {"corner-location", "pair-radius-location"},
        {"reduced-base-forms", "reduced-error-base"},
        {"reduction-pipeline", "change-of-variables-reduction"},
        {"u3-degree-formula", "u3-degree-formula"},
        {"weighted-homogeneity", "weighted-homogeneity"},
        {"mirror-symmetry", "u1-u2-exchange-symmetry"},
        {"layered-vs-direct", "reduced-error-recurrence"},
        {"lead-base-forms", "leading-coefficient-base"},
        {"top-layer-agreement", "leading-coefficient-recurrence"},
        {"minus-component-collapse", "leading-coefficient-recurrence"},
        {"two-component-form", "leading-coefficient-recurrence"},
        {"coefficient-row-fixture", "leading-coefficient-recurrence"},
        {"tilde-base-pair", "extended-error-base"},
        {"tilde-level-one", "extended-error-recurrence"},
        {"tilde-level-two-canonical", "extended-error-recurrence"},
        {"shifted-pair-relation", "shifted-pair-equivalence"},
        {"bridge-component-0", "ring-to-polynomial-bridge"},
        {"bridge-component-1", "ring-to-polynomial-bridge"},
        {"input-validation", "reciprocal-root-parameters"},
        {"aux-map-examples", "two-variable-auxiliary-map"},
        {"aux-zero-at-fixed-point", "two-variable-auxiliary-map"},
        {"jacobian-at-origin", "update-jacobian"},
        {"jacobian-difference-oracle", "update-jacobian"},
        {"fixed-point-step", "newton-two-variable-update"},
        {"deterministic-step", "newton-two-variable-update"},
        {"singular-jacobian-signaled", "update-jacobian"},
        {"raw-base-forms", "raw-error-base"},
        {"raw-base-eval-oracle", "raw-error-base"},
        {"scalar-orbit-at-ones", "raw-error-recurrence"},
        {"fraction-identity-symbolic", "error-fraction-identity"},
        {"fraction-identity-seed-triple", "error-fraction-identity"},
        {"fraction-identity-degenerate", "error-fraction-identity"},
        {"fraction-identity-random", "error-fraction-identity"},
        {"enumeration-counts", "tree-family-counts"},
        {"statistics-examples", "tree-statistics"},
        {"serialization-roundtrip", "tree-serialization"},
        {"mirror-involution", "mirror-involution"},
        {"plus-subset-small", "positive-subset"},
        {"signed-sums-small", "signed-tree-sum"},
        {"tree-vs-ring-small", "tree-sum-equivalence"},
        {"first-negative-sign", "tree-statistics"},
        {"shifted-pair-by-trees", "shifted-pair-equivalence"},
        {"level3-factored", "tree-sum-equivalence"},
        {"level3-cancellation", "positive-subset-cancellation"},
        {"level3-streamed", "tree-sum-equivalence"},
        {"builder-properties", "tree-path-partition"},
        {"radius-fixtures", "tree-path-partition"},
        {"window-mass-fixtures", "tree-family-counts"},
        {"pairing-cancellation", "positive-subset-cancellation"},
        {"kept-sum-reading", "kept-vertex-sum"},
        {"path-census-totals", "positive-subset"},
        {"route-agreement", "coefficient-table-routes"},
        {"canonical-reconstruction", "coefficient-table-routes"},
        {"table-properties", "coefficient-symmetry-unimodality"},
        {"folded-image-nonnegative", "coefficient-symmetry-unimodality"},
    };
    return tags;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    for (const SuiteEntry& e : registry())
        if (e.name == name) {
            WorkData w;
            return e.fn(opts, w);
        }
    throw std::invalid_argument("unknown suite: " + name);
}

VerificationReport run_all_suites(const SuiteOptions& opts) {
    VerificationReport out;
    WorkData w;
    for (const SuiteEntry& e : registry()) {
        if (opts.progress) *opts.progress << "[suite] " << e.name << '\n';
        out.suites.push_back(e.fn(opts, w));
    }
    return out;
}

}  // namespace nrs2
