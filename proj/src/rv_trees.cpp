#include "nrs2/rv_trees.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace nrs2 {

namespace {

int sign_of(std::int64_t x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

std::int64_t max64(std::int64_t a, std::int64_t b) { return a > b ? a : b; }

}  // namespace

RvTree::RvTree(std::int64_t label, int height, std::int64_t rad, int sgn,
               std::vector<RvTree> kids)
    : label_(label), height_(height), rad_(rad), sgn_(sgn), kids_(std::move(kids)) {}

RvTree RvTree::leaf(std::int64_t label) {
    if (label % 2 != 0) throw std::invalid_argument("tree leaf: odd label");
    return RvTree(label, 0, 0, 1, {});
}

RvTree RvTree::node(std::int64_t label, RvTree t1, RvTree t2, RvTree t3) {
    if (label % 2 != 0) throw std::invalid_argument("tree node: odd label");
    if (t1.height_ != t2.height_ || t2.height_ != t3.height_)
        throw std::invalid_argument("tree node: child heights differ");
    std::int64_t d = label - t1.val() - t3.val();
    std::int64_t window = tau(t2.val());
    if (d > window || d < -window) {
        std::ostringstream os;
        os << "tree node: label " << label << " outside window " << window << " around "
           << t1.val() + t3.val();
        throw std::invalid_argument(os.str());
    }
    std::int64_t r13 = rho(t1.rad_, t3.rad_, t1.ind(), t3.ind());
    std::int64_t rad = rho(r13, window, t1.ind() + t3.ind(), d);
    int sgn = sign_of(t2.val() + 1) * t1.sgn_ * t2.sgn_ * t3.sgn_;
    int height = t1.height_ + 1;
    std::vector<RvTree> kids;
    kids.reserve(3);
    kids.push_back(std::move(t1));
    kids.push_back(std::move(t2));
    kids.push_back(std::move(t3));
    return RvTree(label, height, rad, sgn, std::move(kids));
}

const RvTree& RvTree::child(int i) const {
    if (is_leaf() || i < 1 || i > 3) throw std::out_of_range("tree child index");
    return kids_[static_cast<std::size_t>(i - 1)];
}

std::int64_t RvTree::delta() const {
    if (is_leaf()) throw std::logic_error("tree delta: leaf has no children");
    return label_ - kids_[0].val() - kids_[2].val();
}

bool RvTree::leaves_all_two() const {
    if (is_leaf()) return label_ == 2;
    for (const RvTree& k : kids_)
        if (!k.leaves_all_two()) return false;
    return true;
}

std::string RvTree::str() const {
    if (is_leaf()) return std::to_string(label_);
    return "(" + std::to_string(label_) + " " + kids_[0].str() + " " + kids_[1].str() + " " +
           kids_[2].str() + ")";
}

bool operator==(const RvTree& a, const RvTree& b) {
    return a.label_ == b.label_ && a.kids_ == b.kids_;
}

namespace {

struct TreeParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::int64_t read_int() {
        skip_space();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("tree parse: expected integer at offset " +
                                        std::to_string(start));
        return std::stoll(text.substr(start, pos - start));
    }

    RvTree read_tree() {
        skip_space();
        if (pos >= text.size()) throw std::invalid_argument("tree parse: unexpected end");
        if (text[pos] != '(') return RvTree::leaf(read_int());
        ++pos;
        std::int64_t label = read_int();
        RvTree t1 = read_tree();
        RvTree t2 = read_tree();
        RvTree t3 = read_tree();
        skip_space();
        if (pos >= text.size() || text[pos] != ')')
            throw std::invalid_argument("tree parse: missing ')'");
        ++pos;
        return RvTree::node(label, std::move(t1), std::move(t2), std::move(t3));
    }
};

}  // namespace

RvTree RvTree::parse(const std::string& text) {
    TreeParser p{text};
    RvTree t = p.read_tree();
    p.skip_space();
    if (p.pos != text.size()) throw std::invalid_argument("tree parse: trailing input");
    return t;
}

RvTree inv(const RvTree& t) {
    if (t.is_leaf()) return t;
    RvTree m1 = inv(t.child(1));
    RvTree m3 = inv(t.child(3));
    std::int64_t label = m1.val() + m3.val() - t.delta();
    return RvTree::node(label, std::move(m1), t.child(2), std::move(m3));
}

bool is_plus(const RvTree& t) {
    if (t.is_leaf()) return true;
    for (int i = 1; i <= 3; ++i)
        if (!is_plus(t.child(i))) return false;
    const RvTree& mid = t.child(2);
    return mid.val() >= max64(mid.rad() - (std::int64_t{1} << t.height()), 0);
}

std::vector<RvTree> enumerate_trees(int n) {
    if (n < 0) throw std::invalid_argument("enumerate: negative height");
    if (n > 2) throw std::invalid_argument("enumerate: height > 2 is streaming-only");
    if (n == 0) return {RvTree::leaf(2)};
    std::vector<RvTree> prev = enumerate_trees(n - 1);
    std::vector<std::tuple<std::int64_t, std::size_t, std::size_t, std::size_t>> slots;
    for (std::size_t i1 = 0; i1 < prev.size(); ++i1)
        for (std::size_t i2 = 0; i2 < prev.size(); ++i2)
            for (std::size_t i3 = 0; i3 < prev.size(); ++i3) {
                std::int64_t base = prev[i1].val() + prev[i3].val();
                std::int64_t w = tau(prev[i2].val());
                for (std::int64_t d = -w; d <= w; d += 2) slots.emplace_back(base + d, i1, i2, i3);
            }
    std::sort(slots.begin(), slots.end());
    std::vector<RvTree> out;
    out.reserve(slots.size());
    for (const auto& [label, i1, i2, i3] : slots)
        out.push_back(RvTree::node(label, prev[i1], prev[i2], prev[i3]));
    return out;
}

void stream_trees(int n, const std::function<bool(const RvTree&)>& visit) {
    if (n <= 2) {
        for (const RvTree& t : enumerate_trees(n))
            if (!visit(t)) return;
        return;
    }
    if (n != 3) throw std::invalid_argument("stream: heights above 3 are out of reach");
    std::vector<RvTree> prev = enumerate_trees(2);
    std::int64_t lo = 0, hi = 0;
    bool first = true;
    std::vector<std::int64_t> vals, wins;
    vals.reserve(prev.size());
    wins.reserve(prev.size());
    for (const RvTree& t : prev) {
        vals.push_back(t.val());
        wins.push_back(tau(t.val()));
    }
    for (std::size_t i1 = 0; i1 < prev.size(); ++i1)
        for (std::size_t i3 = 0; i3 < prev.size(); ++i3) {
            std::int64_t base = vals[i1] + vals[i3];
            for (std::size_t i2 = 0; i2 < prev.size(); ++i2) {
                std::int64_t a = base - wins[i2], b = base + wins[i2];
                if (first || a < lo) lo = a;
                if (first || b > hi) hi = b;
                first = false;
            }
        }
    for (std::int64_t label = lo; label <= hi; label += 2)
        for (std::size_t i1 = 0; i1 < prev.size(); ++i1)
            for (std::size_t i2 = 0; i2 < prev.size(); ++i2)
                for (std::size_t i3 = 0; i3 < prev.size(); ++i3) {
                    std::int64_t d = label - vals[i1] - vals[i3];
                    if (d > wins[i2] || d < -wins[i2]) continue;
                    if (!visit(RvTree::node(label, prev[i1], prev[i2], prev[i3]))) return;
                }
}

TreeSums tree_sums(int n) {
    TreeSums s;
    for (const RvTree& t : enumerate_trees(n)) {
        ++s.total;
        s.signed_sum.add(t.val(), t.sgn());
        if (is_plus(t)) {
            ++s.plus_count;
            s.plus_sum.add(t.val(), 1);
        }
    }
    return s;
}

TreeSums tree_sums_level3_factored() {
    std::vector<RvTree> prev = enumerate_trees(2);
    struct Info {
        std::int64_t val;
        std::int64_t rad;
        int sgn;
        bool plus;
    };
    std::vector<Info> info;
    info.reserve(prev.size());
    for (const RvTree& t : prev) info.push_back({t.val(), t.rad(), t.sgn(), is_plus(t)});

    // outer-pair histograms over v1 + v3
    std::map<std::int64_t, std::int64_t> pairs_signed, pairs_plus, pairs_all;
    for (const Info& a : info)
        for (const Info& b : info) {
            std::int64_t s = a.val + b.val;
            pairs_signed[s] += a.sgn * b.sgn;
            pairs_all[s] += 1;
            if (a.plus && b.plus) pairs_plus[s] += 1;
        }

    TreeSums out;
    std::map<std::int64_t, std::int64_t> acc_signed, acc_plus;
    for (const Info& mid : info) {
        std::int64_t w = tau(mid.val);
        bool mid_plus_slot = mid.plus && mid.val >= max64(mid.rad - 8, 0);
        int mid_sgn = sign_of(mid.val + 1) * mid.sgn;
        for (std::int64_t d = -w; d <= w; d += 2) {
            for (const auto& [s, cnt] : pairs_all)
                out.total += static_cast<std::uint64_t>(cnt);
            for (const auto& [s, cnt] : pairs_signed) acc_signed[s + d] += mid_sgn * cnt;
            if (mid_plus_slot) {
                for (const auto& [s, cnt] : pairs_plus) {
                    acc_plus[s + d] += cnt;
                    out.plus_count += static_cast<std::uint64_t>(cnt);
                }
            }
        }
    }
    for (const auto& [v, c] : acc_signed) out.signed_sum.add(v, c);
    for (const auto& [v, c] : acc_plus) out.plus_sum.add(v, c);
    return out;
}

TreeSums tree_sums_level3_streamed(const std::function<void(std::uint64_t)>& progress,
                                   std::uint64_t stride) {
    TreeSums s;
    std::map<std::int64_t, std::int64_t> acc_signed, acc_plus;
    stream_trees(3, [&](const RvTree& t) {
        ++s.total;
        acc_signed[t.val()] += t.sgn();
        if (is_plus(t)) {
            ++s.plus_count;
            acc_plus[t.val()] += 1;
        }
        if (progress && stride > 0 && s.total % stride == 0) progress(s.total);
        return true;
    });
    for (const auto& [v, c] : acc_signed) s.signed_sum.add(v, c);
    for (const auto& [v, c] : acc_plus) s.plus_sum.add(v, c);
    return s;
}

// ---- partition construction ----

std::vector<TreePath> build_partition(int n) {
    if (n < 0 || n > 2) throw std::invalid_argument("partition: height outside [0, 2]");
    std::vector<TreePath> paths;
    paths.emplace_back(0, std::vector<RvTree>{RvTree::leaf(2)});
    for (int level = 0; level < n; ++level) {
        std::int64_t bound = std::int64_t{2} << level;  // 2^(level+1)
        std::vector<RvTree> mids;
        for (const RvTree& t : enumerate_trees(level))
            if (is_plus(t) && t.val() >= max64(t.rad() - bound, 0)) mids.push_back(t);

        std::vector<TreePath> next;
        for (const TreePath& p1 : paths)
            for (const TreePath& p2 : paths) {
                std::int64_t kmax = std::min(p1.radius(), p2.radius());
                for (std::int64_t k = 0; k <= kmax; ++k) {
                    auto outer = product_path(p1, p2, k);
                    for (const RvTree& mid : mids) {
                        std::int64_t w = tau(mid.val());
                        std::vector<std::int64_t> offs;
                        offs.reserve(static_cast<std::size_t>(w) + 1);
                        for (std::int64_t d = -w; d <= w; d += 2) offs.push_back(d);
                        CenteredPath<std::int64_t> window(w, std::move(offs));
                        std::int64_t k2max = std::min(outer.radius(), window.radius());
                        for (std::int64_t k2 = 0; k2 <= k2max; ++k2) {
                            auto prod = product_path(outer, window, k2);
                            std::vector<RvTree> trees;
                            trees.reserve(prod.payloads().size());
                            for (const auto& [pair13, d] : prod.payloads()) {
                                const RvTree& t1 = pair13.first;
                                const RvTree& t3 = pair13.second;
                                trees.push_back(
                                    RvTree::node(t1.val() + t3.val() + d, t1, mid, t3));
                            }
                            next.emplace_back(prod.radius(), std::move(trees));
                        }
                    }
                }
            }
        paths = std::move(next);
    }
    return paths;
}

PartitionCheck check_partition(const std::vector<TreePath>& paths, int n) {
    PartitionCheck out;
    std::int64_t center = std::int64_t{2} << n;  // 2^(n+1)
    std::set<std::string> seen;
    auto fail = [&](std::size_t pid, std::int64_t j, const RvTree& t, const std::string& why) {
        if (!out.ok) return;
        out.ok = false;
        std::ostringstream os;
        os << "path " << pid << " index " << j << ": " << why << "; tree " << t.str();
        out.counterexample = os.str();
    };
    for (std::size_t pid = 0; pid < paths.size(); ++pid) {
        const TreePath& p = paths[pid];
        ++out.paths;
        out.radius_histogram[p.radius()] += 1;
        if (p.radius() % 2 != 0) {
            out.ok = false;
            out.counterexample = "path " + std::to_string(pid) + ": odd radius";
            continue;
        }
        for (std::int64_t j = -p.radius(); j <= p.radius(); j += 2) {
            const RvTree& t = p.at(j);
            ++out.vertices;
            if (t.height() != n) fail(pid, j, t, "height mismatch");
            if (!t.leaves_all_two()) fail(pid, j, t, "leaf label not 2");
            if (t.ind() != j) fail(pid, j, t, "position does not equal tree index");
            if (t.rad() != p.radius()) fail(pid, j, t, "tree radius differs from path radius");
            if (!is_plus(t)) fail(pid, j, t, "vertex outside the plus subset");
            if (j == 0 && t.val() != center) fail(pid, j, t, "central value wrong");
            if (!seen.insert(t.str()).second) fail(pid, j, t, "tree appears twice");
        }
    }
    if (n <= 2 && out.ok) {
        std::set<std::string> expected;
        for (const RvTree& t : enumerate_trees(n))
            if (is_plus(t)) expected.insert(t.str());
        if (expected != seen) {
            out.ok = false;
            out.counterexample = "vertex set differs from the plus subset (" +
                                 std::to_string(seen.size()) + " vs " +
                                 std::to_string(expected.size()) + " trees)";
        }
    }
    return out;
}

IotaCheck check_iota(const std::vector<TreePath>& paths, int n) {
    IotaCheck out;
    std::int64_t center = std::int64_t{2} << n;        // 2^(n+1)
    std::int64_t span = std::int64_t{2} << (n + 1);    // 2^(n+2)
    auto fail = [&](const std::string& why) {
        if (!out.ok) return;
        out.ok = false;
        out.counterexample = why;
    };
    for (std::size_t pid = 0; pid < paths.size(); ++pid) {
        const TreePath& p = paths[pid];
        std::int64_t thr_top = max64(p.radius() - center, 0);
        std::int64_t thr_sub = max64(p.radius() - center / 2, 0);
        std::set<std::int64_t> violating;
        for (std::int64_t j = -p.radius(); j <= p.radius(); j += 2) {
            std::int64_t v = p.at(j).val();
            if (v >= thr_top)
                out.kept_top.add(v, 1);
            else
                violating.insert(j);
            if (v >= thr_sub) out.kept_subtree.add(v, 1);
        }
        std::set<std::int64_t> matched;
        for (std::int64_t j : violating) {
            if (matched.count(j)) continue;
            std::int64_t j2 = -span - j - 2;
            std::ostringstream tag;
            tag << "path " << pid << " index " << j;
            if (j2 == j) {
                fail(tag.str() + ": partner equals the vertex itself");
                break;
            }
            if (!p.has_index(j2) || !violating.count(j2)) {
                fail(tag.str() + ": partner index " + std::to_string(j2) +
                     " not a below-threshold vertex");
                break;
            }
            std::int64_t v = p.at(j).val(), v2 = p.at(j2).val();
            if (v2 != -v - 2) fail(tag.str() + ": partner value is not -v-2");
            if (tau(v) != tau(v2)) fail(tag.str() + ": fold image changes");
            if (sign_of(v + 1) != -sign_of(v2 + 1)) fail(tag.str() + ": sign fails to flip");
            matched.insert(j);
            matched.insert(j2);
            ++out.pair_count;
        }
        if (matched.size() != violating.size())
            fail("path " + std::to_string(pid) + ": pairing does not exhaust the " +
                 std::to_string(violating.size()) + " below-threshold vertices");
    }
    return out;
}

// ---- radius multisets and value tables ----

namespace {

// Accumulates band contributions: each (lo, hi, w) adds w to every index in
// [lo, hi] with step 2.  Indices are non-negative.
class BandSum {
public:
    explicit BandSum(std::size_t size) : diff_(size + 3) {}

    void add(std::int64_t lo, std::int64_t hi, const BigInt& w) {
        diff_[static_cast<std::size_t>(lo)] += w;
        diff_[static_cast<std::size_t>(hi) + 2] -= w;
    }

    std::map<std::int64_t, BigInt> collect() const {
        std::map<std::int64_t, BigInt> out;
        for (int parity = 0; parity < 2; ++parity) {
            BigInt run = 0;
            for (std::size_t i = static_cast<std::size_t>(parity); i < diff_.size(); i += 2) {
                run += diff_[i];
                if (run != 0) out.emplace(static_cast<std::int64_t>(i), run);
            }
        }
        return out;
    }

private:
    std::vector<BigInt> diff_;
};

}  // namespace

std::map<std::int64_t, BigInt> radius_multiset(int n) {
    if (n < 0) throw std::invalid_argument("radius multiset: negative height");
    std::map<std::int64_t, BigInt> cur{{0, BigInt(1)}};
    for (int level = 0; level < n; ++level) {
        std::int64_t center = std::int64_t{2} << level;  // 2^(level+1)
        std::map<std::int64_t, BigInt> vals;
        std::int64_t rmax = cur.rbegin()->first;
        for (const auto& [r, m] : cur) {
            std::int64_t thr = max64(r - center, 0);
            for (std::int64_t v = max64(center - r, thr); v <= center + r; v += 2) vals[v] += m;
        }
        // all product-path radii over ordered pairs and admissible k
        BandSum pair_bands(static_cast<std::size_t>(2 * rmax));
        for (const auto& [r1, m1] : cur)
            for (const auto& [r2, m2] : cur) {
                std::int64_t lo = r1 > r2 ? r1 - r2 : r2 - r1;
                pair_bands.add(lo, r1 + r2, m1 * m2);
            }
        std::map<std::int64_t, BigInt> outer = pair_bands.collect();
        std::int64_t vmax = vals.rbegin()->first;
        BandSum next_bands(static_cast<std::size_t>(2 * rmax + vmax));
        for (const auto& [q, mq] : outer)
            for (const auto& [v, mv] : vals) {
                std::int64_t lo = q > v ? q - v : v - q;
                next_bands.add(lo, q + v, mq * mv);
            }
        cur = next_bands.collect();
    }
    return cur;
}

std::map<std::int64_t, BigInt> coeff_table_paths(int n) {
    std::map<std::int64_t, BigInt> radii = radius_multiset(n);
    std::int64_t center = std::int64_t{2} << n;
    std::map<std::int64_t, BigInt> table;
    // value v is covered by every path of radius >= |v - center|
    BigInt suffix = 0;
    for (auto it = radii.rbegin(); it != radii.rend(); ++it) {
        std::int64_t next_r = std::next(it) == radii.rend() ? -2 : std::next(it)->first;
        suffix += it->second;
        for (std::int64_t d = it->first; d > next_r; d -= 2) {
            if (d == 0) {
                table[center] = suffix;
            } else {
                table[center - d] = suffix;
                table[center + d] = suffix;
            }
        }
    }
    return table;
}

std::map<std::int64_t, BigInt> coeff_table_ring(const TildeChVec& canonical_e0, int n) {
    std::map<std::int64_t, BigInt> table;
    if (canonical_e0.c.empty()) return table;
    std::int64_t top = canonical_e0.c.rbegin()->first;
    std::int64_t mirror = std::int64_t{2} << (n + 1);  // 2^(n+2)
    if (canonical_e0.c.begin()->first < 0)
        throw std::invalid_argument("table unfold: series not canonical");
    if (top % 2 != 0) throw std::invalid_argument("table unfold: odd top index");
    for (std::int64_t m = top; m >= 0; m -= 2) {
        BigInt t = canonical_e0.coeff(m);
        auto it = table.find(m + mirror + 2);
        if (it != table.end()) t += it->second;
        if (t != 0) table[m] = t;
    }
    std::vector<std::pair<std::int64_t, BigInt>> mirrored;
    for (const auto& [k, v] : table)
        if (k > mirror) mirrored.emplace_back(mirror - k, v);
    for (auto& [k, v] : mirrored) table[k] = std::move(v);
    return table;
}

TableCheck check_coeff_table(const std::map<std::int64_t, BigInt>& table, int n) {
    TableCheck out;
    std::ostringstream why;
    if (table.empty()) {
        out.positive = false;
        out.detail = "empty table";
        return out;
    }
    std::int64_t center = std::int64_t{2} << n;
    std::int64_t pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    std::int64_t reach = 2 * (pow3 - (std::int64_t{1} << n));
    std::int64_t lo = table.begin()->first, hi = table.rbegin()->first;
    for (const auto& [k, v] : table)
        if (v <= 0 && out.positive) {
            out.positive = false;
            why << "coefficient at " << k << " not positive; ";
        }
    for (const auto& [k, v] : table) {
        auto it = table.find(2 * center - k);
        if (it == table.end() || it->second != v) {
            if (out.symmetric) why << "mirror mismatch at " << k << "; ";
            out.symmetric = false;
        }
    }
    BigInt prev = 0;
    for (std::int64_t k = lo; k <= center; k += 2) {
        auto it = table.find(k);
        BigInt cur = it == table.end() ? BigInt(0) : it->second;
        if (cur < prev) {
            if (out.unimodal) why << "drop toward centre at " << k << "; ";
            out.unimodal = false;
        }
        prev = cur;
    }
    if (lo < center - reach || hi > center + reach) {
        out.support_ok = false;
        why << "support [" << lo << ", " << hi << "] exceeds +-" << reach << "; ";
    }
    if (hi != 2 * pow3) {
        out.max_ok = false;
        why << "top index " << hi << " != " << 2 * pow3 << "; ";
    }
    for (std::int64_t k = lo; k <= hi; k += 2)
        if (!table.count(k)) {
            if (out.contiguous) why << "gap at " << k << "; ";
            out.contiguous = false;
        }
    out.detail = why.str();
    return out;
}

}  // namespace nrs2
