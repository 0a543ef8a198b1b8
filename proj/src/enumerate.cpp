#include "arcpat/enumerate.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace arcpat {

Caps& caps() {
    static Caps c;
    return c;
}

void check_cap(const std::string& what, int n, int limit) {
    if (n < 0) throw Error(ErrorKind::invalid, what + ": negative size");
    if (n > limit)
        throw Error(ErrorKind::resource_cap,
                    what + ": n = " + std::to_string(n) + " exceeds the configured cap " + std::to_string(limit));
}

// ------------------------------------------------------------- matchings

namespace {

void match_rec(std::vector<int>& partner, std::vector<std::pair<int, int>>& arcs, int size,
               const std::function<void(const Matching&)>& f) {
    int v = 1;
    while (v <= size && partner[v]) ++v;
    if (v > size) {
        f(Matching(arcs));
        return;
    }
    for (int w = v + 1; w <= size; ++w) {
        if (partner[w]) continue;
        partner[v] = w;
        partner[w] = v;
        arcs.emplace_back(v, w);
        match_rec(partner, arcs, size, f);
        arcs.pop_back();
        partner[v] = partner[w] = 0;
    }
}

void fixed_rec(std::vector<int>& state, std::vector<std::pair<int, int>>& arcs, std::vector<int>& fixed, int size, int k,
               std::vector<Matching>& out) {
    int v = 1;
    while (v <= size && state[v]) ++v;
    if (v > size) {
        out.emplace_back(arcs, fixed);
        return;
    }
    if (static_cast<int>(fixed.size()) < k) {
        state[v] = -1;
        fixed.push_back(v);
        fixed_rec(state, arcs, fixed, size, k, out);
        fixed.pop_back();
        state[v] = 0;
    }
    for (int w = v + 1; w <= size; ++w) {
        if (state[w]) continue;
        state[v] = w;
        state[w] = v;
        arcs.emplace_back(v, w);
        fixed_rec(state, arcs, fixed, size, k, out);
        arcs.pop_back();
        state[v] = state[w] = 0;
    }
}

}  // namespace

void for_each_matching(int n, const std::function<void(const Matching&)>& f) {
    if (n == 0) {
        f(Matching());
        return;
    }
    for (int w = 2; w <= 2 * n; ++w) for_each_matching_shard(n, w, f);
}

void for_each_matching_shard(int n, int partner, const std::function<void(const Matching&)>& f) {
    check_cap("matchings", n, caps().matchings);
    if (partner < 2 || partner > 2 * n) throw Error(ErrorKind::invalid, "vertex 1 has no such partner");
    std::vector<int> p(2 * n + 1, 0);
    p[1] = partner;
    p[partner] = 1;
    std::vector<std::pair<int, int>> arcs{{1, partner}};
    match_rec(p, arcs, 2 * n, f);
}

std::vector<Matching> matchings(int n) {
    check_cap("matchings", n, caps().matchings);
    std::vector<Matching> out;
    for_each_matching(n, [&](const Matching& m) { out.push_back(m); });
    return out;
}

std::vector<Matching> matchings_with_fixed(int n, int k) {
    check_cap("matchings", n + k, caps().matchings);
    if (k < 0) throw Error(ErrorKind::invalid, "negative number of fixed points");
    std::vector<Matching> out;
    std::vector<int> state(2 * n + k + 1, 0);
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> fixed;
    fixed_rec(state, arcs, fixed, 2 * n + k, k, out);
    out.erase(std::remove_if(out.begin(), out.end(), [&](const Matching& m) { return m.n != n; }), out.end());
    return out;
}

// ------------------------------------------------------------ partitions

void for_each_partition(int n, const std::function<void(const SetPartition&)>& f) {
    check_cap("partitions", n, caps().partitions);
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            std::vector<std::vector<int>> b(blocks);
            for (int x = 0; x < n; ++x) b[rgs[x]].push_back(x + 1);
            f(SetPartition(n, std::move(b)));
            return;
        }
        for (int c = 0; c <= blocks; ++c) {
            rgs[i] = c;
            rec(i + 1, std::max(blocks, c + 1));
        }
    };
    rec(0, 0);
}

std::vector<SetPartition> partitions(int n) {
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

// ---------------------------------------------------------- permutations

void for_each_permutation(int n, const std::function<void(const Perm&)>& f) {
    check_cap("permutations", n, caps().permutations);
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    do f(p);
    while (std::next_permutation(p.begin(), p.end()));
}

std::vector<Perm> permutations(int n) {
    std::vector<Perm> out;
    for_each_permutation(n, [&](const Perm& p) { out.push_back(p); });
    return out;
}

// ----------------------------------------------------------- paths, boards

std::vector<DyckPath> dyck_paths(int n) {
    check_cap("Dyck paths", n, 2 * caps().matchings);
    std::vector<DyckPath> out;
    std::string s;
    std::function<void(int, int)> rec = [&](int e, int h) {
        if (static_cast<int>(s.size()) == 2 * n) {
            out.emplace_back(s);
            return;
        }
        if (e < n) {
            s += 'E';
            rec(e + 1, h + 1);
            s.pop_back();
        }
        if (h > 0) {
            s += 'S';
            rec(e, h - 1);
            s.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::vector<FerrersBoard> boards(int n) {
    std::vector<FerrersBoard> out;
    for (auto& d : dyck_paths(n)) out.emplace_back(std::move(d));
    return out;
}

std::vector<RookPlacement> placements(const FerrersBoard& board) {
    const int n = board.n();
    check_cap("placements", n, caps().matchings);
    auto heights = board.column_heights();
    std::vector<RookPlacement> out;
    Perm rows(n);
    std::vector<char> used(n + 1, 0);
    std::function<void(int)> rec = [&](int c) {
        if (c == n) {
            out.emplace_back(board, rows);
            return;
        }
        for (int r = 1; r <= heights[c]; ++r) {
            if (used[r]) continue;
            used[r] = 1;
            rows[c] = r;
            rec(c + 1);
            used[r] = 0;
        }
    };
    rec(0);
    return out;
}

std::vector<RookPlacement> placements(int n) {
    std::vector<RookPlacement> out;
    for (const auto& b : boards(n))
        for (auto& p : placements(b)) out.push_back(std::move(p));
    return out;
}

std::vector<RookPlacement> minimal_placements(int n) {
    std::vector<RookPlacement> out;
    for_each_permutation(n, [&](const Perm& p) { out.push_back(chi(p)); });
    return out;
}

// ------------------------------------------------------------ path pairs

std::vector<NoncrossingPathPair> path_pairs(const FerrersBoard& top) {
    const int len = top.border.length();
    auto h = top.border.heights();
    std::vector<NoncrossingPathPair> out;
    std::string s;
    std::function<void(int)> rec = [&](int j) {
        const int i = static_cast<int>(s.size());
        if (i == len) {
            if (j == 0) out.emplace_back(DyckPath(s), top.border);
            return;
        }
        if (j + 1 <= h[i + 1]) {
            s += 'E';
            rec(j + 1);
            s.pop_back();
        }
        if (j > 0) {
            s += 'S';
            rec(j - 1);
            s.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<NoncrossingPathPair> path_pairs(int n) {
    std::vector<NoncrossingPathPair> out;
    for (const auto& b : boards(n))
        for (auto& p : path_pairs(b)) out.push_back(std::move(p));
    return out;
}

std::vector<NoncrossingPathPair> path_pairs_ending(int n, int k) {
    std::vector<NoncrossingPathPair> out;
    for (auto& p : path_pairs(n + k))
        if (ends_with_south(p.bottom, k) && ends_with_south(p.top, k)) out.push_back(std::move(p));
    return out;
}

std::vector<NoncrossingPathPair> e2_pairs(const FerrersBoard& top) {
    std::vector<NoncrossingPathPair> out;
    for (auto& p : path_pairs(top))
        if (in_E2(p)) out.push_back(std::move(p));
    return out;
}

std::vector<NoncrossingPathPair> a2_pairs(const FerrersBoard& top) {
    std::vector<NoncrossingPathPair> out;
    for (auto& p : path_pairs(top))
        if (in_A2(p)) out.push_back(std::move(p));
    return out;
}

// --------------------------------------------------------- labeled paths

std::vector<LabeledDyckPath> labeled_paths(const DyckPath& d, LabeledClass c) {
    const int len = d.length();
    auto h = d.heights();
    const bool is_l = (c == LabeledClass::L || c == LabeledClass::L_lt3 || c == LabeledClass::L_peak);
    const bool peaks = (c == LabeledClass::K_peak || c == LabeledClass::L_peak);
    const int bound = (c == LabeledClass::K_lt2) ? 2 : (c == LabeledClass::L_lt3) ? 3 : len + 1;
    // Aligned partners to the left of each vertex.
    std::vector<std::vector<int>> left(len + 1);
    for (auto [i, j] : aligned_pairs(d)) left[j].push_back(i);
    std::vector<int> south_after(len + 1, 0);
    for (int i = len - 1; i >= 0; --i) south_after[i] = south_after[i + 1] + (d.steps[i] == 'S');

    std::vector<LabeledDyckPath> out;
    std::vector<int> a(len + 1, 0);
    auto ok = [&](int i) {
        if (a[i] < 0 || a[i] >= bound || a[i] > south_after[i]) return false;
        if (is_l && ((a[i] == 0) != (h[i] == 0))) return false;
        for (int l : left[i])
            if (a[l] < a[i]) return false;
        if (peaks && i >= 2 && d.is_peak(i - 1) && (a[i - 2] + 1 != a[i - 1] || a[i] + 1 != a[i - 1])) return false;
        return true;
    };
    std::function<void(int)> rec = [&](int i) {
        if (i == len) {
            if (a[len] == 0) out.emplace_back(d, a);
            return;
        }
        const int lo = d.steps[i] == 'E' ? a[i] : a[i] - 1;
        const int hi = d.steps[i] == 'E' ? a[i] + 1 : a[i];
        for (int x = lo; x <= hi; ++x) {
            a[i + 1] = x;
            if (ok(i + 1)) rec(i + 1);
        }
    };
    const int first_hi = is_l ? 0 : std::min(bound - 1, south_after[0]);
    for (int x = 0; x <= first_hi; ++x) {
        a[0] = x;
        if (ok(0)) rec(0);
    }
    return out;
}

std::vector<LabeledDyckPath> labeled_paths(int n, LabeledClass c) {
    std::vector<LabeledDyckPath> out;
    for (const auto& d : dyck_paths(n))
        for (auto& x : labeled_paths(d, c)) out.push_back(std::move(x));
    return out;
}

// ------------------------------------------------------------- B^2 pairs

std::vector<B2Pair> b2_pairs(int n) {
    check_cap("B2 pairs", n, 2 * caps().matchings);
    std::vector<B2Pair> out;
    std::string top;
    std::function<void(int, int)> top_rec = [&](int x, int y) {
        if (static_cast<int>(top.size()) == n) {
            // level[c] = y-coordinate of the top path's east step into column c.
            std::vector<int> level(x + 1, 0);
            int tx = 0, ty = 0;
            for (char s : top) {
                if (s == 'E')
                    level[++tx] = ty;
                else
                    --ty;
            }
            const int a = x, b = y;
            std::string bottom;
            std::function<void(int, int)> bottom_rec = [&](int bx, int by) {
                if (bx == a && by <= b) {
                    const bool ends_south = !bottom.empty() && bottom.back() == 'S';
                    if (!ends_south || by == b) out.push_back({bottom, top, a + b, b - by});
                }
                if (bx < a && by <= level[bx + 1]) {
                    bottom += 'E';
                    bottom_rec(bx + 1, by);
                    bottom.pop_back();
                }
                if (bx + by - 1 >= 0) {
                    const bool peak = !bottom.empty() && bottom.back() == 'E';
                    if (!(peak && bx < a && level[bx + 1] > by)) {
                        bottom += 'S';
                        bottom_rec(bx, by - 1);
                        bottom.pop_back();
                    }
                }
            };
            bottom_rec(0, 0);
            return;
        }
        top += 'E';
        top_rec(x + 1, y);
        top.pop_back();
        if (x + y - 1 >= 0) {
            top += 'S';
            top_rec(x, y - 1);
            top.pop_back();
        }
    };
    top_rec(0, 0);
    return out;
}

// ---------------------------------------------------------------- counts

std::string to_string(Family f) {
    switch (f) {
        case Family::matching: return "matching";
        case Family::partition: return "partition";
        case Family::placement: return "placement";
        case Family::permutation: return "permutation";
        case Family::minimal_placement: return "minimal-placement";
        case Family::fixed_matching: return "fixed-matching";
        case Family::dyck: return "dyck";
        case Family::path_pair: return "path-pair";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::matching, Family::partition, Family::placement, Family::permutation,
                     Family::minimal_placement, Family::fixed_matching, Family::dyck, Family::path_pair})
        if (to_string(f) == name) return f;
    throw Error(ErrorKind::parse, "unknown family '" + name + "'");
}

namespace {

struct Tally {
    std::uint64_t total = 0;
    std::map<int, std::uint64_t> valleys;
    std::map<std::string, std::uint64_t> shapes;

    void add(int val, const std::string& shape, const CountOptions& o) {
        ++total;
        if (o.by_valleys) ++valleys[val];
        if (o.by_shape) ++shapes[shape];
    }
    void merge(const Tally& t) {
        total += t.total;
        for (auto& [k, v] : t.valleys) valleys[k] += v;
        for (auto& [k, v] : t.shapes) shapes[k] += v;
    }
};

// Runs the tasks on up to `shards` threads and merges the tallies in task order.
Tally run_sharded(const std::vector<std::function<Tally()>>& tasks, int shards) {
    Tally result;
    if (shards <= 1) {
        for (const auto& t : tasks) result.merge(t());
        return result;
    }
    std::vector<Tally> parts(tasks.size());
    for (size_t start = 0; start < tasks.size(); start += shards) {
        std::vector<std::future<Tally>> running;
        for (size_t i = start; i < std::min(tasks.size(), start + shards); ++i)
            running.push_back(std::async(std::launch::async, tasks[i]));
        for (size_t i = 0; i < running.size(); ++i) parts[start + i] = running[i].get();
    }
    for (const auto& p : parts) result.merge(p);
    return result;
}

}  // namespace

CountTable count(Family family, int n, const PatternSet& avoid, const CountOptions& o) {
    CountTable table;
    table.family = family;
    table.n = n;
    table.k = o.k;
    table.avoid = avoid;
    std::vector<std::function<Tally()>> tasks;

    switch (family) {
        case Family::matching: {
            check_cap("matchings", n, caps().matchings);
            if (n == 0) {
                tasks.push_back([&] {
                    Tally t;
                    t.add(0, "", o);
                    return t;
                });
                break;
            }
            for (int w = 2; w <= 2 * n; ++w) {
                tasks.push_back([&, w] {
                    Tally t;
                    for_each_matching_shard(n, w, [&](const Matching& m) {
                        if (!matching_avoids(m, avoid)) return;
                        auto d = shape(m);
                        t.add(statistics(d).valleys, d.steps, o);
                    });
                    return t;
                });
            }
            break;
        }
        case Family::partition: {
            check_cap("partitions", n, caps().partitions);
            tasks.push_back([&] {
                Tally t;
                for_each_partition(n, [&](const SetPartition& p) {
                    if (!partition_avoids(p, avoid)) return;
                    auto d = shape(partition_to_matching(p));
                    t.add(statistics(d).valleys, d.steps, o);
                });
                return t;
            });
            break;
        }
        case Family::placement: {
            check_cap("placements", n, caps().matchings);
            for (const auto& b : boards(n)) {
                tasks.push_back([&, b] {
                    Tally t;
                    const int val = statistics(b).valleys;
                    for (const auto& p : placements(b))
                        if (placement_avoids(p, avoid)) t.add(val, b.border.steps, o);
                    return t;
                });
            }
            break;
        }
        case Family::permutation:
        case Family::minimal_placement: {
            check_cap("permutations", n, caps().permutations);
            tasks.push_back([&] {
                Tally t;
                for_each_permutation(n, [&](const Perm& p) {
                    if (family == Family::permutation) {
                        if (perm_avoids(p, avoid)) t.add(0, "", o);
                    } else {
                        auto r = chi(p);
                        if (placement_avoids(r, avoid)) t.add(statistics(r.board).valleys, r.board.border.steps, o);
                    }
                });
                return t;
            });
            break;
        }
        case Family::fixed_matching: {
            if (avoid.size() != 1) throw Error(ErrorKind::invalid, "fixed-matching needs exactly one pattern");
            tasks.push_back([&] {
                Tally t;
                for (const auto& m : matchings_with_fixed(n, o.k))
                    if (in_fixed_class(m, avoid[0])) t.add(statistics(m).valleys, "", o);
                return t;
            });
            break;
        }
        case Family::dyck: {
            tasks.push_back([&] {
                Tally t;
                for (const auto& d : dyck_paths(n)) t.add(statistics(d).valleys, d.steps, o);
                return t;
            });
            break;
        }
        case Family::path_pair: {
            tasks.push_back([&] {
                Tally t;
                for (const auto& p : path_pairs_ending(n, o.k)) t.add(statistics(p.top).valleys, p.top.steps, o);
                return t;
            });
            break;
        }
    }
    Tally t = run_sharded(tasks, o.shards);
    table.total = t.total;
    table.by_valleys = std::move(t.valleys);
    table.by_shape = std::move(t.shapes);
    return table;
}

std::uint64_t count_total(Family family, int n, const PatternSet& avoid, int k) {
    CountOptions o;
    o.k = k;
    return count(family, n, avoid, o).total;
}

std::uint64_t count_on_board(const FerrersBoard& board, const PatternSet& avoid) {
    std::uint64_t c = 0;
    for (const auto& p : placements(board))
        if (placement_avoids(p, avoid)) ++c;
    return c;
}

ShapeWilfResult shape_wilf_check(const PatternSet& a, const PatternSet& b, int n_max) {
    check_cap("shape-Wilf", n_max, caps().matchings);
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& board : boards(n)) {
            auto x = count_on_board(board, a), y = count_on_board(board, b);
            if (x != y) return {false, board, x, y};
        }
    }
    return {};
}

const std::vector<std::vector<PatternSet>>& pair_classes() {
    static const std::vector<std::vector<PatternSet>> classes = [] {
        auto sets = [](std::initializer_list<const char*> xs) {
            std::vector<PatternSet> out;
            for (const char* x : xs) out.push_back(parse_pattern_set(x));
            return out;
        };
        return std::vector<std::vector<PatternSet>>{
            sets({"123,213", "132,213", "132,231", "132,312", "213,231", "213,312", "231,312", "231,321", "312,321"}),
            sets({"123,231"}),
            sets({"123,312"}),
            sets({"123,321"}),
            sets({"213,321"}),
            sets({"123,132"}),
            sets({"132,321"}),
        };
    }();
    return classes;
}

BoardFormulaReport classI_board_formula_check(int n_max) {
    check_cap("class I check", n_max, 5);
    BoardFormulaReport r;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& board : boards(n)) {
            const std::uint64_t expected = std::uint64_t{1} << (n - statistics(board).returns);
            for (const auto& pair : pair_classes()[0]) {
                ++r.boards_checked;
                auto got = count_on_board(board, pair);
                if (got != expected) {
                    r.ok = false;
                    r.failures.push_back(to_string(pair) + " on " + board.border.steps + ": " + std::to_string(got) +
                                         " != " + std::to_string(expected));
                }
            }
        }
    }
    return r;
}

BoardFormulaReport classIV_board_formula_check(int n_max) {
    check_cap("class IV check", n_max, 5);
    BoardFormulaReport r;
    const PatternSet pair = parse_pattern_set("123,321");
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& board : boards(n)) {
            auto s = statistics(board);
            const std::uint64_t expected = s.height < 5 ? (std::uint64_t{1} << s.eta) : 0;
            ++r.boards_checked;
            auto got = count_on_board(board, pair);
            if (got != expected) {
                r.ok = false;
                r.failures.push_back(board.border.steps + ": " + std::to_string(got) + " != " + std::to_string(expected));
            }
        }
    }
    return r;
}

}  // namespace arcpat
