#include "arcpat/patterns.hpp"

#include <algorithm>
#include <sstream>

namespace arcpat {

Pattern::Pattern(Perm p) : perm(std::move(p)) {
    const int k = size();
    if (k < 1) throw Error(ErrorKind::invalid, "empty pattern");
    std::vector<int> seen(k + 1, 0);
    for (int x : perm)
        if (x < 1 || x > k || seen[x]++) throw Error(ErrorKind::invalid, "pattern is not a permutation");
}

std::string Pattern::str() const {
    std::string out;
    for (int x : perm) {
        if (!out.empty() && size() > 9) out += '-';
        out += std::to_string(x);
    }
    return out;
}

Pattern Pattern::parse(const std::string& text) {
    Perm p;
    for (char c : text) {
        if (c < '1' || c > '9') throw Error(ErrorKind::parse, "cannot parse pattern: '" + text + "'");
        p.push_back(c - '0');
    }
    try {
        return Pattern(std::move(p));
    } catch (const Error&) {
        throw Error(ErrorKind::parse, "cannot parse pattern: '" + text + "'");
    }
}

PatternSet parse_pattern_set(const std::string& csv) {
    PatternSet out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }), item.end());
        if (!item.empty()) out.push_back(Pattern::parse(item));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const PatternSet& set) {
    std::string out;
    for (const auto& t : set) {
        if (!out.empty()) out += ',';
        out += t.str();
    }
    return out;
}

namespace {

// Search for indices i_1 < ... < i_k with seq order-isomorphic to t.
// `admissible(chosen, next)` adds an extra constraint on each extension.
template <class Admissible>
bool embed(const std::vector<int>& seq, const Perm& t, std::vector<int>& chosen, size_t start, Admissible&& admissible) {
    const size_t depth = chosen.size();
    if (depth == t.size()) return true;
    if (seq.size() - start < t.size() - depth) return false;
    for (size_t i = start; i < seq.size(); ++i) {
        bool ok = true;
        for (size_t a = 0; a < depth && ok; ++a)
            ok = (seq[chosen[a]] < seq[i]) == (t[a] < t[depth]);
        if (!ok || !admissible(chosen, static_cast<int>(i))) continue;
        chosen.push_back(static_cast<int>(i));
        if (embed(seq, t, chosen, i + 1, admissible)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool perm_contains(const Perm& p, const Pattern& t) {
    std::vector<int> chosen;
    return embed(p, t.perm, chosen, 0, [](const std::vector<int>&, int) { return true; });
}

int lis_length(const Perm& p) {
    std::vector<int> tails;
    for (int x : p) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

std::optional<std::vector<int>> find_arc_occurrence(const std::vector<std::pair<int, int>>& arcs, const Pattern& t) {
    // Arc a of the occurrence (by opener) has closer rank k - t(a), so closers
    // read in opener order are order-isomorphic to the complement of t.
    const int k = t.size();
    Perm target(k);
    for (int a = 0; a < k; ++a) target[a] = k + 1 - t.perm[a];
    std::vector<int> closers;
    for (auto [i, j] : arcs) closers.push_back(j);
    std::vector<int> chosen;
    auto before_all_closers = [&](const std::vector<int>& ch, int next) {
        const int opener = arcs[next].first;
        for (int c : ch)
            if (arcs[c].second <= opener) return false;
        return true;
    };
    if (embed(closers, target, chosen, 0, before_all_closers)) return chosen;
    return std::nullopt;
}

bool matching_avoids(const Matching& m, const Pattern& t) {
    return !find_arc_occurrence(m.arcs, t).has_value();
}

bool partition_avoids(const SetPartition& p, const Pattern& t) {
    return !find_arc_occurrence(p.arcs(), t).has_value();
}

std::optional<int> placement_violation(const RookPlacement& p, const Pattern& t) {
    const auto& d = p.board.border;
    if (d.length() == 0) return std::nullopt;
    for (int i = 1; i < d.length(); ++i)
        if (d.is_peak(i) && perm_contains(gamma_restriction(p, i), t)) return i;
    return std::nullopt;
}

bool placement_avoids(const RookPlacement& p, const Pattern& t) {
    return !placement_violation(p, t).has_value();
}

bool placement_avoids_naive(const RookPlacement& p, const Pattern& t) {
    for (int i = 0; i <= p.board.border.length(); ++i)
        if (perm_contains(gamma_restriction(p, i), t)) return false;
    return true;
}

bool perm_avoids(const Perm& p, const PatternSet& s) {
    return std::none_of(s.begin(), s.end(), [&](const Pattern& t) { return perm_contains(p, t); });
}

bool matching_avoids(const Matching& m, const PatternSet& s) {
    return std::all_of(s.begin(), s.end(), [&](const Pattern& t) { return matching_avoids(m, t); });
}

bool partition_avoids(const SetPartition& p, const PatternSet& s) {
    auto arcs = p.arcs();
    return std::none_of(s.begin(), s.end(), [&](const Pattern& t) { return find_arc_occurrence(arcs, t).has_value(); });
}

bool placement_avoids(const RookPlacement& p, const PatternSet& s) {
    return std::all_of(s.begin(), s.end(), [&](const Pattern& t) { return placement_avoids(p, t); });
}

std::vector<int> lis_labels(const RookPlacement& p) {
    std::vector<int> out;
    for (int i = 0; i <= p.board.border.length(); ++i) out.push_back(lis_length(gamma_restriction(p, i)));
    return out;
}

}  // namespace arcpat
