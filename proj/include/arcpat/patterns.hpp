#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcpat/core.hpp"

namespace arcpat {

struct Pattern {
    Perm perm;

    Pattern() = default;
    explicit Pattern(Perm perm);

    int size() const { return static_cast<int>(perm.size()); }
    std::string str() const;
    static Pattern parse(const std::string& text);  // e.g. "312"

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

using PatternSet = std::vector<Pattern>;

PatternSet parse_pattern_set(const std::string& csv);  // e.g. "123,321"
std::string to_string(const PatternSet& set);

bool perm_contains(const Perm& p, const Pattern& t);
int lis_length(const Perm& p);

// Indices (into arcs) of an occurrence of t among arcs sorted by opener.
std::optional<std::vector<int>> find_arc_occurrence(const std::vector<std::pair<int, int>>& arcs, const Pattern& t);

bool matching_avoids(const Matching& m, const Pattern& t);
bool partition_avoids(const SetPartition& p, const Pattern& t);

// Border vertex whose Gamma rectangle contains t, if any. Only peaks are scanned.
std::optional<int> placement_violation(const RookPlacement& p, const Pattern& t);
bool placement_avoids(const RookPlacement& p, const Pattern& t);
// Reference version scanning every border vertex.
bool placement_avoids_naive(const RookPlacement& p, const Pattern& t);

bool perm_avoids(const Perm& p, const PatternSet& s);
bool matching_avoids(const Matching& m, const PatternSet& s);
bool partition_avoids(const SetPartition& p, const PatternSet& s);
bool placement_avoids(const RookPlacement& p, const PatternSet& s);

// LIS length of gamma_restriction(p, i) for every border vertex.
std::vector<int> lis_labels(const RookPlacement& p);

}  // namespace arcpat
