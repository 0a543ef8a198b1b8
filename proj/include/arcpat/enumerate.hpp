#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcpat/bijections.hpp"
#include "arcpat/core.hpp"
#include "arcpat/patterns.hpp"

namespace arcpat {

struct Caps {
    int matchings = 8;
    int partitions = 11;
    int permutations = 9;
    int order = 30;
};

// Process-wide desk-scale limits; adjustable, never silently exceeded.
Caps& caps();
void check_cap(const std::string& what, int n, int limit);

// ----------------------------------------------------------------- streams

void for_each_matching(int n, const std::function<void(const Matching&)>& f);
// Only the matchings in which vertex 1 is matched to `partner`.
void for_each_matching_shard(int n, int partner, const std::function<void(const Matching&)>& f);
void for_each_partition(int n, const std::function<void(const SetPartition&)>& f);
void for_each_permutation(int n, const std::function<void(const Perm&)>& f);

std::vector<Matching> matchings(int n);
std::vector<Matching> matchings_with_fixed(int n, int k);
std::vector<SetPartition> partitions(int n);
std::vector<Perm> permutations(int n);
std::vector<DyckPath> dyck_paths(int n);
std::vector<FerrersBoard> boards(int n);
std::vector<RookPlacement> placements(const FerrersBoard& board);
std::vector<RookPlacement> placements(int n);
std::vector<RookPlacement> minimal_placements(int n);

std::vector<NoncrossingPathPair> path_pairs(const FerrersBoard& top);
std::vector<NoncrossingPathPair> path_pairs(int n);
// Pairs in D^2_{n+k} whose paths both end with k south steps.
std::vector<NoncrossingPathPair> path_pairs_ending(int n, int k);
std::vector<NoncrossingPathPair> e2_pairs(const FerrersBoard& top);
std::vector<NoncrossingPathPair> a2_pairs(const FerrersBoard& top);

std::vector<LabeledDyckPath> labeled_paths(const DyckPath& d, LabeledClass c);
std::vector<LabeledDyckPath> labeled_paths(int n, LabeledClass c);

// Pair of south/east paths from the origin; h = a + b, eps = b - d for end
// points (a, b) of the top path and (a, d) of the bottom path.
struct B2Pair {
    std::string bottom;
    std::string top;
    int h = 0;
    int eps = 0;
};
std::vector<B2Pair> b2_pairs(int n);

// ------------------------------------------------------------------ counts

enum class Family { matching, partition, placement, permutation, minimal_placement, fixed_matching, dyck, path_pair };

std::string to_string(Family f);
Family parse_family(const std::string& name);

struct CountOptions {
    int k = 0;
    bool by_shape = false;
    bool by_valleys = false;
    int shards = 1;
};

struct CountTable {
    Family family = Family::matching;
    int n = 0;
    int k = 0;
    PatternSet avoid;
    std::uint64_t total = 0;
    std::map<int, std::uint64_t> by_valleys;
    std::map<std::string, std::uint64_t> by_shape;
};

CountTable count(Family family, int n, const PatternSet& avoid, const CountOptions& options = {});
std::uint64_t count_total(Family family, int n, const PatternSet& avoid, int k = 0);
std::uint64_t count_on_board(const FerrersBoard& board, const PatternSet& avoid);

struct ShapeWilfResult {
    bool equivalent = true;
    std::optional<FerrersBoard> board;  // first board with differing counts
    std::uint64_t first = 0;
    std::uint64_t second = 0;
};

ShapeWilfResult shape_wilf_check(const PatternSet& a, const PatternSet& b, int n_max);

struct BoardFormulaReport {
    bool ok = true;
    int boards_checked = 0;
    std::vector<std::string> failures;
};

// Every class-I pair has 2^(n - r(F)) avoiders on every board F.
BoardFormulaReport classI_board_formula_check(int n_max);
// {123,321} has 2^eta(F) avoiders on boards of height < 5 and none otherwise.
BoardFormulaReport classIV_board_formula_check(int n_max);

// Pattern pairs of each class; index 0 is class I, ..., index 6 is class VII.
const std::vector<std::vector<PatternSet>>& pair_classes();

}  // namespace arcpat
