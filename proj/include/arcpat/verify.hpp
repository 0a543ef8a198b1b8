#pragma once

#include <string>
#include <vector>

#include "arcpat/formulas.hpp"

namespace arcpat {

struct Check {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    bool ok() const;
    void add(const std::string& suite, const std::string& name, bool passed, const std::string& detail = {});
    void append(const Report& other);
};

// Published counts, frozen.
namespace tables {
// Matchings avoiding 231, 123, 132 for n = 1..10.
const std::vector<std::pair<std::string, std::vector<long long>>>& matchings();
// Partitions avoiding 231, 123, 132 for n = 0..11.
const std::vector<std::pair<std::string, std::vector<long long>>>& partitions();
// Matchings avoiding a pair, classes I, II and III (shared), IV, V, VI, VII for n = 1..7.
const std::vector<std::pair<std::string, std::vector<long long>>>& pairs();
}  // namespace tables

Report verify_matching_table(int max_n);
Report verify_partition_table(int max_n);
Report verify_pair_table(int max_n);
Report verify_tables(int max_matching, int max_partition);
// Generating functions against brute force, and against the tables where they exist.
Report verify_formulas(int max_matching, int max_partition);
// Series identities and functional-equation residuals through z^order.
Report verify_identities(int order);
// Permutations avoiding 1342, 3124, 1324 against board-minimal placements.
Report verify_bona(int max_n);
Report verify_bijections(int max_n);
// M_n^k(tau) against D^2_{n,k}, n + k <= max_total.
Report verify_fixed_points(int max_total);
Report verify_shape_wilf(int max_board, int max_matching);
Report verify_classI(int max_board, int max_matching, int max_partition);
Report verify_classIV(int max_board, int max_matching, int max_partition);

const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name, int max_n, int max_partition);

}  // namespace arcpat
