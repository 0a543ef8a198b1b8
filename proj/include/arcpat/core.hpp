#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arcpat {

enum class ErrorKind { invalid, parse, precondition, resource_cap, not_divisible };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// One-line notation, values 1..n.
using Perm = std::vector<int>;

// Standardize a sequence of distinct integers to a permutation of [k].
Perm standardize(const std::vector<int>& seq);

struct Matching {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // sorted by opener
    std::vector<int> fixed_points;          // sorted

    Matching() = default;
    explicit Matching(std::vector<std::pair<int, int>> arcs, std::vector<int> fixed_points = {});

    int size() const { return 2 * n + static_cast<int>(fixed_points.size()); }
    bool perfect() const { return fixed_points.empty(); }

    // partner[v] for v in 1..size(); 0 marks a fixed point. Index 0 unused.
    std::vector<int> partners() const;
    // 'O' opener, 'C' closer, 'F' fixed point, one char per vertex.
    std::string vertex_types() const;
    Matching without_fixed_points() const;

    std::string encode() const;
    static Matching parse(const std::string& text);

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching&, const Matching&) = default;
};

struct SetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;  // each sorted, blocks ordered by minimum

    SetPartition() = default;
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    // Arcs between consecutive elements of each block, sorted by opener.
    std::vector<std::pair<int, int>> arcs() const;

    std::string encode() const;
    static SetPartition parse(const std::string& text);

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

struct DyckPath {
    std::string steps;  // over {E, S}

    DyckPath() = default;
    explicit DyckPath(std::string steps);

    int semilength() const { return static_cast<int>(steps.size()) / 2; }
    int length() const { return static_cast<int>(steps.size()); }
    std::vector<int> heights() const;
    // Vertex V_i as (x, y) with the path running from (0, n) to (n, 0).
    std::pair<int, int> vertex(int i) const;
    bool is_peak(int i) const;  // V_i sits between an E and an S step

    static bool valid(const std::string& steps);

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
};

struct FerrersBoard {
    DyckPath border;

    FerrersBoard() = default;
    explicit FerrersBoard(DyckPath border) : border(std::move(border)) {}

    int n() const { return border.semilength(); }
    // Column heights, left to right; weakly decreasing.
    std::vector<int> column_heights() const;
    // Row lengths, bottom to top.
    std::vector<int> row_lengths() const;
    bool contains(const FerrersBoard& other) const;

    static FerrersBoard from_column_heights(const std::vector<int>& heights);

    friend bool operator==(const FerrersBoard&, const FerrersBoard&) = default;
    friend auto operator<=>(const FerrersBoard&, const FerrersBoard&) = default;
};

struct RookPlacement {
    FerrersBoard board;
    Perm rows;  // rows[c - 1] is the row (1 = bottom) of the rook in column c

    RookPlacement() = default;
    RookPlacement(FerrersBoard board, Perm rows);

    int n() const { return board.n(); }
    std::string encode() const;
    static RookPlacement parse(const std::string& text);

    friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
    friend auto operator<=>(const RookPlacement&, const RookPlacement&) = default;
};

struct LabeledDyckPath {
    DyckPath path;
    std::vector<int> labels;

    LabeledDyckPath() = default;
    LabeledDyckPath(DyckPath path, std::vector<int> labels);

    bool monotone() const;
    std::string encode() const;

    friend bool operator==(const LabeledDyckPath&, const LabeledDyckPath&) = default;
    friend auto operator<=>(const LabeledDyckPath&, const LabeledDyckPath&) = default;
};

struct Stats {
    int valleys = 0;
    int peaks = 0;
    int returns = 0;
    int height = 0;
    int eta = 0;  // number of indices with height exactly 2

    friend bool operator==(const Stats&, const Stats&) = default;
};

Stats statistics(const DyckPath& d);
Stats statistics(const FerrersBoard& f);
Stats statistics(const Matching& m);

// Opener/closer word of a perfect matching read as a Dyck path.
DyckPath shape(const Matching& m);

RookPlacement kappa(const Matching& m);
Matching kappa_inv(const RookPlacement& p);

Matching partition_to_matching(const SetPartition& p);

// Rooks inside Gamma(V_v), read by column and standardized.
Perm gamma_restriction(const RookPlacement& p, int v);

}  // namespace arcpat
