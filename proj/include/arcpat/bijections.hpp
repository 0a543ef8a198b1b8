#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arcpat/core.hpp"
#include "arcpat/patterns.hpp"

namespace arcpat {

// Bottom path weakly below top path, same semilength.
struct NoncrossingPathPair {
    DyckPath bottom;
    DyckPath top;

    NoncrossingPathPair() = default;
    NoncrossingPathPair(DyckPath bottom, DyckPath top);

    std::string encode() const;  // "bottom|top"
    static NoncrossingPathPair parse(const std::string& text);
    static bool noncrossing(const DyckPath& bottom, const DyckPath& top);

    friend bool operator==(const NoncrossingPathPair&, const NoncrossingPathPair&) = default;
    friend auto operator<=>(const NoncrossingPathPair&, const NoncrossingPathPair&) = default;
};

enum class LabeledClass { L, K, K_lt2, L_lt3, K_peak, L_peak };

std::string to_string(LabeledClass c);

// Pairs (i, j), i < j, of aligned border vertices: equal height with every
// vertex strictly between them higher.
std::vector<std::pair<int, int>> aligned_pairs(const DyckPath& d);

bool diagonal_property(const LabeledDyckPath& x);
bool zero_condition(const LabeledDyckPath& x);
bool peak_property(const LabeledDyckPath& x);
bool in_class(const LabeledDyckPath& x, LabeledClass c);

NoncrossingPathPair delta321(const RookPlacement& p);
NoncrossingPathPair delta321_by_switch(const RookPlacement& p);

// Inverse of delta321 on one board, tabulated from the forward map.
class Delta321Inverse {
public:
    explicit Delta321Inverse(const FerrersBoard& board);
    RookPlacement operator()(const DyckPath& bottom) const;
    size_t size() const { return table_.size(); }

private:
    FerrersBoard board_;
    std::map<DyckPath, RookPlacement> table_;
};

// Smallest Ferrers board containing the rooks of pi (column c has a rook in row pi[c-1]).
FerrersBoard minimal_board(const Perm& pi);

NoncrossingPathPair delta213(const RookPlacement& p);
RookPlacement delta213_inv(const NoncrossingPathPair& pair);

LabeledDyckPath pi_labeling(const RookPlacement& p);

// Membership in M_n^k(tau) for tau in {123, 213, 321}.
bool in_fixed_class(const Matching& m, const Pattern& tau);
RookPlacement kappa_prime(const Matching& m, const Pattern& tau);
// The rooks of the bottom k rows, read left to right, increase.
bool k_increasing(const RookPlacement& p, int k);
bool ends_with_south(const DyckPath& d, int k);

RookPlacement chi(const Perm& pi);
bool board_minimal(const RookPlacement& p);

// Image predicates for the restricted bijections.
bool in_E2(const NoncrossingPathPair& pair);
bool in_A2(const NoncrossingPathPair& pair);

}  // namespace arcpat
