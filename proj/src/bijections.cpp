#include "arcpat/bijections.hpp"

#include <algorithm>

#include "arcpat/enumerate.hpp"

namespace arcpat {

namespace {

const Pattern p321({3, 2, 1});
const Pattern p213({2, 1, 3});
const Pattern p312({3, 1, 2});

void require_avoids(const RookPlacement& p, const Pattern& t, const char* map) {
    if (auto v = placement_violation(p, t))
        throw Error(ErrorKind::precondition, std::string(map) + ": placement " + p.encode() + " contains " + t.str() +
                                                 " inside Gamma(V_" + std::to_string(*v) + ")");
}

DyckPath path_from_heights(const std::vector<int>& j) {
    std::string steps;
    for (size_t i = 0; i + 1 < j.size(); ++i) {
        int d = j[i + 1] - j[i];
        if (d != 1 && d != -1) throw Error(ErrorKind::invalid, "height sequence jumps by " + std::to_string(d));
        steps += (d == 1 ? 'E' : 'S');
    }
    if (!DyckPath::valid(steps)) throw Error(ErrorKind::invalid, "height sequence is not a Dyck path");
    return DyckPath(steps);
}

}  // namespace

NoncrossingPathPair::NoncrossingPathPair(DyckPath b, DyckPath t) : bottom(std::move(b)), top(std::move(t)) {
    if (!noncrossing(bottom, top)) throw Error(ErrorKind::invalid, "bottom path goes above top path");
}

bool NoncrossingPathPair::noncrossing(const DyckPath& bottom, const DyckPath& top) {
    if (bottom.length() != top.length()) return false;
    auto a = bottom.heights(), b = top.heights();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string NoncrossingPathPair::encode() const { return bottom.steps + "|" + top.steps; }

NoncrossingPathPair NoncrossingPathPair::parse(const std::string& text) {
    size_t bar = text.find('|');
    if (bar == std::string::npos) throw Error(ErrorKind::parse, "cannot parse path pair: '" + text + "'");
    std::string b = text.substr(0, bar), t = text.substr(bar + 1);
    if (!DyckPath::valid(b) || !DyckPath::valid(t)) throw Error(ErrorKind::parse, "cannot parse path pair: '" + text + "'");
    return NoncrossingPathPair(DyckPath(b), DyckPath(t));
}

std::string to_string(LabeledClass c) {
    switch (c) {
        case LabeledClass::L: return "L";
        case LabeledClass::K: return "K";
        case LabeledClass::K_lt2: return "K_lt2";
        case LabeledClass::L_lt3: return "L_lt3";
        case LabeledClass::K_peak: return "K_peak";
        case LabeledClass::L_peak: return "L_peak";
    }
    return "?";
}

// ------------------------------------------------------- labeled predicates

std::vector<std::pair<int, int>> aligned_pairs(const DyckPath& d) {
    auto h = d.heights();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(h.size()); ++i) {
        int j = i + 1;
        while (j < static_cast<int>(h.size()) && h[j] > h[i]) ++j;
        if (j < static_cast<int>(h.size()) && j > i + 1 && h[j] == h[i]) out.emplace_back(i, j);
    }
    return out;
}

bool diagonal_property(const LabeledDyckPath& x) {
    for (auto [i, j] : aligned_pairs(x.path))
        if (x.labels[i] < x.labels[j]) return false;
    return true;
}

bool zero_condition(const LabeledDyckPath& x) {
    auto h = x.path.heights();
    for (size_t i = 0; i < h.size(); ++i)
        if ((x.labels[i] == 0) != (h[i] == 0)) return false;
    return true;
}

bool peak_property(const LabeledDyckPath& x) {
    for (int i = 1; i < x.path.length(); ++i)
        if (x.path.is_peak(i) && (x.labels[i - 1] + 1 != x.labels[i] || x.labels[i + 1] + 1 != x.labels[i])) return false;
    return true;
}

bool in_class(const LabeledDyckPath& x, LabeledClass c) {
    if (!x.monotone() || x.labels.back() != 0) return false;
    if (std::any_of(x.labels.begin(), x.labels.end(), [](int a) { return a < 0; })) return false;
    if (!diagonal_property(x)) return false;
    const bool is_l = (c == LabeledClass::L || c == LabeledClass::L_lt3 || c == LabeledClass::L_peak);
    if (is_l && !zero_condition(x)) return false;
    const int bound = (c == LabeledClass::K_lt2) ? 2 : (c == LabeledClass::L_lt3) ? 3 : -1;
    if (bound > 0 && std::any_of(x.labels.begin(), x.labels.end(), [&](int a) { return a >= bound; })) return false;
    if ((c == LabeledClass::K_peak || c == LabeledClass::L_peak) && !peak_property(x)) return false;
    return true;
}

// ---------------------------------------------------------------- delta321

NoncrossingPathPair delta321(const RookPlacement& p) {
    require_avoids(p, p321, "delta321");
    auto ell = lis_labels(p);
    auto h = p.board.border.heights();
    std::vector<int> j(h.size());
    for (size_t i = 0; i < h.size(); ++i) {
        j[i] = 2 * ell[i] - h[i];
        if (j[i] < 0 || j[i] > h[i]) throw Error(ErrorKind::invalid, "delta321: j_i outside [0, h_i]");
    }
    return NoncrossingPathPair(path_from_heights(j), p.board.border);
}

NoncrossingPathPair delta321_by_switch(const RookPlacement& p) {
    require_avoids(p, p321, "delta321");
    auto ell = lis_labels(p);
    std::string steps = p.board.border.steps;
    for (size_t i = 0; i < steps.size(); ++i)
        if (ell[i] == ell[i + 1]) steps[i] = (steps[i] == 'E' ? 'S' : 'E');
    if (!DyckPath::valid(steps)) throw Error(ErrorKind::invalid, "delta321: switched path is not a Dyck path");
    return NoncrossingPathPair(DyckPath(steps), p.board.border);
}

Delta321Inverse::Delta321Inverse(const FerrersBoard& board) : board_(board) {
    for (const auto& p : placements(board)) {
        if (!placement_avoids(p, p321)) continue;
        auto [it, fresh] = table_.emplace(delta321(p).bottom, p);
        if (!fresh) throw Error(ErrorKind::invalid, "delta321 is not injective on board " + board.border.steps);
    }
}

RookPlacement Delta321Inverse::operator()(const DyckPath& bottom) const {
    auto it = table_.find(bottom);
    if (it == table_.end())
        throw Error(ErrorKind::invalid, "no 321-avoiding placement on " + board_.border.steps + " maps to " + bottom.steps);
    return it->second;
}

// ---------------------------------------------------------------- delta213

FerrersBoard minimal_board(const Perm& pi) {
    std::vector<int> heights(pi.size());
    int run = 0;
    for (int c = static_cast<int>(pi.size()) - 1; c >= 0; --c) heights[c] = run = std::max(run, pi[c]);
    return FerrersBoard::from_column_heights(heights);
}

NoncrossingPathPair delta213(const RookPlacement& p) {
    require_avoids(p, p213, "delta213");
    return NoncrossingPathPair(minimal_board(p.rows).border, p.board.border);
}

RookPlacement delta213_inv(const NoncrossingPathPair& pair) {
    FerrersBoard inner(pair.bottom);
    const int n = inner.n();
    auto lengths = inner.row_lengths();
    Perm rows(n, 0);
    for (int r = n; r >= 1; --r) {
        int c = lengths[r - 1];
        while (c >= 1 && rows[c - 1] != 0) --c;
        if (c < 1) throw Error(ErrorKind::invalid, "delta213_inv: row " + std::to_string(r) + " has no free column");
        rows[c - 1] = r;
    }
    if (minimal_board(rows) != inner) throw Error(ErrorKind::invalid, "delta213_inv: bottom path is not a minimal board");
    return RookPlacement(FerrersBoard(pair.top), rows);
}

// -------------------------------------------------------------------- Pi

LabeledDyckPath pi_labeling(const RookPlacement& p) {
    require_avoids(p, p312, "pi_labeling");
    return LabeledDyckPath(p.board.border, lis_labels(p));
}

// ------------------------------------------------------------ fixed points

bool in_fixed_class(const Matching& m, const Pattern& tau) {
    const std::string name = tau.str();
    if (name != "123" && name != "213" && name != "321")
        throw Error(ErrorKind::invalid, "fixed-point classes exist only for 123, 213, 321");
    if (!matching_avoids(m.without_fixed_points(), tau)) return false;
    for (const auto& a : m.arcs) {
        for (const auto& b : m.arcs) {
            if (a.first >= b.first) continue;
            for (int f : m.fixed_points) {
                bool bad = false;
                if (name == "123")  // (x1,x5), (x2,x4), x3 fixed
                    bad = b.second < a.second && b.first < f && f < b.second;
                else if (name == "213")  // (x1,x5), (x3,x4), x2 fixed
                    bad = b.second < a.second && a.first < f && f < b.first;
                else  // (x1,x4), (x2,x5), x3 fixed
                    bad = b.first < a.second && a.second < b.second && b.first < f && f < a.second;
                if (bad) return false;
            }
        }
    }
    return true;
}

RookPlacement kappa_prime(const Matching& m, const Pattern& tau) {
    if (!in_fixed_class(m, tau))
        throw Error(ErrorKind::precondition, "kappa_prime: " + m.encode() + " is not in M_n^k(" + tau.str() + ")");
    const int total = m.size();
    const int k = static_cast<int>(m.fixed_points.size());
    auto arcs = m.arcs;
    for (int i = 1; i <= k; ++i) arcs.emplace_back(m.fixed_points[i - 1], total + k + 1 - i);
    return kappa(Matching(std::move(arcs)));
}

bool k_increasing(const RookPlacement& p, int k) {
    int last = 0;
    for (int r : p.rows) {
        if (r > k) continue;
        if (r < last) return false;
        last = r;
    }
    return true;
}

bool ends_with_south(const DyckPath& d, int k) {
    if (k > d.length()) return false;
    return std::all_of(d.steps.end() - k, d.steps.end(), [](char c) { return c == 'S'; });
}

// -------------------------------------------------------------------- chi

RookPlacement chi(const Perm& pi) { return RookPlacement(minimal_board(pi), pi); }

bool board_minimal(const RookPlacement& p) {
    const auto& d = p.board.border;
    for (int i = 1; i < d.length(); ++i) {
        if (!d.is_peak(i)) continue;
        auto [x, y] = d.vertex(i);
        if (p.rows[x - 1] != y) return false;
    }
    return true;
}

// ------------------------------------------------------- image predicates

bool in_E2(const NoncrossingPathPair& pair) {
    auto h = pair.top.heights(), j = pair.bottom.heights();
    for (size_t i = 0; i < h.size(); ++i) {
        switch (h[i]) {
            case 0:
            case 4:
                if (j[i] != 0) return false;
                break;
            case 1:
            case 3:
                if (j[i] != 1) return false;
                break;
            case 2:
                if (j[i] != 0 && j[i] != 2) return false;
                break;
            default: return false;
        }
    }
    return true;
}

bool in_A2(const NoncrossingPathPair& pair) {
    std::vector<std::pair<int, int>> peaks, vertices;
    for (int i = 1; i < pair.bottom.length(); ++i)
        if (pair.bottom.is_peak(i)) peaks.push_back(pair.bottom.vertex(i));
    for (int i = 0; i <= pair.top.length(); ++i) vertices.push_back(pair.top.vertex(i));
    for (auto [x, y] : peaks)
        for (auto [a, b] : vertices)
            if (x < a && y < b) return false;
    return true;
}

}  // namespace arcpat
