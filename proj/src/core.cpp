#include "arcpat/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace arcpat {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

[[noreturn]] void parse_error(const std::string& what, const std::string& text) {
    throw Error(ErrorKind::parse, "cannot parse " + what + ": '" + text + "'");
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            parse_error(what, text);
        out.push_back(std::stoi(item));
    }
    return out;
}

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

Perm standardize(const std::vector<int>& seq) {
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    Perm out(seq.size());
    for (size_t i = 0; i < seq.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seq[i]) - sorted.begin()) + 1;
    return out;
}

// ---------------------------------------------------------------- Matching

Matching::Matching(std::vector<std::pair<int, int>> a, std::vector<int> fixed)
    : n(static_cast<int>(a.size())), arcs(std::move(a)), fixed_points(std::move(fixed)) {
    std::sort(arcs.begin(), arcs.end());
    std::sort(fixed_points.begin(), fixed_points.end());
    const int total = size();
    std::vector<int> seen(total + 1, 0);
    auto mark = [&](int v) {
        if (v < 1 || v > total || seen[v]++)
            throw Error(ErrorKind::invalid, "matching vertices must cover [" + std::to_string(total) + "] exactly once");
    };
    for (auto [i, j] : arcs) {
        if (i >= j) throw Error(ErrorKind::invalid, "arc (" + std::to_string(i) + "," + std::to_string(j) + ") has i >= j");
        mark(i);
        mark(j);
    }
    for (int v : fixed_points) mark(v);
}

std::vector<int> Matching::partners() const {
    std::vector<int> p(size() + 1, 0);
    for (auto [i, j] : arcs) {
        p[i] = j;
        p[j] = i;
    }
    return p;
}

std::string Matching::vertex_types() const {
    std::string t(size(), 'F');
    for (auto [i, j] : arcs) {
        t[i - 1] = 'O';
        t[j - 1] = 'C';
    }
    return t;
}

Matching Matching::without_fixed_points() const {
    if (fixed_points.empty()) return *this;
    std::vector<int> relabel(size() + 1, 0);
    int next = 0;
    std::vector<char> fixed(size() + 1, 0);
    for (int v : fixed_points) fixed[v] = 1;
    for (int v = 1; v <= size(); ++v)
        if (!fixed[v]) relabel[v] = ++next;
    std::vector<std::pair<int, int>> a;
    for (auto [i, j] : arcs) a.emplace_back(relabel[i], relabel[j]);
    return Matching(std::move(a));
}

std::string Matching::encode() const {
    std::string out;
    auto p = partners();
    for (int v = 1; v <= size(); ++v) {
        if (p[v] == 0)
            out += "(" + std::to_string(v) + ")";
        else if (p[v] > v)
            out += "(" + std::to_string(v) + "," + std::to_string(p[v]) + ")";
    }
    return out;
}

Matching Matching::parse(const std::string& raw) {
    const std::string text = strip(raw);
    std::vector<std::pair<int, int>> a;
    std::vector<int> fixed;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(') parse_error("matching", raw);
        size_t close = text.find(')', pos);
        if (close == std::string::npos) parse_error("matching", raw);
        auto nums = parse_int_list(text.substr(pos + 1, close - pos - 1), "matching");
        if (nums.size() == 2)
            a.emplace_back(nums[0], nums[1]);
        else if (nums.size() == 1)
            fixed.push_back(nums[0]);
        else
            parse_error("matching", raw);
        pos = close + 1;
    }
    return Matching(std::move(a), std::move(fixed));
}

// ------------------------------------------------------------ SetPartition

SetPartition::SetPartition(int size, std::vector<std::vector<int>> b) : n(size), blocks(std::move(b)) {
    std::vector<int> seen(n + 1, 0);
    for (auto& block : blocks) {
        if (block.empty()) throw Error(ErrorKind::invalid, "empty block");
        std::sort(block.begin(), block.end());
        for (int x : block) {
            if (x < 1 || x > n || seen[x]++)
                throw Error(ErrorKind::invalid, "blocks must partition [" + std::to_string(n) + "]");
        }
    }
    for (int x = 1; x <= n; ++x)
        if (!seen[x]) throw Error(ErrorKind::invalid, "blocks must partition [" + std::to_string(n) + "]");
    std::sort(blocks.begin(), blocks.end());
}

std::vector<std::pair<int, int>> SetPartition::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& block : blocks)
        for (size_t t = 0; t + 1 < block.size(); ++t) out.emplace_back(block[t], block[t + 1]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string SetPartition::encode() const {
    std::string out;
    for (const auto& block : blocks) out += "{" + join(block) + "}";
    return out;
}

SetPartition SetPartition::parse(const std::string& raw) {
    const std::string text = strip(raw);
    std::vector<std::vector<int>> blocks;
    int count = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '{') parse_error("partition", raw);
        size_t close = text.find('}', pos);
        if (close == std::string::npos) parse_error("partition", raw);
        auto block = parse_int_list(text.substr(pos + 1, close - pos - 1), "partition");
        if (block.empty()) {
            if (text != "{}") parse_error("partition", raw);
        } else {
            count += static_cast<int>(block.size());
            blocks.push_back(std::move(block));
        }
        pos = close + 1;
    }
    return SetPartition(count, std::move(blocks));
}

// ---------------------------------------------------------------- DyckPath

bool DyckPath::valid(const std::string& steps) {
    int h = 0;
    for (char c : steps) {
        if (c == 'E')
            ++h;
        else if (c == 'S')
            --h;
        else
            return false;
        if (h < 0) return false;
    }
    return h == 0;
}

DyckPath::DyckPath(std::string s) : steps(std::move(s)) {
    if (!valid(steps)) throw Error(ErrorKind::invalid, "not a Dyck path: '" + steps + "'");
}

std::vector<int> DyckPath::heights() const {
    std::vector<int> h(steps.size() + 1, 0);
    for (size_t i = 0; i < steps.size(); ++i) h[i + 1] = h[i] + (steps[i] == 'E' ? 1 : -1);
    return h;
}

std::pair<int, int> DyckPath::vertex(int i) const {
    int x = 0, s = 0;
    for (int t = 0; t < i; ++t) (steps[t] == 'E' ? x : s)++;
    return {x, semilength() - s};
}

bool DyckPath::is_peak(int i) const {
    return i > 0 && i < length() && steps[i - 1] == 'E' && steps[i] == 'S';
}

// ------------------------------------------------------------ FerrersBoard

std::vector<int> FerrersBoard::column_heights() const {
    std::vector<int> h;
    int y = n();
    for (char c : border.steps) {
        if (c == 'S')
            --y;
        else
            h.push_back(y);
    }
    return h;
}

std::vector<int> FerrersBoard::row_lengths() const {
    auto cols = column_heights();
    std::vector<int> rows(n(), 0);
    for (int h : cols)
        for (int r = 0; r < h; ++r) ++rows[r];
    return rows;
}

bool FerrersBoard::contains(const FerrersBoard& other) const {
    if (other.n() != n()) return false;
    auto a = column_heights(), b = other.column_heights();
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

FerrersBoard FerrersBoard::from_column_heights(const std::vector<int>& h) {
    const int n = static_cast<int>(h.size());
    std::string steps;
    int y = n;
    for (int c : h) {
        if (c > y) throw Error(ErrorKind::invalid, "column heights must be weakly decreasing");
        steps.append(y - c, 'S');
        steps += 'E';
        y = c;
    }
    steps.append(y, 'S');
    return FerrersBoard(DyckPath(steps));
}

// ----------------------------------------------------------- RookPlacement

RookPlacement::RookPlacement(FerrersBoard b, Perm r) : board(std::move(b)), rows(std::move(r)) {
    const int size = board.n();
    if (static_cast<int>(rows.size()) != size) throw Error(ErrorKind::invalid, "need one rook per column");
    auto heights = board.column_heights();
    std::vector<int> used(size + 1, 0);
    for (int c = 0; c < size; ++c) {
        int r = rows[c];
        if (r < 1 || r > size || used[r]++) throw Error(ErrorKind::invalid, "need one rook per row");
        if (r > heights[c])
            throw Error(ErrorKind::invalid, "rook in column " + std::to_string(c + 1) + " lies outside the board");
    }
}

std::string RookPlacement::encode() const {
    return "border:" + board.border.steps + ";rooks:" + join(rows);
}

RookPlacement RookPlacement::parse(const std::string& raw) {
    const std::string text = strip(raw);
    const std::string a = "border:", b = ";rooks:";
    size_t mid = text.find(b);
    if (text.rfind(a, 0) != 0 || mid == std::string::npos) parse_error("placement", raw);
    std::string steps = text.substr(a.size(), mid - a.size());
    if (!DyckPath::valid(steps)) parse_error("placement", raw);
    return RookPlacement(FerrersBoard(DyckPath(steps)), parse_int_list(text.substr(mid + b.size()), "placement"));
}

// --------------------------------------------------------- LabeledDyckPath

LabeledDyckPath::LabeledDyckPath(DyckPath p, std::vector<int> l) : path(std::move(p)), labels(std::move(l)) {
    if (static_cast<int>(labels.size()) != path.length() + 1)
        throw Error(ErrorKind::invalid, "need one label per border vertex");
}

bool LabeledDyckPath::monotone() const {
    for (int i = 0; i < path.length(); ++i) {
        int d = labels[i + 1] - labels[i];
        if (path.steps[i] == 'E' ? (d < 0 || d > 1) : (d > 0 || d < -1)) return false;
    }
    return true;
}

std::string LabeledDyckPath::encode() const {
    return "path:" + path.steps + ";labels:" + join(labels);
}

// -------------------------------------------------------------- statistics

Stats statistics(const DyckPath& d) {
    Stats s;
    auto h = d.heights();
    for (int i = 0; i + 1 < d.length(); ++i) {
        if (d.steps[i] == 'S' && d.steps[i + 1] == 'E') ++s.valleys;
        if (d.steps[i] == 'E' && d.steps[i + 1] == 'S') ++s.peaks;
    }
    for (int i = 0; i < d.length(); ++i)
        if (d.steps[i] == 'S' && h[i + 1] == 0) ++s.returns;
    for (int x : h) {
        s.height = std::max(s.height, x);
        if (x == 2) ++s.eta;
    }
    return s;
}

Stats statistics(const FerrersBoard& f) { return statistics(f.border); }

Stats statistics(const Matching& m) {
    Stats s = statistics(shape(m.without_fixed_points()));
    const std::string t = m.vertex_types();
    s.valleys = 0;
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == 'C' && t[i + 1] == 'O') ++s.valleys;
    return s;
}

DyckPath shape(const Matching& m) {
    if (!m.perfect()) throw Error(ErrorKind::precondition, "shape needs a perfect matching");
    std::string steps = m.vertex_types();
    for (char& c : steps) c = (c == 'O' ? 'E' : 'S');
    return DyckPath(steps);
}

// ------------------------------------------------------------------- kappa

RookPlacement kappa(const Matching& m) {
    if (!m.perfect()) throw Error(ErrorKind::precondition, "kappa needs a perfect matching; use kappa_prime");
    const std::string t = m.vertex_types();
    std::vector<int> rank(m.size() + 1, 0);
    int openers = 0, closers = 0;
    for (int v = 1; v <= m.size(); ++v) rank[v] = (t[v - 1] == 'O') ? openers++ : closers++;
    Perm rows(m.n);
    for (auto [i, j] : m.arcs) rows[rank[i]] = m.n - rank[j];
    return RookPlacement(FerrersBoard(shape(m)), std::move(rows));
}

Matching kappa_inv(const RookPlacement& p) {
    const int n = p.n();
    std::vector<int> column_vertex, row_vertex(n + 1, 0);
    int closers = 0;
    for (int v = 1; v <= 2 * n; ++v) {
        if (p.board.border.steps[v - 1] == 'E')
            column_vertex.push_back(v);
        else
            row_vertex[n - closers++] = v;
    }
    std::vector<std::pair<int, int>> arcs;
    for (int c = 0; c < n; ++c) arcs.emplace_back(column_vertex[c], row_vertex[p.rows[c]]);
    return Matching(std::move(arcs));
}

Matching partition_to_matching(const SetPartition& p) {
    std::vector<int> opener_at(p.n + 1, 0), closer_at(p.n + 1, 0);
    std::vector<char> has_next(p.n + 1, 0), has_prev(p.n + 1, 0);
    for (auto [a, b] : p.arcs()) {
        has_next[a] = 1;
        has_prev[b] = 1;
    }
    int pos = 0;
    for (int x = 1; x <= p.n; ++x) {
        if (has_prev[x]) closer_at[x] = ++pos;
        if (has_next[x]) opener_at[x] = ++pos;
    }
    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : p.arcs()) arcs.emplace_back(opener_at[a], closer_at[b]);
    return Matching(std::move(arcs));
}

Perm gamma_restriction(const RookPlacement& p, int v) {
    if (v < 0 || v > p.board.border.length()) throw Error(ErrorKind::invalid, "border vertex index out of range");
    auto [x, y] = p.board.border.vertex(v);
    std::vector<int> seq;
    for (int c = 0; c < x; ++c)
        if (p.rows[c] <= y) seq.push_back(p.rows[c]);
    return standardize(seq);
}

}  // namespace arcpat
