#include "arcpat/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "arcpat/enumerate.hpp"

namespace arcpat {

bool Report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add(const std::string& suite, const std::string& name, bool passed, const std::string& detail) {
    checks.push_back({suite, name, passed, detail});
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

namespace tables {

const std::vector<std::pair<std::string, std::vector<long long>>>& matchings() {
    static const std::vector<std::pair<std::string, std::vector<long long>>> t = {
        {"231", {1, 3, 14, 83, 570, 4318, 35068, 299907, 2668994, 24513578}},
        {"123", {1, 3, 14, 84, 594, 4719, 40898, 379236, 3711916, 37975756}},
        {"132", {1, 3, 14, 84, 595, 4750, 41541, 390566, 3895957, 40835749}},
    };
    return t;
}

const std::vector<std::pair<std::string, std::vector<long long>>>& partitions() {
    static const std::vector<std::pair<std::string, std::vector<long long>>> t = {
        {"231", {1, 1, 2, 5, 15, 52, 202, 858, 3909, 18822, 94712, 493834}},
        {"123", {1, 1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566, 520257}},
        {"132", {1, 1, 2, 5, 15, 52, 202, 859, 3930, 19096, 97593, 520694}},
    };
    return t;
}

const std::vector<std::pair<std::string, std::vector<long long>>>& pairs() {
    static const std::vector<std::pair<std::string, std::vector<long long>>> t = {
        {"I", {1, 3, 13, 67, 381, 2307, 14589}},       {"II&III", {1, 3, 13, 66, 364, 2112, 12688}},
        {"IV", {1, 3, 13, 63, 313, 1563, 7813}},       {"V", {1, 3, 13, 68, 399, 2528, 16916}},
        {"VI", {1, 3, 13, 69, 414, 2697, 18625}},      {"VII", {1, 3, 13, 66, 363, 2091, 12407}},
    };
    return t;
}

}  // namespace tables

namespace {

const char* kRoman[] = {"I", "II", "III", "IV", "V", "VI", "VII"};

// Row of the pair table for class index c (II and III share a row).
int pair_row(int c) { return c <= 1 ? c : c - 1; }

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : "; ") + x;
    return out;
}

std::string mismatch(int n, const std::string& got, const std::string& want) {
    return "n=" + std::to_string(n) + ": got " + got + ", expected " + want;
}

template <class T>
bool distinct(const std::vector<T>& xs) {
    std::set<T> s(xs.begin(), xs.end());
    return s.size() == xs.size();
}

template <class T>
bool same_set(const std::vector<T>& a, const std::vector<T>& b) {
    return std::set<T>(a.begin(), a.end()) == std::set<T>(b.begin(), b.end());
}

std::string board_name(const FerrersBoard& f) { return "F=" + f.border.steps; }

std::vector<RookPlacement> avoiding(const std::vector<RookPlacement>& ps, const PatternSet& s) {
    std::vector<RookPlacement> out;
    for (const auto& p : ps)
        if (placement_avoids(p, s)) out.push_back(p);
    return out;
}

}  // namespace

Report verify_matching_table(int max_n) {
    Report r;
    const int max_matching = max_n;
    for (const auto& [tau, row] : tables::matchings()) {
        std::vector<std::string> bad;
        const int top = std::min<int>(max_matching, row.size());
        for (int n = 1; n <= top; ++n) {
            auto c = count_total(Family::matching, n, parse_pattern_set(tau));
            if (static_cast<long long>(c) != row[n - 1]) bad.push_back(mismatch(n, std::to_string(c), std::to_string(row[n - 1])));
        }
        r.add("tables", "matchings avoiding " + tau + ", n<=" + std::to_string(top), bad.empty(), join(bad));
    }
    return r;
}

Report verify_partition_table(int max_n) {
    Report r;
    const int max_partition = max_n;
    for (const auto& [tau, row] : tables::partitions()) {
        std::vector<std::string> bad;
        const int top = std::min<int>(max_partition, row.size() - 1);
        for (int n = 0; n <= top; ++n) {
            auto c = count_total(Family::partition, n, parse_pattern_set(tau));
            if (static_cast<long long>(c) != row[n]) bad.push_back(mismatch(n, std::to_string(c), std::to_string(row[n])));
        }
        r.add("tables", "partitions avoiding " + tau + ", n<=" + std::to_string(top), bad.empty(), join(bad));
    }
    return r;
}

Report verify_pair_table(int max_n) {
    Report r;
    const int max_matching = max_n;
    const auto& classes = pair_classes();
    for (size_t c = 0; c < classes.size(); ++c) {
        const auto& row = tables::pairs()[pair_row(static_cast<int>(c))].second;
        const int top = std::min<int>(max_matching, row.size());
        std::vector<std::string> bad;
        for (const auto& pair : classes[c])
            for (int n = 1; n <= top; ++n) {
                auto v = count_total(Family::matching, n, pair);
                if (static_cast<long long>(v) != row[n - 1])
                    bad.push_back("{" + to_string(pair) + "} " + mismatch(n, std::to_string(v), std::to_string(row[n - 1])));
            }
        r.add("tables", std::string("class ") + kRoman[c] + " pairs, n<=" + std::to_string(top), bad.empty(), join(bad));
    }
    return r;
}

Report verify_tables(int max_matching, int max_partition) {
    Report r = verify_matching_table(max_matching);
    r.append(verify_partition_table(max_partition));
    r.append(verify_pair_table(max_matching));
    return r;
}

namespace {

void cross(Report& r, const std::string& suite, FormulaId id, int n_max, const std::vector<long long>* table = nullptr,
           int table_offset = 0) {
    if (n_max > order_cap(id)) n_max = order_cap(id);
    auto report = cross_check(id, n_max);
    std::vector<std::string> bad;
    for (const auto& row : report.rows)
        if (!row.equal) bad.push_back(mismatch(row.n, row.formula.get_str(), row.oracle.get_str()));
    r.add(suite, to_string(id) + " vs brute force, n<=" + std::to_string(n_max), bad.empty(), join(bad));
    if (!table) return;
    bad.clear();
    auto values = coefficients(id, n_max);
    for (int n = table_offset; n <= n_max && n - table_offset < static_cast<int>(table->size()); ++n)
        if (values[n] != Integer(static_cast<long>((*table)[n - table_offset])))
            bad.push_back(mismatch(n, values[n].get_str(), std::to_string((*table)[n - table_offset])));
    r.add(suite, to_string(id) + " vs table, n<=" + std::to_string(n_max), bad.empty(), join(bad));
}

}  // namespace

Report verify_formulas(int max_matching, int max_partition) {
    Report r;
    const auto& pairs = tables::pairs();
    cross(r, "formulas", FormulaId::m312, max_matching, &tables::matchings()[0].second, 1);
    cross(r, "formulas", FormulaId::p312, max_partition, &tables::partitions()[0].second, 0);
    cross(r, "formulas", FormulaId::classI_m, max_matching, &pairs[0].second, 1);
    cross(r, "formulas", FormulaId::classI_p, max_partition);
    cross(r, "formulas", FormulaId::classII_III_m, max_matching, &pairs[1].second, 1);
    cross(r, "formulas", FormulaId::classII_III_p, max_partition);
    cross(r, "formulas", FormulaId::classIV_m, max_matching, &pairs[2].second, 1);
    cross(r, "formulas", FormulaId::classIV_p, max_partition);
    cross(r, "formulas", FormulaId::classV_m, max_matching, &pairs[3].second, 1);
    return r;
}

Report verify_identities(int order) {
    Report r;
    const std::string s = "identities";
    auto agree = [&](FormulaId id, const std::string& label) {
        auto rs = routes(id, std::min(order, order_cap(id)));
        std::vector<std::string> bad;
        for (size_t i = 1; i < rs.size(); ++i)
            for (size_t n = 0; n < rs[0].values.size(); ++n)
                if (rs[i].values[n] != rs[0].values[n]) {
                    bad.push_back(rs[i].name + " " + mismatch(static_cast<int>(n), rs[i].values[n].get_str(), rs[0].values[n].get_str()));
                    break;
                }
        std::vector<std::string> names;
        for (const auto& x : rs) names.push_back(x.name);
        r.add(s, label + " (" + join(names) + "), order " + std::to_string(rs[0].values.size() - 1), bad.empty(), join(bad));
    };
    agree(FormulaId::m312, "1/(1-zK(0,z)) equals its closed form");
    agree(FormulaId::maps, "K(0,z) equals 2*3^n(2n)!/(n!(n+2)!)");
    agree(FormulaId::classIV_exact, "class IV rational GF equals (5^(n-1)+1)/2");
    for (auto id : {FormulaId::p312, FormulaId::s1342, FormulaId::classI_m, FormulaId::classI_p, FormulaId::classII_III_m,
                    FormulaId::classII_III_p, FormulaId::classIV_m, FormulaId::classIV_p, FormulaId::catalan_v,
                    FormulaId::dyck_rv, FormulaId::gouyou_m123})
        agree(id, to_string(id) + " routes agree");
    for (auto e : {Equation::K_Ll, Equation::K_Llv, Equation::K_lt2, Equation::K_peak, Equation::G_classV, Equation::C_valleys}) {
        auto x = fe_iterate(e, order);
        auto res = fe_residual(e, x);
        bool zero = true;
        for (int i = 0; i <= res.order(); ++i) zero = zero && res[i].is_zero();
        r.add(s, to_string(e) + " residual vanishes mod z^" + std::to_string(order + 1), zero);
    }
    return r;
}

Report verify_bona(int max_n) {
    Report r;
    const std::string s = "bona";
    auto coeffs = coefficients(FormulaId::s1342, max_n);
    std::vector<std::string> bad;
    for (int n = 0; n <= max_n; ++n) {
        auto c = count_total(Family::permutation, n, parse_pattern_set("1342"));
        if (coeffs[n] != Integer(static_cast<unsigned long>(c))) bad.push_back(mismatch(n, coeffs[n].get_str(), std::to_string(c)));
    }
    r.add(s, "s1342 series vs permutations avoiding 1342, n<=" + std::to_string(max_n), bad.empty(), join(bad));
    for (auto [board_pat, perm_pat] : {std::pair{"312", "3124"}, std::pair{"132", "1324"}}) {
        bad.clear();
        for (int n = 0; n <= max_n; ++n) {
            auto a = count_total(Family::minimal_placement, n, parse_pattern_set(board_pat));
            auto b = count_total(Family::permutation, n, parse_pattern_set(perm_pat));
            if (a != b) bad.push_back(mismatch(n, std::to_string(a), std::to_string(b)));
        }
        r.add(s, std::string("board-minimal placements avoiding ") + board_pat + " vs permutations avoiding " + perm_pat +
                     ", n<=" + std::to_string(max_n),
              bad.empty(), join(bad));
    }
    // chi transports avoidance of tau(1..k-1) to avoidance of tau.
    bad.clear();
    for (int n = 0; n <= std::min(max_n, 6); ++n)
        for_each_permutation(n, [&](const Perm& p) {
            auto placed = chi(p);
            if (!board_minimal(placed)) bad.push_back("chi not board-minimal for n=" + std::to_string(n));
            for (auto [tau, short_tau] : {std::pair{"3124", "312"}, std::pair{"1324", "132"}, std::pair{"2314", "231"}})
                if (perm_avoids(p, parse_pattern_set(tau)) != placement_avoids(placed, parse_pattern_set(short_tau)))
                    if (bad.size() < 5) bad.push_back(std::string("restriction fails for ") + tau);
        });
    r.add(s, "chi pattern restriction, n<=" + std::to_string(std::min(max_n, 6)), bad.empty(), join(bad));
    return r;
}

Report verify_bijections(int max_n) {
    Report r;
    const std::string s = "bijections";
    const auto p321 = parse_pattern_set("321"), p213 = parse_pattern_set("213"), p312 = parse_pattern_set("312");
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> d321, sw, d213, inv213, inv321, pil, e2, a2;
        std::vector<LabeledDyckPath> lt3_image, all_pi;
        for (const auto& f : boards(n)) {
            const auto all = placements(f);
            const auto pairs = path_pairs(f);
            // delta321
            const auto r321 = avoiding(all, p321);
            std::vector<NoncrossingPathPair> img;
            for (const auto& p : r321) {
                img.push_back(delta321(p));
                if (!(delta321_by_switch(p) == img.back())) sw.push_back(board_name(f));
            }
            if (!distinct(img) || !same_set(img, pairs)) d321.push_back(board_name(f));
            Delta321Inverse back(f);
            for (const auto& p : r321)
                if (!(back(delta321(p).bottom) == p)) {
                    inv321.push_back(board_name(f));
                    break;
                }
            // delta213
            const auto r213 = avoiding(all, p213);
            img.clear();
            for (const auto& p : r213) {
                img.push_back(delta213(p));
                if (!(delta213_inv(img.back()) == p)) inv213.push_back(board_name(f) + " " + p.encode());
            }
            if (!distinct(img) || !same_set(img, pairs)) d213.push_back(board_name(f));
            for (const auto& x : pairs)
                if (!(delta213(delta213_inv(x)) == x)) inv213.push_back(x.encode());
            // pi
            std::vector<LabeledDyckPath> lab;
            for (const auto& p : avoiding(all, p312)) {
                lab.push_back(pi_labeling(p));
                if (placement_avoids(p, parse_pattern_set("123"))) lt3_image.push_back(lab.back());
            }
            if (!distinct(lab) || !same_set(lab, labeled_paths(f.border, LabeledClass::L))) pil.push_back(board_name(f));
            // E2 and A2
            img.clear();
            for (const auto& p : avoiding(all, parse_pattern_set("123,321"))) img.push_back(delta321(p));
            const auto st = statistics(f);
            const auto e2set = e2_pairs(f);
            const bool low = st.height < 5;
            const size_t expect = low ? (size_t{1} << st.eta) : 0;
            if (!same_set(img, e2set) || e2set.size() != expect || img.size() != expect) e2.push_back(board_name(f));
            img.clear();
            for (const auto& p : avoiding(all, parse_pattern_set("213,321"))) img.push_back(delta213(p));
            if (!same_set(img, a2_pairs(f))) a2.push_back(board_name(f));
        }
        const std::string tag = ", n=" + std::to_string(n);
        r.add(s, "delta321 is a bijection onto D2_F" + tag, d321.empty(), join(d321));
        r.add(s, "delta321 equals the switch construction" + tag, sw.empty(), join(sw));
        r.add(s, "delta321 inverse table round-trips" + tag, inv321.empty(), join(inv321));
        r.add(s, "delta213 is a bijection onto D2_F" + tag, d213.empty(), join(d213));
        r.add(s, "delta213 round-trips with its inverse" + tag, inv213.empty(), join(inv213));
        r.add(s, "pi is a bijection onto L_F" + tag, pil.empty(), join(pil));
        r.add(s, "delta321 maps R_F(123,321) onto E2_F of size 2^eta" + tag, e2.empty(), join(e2));
        r.add(s, "delta213 maps R_F(213,321) onto A2_F" + tag, a2.empty(), join(a2));
        const auto lt3 = labeled_paths(n, LabeledClass::L_lt3);
        r.add(s, "pi maps R_n(123,312) onto L^{<3}_n" + tag, distinct(lt3_image) && same_set(lt3_image, lt3));
        std::vector<LabeledDyckPath> peak_image;
        for (const auto& p : minimal_placements(n))
            if (placement_avoids(p, p312)) peak_image.push_back(pi_labeling(p));
        const auto peak = labeled_paths(n, LabeledClass::L_peak);
        r.add(s, "pi maps board-minimal R_n(312) onto peak-property paths" + tag,
              distinct(peak_image) && same_set(peak_image, peak));
    }
    return r;
}

Report verify_fixed_points(int max_total) {
    Report r;
    const std::string s = "fixed-points";
    for (const char* t : {"321", "213"}) {
        const Pattern tau = Pattern::parse(t);
        std::vector<std::string> bad, shape_bad;
        for (int total = 1; total <= max_total; ++total)
            for (int k = 0; k <= total; ++k) {
                const int n = total - k;
                std::vector<RookPlacement> image;
                for (const auto& m : matchings_with_fixed(n, k)) {
                    if (!in_fixed_class(m, tau)) continue;
                    auto p = kappa_prime(m, tau);
                    image.push_back(p);
                    if (!k_increasing(p, k)) shape_bad.push_back(m.encode() + " not k-increasing");
                    if (tau.str() == "321" && !ends_with_south(delta321(p).bottom, k))
                        shape_bad.push_back(m.encode() + " j-sequence does not end k..0");
                }
                const size_t d = path_pairs_ending(n, k).size();
                if (image.size() != d || !distinct(image))
                    bad.push_back("n=" + std::to_string(n) + ",k=" + std::to_string(k) + ": " + std::to_string(image.size()) +
                                  " vs " + std::to_string(d));
            }
        r.add(s, std::string("|M_n^k(") + t + ")| = |D2_{n,k}|, n+k<=" + std::to_string(max_total), bad.empty(), join(bad));
        r.add(s, std::string("kappa' images for ") + t + " are k-increasing", shape_bad.empty(),
              join(std::vector<std::string>(shape_bad.begin(), shape_bad.begin() + std::min<size_t>(5, shape_bad.size()))));
    }
    return r;
}

Report verify_shape_wilf(int max_board, int max_matching) {
    Report r;
    const std::string s = "shape-wilf";
    const std::string tag = ", n<=" + std::to_string(max_board);
    auto eq = [&](const std::string& a, const std::string& b, bool expect) {
        auto res = shape_wilf_check(parse_pattern_set(a), parse_pattern_set(b), max_board);
        std::string detail;
        if (res.board)
            detail = board_name(*res.board) + ": " + std::to_string(res.first) + " vs " + std::to_string(res.second);
        r.add(s, "{" + a + "} " + (expect ? "~" : "!~") + " {" + b + "}" + tag, res.equivalent == expect, detail);
    };
    eq("123", "321", true);
    eq("123", "213", true);
    eq("231", "312", true);
    eq("123", "231", false);
    eq("123", "132", false);
    eq("231", "132", false);
    const auto& classes = pair_classes();
    for (size_t c = 0; c < classes.size(); ++c)
        for (size_t i = 1; i < classes[c].size(); ++i)
            eq(to_string(classes[c][0]), to_string(classes[c][i]), true);
    for (size_t a = 0; a < classes.size(); ++a)
        for (size_t b = a + 1; b < classes.size(); ++b) eq(to_string(classes[a][0]), to_string(classes[b][0]), false);
    if (max_board >= 5) {
        auto f = FerrersBoard::from_column_heights({5, 5, 5, 4, 4});
        auto x = count_on_board(f, parse_pattern_set("123,231"));
        auto y = count_on_board(f, parse_pattern_set("123,312"));
        r.add(s, "board " + f.border.steps + " separates {123,231} and {123,312} (14 vs 15)", x == 14 && y == 15,
              std::to_string(x) + " vs " + std::to_string(y));
    }
    std::vector<std::string> bad;
    for (int n = 0; n <= max_matching; ++n) {
        auto x = count_total(Family::matching, n, parse_pattern_set("123,231"));
        auto y = count_total(Family::matching, n, parse_pattern_set("123,312"));
        if (x != y) bad.push_back(mismatch(n, std::to_string(x), std::to_string(y)));
    }
    r.add(s, "|M_n(123,231)| = |M_n(123,312)|, n<=" + std::to_string(max_matching), bad.empty(), join(bad));
    return r;
}

namespace {

void board_formula(Report& r, const std::string& suite, const std::string& what, const BoardFormulaReport& b) {
    std::vector<std::string> head(b.failures.begin(), b.failures.begin() + std::min<size_t>(5, b.failures.size()));
    r.add(suite, what + " (" + std::to_string(b.boards_checked) + " boards)", b.ok, join(head));
}

}  // namespace

Report verify_classI(int max_board, int max_matching, int max_partition) {
    Report r;
    board_formula(r, "classI", "2^(n-returns) avoiders per board, n<=" + std::to_string(std::min(max_board, 5)),
                  classI_board_formula_check(std::min(max_board, 5)));
    cross(r, "classI", FormulaId::classI_m, max_matching, &tables::pairs()[0].second, 1);
    cross(r, "classI", FormulaId::classI_p, max_partition);
    return r;
}

Report verify_classIV(int max_board, int max_matching, int max_partition) {
    Report r;
    board_formula(r, "classIV", "2^eta avoiders per board of height < 5, n<=" + std::to_string(std::min(max_board, 5)),
                  classIV_board_formula_check(std::min(max_board, 5)));
    cross(r, "classIV", FormulaId::classIV_m, max_matching, &tables::pairs()[2].second, 1);
    cross(r, "classIV", FormulaId::classIV_exact, max_matching, &tables::pairs()[2].second, 1);
    cross(r, "classIV", FormulaId::classIV_p, max_partition);
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"tables", "formulas",   "identities", "bona", "bijections",
                                                   "fixed-points", "shape-wilf", "classI", "classIV", "all"};
    return names;
}

Report run_suite(const std::string& name, int max_n, int max_partition) {
    if (max_n < 0 || max_partition < 0) throw Error(ErrorKind::invalid, "bounds must be nonnegative");
    if (name == "tables") return verify_tables(max_n, max_partition);
    if (name == "formulas") return verify_formulas(max_n, max_partition);
    if (name == "identities") return verify_identities(std::min(max_n, caps().order));
    if (name == "bona") return verify_bona(max_n);
    if (name == "bijections") return verify_bijections(max_n);
    if (name == "fixed-points") return verify_fixed_points(max_n);
    if (name == "shape-wilf") return verify_shape_wilf(max_n, max_n);
    if (name == "classI") return verify_classI(max_n, max_n, max_partition);
    if (name == "classIV") return verify_classIV(max_n, max_n, max_partition);
    if (name == "all") {
        Report r;
        for (const auto& s : suite_names())
            if (s != "all") r.append(run_suite(s, max_n, max_partition));
        return r;
    }
    throw Error(ErrorKind::parse, "unknown suite '" + name + "'");
}

}  // namespace arcpat
