#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcpat/series.hpp"

namespace arcpat {

enum class FormulaId {
    m312,
    p312,
    maps,
    s1342,
    s3124,
    classI_m,
    classI_p,
    classII_III_m,
    classII_III_p,
    classIV_m,
    classIV_p,
    classIV_exact,
    classV_m,
    catalan_v,
    dyck_rv,
    gouyou_m123,
    dnk_pairs,
};

std::string to_string(FormulaId id);
FormulaId parse_formula(const std::string& name);
const std::vector<FormulaId>& all_formulas();

// Largest order a formula accepts (the global order cap, lower for class V).
int order_cap(FormulaId id);

struct Route {
    std::string name;
    std::vector<Integer> values;  // coefficients of z^0 .. z^order
};

// Every independent computation of the sequence; the first is the primary one.
std::vector<Route> routes(FormulaId id, int order, int k = 0);
std::vector<Integer> coefficients(FormulaId id, int order, int k = 0);

// Brute-force count from module enumerate, when one exists.
std::optional<Integer> oracle(FormulaId id, int n, int k = 0);

struct CrossCheckRow {
    int n = 0;
    Integer formula;
    Integer oracle;
    bool equal = false;
};

struct CrossCheckReport {
    FormulaId id = FormulaId::m312;
    std::vector<CrossCheckRow> rows;
    bool ok() const;
};

CrossCheckReport cross_check(FormulaId id, int n_max, int k = 0);

std::vector<Integer> to_integers(const TruncSeries& s);

// Generating functions shared by several routes.
namespace gf {

// C(v, z), Dyck paths by valleys.
AuxSeries catalan_v(int order);
// C(v, z) from its closed form with a square root.
AuxSeries catalan_v_closed(int order);
// Dyck paths by returns (t) and valleys (v).
AuxSeries dyck_returns_valleys(int order);
// 1 + W / (1 - v W) with W = z K(0, v, z): labeled paths split at returns.
AuxSeries split_at_returns(const AuxSeries& k0);
// Class I matchings by valleys.
AuxSeries A1(int order);
// Class II/III matchings by valleys.
AuxSeries A2(int order);
// Dyck paths of height < 5 by eta (u) and valleys (v), at u = 2.
AuxSeries Q2(int order);
// 312-avoiding matchings by valleys.
AuxSeries L312(int order);
// Cubic in H whose root is K^{<2}(0, v, z), coefficients in v and z.
std::vector<AuxSeries> h_cubic(const AuxSeries& c);
// Cubic in B satisfied by the 312-avoiding partition series.
std::vector<TruncSeries> p312_cubic(int order);
// Cubic in S from the valley-refined 312 computation.
std::vector<AuxSeries> s_cubic(int order);
// Root of s_cubic with S(0) = 0.
AuxSeries s_root(int order);
// K(0, v, z) from the root S of s_cubic.
AuxSeries k0_from_s(const AuxSeries& s);
// Number of pairs in D^2_{n+k} ending with k south steps, n = 0..order.
std::vector<Integer> dnk_pairs(int order, int k);

}  // namespace gf

}  // namespace arcpat
