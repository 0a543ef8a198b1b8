#include "arcpat/formulas.hpp"

#include <algorithm>
#include <map>

#include "arcpat/enumerate.hpp"

namespace arcpat {

namespace {

using V = AuxPoly::Var;

const std::vector<std::pair<FormulaId, const char*>>& names() {
    static const std::vector<std::pair<FormulaId, const char*>> table = {
        {FormulaId::m312, "m312"},
        {FormulaId::p312, "p312"},
        {FormulaId::maps, "maps"},
        {FormulaId::s1342, "s1342"},
        {FormulaId::s3124, "s3124"},
        {FormulaId::classI_m, "classI_m"},
        {FormulaId::classI_p, "classI_p"},
        {FormulaId::classII_III_m, "classII_III_m"},
        {FormulaId::classII_III_p, "classII_III_p"},
        {FormulaId::classIV_m, "classIV_m"},
        {FormulaId::classIV_p, "classIV_p"},
        {FormulaId::classIV_exact, "classIV_exact"},
        {FormulaId::classV_m, "classV_m"},
        {FormulaId::catalan_v, "catalan_v"},
        {FormulaId::dyck_rv, "dyck_rv"},
        {FormulaId::gouyou_m123, "gouyou_m123"},
        {FormulaId::dnk_pairs, "dnk_pairs"},
    };
    return table;
}

// Polynomial in z with integer coefficients, lowest degree first.
TruncSeries poly(std::initializer_list<long> c, int order) {
    TruncSeries s(order);
    int i = 0;
    for (long x : c) {
        if (i <= order) s[i] = x;
        ++i;
    }
    return s;
}

AuxSeries z_aux(int order) { return AuxSeries::z(order); }
AuxPoly v() { return AuxPoly::var(V::V); }

// (1 - a z)^(3/2)
TruncSeries three_halves(long a, int order) {
    TruncSeries base = poly({1, -a}, order);
    return base * sqrt(base);
}

// Picard iteration for x = rhs(x) where rhs gains one order of z per pass.
template <class F>
AuxSeries picard(F&& rhs, int order) {
    AuxSeries x(0);
    for (int p = 1; p <= order; ++p) x = rhs(x.extend(p));
    x = x.extend(order);
    if (!(rhs(x) == x)) throw Error(ErrorKind::invalid, "fixed-point iteration did not stabilize");
    return x;
}

// x(z) -> x(c z)
AuxSeries scale_z(const AuxSeries& x, const Rational& c) {
    AuxSeries out = x;
    Rational p = 1;
    for (int i = 0; i <= x.order(); ++i) {
        out[i] = x[i] * p;
        p *= c;
    }
    return out;
}

// T(v, x) = 1 + x / (1 - v x), x with zero constant term.
AuxSeries T(const AuxSeries& x) {
    AuxSeries den = AuxSeries::constant(AuxPoly(1), x.order()) - v() * x;
    return x * inverse(den) + AuxPoly(1);
}

// sum c_{n,k} z^(2n-k) / (1-z)^(2n+extra), the v -> 1/z, z -> z^2/(1-z)^2 substitution.
TruncSeries valley_substitute(const AuxSeries& a, int order, int extra) {
    TruncSeries b(order);
    for (int n = 0; n <= a.order(); ++n) {
        a[n].for_each([&](int, int k, int, const Rational& c) {
            const int e = 2 * n - k;
            if (e < 0) throw Error(ErrorKind::precondition, "negative power of z after substitution");
            const int m = 2 * n + extra;
            if (m == 0) {
                if (e <= order) b[e] += c;
                return;
            }
            for (int j = 0; e + j <= order; ++j) b[e + j] += c * Rational(binomial(m - 1 + j, j));
        });
    }
    return b;
}

std::vector<Integer> take(const std::vector<Integer>& xs, int order) {
    return std::vector<Integer>(xs.begin(), xs.begin() + order + 1);
}

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

Integer ipow(unsigned long b, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

}  // namespace

std::string to_string(FormulaId id) {
    for (auto& [f, s] : names())
        if (f == id) return s;
    return "?";
}

FormulaId parse_formula(const std::string& name) {
    for (auto& [f, s] : names())
        if (name == s) return f;
    throw Error(ErrorKind::parse, "unknown formula id '" + name + "'");
}

const std::vector<FormulaId>& all_formulas() {
    static const std::vector<FormulaId> ids = [] {
        std::vector<FormulaId> out;
        for (auto& [f, s] : names()) out.push_back(f);
        return out;
    }();
    return ids;
}

int order_cap(FormulaId id) {
    if (id == FormulaId::classV_m) return std::min(caps().order, 20);
    return caps().order;
}

std::vector<Integer> to_integers(const TruncSeries& s) {
    std::vector<Integer> out;
    for (int i = 0; i <= s.order(); ++i) {
        Rational q = s[i];
        q.canonicalize();
        if (q.get_den() != 1)
            throw Error(ErrorKind::invalid, "coefficient of z^" + std::to_string(i) + " is not an integer: " + to_string(q));
        out.push_back(q.get_num());
    }
    return out;
}

// ------------------------------------------------------------------- gf

namespace gf {

AuxSeries catalan_v(int order) { return fe_iterate(Equation::C_valleys, order); }

AuxSeries catalan_v_closed(int order) {
    const int n = order + 1;
    AuxSeries z = z_aux(n);
    AuxSeries one = AuxSeries::constant(AuxPoly(1), n);
    AuxSeries vm1 = AuxSeries::constant(v() - AuxPoly(1), n);
    AuxSeries disc = one - AuxPoly(2) * (v() + AuxPoly(1)) * z + (vm1 * vm1) * z * z;
    AuxSeries num = one - z + v() * z - sqrt(disc);
    return AuxPoly(Rational(1, 2)) * divide_var(num.shift_down(1), V::V);
}

AuxSeries dyck_returns_valleys(int order) {
    AuxSeries c = catalan_v(order);
    AuxSeries zc = c.shift_up(1);
    AuxPoly t = AuxPoly::var(V::T);
    AuxSeries num = (t * (AuxPoly(1) - v())) * zc + AuxPoly(1);
    AuxSeries den = AuxSeries::constant(AuxPoly(1), order) - (t * v()) * zc;
    return num * inverse(den);
}

AuxSeries split_at_returns(const AuxSeries& k0) {
    AuxSeries w = k0.shift_up(1);
    AuxSeries den = AuxSeries::constant(AuxPoly(1), k0.order()) - v() * w;
    return w * inverse(den) + AuxPoly(1);
}

AuxSeries A1(int order) {
    AuxSeries c2 = scale_z(catalan_v(order), 2);
    AuxSeries zc = c2.shift_up(1);
    AuxSeries num = (AuxPoly(1) - v()) * zc + AuxPoly(1);
    AuxSeries den = AuxSeries::constant(AuxPoly(1), order) - v() * zc;
    return num * inverse(den);
}

AuxSeries A2(int order) {
    AuxSeries k = fe_iterate(Equation::K_lt2, order);
    return split_at_returns(set_var(k, V::U, 0));
}

AuxSeries Q2(int order) {
    AuxSeries z = z_aux(order);
    AuxSeries inner = T(z);
    AuxSeries next = T(AuxPoly(2) * (z * inner));
    AuxSeries next2 = T(AuxPoly(2) * (z * next));
    return T(z * next2);
}

AuxSeries L312(int order) {
    AuxSeries k = fe_iterate(Equation::K_Llv, order);
    return split_at_returns(set_var(k, V::U, 0));
}

std::vector<AuxSeries> h_cubic(const AuxSeries& c) {
    const int n = c.order();
    AuxSeries z = z_aux(n), one = AuxSeries::constant(AuxPoly(1), n);
    AuxSeries z2 = z * z;
    AuxPoly vv = v(), w = AuxPoly(1) - v();  // v and 1 - v
    AuxSeries c2 = c * c;
    AuxSeries alpha = (vv * vv) * z2;
    AuxSeries beta = AuxPoly(-2) * vv * z + (AuxPoly(2) * vv * w) * z2 + (vv * vv) * (z2 * c);
    AuxSeries gamma = one + (AuxPoly(3) * vv - AuxPoly(2)) * z + (w * w) * z2 + AuxPoly(-2) * vv * (z * c) +
                      (vv * w) * (z2 * c) + (vv * vv) * (z2 * c2);
    AuxSeries delta = -one + w * z + (AuxPoly(2) * vv - AuxPoly(1)) * (z * c) + (vv * w) * (z2 * c2);
    return {delta, gamma, beta, alpha};
}

std::vector<TruncSeries> p312_cubic(int order) {
    TruncSeries q = poly({1, -2, 5}, order);
    return {
        poly({1, -4, 23, -9}, order),
        poly({-3, 13, -64, 60, -9}, order),
        poly({3, -14, 59, -85, 54, -9}, order),
        poly({-1, 1}, order) * q * q,
    };
}

std::vector<AuxSeries> s_cubic(int order) {
    AuxSeries z = z_aux(order), one = AuxSeries::constant(AuxPoly(1), order);
    AuxPoly vm1 = v() - AuxPoly(1);
    AuxPoly q = AuxPoly(4) * vm1 * vm1;  // 4 (v - 1)^2
    AuxSeries z2 = z * z;
    return {
        -z,
        q * z2 - (AuxPoly(2) * (AuxPoly(2) * v() + AuxPoly(1))) * z + one,
        (AuxPoly(2) * q) * z2 - (AuxPoly(4) * v() + AuxPoly(5)) * z,
        q * z2,
    };
}

AuxSeries s_root(int order) {
    auto p = s_cubic(order);
    AuxSeries lin = p[1] - AuxPoly(1);
    return picard([&](const AuxSeries& x) { return -(p[0] + lin * x + p[2] * x * x + p[3] * x * x * x); }, order);
}

AuxSeries k0_from_s(const AuxSeries& s) {
    const int n = s.order();
    AuxSeries z = z_aux(n), one = AuxSeries::constant(AuxPoly(1), n);
    AuxPoly vm1 = v() - AuxPoly(1);
    AuxPoly q = AuxPoly(4) * vm1 * vm1;
    AuxSeries z2 = z * z;
    AuxSeries edge = q * z - AuxPoly(2) * v() - AuxPoly(1);  // 4(v-1)^2 z - 2v - 1
    AuxSeries num = (edge * z) * (s * s) + ((AuxPoly(2) * q) * z2 - (AuxPoly(2) * (AuxPoly(2) * v() + AuxPoly(3))) * z + one) * s +
                    edge * z;
    // den = -2 v z (1 - 2 (v - 1)(S + 1) z)
    AuxSeries rest = one - (AuxPoly(2) * vm1) * ((s + AuxPoly(1)) * z);
    AuxSeries reduced = divide_var(num.shift_down(1), V::V);
    return AuxPoly(Rational(-1, 2)) * (reduced * inverse(rest.truncate(n - 1)));
}

std::vector<Integer> dnk_pairs(int order, int k) {
    std::vector<Integer> out;
    for (int n = 0; n <= order; ++n) {
        const int m = n + k;
        const int steps = 2 * m - k;
        // ways[j][h]: bottom height j, top height h, j <= h.
        std::vector<std::vector<Integer>> ways(m + 1, std::vector<Integer>(m + 1, 0));
        ways[0][0] = 1;
        for (int s = 0; s < steps; ++s) {
            std::vector<std::vector<Integer>> next(m + 1, std::vector<Integer>(m + 1, 0));
            for (int j = 0; j <= m; ++j)
                for (int h = j; h <= m; ++h) {
                    if (ways[j][h] == 0) continue;
                    for (int dj : {1, -1})
                        for (int dh : {1, -1}) {
                            int nj = j + dj, nh = h + dh;
                            if (nj < 0 || nh < 0 || nj > m || nh > m || nj > nh) continue;
                            next[nj][nh] += ways[j][h];
                        }
                }
            ways = std::move(next);
        }
        out.push_back(ways[k][k]);
    }
    return out;
}

}  // namespace gf

// ---------------------------------------------------------------- routes

std::vector<Route> routes(FormulaId id, int order, int k) {
    if (order < 0) throw Error(ErrorKind::invalid, "negative order");
    if (order > order_cap(id))
        throw Error(ErrorKind::resource_cap, to_string(id) + ": order " + std::to_string(order) + " exceeds the cap " +
                                                 std::to_string(order_cap(id)));
    if (k != 0 && id != FormulaId::dnk_pairs) throw Error(ErrorKind::invalid, "k applies only to dnk_pairs");
    const int n = order;
    std::vector<Route> out;
    auto add = [&](const std::string& name, const TruncSeries& s) { out.push_back({name, take(to_integers(s), n)}); };

    switch (id) {
        case FormulaId::m312: {
            TruncSeries k0 = to_trunc(set_var(fe_iterate(Equation::K_Ll, n), V::U, 0));
            add("labeled-paths", inverse(TruncSeries::constant(1, n) - k0.shift_up(1)));
            TruncSeries den = (poly({1, 36}, n + 1) - three_halves(12, n + 1)).shift_down(1);
            add("closed-form", Rational(54) * inverse(den));
            break;
        }
        case FormulaId::p312: {
            add("valley-transform", partition_transform(gf::L312(std::max(0, n - 1)), n));
            // B = 1 + z W removes the triple root at z = 0.
            auto p = gf::p312_cubic(n + 3);
            std::vector<TruncSeries> q(4, TruncSeries(n + 3));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j <= i; ++j) q[j] += Rational(binomial(i, j)) * p[i].shift_up(j);
            for (auto& c : q) c = c.shift_down(3);
            TruncSeries w = algebraic_solve(q, 1, n);
            add("cubic", w.shift_up(1) + Rational(1));
            std::vector<TruncSeries> r_poly = {-poly({0, 0, 1}, n), poly({1, -6, 3}, n), poly({0, -4, 3}, n), poly({0, 0, 4}, n)};
            TruncSeries r = algebraic_solve(r_poly, 0, n);
            TruncSeries c2 = poly({0, 0, 0, 12, -104, 28, 48}, n);
            TruncSeries c1 = poly({0, 0, -12, 81, 50, -179, 48}, n);
            TruncSeries c0 = poly({3, -19, 73, -168, 270, -211, 48}, n);
            TruncSeries qz = poly({1, -2, 5}, n);
            TruncSeries den = poly({1, -1}, n) * poly({3, -7}, n) * qz * qz;
            add("valley-cubic", partition_transform(gf::split_at_returns(gf::k0_from_s(gf::s_root(n))), n));
            add("root-R", (c2 * r * r + c1 * r + c0) * inverse(den));
            break;
        }
        case FormulaId::maps: {
            add("labeled-paths", to_trunc(set_var(fe_iterate(Equation::K_Ll, n), V::U, 0)));
            TruncSeries num = -(poly({1, -18}, n + 2) - three_halves(12, n + 2));
            add("closed-form", Rational(1, 54) * num.shift_down(2));
            TruncSeries direct(n);
            for (int i = 0; i <= n; ++i)
            {
                direct[i] = Rational(Integer(2) * ipow(3, i) * binomial(2 * i, i), Integer((i + 1) * (i + 2)));
                direct[i].canonicalize();
            }
            add("coefficient-formula", direct);
            break;
        }
        case FormulaId::s1342:
        case FormulaId::s3124: {
            TruncSeries den = (poly({1, 20, -8}, n + 1) - three_halves(8, n + 1)).shift_down(1);
            TruncSeries closed = Rational(32) * inverse(den);
            TruncSeries kx_closed = Rational(1, 32) * (poly({-1, 12, 8}, n + 2) + three_halves(8, n + 2)).shift_down(2);
            TruncSeries kx_fe = to_trunc(set_var(fe_iterate(Equation::K_peak, n), V::U, 0));
            TruncSeries via_closed = inverse(TruncSeries::constant(1, n) - kx_closed.shift_up(1));
            TruncSeries via_fe = inverse(TruncSeries::constant(1, n) - kx_fe.shift_up(1));
            if (id == FormulaId::s1342) {
                add("closed-form", closed);
                add("peak-paths-closed", via_closed);
                add("peak-paths", via_fe);
            } else {
                add("peak-paths", via_fe);
                add("peak-paths-closed", via_closed);
                add("closed-form", closed);
            }
            break;
        }
        case FormulaId::classI_m: {
            TruncSeries den = sqrt(poly({1, -8}, n)) + Rational(3);
            add("closed-form", Rational(4) * inverse(den));
            add("returns-valleys", to_trunc(set_var(gf::A1(n), V::V, 1)));
            TruncSeries shifted(n);
            shifted[0] = 1;
            for (int m = 1; m <= n; ++m) {
                const int i = m - 1;  // the binomial sum at i gives the coefficient of z^(i+1)
                Integer sum = 0;
                for (int j = 0; j <= i; ++j) sum += binomial(2 * i + 2, i - j) * binomial(i + j, j);
                shifted[m] = Rational(sum, i + 1);
                shifted[m].canonicalize();
            }
            add("binomial-sum", shifted);
            break;
        }
        case FormulaId::classI_p: {
            TruncSeries root = sqrt(poly({1, -6, 1}, n));
            TruncSeries num = poly({2, -3, 1}, n) - root.shift_up(1);
            add("closed-form", Rational(1, 2) * num * inverse(poly({1, -3, 3}, n)));
            add("valley-transform", partition_transform(gf::A1(std::max(0, n - 1)), n));
            break;
        }
        case FormulaId::classII_III_m: {
            add("labeled-paths", to_trunc(set_var(gf::A2(n), V::V, 1)));
            AuxSeries c = gf::catalan_v(n);
            std::vector<TruncSeries> cubic;
            for (const auto& x : gf::h_cubic(c)) cubic.push_back(to_trunc(set_var(x, V::V, 1)));
            TruncSeries h = algebraic_solve(cubic, 1, n);
            add("cubic", inverse(TruncSeries::constant(1, n) - h.shift_up(1)));
            break;
        }
        case FormulaId::classII_III_p: {
            const int m = std::max(0, n - 1);
            add("valley-transform", partition_transform(gf::A2(m), n));
            AuxSeries h = set_var(fe_iterate(Equation::K_lt2, m), V::U, 0);
            TruncSeries hs = valley_substitute(h, n, 0);
            TruncSeries omz = poly({1, -1}, n);
            TruncSeries den = omz * omz - hs.shift_up(1);
            add("substituted-H", (poly({0, 1}, n) * omz) * inverse(den) + Rational(1));
            break;
        }
        case FormulaId::classIV_m: {
            add("closed-form", poly({1, -5, 2}, n) * inverse(poly({1, -6, 5}, n)));
            add("height-composition", to_trunc(set_var(gf::Q2(n), V::V, 1)));
            break;
        }
        case FormulaId::classIV_p: {
            TruncSeries num = poly({1, -10, 32, -37, 12}, n);
            TruncSeries den = poly({1, -1}, n) * poly({1, -10, 31, -30, 1}, n);
            add("closed-form", num * inverse(den));
            add("valley-transform", partition_transform(gf::Q2(std::max(0, n - 1)), n));
            break;
        }
        case FormulaId::classIV_exact: {
            TruncSeries s(n);
            s[0] = 1;
            for (int i = 1; i <= n; ++i) s[i] = Rational((ipow(5, i - 1) + 1) / 2);
            add("exact", s);
            add("closed-form", poly({1, -5, 2}, n) * inverse(poly({1, -6, 5}, n)));
            break;
        }
        case FormulaId::classV_m: {
            AuxSeries g = fe_iterate(Equation::G_classV, 2 * n);
            TruncSeries g00 = to_trunc(set_var(set_var(g, V::T, 0), V::U, 0));
            TruncSeries s(n);
            for (int i = 0; i <= 2 * n; ++i) {
                if (i % 2 == 0)
                    s[i / 2] = g00[i];
                else if (sgn(g00[i]) != 0)
                    throw Error(ErrorKind::invalid, "odd coefficient of G(0,0,z) is nonzero at z^" + std::to_string(i));
            }
            add("path-pairs", s);
            break;
        }
        case FormulaId::catalan_v: {
            add("valleys", to_trunc(set_var(gf::catalan_v(n), V::V, 1)));
            add("closed-form", to_trunc(set_var(gf::catalan_v_closed(n), V::V, 1)));
            TruncSeries s(n);
            for (int i = 0; i <= n; ++i) s[i] = Rational(catalan(i));
            add("binomial", s);
            break;
        }
        case FormulaId::dyck_rv: {
            add("returns-valleys", to_trunc(set_var(set_var(gf::dyck_returns_valleys(n), V::T, 1), V::V, 1)));
            TruncSeries s(n);
            for (int i = 0; i <= n; ++i) s[i] = Rational(catalan(i));
            add("binomial", s);
            break;
        }
        case FormulaId::gouyou_m123: {
            TruncSeries s(n);
            for (int i = 0; i <= n; ++i) s[i] = Rational(catalan(i) * catalan(i + 2) - catalan(i + 1) * catalan(i + 1));
            add("catalan-determinant", s);
            std::vector<Integer> dp = gf::dnk_pairs(n, 0);
            out.push_back({"path-pairs", dp});
            break;
        }
        case FormulaId::dnk_pairs: {
            if (k < 0) throw Error(ErrorKind::invalid, "negative k");
            out.push_back({"height-pairs", gf::dnk_pairs(n, k)});
            if (k == 0) {
                TruncSeries s(n);
                for (int i = 0; i <= n; ++i) s[i] = Rational(catalan(i) * catalan(i + 2) - catalan(i + 1) * catalan(i + 1));
                add("catalan-determinant", s);
            }
            break;
        }
    }
    return out;
}

std::vector<Integer> coefficients(FormulaId id, int order, int k) { return routes(id, order, k).front().values; }

// ---------------------------------------------------------------- oracles

std::optional<Integer> oracle(FormulaId id, int n, int k) {
    auto count = [](Family f, int size, const char* avoid, int kk = 0) {
        return Integer(static_cast<unsigned long>(count_total(f, size, parse_pattern_set(avoid), kk)));
    };
    switch (id) {
        case FormulaId::m312: return count(Family::matching, n, "312");
        case FormulaId::p312: return count(Family::partition, n, "312");
        case FormulaId::maps: {
            unsigned long c = 0;
            for (const auto& x : labeled_paths(n, LabeledClass::K))
                if (x.labels[0] == 0) ++c;
            return Integer(c);
        }
        case FormulaId::s1342: return count(Family::permutation, n, "1342");
        case FormulaId::s3124: return count(Family::permutation, n, "3124");
        case FormulaId::classI_m: return count(Family::matching, n, "231,312");
        case FormulaId::classI_p: return count(Family::partition, n, "231,312");
        case FormulaId::classII_III_m: return count(Family::matching, n, "123,312");
        case FormulaId::classII_III_p: return count(Family::partition, n, "123,312");
        case FormulaId::classIV_m:
        case FormulaId::classIV_exact: return count(Family::matching, n, "123,321");
        case FormulaId::classIV_p: return count(Family::partition, n, "123,321");
        case FormulaId::classV_m: return count(Family::matching, n, "213,321");
        case FormulaId::catalan_v:
        case FormulaId::dyck_rv: return Integer(static_cast<unsigned long>(dyck_paths(n).size()));
        case FormulaId::gouyou_m123: return count(Family::matching, n, "123");
        case FormulaId::dnk_pairs: return Integer(static_cast<unsigned long>(path_pairs_ending(n, k).size()));
    }
    return std::nullopt;
}

bool CrossCheckReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const CrossCheckRow& r) { return r.equal; });
}

CrossCheckReport cross_check(FormulaId id, int n_max, int k) {
    CrossCheckReport report;
    report.id = id;
    auto values = coefficients(id, n_max, k);
    for (int n = 0; n <= n_max; ++n) {
        auto o = oracle(id, n, k);
        if (!o) continue;
        report.rows.push_back({n, values[n], *o, values[n] == *o});
    }
    return report;
}

}  // namespace arcpat
