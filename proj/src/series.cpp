#include "arcpat/series.hpp"

#include <algorithm>

namespace arcpat {

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ------------------------------------------------------------------ AuxPoly

AuxPoly::AuxPoly(const Rational& c) {
    if (sgn(c) != 0) {
        ext_ = {1, 1, 1};
        c_.assign(1, c);
    }
}

AuxPoly AuxPoly::monomial(int u, int v, int t, const Rational& c) {
    AuxPoly p;
    if (sgn(c) == 0) return p;
    p.reshape({u + 1, v + 1, t + 1});
    p.c_[p.index(u, v, t)] = c;
    return p;
}

AuxPoly AuxPoly::var(Var x, int power) {
    std::array<int, 3> e{0, 0, 0};
    e[x] = power;
    return monomial(e[0], e[1], e[2]);
}

std::optional<Rational> AuxPoly::constant() const {
    if (c_.empty()) return Rational(0);
    if (ext_ == std::array<int, 3>{1, 1, 1}) return c_[0];
    return std::nullopt;
}

Rational AuxPoly::coeff(int u, int v, int t) const {
    if (u < 0 || v < 0 || t < 0 || u >= ext_[0] || v >= ext_[1] || t >= ext_[2]) return 0;
    return c_[index(u, v, t)];
}

void AuxPoly::reshape(const std::array<int, 3>& ext) {
    if (ext == ext_) return;
    std::vector<Rational> next(static_cast<size_t>(ext[0]) * ext[1] * ext[2]);
    auto old_ext = ext_;
    auto old = std::move(c_);
    ext_ = ext;
    for (int a = 0; a < std::min(ext[0], old_ext[0]); ++a)
        for (int b = 0; b < std::min(ext[1], old_ext[1]); ++b)
            for (int c = 0; c < std::min(ext[2], old_ext[2]); ++c)
                next[index(a, b, c)] = old[(static_cast<size_t>(a) * old_ext[1] + b) * old_ext[2] + c];
    c_ = std::move(next);
}

void AuxPoly::trim() {
    std::array<int, 3> need{0, 0, 0};
    for (int a = 0; a < ext_[0]; ++a)
        for (int b = 0; b < ext_[1]; ++b)
            for (int c = 0; c < ext_[2]; ++c)
                if (sgn(c_[index(a, b, c)]) != 0) need = {std::max(need[0], a + 1), std::max(need[1], b + 1), std::max(need[2], c + 1)};
    if (need[0] == 0) {
        ext_ = {0, 0, 0};
        c_.clear();
        return;
    }
    reshape(need);
}

AuxPoly& AuxPoly::operator+=(const AuxPoly& o) {
    if (o.is_zero()) return *this;
    reshape({std::max(ext_[0], o.ext_[0]), std::max(ext_[1], o.ext_[1]), std::max(ext_[2], o.ext_[2])});
    for (int a = 0; a < o.ext_[0]; ++a)
        for (int b = 0; b < o.ext_[1]; ++b)
            for (int c = 0; c < o.ext_[2]; ++c) c_[index(a, b, c)] += o.c_[o.index(a, b, c)];
    trim();
    return *this;
}

AuxPoly& AuxPoly::operator-=(const AuxPoly& o) {
    if (o.is_zero()) return *this;
    reshape({std::max(ext_[0], o.ext_[0]), std::max(ext_[1], o.ext_[1]), std::max(ext_[2], o.ext_[2])});
    for (int a = 0; a < o.ext_[0]; ++a)
        for (int b = 0; b < o.ext_[1]; ++b)
            for (int c = 0; c < o.ext_[2]; ++c) c_[index(a, b, c)] -= o.c_[o.index(a, b, c)];
    trim();
    return *this;
}

AuxPoly& AuxPoly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        ext_ = {0, 0, 0};
        c_.clear();
        return *this;
    }
    for (auto& q : c_) q *= s;
    return *this;
}

AuxPoly operator*(const AuxPoly& a, const AuxPoly& b) {
    AuxPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.reshape({a.ext_[0] + b.ext_[0] - 1, a.ext_[1] + b.ext_[1] - 1, a.ext_[2] + b.ext_[2] - 1});
    // Collect the nonzero terms of b once.
    struct Term {
        int u, v, t;
        const Rational* q;
    };
    std::vector<Term> bt;
    b.for_each([&](int u, int v, int t, const Rational& q) { bt.push_back({u, v, t, &q}); });
    Rational tmp;
    a.for_each([&](int u, int v, int t, const Rational& q) {
        for (const auto& x : bt) {
            mpq_mul(tmp.get_mpq_t(), q.get_mpq_t(), x.q->get_mpq_t());
            Rational& dst = r.c_[r.index(u + x.u, v + x.v, t + x.t)];
            mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), tmp.get_mpq_t());
        }
    });
    r.trim();
    return r;
}

AuxPoly AuxPoly::operator-() const {
    AuxPoly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

AuxPoly AuxPoly::divide_var(Var x) const {
    AuxPoly r;
    for_each([&](int u, int v, int t, const Rational& q) {
        std::array<int, 3> e{u, v, t};
        if (e[x] == 0)
            throw Error(ErrorKind::not_divisible, "polynomial " + str() + " is not divisible by " + std::string(1, "uvt"[x]));
        --e[x];
        r += monomial(e[0], e[1], e[2], q);
    });
    return r;
}

AuxPoly AuxPoly::set_var(Var x, const Rational& value) const {
    AuxPoly r;
    if (is_zero()) return r;
    std::array<int, 3> ext = ext_;
    ext[x] = 1;
    r.reshape(ext);
    std::vector<Rational> powers(ext_[x], Rational(1));
    for (int i = 1; i < ext_[x]; ++i) powers[i] = powers[i - 1] * value;
    for_each([&](int u, int v, int t, const Rational& q) {
        std::array<int, 3> e{u, v, t};
        const int d = e[x];
        e[x] = 0;
        r.c_[r.index(e[0], e[1], e[2])] += q * powers[d];
    });
    r.trim();
    return r;
}

AuxPoly AuxPoly::tu_quotient() const {
    if (degree(U) > 0) throw Error(ErrorKind::invalid, "tu_quotient needs a polynomial free of u");
    AuxPoly r;
    if (is_zero()) return r;
    r.reshape({std::max(1, ext_[2] - 1), ext_[1], ext_[2]});
    for_each([&](int, int v, int t, const Rational& q) {
        for (int j = 0; j < t; ++j) r.c_[r.index(j, v, t)] += q;
    });
    r.trim();
    return r;
}

std::string AuxPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for_each([&](int u, int v, int t, const Rational& q) {
        if (!out.empty()) out += " + ";
        out += to_string(q);
        if (u) out += "*u^" + std::to_string(u);
        if (v) out += "*v^" + std::to_string(v);
        if (t) out += "*t^" + std::to_string(t);
    });
    return out;
}

std::optional<Rational> scalar_of(const Rational& x) { return x; }
std::optional<Rational> scalar_of(const AuxPoly& x) { return x.constant(); }

// ---------------------------------------------------------- series helpers

TruncSeries pow(const TruncSeries& a, unsigned e) {
    TruncSeries r = TruncSeries::constant(1, a.order()), base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
    if (sgn(g[0]) != 0) throw Error(ErrorKind::precondition, "compose needs an inner series with zero constant term");
    const int n = std::min(f.order(), g.order());
    TruncSeries r = TruncSeries::constant(f[n], n);
    for (int i = n - 1; i >= 0; --i) r = r * g + f[i];
    return r;
}

namespace {

template <class C>
Series<C> horner(const std::vector<Series<C>>& p, const Series<C>& f) {
    if (p.empty()) return Series<C>(f.order());
    Series<C> r = p.back().extend(f.order()).truncate(std::min(p.back().order(), f.order()));
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) r = r * f + p[i];
    return r;
}

}  // namespace

TruncSeries evaluate_poly(const std::vector<TruncSeries>& p, const TruncSeries& f) { return horner(p, f); }
AuxSeries evaluate_poly(const std::vector<AuxSeries>& p, const AuxSeries& f) { return horner(p, f); }

TruncSeries algebraic_solve(const std::vector<TruncSeries>& p, const Rational& seed, int order) {
    if (p.empty()) throw Error(ErrorKind::invalid, "empty polynomial");
    for (const auto& c : p)
        if (c.order() < order) throw Error(ErrorKind::invalid, "polynomial coefficients are known only to lower order");
    Rational value = 0, slope = 0, power = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        value += p[i][0] * power;
        if (i + 1 < p.size()) slope += (i + 1) * p[i + 1][0] * power;
        power *= seed;
    }
    if (sgn(value) != 0) throw Error(ErrorKind::precondition, "seed is not a root at z = 0");
    if (sgn(slope) == 0) throw Error(ErrorKind::precondition, "seed is not a simple root at z = 0");
    std::vector<TruncSeries> dp;
    for (size_t i = 1; i < p.size(); ++i) dp.push_back(Rational(static_cast<long>(i)) * p[i]);

    TruncSeries f = TruncSeries::constant(seed, 0);
    int known = 1;
    while (known < order + 1) {
        known = std::min(2 * known, order + 1);
        const int k = known - 1;
        std::vector<TruncSeries> pk, dpk;
        for (const auto& c : p) pk.push_back(c.truncate(k));
        for (const auto& c : dp) dpk.push_back(c.truncate(k));
        TruncSeries fk = f.extend(k);
        f = fk - evaluate_poly(pk, fk) * inverse(evaluate_poly(dpk, fk));
    }
    return f.extend(order);
}

AuxSeries divide_var(const AuxSeries& a, AuxPoly::Var x) {
    return a.map([x](const AuxPoly& p) { return p.divide_var(x); });
}

AuxSeries set_var(const AuxSeries& a, AuxPoly::Var x, const Rational& value) {
    return a.map([x, &value](const AuxPoly& p) { return p.set_var(x, value); });
}

AuxSeries lift(const TruncSeries& a) {
    return a.map([](const Rational& q) { return AuxPoly(q); });
}

TruncSeries to_trunc(const AuxSeries& a) {
    return a.map([](const AuxPoly& p) {
        auto c = p.constant();
        if (!c) throw Error(ErrorKind::invalid, "series coefficient " + p.str() + " still depends on an auxiliary variable");
        return *c;
    });
}

TruncSeries partition_transform(const AuxSeries& a, int order) {
    if (a.order() < order - 1) throw Error(ErrorKind::invalid, "partition_transform needs the input through z^(order-1)");
    TruncSeries b(order);
    for (int n = 0; n <= std::min(a.order(), order); ++n) {
        if (a[n].degree(AuxPoly::U) > 0 || a[n].degree(AuxPoly::T) > 0)
            throw Error(ErrorKind::invalid, "partition_transform takes a series in v only");
        a[n].for_each([&](int, int k, int, const Rational& c) {
            if (n == 0 ? k != 0 : k > n - 1)
                throw Error(ErrorKind::precondition, "valley exponent " + std::to_string(k) + " too large at z^" + std::to_string(n));
            const int e = 2 * n - k;
            for (int j = 0; e + j <= order; ++j) b[e + j] += c * Rational(binomial(2 * n + j, j));
        });
    }
    return b;
}

// ---------------------------------------------------- functional equations

std::string to_string(Equation e) {
    switch (e) {
        case Equation::K_Ll: return "K_Ll";
        case Equation::K_Llv: return "K_Llv";
        case Equation::K_lt2: return "K_lt2";
        case Equation::K_peak: return "K_peak";
        case Equation::G_classV: return "G_classV";
        case Equation::C_valleys: return "C_valleys";
    }
    return "?";
}

namespace {

using V = AuxPoly::Var;

AuxPoly u() { return AuxPoly::var(V::U); }
AuxPoly v() { return AuxPoly::var(V::V); }
AuxPoly t() { return AuxPoly::var(V::T); }

// (x - x|_{u=0}) / u
AuxSeries du(const AuxSeries& x) { return divide_var(x - set_var(x, V::U, 0), V::U); }

AuxSeries times_z(const AuxSeries& x) { return x.shift_up(1); }

// v x - v + 1
AuxSeries valley_mark(const AuxSeries& x) { return v() * x - v() + AuxPoly(1); }

}  // namespace

AuxSeries fe_rhs(Equation e, const AuxSeries& x) {
    const int n = x.order();
    const AuxPoly one(1);
    switch (e) {
        case Equation::K_Ll: {
            AuxSeries inner = AuxPoly(2) * x + u() * x + du(x);
            return times_z(x * inner) + one;
        }
        case Equation::K_Llv: {
            AuxSeries inner = AuxPoly(2) * x + u() * x + du(x);
            return times_z(valley_mark(x) * inner) + one;
        }
        case Equation::K_lt2: {
            const AuxSeries c = fe_iterate(Equation::C_valleys, n);
            const AuxSeries h = set_var(x, V::U, 0);
            AuxSeries first = c * valley_mark(x);
            AuxSeries bracket = (h - c) + (du(x) + (x - h)) + (u() + one) * c;
            return times_z(first + bracket * valley_mark(h)) + one;
        }
        case Equation::K_peak: {
            AuxSeries km1 = x - one;
            AuxSeries inner = x + u() * km1 + km1 + du(x);
            return times_z(x * inner) + one;
        }
        case Equation::G_classV: {
            const AuxSeries g_t0 = set_var(x, V::U, 0);
            const AuxSeries g_00 = set_var(g_t0, V::T, 0);
            AuxSeries a = t() * x;
            AuxSeries b = divide_var(divide_var(x - g_t0, V::U), V::T);
            AuxSeries c = divide_var(g_t0 - g_00, V::T);
            AuxSeries d = (t() * u()) * g_t0.map([](const AuxPoly& p) { return p.tu_quotient(); });
            return times_z(a + b + c + d) + one;
        }
        case Equation::C_valleys: {
            return times_z(x * valley_mark(x)) + one;
        }
    }
    throw Error(ErrorKind::invalid, "unknown equation");
}

AuxSeries fe_iterate(Equation e, int order) {
    if (order < 0) throw Error(ErrorKind::invalid, "negative order");
    // Each pass fixes one more coefficient, so pass p only needs precision p.
    AuxSeries x = AuxSeries::constant(AuxPoly(1), 0);
    for (int p = 1; p <= order; ++p) x = fe_rhs(e, x.extend(p));
    x = x.extend(order);
    if (!(fe_rhs(e, x) == x)) throw Error(ErrorKind::invalid, "functional equation " + to_string(e) + " did not stabilize");
    check_degree_caps(e, x);
    return x;
}

AuxSeries fe_residual(Equation e, const AuxSeries& x) { return fe_rhs(e, x) - x; }

void check_degree_caps(Equation e, const AuxSeries& x) {
    for (int n = 0; n <= x.order(); ++n) {
        const AuxPoly& p = x[n];
        const int valley_cap = n == 0 ? 0 : n - 1;
        bool ok = true;
        switch (e) {
            case Equation::K_Ll:
            case Equation::K_peak: ok = p.degree(V::U) <= n && p.degree(V::V) <= 0 && p.degree(V::T) <= 0; break;
            case Equation::K_Llv:
            case Equation::K_lt2: ok = p.degree(V::U) <= n && p.degree(V::V) <= valley_cap && p.degree(V::T) <= 0; break;
            case Equation::G_classV: ok = p.degree(V::T) <= n && p.degree(V::U) <= n && p.degree(V::V) <= 0; break;
            case Equation::C_valleys: ok = p.degree(V::V) <= valley_cap && p.degree(V::U) <= 0 && p.degree(V::T) <= 0; break;
        }
        if (!ok)
            throw Error(ErrorKind::invalid, to_string(e) + ": auxiliary degree bound violated at z^" + std::to_string(n) +
                                                ", coefficient " + p.str());
    }
}

}  // namespace arcpat
