#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcpat/core.hpp"

namespace arcpat {

using Rational = mpq_class;
using Integer = mpz_class;

Integer binomial(unsigned long n, unsigned long k);
std::string to_string(const Rational& q);  // "num/den", or "num" when integral

// Polynomial in the auxiliary variables u, v, t with rational coefficients.
class AuxPoly {
public:
    enum Var { U = 0, V = 1, T = 2 };

    AuxPoly() = default;
    AuxPoly(const Rational& c);  // NOLINT: implicit scalar promotion
    AuxPoly(long c) : AuxPoly(Rational(c)) {}

    static AuxPoly monomial(int u, int v, int t, const Rational& c = 1);
    static AuxPoly var(Var x, int power = 1);

    bool is_zero() const { return c_.empty(); }
    std::optional<Rational> constant() const;
    Rational coeff(int u, int v, int t) const;
    int degree(Var x) const { return ext_[x] - 1; }  // -1 for the zero polynomial

    AuxPoly& operator+=(const AuxPoly& o);
    AuxPoly& operator-=(const AuxPoly& o);
    AuxPoly& operator*=(const Rational& s);
    friend AuxPoly operator+(AuxPoly a, const AuxPoly& b) { return a += b; }
    friend AuxPoly operator-(AuxPoly a, const AuxPoly& b) { return a -= b; }
    friend AuxPoly operator*(const AuxPoly& a, const AuxPoly& b);
    friend AuxPoly operator*(AuxPoly a, const Rational& s) { return a *= s; }
    AuxPoly operator-() const;
    friend bool operator==(const AuxPoly& a, const AuxPoly& b) { return a.ext_ == b.ext_ && a.c_ == b.c_; }

    // Exact division by x; throws not_divisible when a term is free of x.
    AuxPoly divide_var(Var x) const;
    AuxPoly set_var(Var x, const Rational& value) const;
    // (P(t) - P(t u)) / (1 - u) for P free of u, i.e. t^i -> t^i (1 + u + ... + u^(i-1)).
    AuxPoly tu_quotient() const;

    // Visit nonzero terms as (u, v, t, coefficient).
    template <class F>
    void for_each(F&& f) const {
        for (int a = 0; a < ext_[0]; ++a)
            for (int b = 0; b < ext_[1]; ++b)
                for (int c = 0; c < ext_[2]; ++c) {
                    const Rational& q = c_[index(a, b, c)];
                    if (sgn(q) != 0) f(a, b, c, q);
                }
    }

    std::string str() const;

private:
    std::array<int, 3> ext_{0, 0, 0};
    std::vector<Rational> c_;

    size_t index(int a, int b, int c) const { return (static_cast<size_t>(a) * ext_[1] + b) * ext_[2] + c; }
    void reshape(const std::array<int, 3>& ext);
    void trim();
};

// Power series in z truncated after z^order.
template <class C>
class Series {
public:
    explicit Series(int order = 0) : c_(order + 1, C(0)) {}
    Series(std::vector<C> coeffs) : c_(std::move(coeffs)) {}  // NOLINT

    static Series constant(const C& value, int order) {
        Series s(order);
        s.c_[0] = value;
        return s;
    }
    static Series z(int order) {
        Series s(order);
        if (order >= 1) s.c_[1] = C(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    C& operator[](int i) { return c_[i]; }
    const C& operator[](int i) const { return c_[i]; }
    const std::vector<C>& coeffs() const { return c_; }

    Series truncate(int order) const {
        if (order > this->order()) throw Error(ErrorKind::invalid, "cannot raise the precision of a truncated series");
        return Series(std::vector<C>(c_.begin(), c_.begin() + order + 1));
    }
    // Same coefficients, padded with zeros to a higher order.
    Series extend(int order) const {
        Series s(order);
        for (int i = 0; i <= std::min(order, this->order()); ++i) s.c_[i] = c_[i];
        return s;
    }

    Series& operator+=(const Series& o) {
        resize_min(o.order());
        for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        resize_min(o.order());
        for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator-() const {
        Series s(order());
        for (int i = 0; i <= order(); ++i) s.c_[i] = -c_[i];
        return s;
    }
    friend Series operator*(const Series& a, const Series& b) {
        const int n = std::min(a.order(), b.order());
        Series s(n);
        for (int i = 0; i <= n; ++i) {
            if (is_zero_coeff(a.c_[i])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (is_zero_coeff(b.c_[j])) continue;
                s.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return s;
    }
    // Coefficientwise product with a ring element.
    friend Series operator*(const C& k, const Series& a) {
        Series s(a.order());
        for (int i = 0; i <= a.order(); ++i) s.c_[i] = k * a.c_[i];
        return s;
    }
    Series operator+(const C& k) const {
        Series s = *this;
        s.c_[0] += k;
        return s;
    }
    Series operator-(const C& k) const {
        Series s = *this;
        s.c_[0] -= k;
        return s;
    }

    // Multiply by z^k, keeping the order.
    Series shift_up(int k) const {
        Series s(order());
        for (int i = 0; i + k <= order(); ++i) s.c_[i + k] = c_[i];
        return s;
    }
    // Exact division by z^k; the order drops by k.
    Series shift_down(int k) const {
        for (int i = 0; i < std::min(k, order() + 1); ++i)
            if (!is_zero_coeff(c_[i])) throw Error(ErrorKind::not_divisible, "series is not divisible by z^" + std::to_string(k));
        if (k > order()) throw Error(ErrorKind::invalid, "shift exceeds series order");
        return Series(std::vector<C>(c_.begin() + k, c_.end()));
    }

    template <class F>
    auto map(F&& f) const {
        using D = decltype(f(c_[0]));
        std::vector<D> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(f(x));
        return Series<D>(std::move(out));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    std::vector<C> c_;

    static bool is_zero_coeff(const C& x) {
        if constexpr (std::is_same_v<C, Rational>)
            return sgn(x) == 0;
        else
            return x.is_zero();
    }
    void resize_min(int other) {
        if (other < order()) c_.resize(other + 1);
    }
};

using TruncSeries = Series<Rational>;
using AuxSeries = Series<AuxPoly>;

// Constant term of x as a scalar, if it is one.
std::optional<Rational> scalar_of(const Rational& x);
std::optional<Rational> scalar_of(const AuxPoly& x);

template <class C>
Series<C> inverse(const Series<C>& a) {
    auto c0 = scalar_of(a[0]);
    if (!c0 || sgn(*c0) == 0) throw Error(ErrorKind::precondition, "series inverse needs an invertible scalar constant term");
    const Rational inv0 = 1 / *c0;
    Series<C> b(a.order());
    b[0] = C(inv0);
    for (int n = 1; n <= a.order(); ++n) {
        C acc(0);
        for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
        b[n] = -acc * inv0;
    }
    return b;
}

template <class C>
Series<C> divide(const Series<C>& a, const Series<C>& b) {
    return a * inverse(b);
}

// Newton iteration, doubling the number of correct coefficients per step.
template <class C>
Series<C> sqrt(const Series<C>& a) {
    auto c0 = scalar_of(a[0]);
    if (!c0 || *c0 != 1) throw Error(ErrorKind::precondition, "series sqrt needs constant term 1");
    const int n = a.order();
    Series<C> y = Series<C>::constant(C(1), 0);
    int known = 1;
    while (known < n + 1) {
        known = std::min(2 * known, n + 1);
        Series<C> ak = a.truncate(known - 1);
        Series<C> yk = y.extend(known - 1);
        y = C(Rational(1, 2)) * (yk + ak * inverse(yk));
    }
    return y.extend(n);
}

TruncSeries pow(const TruncSeries& a, unsigned e);
// f(g(z)); g must have zero constant term.
TruncSeries compose(const TruncSeries& f, const TruncSeries& g);
// sum_i p[i] F^i
TruncSeries evaluate_poly(const std::vector<TruncSeries>& p, const TruncSeries& f);
AuxSeries evaluate_poly(const std::vector<AuxSeries>& p, const AuxSeries& f);

// Root F of sum_i p[i](z) F^i with F(0) = seed, which must be a simple root at z = 0.
TruncSeries algebraic_solve(const std::vector<TruncSeries>& p, const Rational& seed, int order);

// Coefficientwise helpers on auxiliary series.
AuxSeries divide_var(const AuxSeries& a, AuxPoly::Var x);
AuxSeries set_var(const AuxSeries& a, AuxPoly::Var x, const Rational& value);
AuxSeries lift(const TruncSeries& a);
// Requires every coefficient to be a scalar.
TruncSeries to_trunc(const AuxSeries& a);

// (1/(1-z)) A(1/z, z^2/(1-z)^2) for A in z and v (v marks valleys).
TruncSeries partition_transform(const AuxSeries& a, int order);

enum class Equation { K_Ll, K_Llv, K_lt2, K_peak, G_classV, C_valleys };

std::string to_string(Equation e);

// Right-hand side of the functional equation evaluated at x, to the order of x.
AuxSeries fe_rhs(Equation e, const AuxSeries& x);
// Fixed point, correct through z^order.
AuxSeries fe_iterate(Equation e, int order);
AuxSeries fe_residual(Equation e, const AuxSeries& x);
// Auxiliary degree bounds per z-order; throws on violation.
void check_degree_caps(Equation e, const AuxSeries& x);

}  // namespace arcpat
