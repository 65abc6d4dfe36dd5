#pragma once

#include "g1/exact.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace g1 {

inline constexpr int kMaxVars = 12;
using Exponent = std::array<std::uint16_t, kMaxVars>;

inline int total_degree(const Exponent& e)
{
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

// graded lex: total degree first, then lex with x0 > x1 > ...
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (int i = 0; i < kMaxVars; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

template <class R>
class MPoly {
public:
    using Terms = std::map<Exponent, R, GrlexLess>;

    MPoly() = default;
    explicit MPoly(int nvars) : n_(nvars) {}

    static MPoly constant(int nvars, const R& c)
    {
        MPoly p(nvars);
        p.add_term(Exponent{}, c);
        return p;
    }
    static MPoly var(int nvars, int i, const R& c = R(1))
    {
        MPoly p(nvars);
        Exponent e{};
        e[i] = 1;
        p.add_term(e, c);
        return p;
    }
    static MPoly monomial(int nvars, const Exponent& e, const R& c = R(1))
    {
        MPoly p(nvars);
        p.add_term(e, c);
        return p;
    }

    int nvars() const { return n_; }
    const Terms& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Exponent& e, const R& c)
    {
        if (g1::is_zero(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
            return;
        }
        it->second += c;
        if (g1::is_zero(it->second)) t_.erase(it);
    }

    R coeff(const Exponent& e) const
    {
        auto it = t_.find(e);
        return it == t_.end() ? R(0) : it->second;
    }

    int degree() const { return t_.empty() ? -1 : total_degree(t_.rbegin()->first); }

    bool is_homogeneous() const
    {
        if (t_.empty()) return true;
        return total_degree(t_.begin()->first) == total_degree(t_.rbegin()->first);
    }

    MPoly homogeneous_part(int d) const
    {
        MPoly r(n_);
        for (const auto& [e, c] : t_)
            if (total_degree(e) == d) r.t_.emplace(e, c);
        return r;
    }

    MPoly derivative(int i) const
    {
        MPoly r(n_);
        for (const auto& [e, c] : t_) {
            if (e[i] == 0) continue;
            Exponent f = e;
            --f[i];
            r.add_term(f, c * R(static_cast<long>(e[i])));
        }
        return r;
    }

    MPoly operator-() const
    {
        MPoly r(n_);
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }
    MPoly& operator+=(const MPoly& o)
    {
        n_ = std::max(n_, o.n_);
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o)
    {
        n_ = std::max(n_, o.n_);
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    MPoly& operator*=(const R& s)
    {
        if (g1::is_zero(s)) {
            t_.clear();
            return *this;
        }
        for (auto& kv : t_) kv.second *= s;
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const R& s) { return a *= s; }
    friend MPoly operator*(const R& s, MPoly a) { return a *= s; }
    friend MPoly operator*(const MPoly& a, const MPoly& b)
    {
        MPoly r(std::max(a.n_, b.n_));
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exponent e;
                for (int i = 0; i < kMaxVars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(unsigned k) const
    {
        MPoly r = constant(n_, R(1)), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }

    R evaluate(const std::vector<R>& x) const
    {
        R s(0);
        for (const auto& [e, c] : t_) {
            R m = c;
            for (int i = 0; i < n_; ++i)
                for (int k = 0; k < e[i]; ++k) m *= x[i];
            s += m;
        }
        return s;
    }

    // x_i -> images[i]; images may live in a different number of variables
    MPoly substitute(const std::vector<MPoly>& images) const
    {
        MPoly r;
        std::vector<std::vector<MPoly>> powers(images.size());
        for (const auto& [e, c] : t_) {
            MPoly m = constant(0, c);
            for (int i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(0, R(1)));
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
                m *= pw[e[i]];
            }
            r += m;
        }
        return r;
    }

    // coefficient vector on a list of monomials
    std::vector<R> coefficients_on(const std::vector<Exponent>& basis) const
    {
        std::vector<R> v;
        v.reserve(basis.size());
        for (const auto& e : basis) v.push_back(coeff(e));
        return v;
    }

    std::string str(const std::vector<std::string>& names) const
    {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << scalar_str(it->second) << ")";
            for (int i = 0; i < n_; ++i) {
                if (it->first[i] == 0) continue;
                os << "*" << names.at(i);
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
        }
        return os.str();
    }

private:
    static std::string scalar_str(const Q& q) { return q.get_str(); }
    static std::string scalar_str(const Cyc5& c) { return c.str(); }

    int n_ = 0;
    Terms t_;
};

template <class R>
bool is_zero(const MPoly<R>& p)
{
    return p.is_zero();
}

inline Q one_like(const Q&) { return Q(1); }
inline Cyc5 one_like(const Cyc5&) { return Cyc5(1); }
template <class R>
MPoly<R> one_like(const MPoly<R>& p)
{
    return MPoly<R>::constant(p.nvars(), R(1));
}

using QPoly = MPoly<Q>;

// all exponents of total degree d in n variables, in grlex-increasing order
std::vector<Exponent> monomials(int nvars, int d);

// Laplace expansion; fine for the 5x5 matrices used here
template <class T>
T determinant_laplace(const std::vector<std::vector<T>>& m)
{
    const std::size_t n = m.size();
    if (n == 0) return T();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    T s{};
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(m[0][j])) continue;
        std::vector<std::vector<T>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        T term = m[0][j] * determinant_laplace(minor);
        if (j % 2) term = -term;
        if (first) {
            s = term;
            first = false;
        } else {
            s += term;
        }
    }
    return s;
}

// Homogeneous form of degree n in two variables: sum c[i] x^(n-i) y^i.
template <class R>
class BinaryForm {
public:
    BinaryForm() = default;
    explicit BinaryForm(std::vector<R> c) : c_(std::move(c)) {}
    static BinaryForm zero(int n) { return BinaryForm(std::vector<R>(n + 1, R{})); }
    static BinaryForm x_power(int n, const R& one) { auto f = zero(n); f.c_[0] = one; return f; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }
    std::vector<R>& coeffs() { return c_; }
    const R& operator[](int i) const { return c_[i]; }
    R& operator[](int i) { return c_[i]; }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const R& x) { return g1::is_zero(x); });
    }

    BinaryForm& operator+=(const BinaryForm& o)
    {
        if (o.degree() != degree()) throw std::invalid_argument("BinaryForm: degree mismatch");
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    BinaryForm& operator-=(const BinaryForm& o)
    {
        if (o.degree() != degree()) throw std::invalid_argument("BinaryForm: degree mismatch");
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    BinaryForm operator-() const
    {
        BinaryForm r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(BinaryForm a, const R& s)
    {
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b)
    {
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, R{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (g1::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return BinaryForm(std::move(r));
    }
    bool operator==(const BinaryForm& o) const { return c_ == o.c_; }

    // rational multiple, also for polynomial coefficient rings
    BinaryForm scaled(const Q& s) const
    {
        BinaryForm r(*this);
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    BinaryForm pow(unsigned k, const R& one) const
    {
        BinaryForm r = x_power(0, one), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    BinaryForm dx() const
    {
        const int n = degree();
        if (n <= 0) return zero(0);
        std::vector<R> r(n);
        for (int i = 0; i < n; ++i) r[i] = c_[i] * Q(n - i);
        return BinaryForm(std::move(r));
    }
    BinaryForm dy() const
    {
        const int n = degree();
        if (n <= 0) return zero(0);
        std::vector<R> r(n);
        for (int i = 0; i < n; ++i) r[i] = c_[i + 1] * Q(i + 1);
        return BinaryForm(std::move(r));
    }

    R evaluate(const R& x, const R& y) const
    {
        const int n = degree();
        R s{};
        std::vector<R> xp(n + 1, one_like(x)), yp(n + 1, one_like(x));
        for (int i = 1; i <= n; ++i) {
            xp[i] = xp[i - 1] * x;
            yp[i] = yp[i - 1] * y;
        }
        for (int i = 0; i <= n; ++i) s += c_[i] * xp[n - i] * yp[i];
        return s;
    }

    // f(a x + b y, c x + d y)
    BinaryForm substitute(const R& a, const R& b, const R& c, const R& d) const
    {
        const int n = degree();
        BinaryForm X(std::vector<R>{a, b}), Y(std::vector<R>{c, d});
        const R one = one_like(a);
        std::vector<BinaryForm> xp{x_power(0, one)}, yp{x_power(0, one)};
        for (int i = 1; i <= n; ++i) {
            xp.push_back(xp.back() * X);
            yp.push_back(yp.back() * Y);
        }
        BinaryForm r = zero(n);
        for (int i = 0; i <= n; ++i) {
            if (g1::is_zero(c_[i])) continue;
            r += (xp[n - i] * yp[i]) * c_[i];
        }
        return r;
    }

private:
    std::vector<R> c_;
};

template <class R>
bool is_zero(const BinaryForm<R>& f)
{
    return f.is_zero();
}

}  // namespace g1
