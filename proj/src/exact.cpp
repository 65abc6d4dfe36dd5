#include "g1/exact.hpp"

#include <sstream>

namespace g1 {

Q parse_rational(const std::string& s)
{
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '+') t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty rational");
    auto slash = t.find('/');
    auto digits_ok = [](const std::string& u, bool sign_ok) {
        if (u.empty()) return false;
        std::size_t i = (sign_ok && u[0] == '-') ? 1 : 0;
        if (i == u.size()) return false;
        for (; i < u.size(); ++i)
            if (u[i] < '0' || u[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(t, true)) throw std::invalid_argument("bad rational: " + s);
        return Q(Z(t));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw std::invalid_argument("bad rational: " + s);
    Z d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    Q q(Z(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::optional<Q> exact_sqrt(const Q& r)
{
    if (sgn(r) < 0) return std::nullopt;
    Z n = r.get_num(), d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Z sn = sqrt(n), sd = sqrt(d);
    return Q(sn, sd);
}

Z lcm_of_denominators(const std::vector<Q>& v)
{
    Z l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

// ---- Cyc5

Cyc5 Cyc5::zeta_pow(long k)
{
    k = ((k % 5) + 5) % 5;
    Cyc5 r;
    if (k < 4) {
        r.c_[k] = 1;
    } else {
        for (auto& x : r.c_) x = -1;
    }
    return r;
}

Cyc5 Cyc5::phi() { return Cyc5(1) + zeta_pow(1) + zeta_pow(4); }
Cyc5 Cyc5::sqrt5() { return Cyc5(1) + Cyc5(2) * (zeta_pow(1) + zeta_pow(4)); }

bool Cyc5::is_zero() const
{
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Cyc5::is_rational() const
{
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

Cyc5 Cyc5::operator-() const
{
    Cyc5 r;
    for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
    return r;
}

Cyc5& Cyc5::operator+=(const Cyc5& o)
{
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

Cyc5& Cyc5::operator-=(const Cyc5& o)
{
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyc5& Cyc5::operator*=(const Cyc5& o)
{
    std::array<Q, 5> t{};  // coefficients of z^0..z^4 after folding z^5 = 1
    for (int i = 0; i < 4; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (sgn(o.c_[j]) == 0) continue;
            t[(i + j) % 5] += c_[i] * o.c_[j];
        }
    }
    for (int i = 0; i < 4; ++i) c_[i] = t[i] - t[4];
    return *this;
}

Cyc5 Cyc5::galois(int k) const
{
    k = ((k % 5) + 5) % 5;
    if (k == 0) throw std::invalid_argument("galois: exponent must be a unit mod 5");
    Cyc5 r;
    for (int i = 0; i < 4; ++i) {
        if (sgn(c_[i]) == 0) continue;
        r += Cyc5(c_[i]) * zeta_pow(static_cast<long>(i) * k);
    }
    return r;
}

Q Cyc5::norm() const
{
    Cyc5 p = *this * galois(2) * galois(3) * galois(4);
    return p.c_[0];
}

Cyc5 Cyc5::inverse() const
{
    if (is_zero()) throw std::domain_error("Cyc5: division by zero");
    Cyc5 p = galois(2) * galois(3) * galois(4);
    Q n = (*this * p).c_[0];
    for (auto& x : p.c_) x /= n;
    return p;
}

std::string Cyc5::str() const
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!first) os << (sgn(c_[i]) > 0 ? " + " : " - ");
        else if (sgn(c_[i]) < 0) os << "-";
        Q a = abs(c_[i]);
        if (i == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace g1
