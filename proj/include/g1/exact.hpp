#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g1 {

using Q = mpq_class;
using Z = mpz_class;

// Thrown for mathematically meaningful failures (singular model etc.),
// as opposed to std::invalid_argument for malformed input.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "p", "p/q", "-p/q"; result is canonicalized.
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

// Square root in Q, if there is one.
std::optional<Q> exact_sqrt(const Q& r);

Z lcm_of_denominators(const std::vector<Q>& v);

// Q(zeta_5), basis 1, z, z^2, z^3 and z^4 = -1 - z - z^2 - z^3.
class Cyc5 {
public:
    Cyc5() = default;
    Cyc5(const Q& r) { c_[0] = r; }  // NOLINT: rationals embed implicitly
    Cyc5(long r) { c_[0] = r; }      // NOLINT
    explicit Cyc5(std::array<Q, 4> c) : c_(std::move(c)) {}

    static Cyc5 zeta_pow(long k);
    // phi = 1 + z + z^4 (golden ratio) and sqrt5 = 1 + 2(z + z^4)
    static Cyc5 phi();
    static Cyc5 sqrt5();

    const Q& operator[](int i) const { return c_[i]; }
    bool is_zero() const;
    bool is_rational() const;

    Cyc5 operator-() const;
    Cyc5& operator+=(const Cyc5& o);
    Cyc5& operator-=(const Cyc5& o);
    Cyc5& operator*=(const Cyc5& o);
    Cyc5& operator/=(const Cyc5& o) { return *this *= o.inverse(); }
    friend Cyc5 operator+(Cyc5 a, const Cyc5& b) { return a += b; }
    friend Cyc5 operator-(Cyc5 a, const Cyc5& b) { return a -= b; }
    friend Cyc5 operator*(Cyc5 a, const Cyc5& b) { return a *= b; }
    friend Cyc5 operator/(Cyc5 a, const Cyc5& b) { return a /= b; }
    bool operator==(const Cyc5& o) const { return c_ == o.c_; }
    bool operator!=(const Cyc5& o) const { return !(*this == o); }

    // Galois automorphism z -> z^k, k a unit mod 5.
    Cyc5 galois(int k) const;
    Q norm() const;
    Cyc5 inverse() const;

    std::string str() const;

private:
    std::array<Q, 4> c_{};
};

inline bool is_zero(const Cyc5& x) { return x.is_zero(); }

// a01 a23 - a02 a13 + a03 a12 of an alternating 4x4 matrix.
template <class M>
auto pfaffian4(const M& a) -> std::decay_t<decltype(a[0][1])>
{
    for (int i = 0; i < 4; ++i) {
        if (!is_zero(a[i][i]))
            throw std::invalid_argument("pfaffian4: nonzero diagonal");
        for (int j = i + 1; j < 4; ++j)
            if (!is_zero(a[i][j] + a[j][i]))
                throw std::invalid_argument("pfaffian4: matrix not alternating");
    }
    return a[0][1] * a[2][3] - a[0][2] * a[1][3] + a[0][3] * a[1][2];
}

}  // namespace g1
