#pragma once

#include "g1/exact.hpp"

#include <vector>

namespace g1 {

template <class R>
using Matrix = std::vector<std::vector<R>>;
using QMatrix = Matrix<Q>;

struct LinearSolution {
    enum class Kind { Unique, Family, Inconsistent };
    Kind kind = Kind::Inconsistent;
    std::vector<Q> particular;               // empty when inconsistent
    std::vector<std::vector<Q>> kernel;      // basis of the homogeneous solutions
    std::size_t rank = 0;

    bool consistent() const { return kind != Kind::Inconsistent; }
};

// Integer Gauss-Jordan on the augmented matrix with row-content stripping.
LinearSolution solve_linear(const QMatrix& a, const std::vector<Q>& b);

// Same matrix, several right-hand sides; one elimination.
std::vector<LinearSolution> solve_linear_multi(const QMatrix& a, const std::vector<std::vector<Q>>& rhs);

std::vector<std::vector<Q>> kernel_basis(const QMatrix& a);
std::size_t rank_of(const QMatrix& a);
Q determinant(const QMatrix& a);

// Plain Gauss-Jordan over an exact field (used for Q(zeta_5) and as a
// reference implementation over Q in the tests).
template <class F>
struct FieldSolution {
    bool consistent = false;
    std::vector<F> particular;
    std::vector<std::vector<F>> kernel;
    std::size_t rank = 0;
};

template <class F>
FieldSolution<F> solve_linear_field(Matrix<F> a, std::vector<F> b)
{
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && is_zero(a[p][c])) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        F inv = F(1) / a[r][c];
        for (std::size_t k = c; k < n; ++k) a[r][k] = a[r][k] * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || is_zero(a[i][c])) continue;
            F f = a[i][c];
            for (std::size_t k = c; k < n; ++k)
                if (!is_zero(a[r][k])) a[i][k] = a[i][k] - f * a[r][k];
            b[i] = b[i] - f * b[r];
        }
        pivcol.push_back(c);
        ++r;
    }
    FieldSolution<F> s;
    s.rank = r;
    for (std::size_t i = r; i < m; ++i)
        if (!is_zero(b[i])) return s;
    s.consistent = true;
    s.particular.assign(n, F(0));
    for (std::size_t i = 0; i < r; ++i) s.particular[pivcol[i]] = b[i];
    std::vector<bool> is_piv(n, false);
    for (auto c : pivcol) is_piv[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<F> v(n, F(0));
        v[f] = F(1);
        for (std::size_t i = 0; i < r; ++i) v[pivcol[i]] = -a[i][f];
        s.kernel.push_back(std::move(v));
    }
    return s;
}

}  // namespace g1
