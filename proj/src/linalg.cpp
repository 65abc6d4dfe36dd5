#include "g1/linalg.hpp"

#include <algorithm>

namespace g1 {

namespace {

using ZRow = std::vector<Z>;

void strip_content(ZRow& row)
{
    Z g = 0;
    for (const auto& x : row) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& x : row)
            if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

ZRow integer_row(const std::vector<Q>& row)
{
    Z l = lcm_of_denominators(row);
    ZRow out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        Z t = l / row[i].get_den();
        out[i] = row[i].get_num() * t;
    }
    strip_content(out);
    return out;
}

struct Echelon {
    std::vector<ZRow> rows;
    std::vector<std::size_t> pivcol;  // pivot column of row i, i < rank
};

// Eliminates on the first ncols columns; trailing columns ride along.
Echelon eliminate(std::vector<ZRow> rows, std::size_t ncols)
{
    Echelon e;
    const std::size_t m = rows.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m; ++c) {
        std::size_t best = m;
        std::size_t best_size = 0;
        for (std::size_t i = r; i < m; ++i) {
            if (rows[i][c] == 0) continue;
            std::size_t sz = mpz_sizeinbase(rows[i][c].get_mpz_t(), 2);
            if (best == m || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == m) continue;
        std::swap(rows[best], rows[r]);
        const ZRow& p = rows[r];
        const std::size_t width = p.size();
        Z g, a, b;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            ZRow& q = rows[i];
            mpz_gcd(g.get_mpz_t(), p[c].get_mpz_t(), q[c].get_mpz_t());
            mpz_divexact(a.get_mpz_t(), p[c].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), q[c].get_mpz_t(), g.get_mpz_t());
            // q = a*q - b*p; p is zero left of c, but q (a row above) need not be
            if (a != 1)
                for (std::size_t k = 0; k < c; ++k)
                    if (q[k] != 0) q[k] *= a;
            for (std::size_t k = c; k < width; ++k) {
                if (q[k] != 0) q[k] *= a;
                if (p[k] != 0) mpz_submul(q[k].get_mpz_t(), b.get_mpz_t(), p[k].get_mpz_t());
            }
            strip_content(q);
        }
        e.pivcol.push_back(c);
        ++r;
    }
    e.rows = std::move(rows);
    return e;
}

LinearSolution read_solution(const Echelon& e, std::size_t ncols, std::size_t rhs_col, bool with_kernel,
                             const std::vector<std::vector<Q>>& kernel_cache)
{
    LinearSolution s;
    const std::size_t rank = e.pivcol.size();
    s.rank = rank;
    for (std::size_t i = rank; i < e.rows.size(); ++i)
        if (e.rows[i][rhs_col] != 0) return s;
    s.particular.assign(ncols, Q(0));
    for (std::size_t i = 0; i < rank; ++i) {
        Q v(e.rows[i][rhs_col], e.rows[i][e.pivcol[i]]);
        v.canonicalize();
        s.particular[e.pivcol[i]] = v;
    }
    if (with_kernel) s.kernel = kernel_cache;
    s.kind = rank == ncols ? LinearSolution::Kind::Unique : LinearSolution::Kind::Family;
    return s;
}

std::vector<std::vector<Q>> kernel_from(const Echelon& e, std::size_t ncols)
{
    std::vector<std::vector<Q>> ker;
    std::vector<bool> is_piv(ncols, false);
    for (auto c : e.pivcol) is_piv[c] = true;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Q> v(ncols, Q(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivcol.size(); ++i) {
            if (e.rows[i][f] == 0) continue;
            Q t(-e.rows[i][f], e.rows[i][e.pivcol[i]]);
            t.canonicalize();
            v[e.pivcol[i]] = t;
        }
        ker.push_back(std::move(v));
    }
    return ker;
}

std::size_t width_of(const QMatrix& a) { return a.empty() ? 0 : a[0].size(); }

}  // namespace

std::vector<LinearSolution> solve_linear_multi(const QMatrix& a, const std::vector<std::vector<Q>>& rhs)
{
    const std::size_t m = a.size(), n = width_of(a);
    for (const auto& b : rhs)
        if (b.size() != m) throw std::invalid_argument("solve_linear: rhs length mismatch");
    std::vector<ZRow> rows;
    rows.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("solve_linear: ragged matrix");
        std::vector<Q> aug = a[i];
        for (const auto& b : rhs) aug.push_back(b[i]);
        rows.push_back(integer_row(aug));
    }
    Echelon e = eliminate(std::move(rows), n);
    auto ker = kernel_from(e, n);
    std::vector<LinearSolution> out;
    for (std::size_t j = 0; j < rhs.size(); ++j) out.push_back(read_solution(e, n, n + j, true, ker));
    return out;
}

LinearSolution solve_linear(const QMatrix& a, const std::vector<Q>& b)
{
    return solve_linear_multi(a, {b}).front();
}

std::vector<std::vector<Q>> kernel_basis(const QMatrix& a)
{
    const std::size_t n = width_of(a);
    std::vector<ZRow> rows;
    for (const auto& r : a) rows.push_back(integer_row(r));
    return kernel_from(eliminate(std::move(rows), n), n);
}

std::size_t rank_of(const QMatrix& a)
{
    const std::size_t n = width_of(a);
    std::vector<ZRow> rows;
    for (const auto& r : a) rows.push_back(integer_row(r));
    return eliminate(std::move(rows), n).pivcol.size();
}

Q determinant(const QMatrix& a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n != width_of(a)) throw std::invalid_argument("determinant: matrix not square");
    // fraction-free (Bareiss) on the integer-scaled rows
    Q scale = 1;
    Matrix<Z> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        Z l = lcm_of_denominators(a[i]);
        scale /= l;
        m[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
    }
    Z prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Q d(m[n - 1][n - 1]);
    d *= scale;
    return sign > 0 ? d : Q(-d);
}

}  // namespace g1
