#include "g1/omega.hpp"

#include "g1/covariants.hpp"
#include "g1/hesse.hpp"

#include <map>
#include <optional>

namespace g1 {

namespace {

using RowIndex = std::map<Exponent, std::size_t, GrlexLess>;

RowIndex index_of(const std::vector<Exponent>& basis)
{
    RowIndex r;
    for (std::size_t i = 0; i < basis.size(); ++i) r[basis[i]] = i;
    return r;
}

QPoly monomial_poly(const Exponent& e) { return QPoly::monomial(5, e); }

// syzygies sum_i q_i g_i = 0 with each q_i a form of degree d
std::vector<std::vector<QPoly>> form_syzygies(const std::vector<QPoly>& g, int d, OmegaComputation* stats)
{
    const auto unknowns = monomials(5, d);
    const int out_deg = d + g[0].degree();
    const auto rows = monomials(5, out_deg);
    const auto at = index_of(rows);
    const std::size_t n = g.size() * unknowns.size();
    QMatrix m(rows.size(), std::vector<Q>(n, Q(0)));
    std::size_t col = 0;
    for (const auto& gi : g)
        for (const auto& e : unknowns) {
            const QPoly prod = monomial_poly(e) * gi;
            for (const auto& [f, c] : prod.terms()) m[at.at(f)][col] = c;
            ++col;
        }
    auto ker = kernel_basis(m);
    if (stats) {
        stats->syzygy_equations = rows.size();
        stats->syzygy_unknowns = n;
        stats->syzygy_rank = n - ker.size();
    }
    std::vector<std::vector<QPoly>> out;
    for (const auto& v : ker) {
        std::vector<QPoly> q(g.size(), QPoly(5));
        std::size_t c = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (const auto& e : unknowns) q[i].add_term(e, v[c++]);
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<QPoly> gradient(const QPoly& f)
{
    std::vector<QPoly> g;
    for (int i = 0; i < 5; ++i) g.push_back(f.derivative(i));
    return g;
}

std::optional<Q> poly_ratio(const std::vector<QPoly>& a, const std::vector<QPoly>& b)
{
    std::optional<Q> r;
    for (std::size_t i = 0; i < b.size() && !r; ++i)
        if (!b[i].is_zero()) r = a[i].coeff(b[i].terms().begin()->first) / b[i].terms().begin()->second;
    if (!r) return std::nullopt;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (a[i] != b[i] * *r) return std::nullopt;
    return r;
}

}  // namespace

bool in_quadric_ideal(const QPoly& f, const std::vector<QPoly>& q)
{
    if (f.is_zero()) return true;
    if (!f.is_homogeneous() || f.degree() < 2) return false;
    const int d = f.degree();
    const auto rows = monomials(5, d);
    const auto at = index_of(rows);
    std::vector<QPoly> gens;
    for (const auto& e : monomials(5, d - 2))
        for (const auto& p : q) gens.push_back(monomial_poly(e) * p);
    QMatrix m(rows.size(), std::vector<Q>(gens.size(), Q(0)));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (const auto& [e, c] : gens[j].terms()) m[at.at(e)][j] = c;
    return solve_linear(m, f.coefficients_on(rows)).kind != LinearSolution::Kind::Inconsistent;
}

std::size_t linear_syzygy_dim(const QPoly& f)
{
    if (f.is_zero()) return 25;
    return form_syzygies(gradient(f), 1, nullptr).size();
}

OmegaComputation compute_omega(const GenusOneModel& phi)
{
    OmegaComputation out;
    const QPoly f = secant_quintic(phi);
    if (f.is_zero()) throw DomainError("singular model");
    const auto grad = gradient(f);
    auto syz = form_syzygies(grad, 2, &out);
    out.kernel_dim = syz.size();
    if (syz.size() != 5) throw DomainError("singular model");

    // B[i][c] = q_i of the c-th syzygy; solve for constant M with B M alternating
    const auto quad = monomials(5, 2);
    const auto at = index_of(quad);
    QMatrix m;
    auto add_condition = [&](int i, int j) {
        // coefficients of (BM)_ij + (BM)_ji (or (BM)_ii) in the unknowns M[c][k]
        std::vector<std::vector<Q>> rows(quad.size(), std::vector<Q>(25, Q(0)));
        for (int c = 0; c < 5; ++c) {
            for (const auto& [e, v] : syz[c][i].terms()) rows[at.at(e)][5 * c + j] += v;
            if (i != j)
                for (const auto& [e, v] : syz[c][j].terms()) rows[at.at(e)][5 * c + i] += v;
        }
        for (auto& r : rows) m.push_back(std::move(r));
    };
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) add_condition(i, j);
    auto ker = kernel_basis(m);
    out.alternating_dim = ker.size();
    if (ker.size() != 1) throw DomainError("singular model");

    std::vector<QPoly> entries;
    for (auto [i, j] : model_pairs()) {
        QPoly e(5);
        for (int c = 0; c < 5; ++c) e += syz[c][i] * ker[0][5 * c + j];
        entries.push_back(std::move(e));
    }
    Dense om = omega_from_entries(entries);
    auto rho = poly_ratio(omega_pfaffians(om), grad);
    if (!rho) throw std::logic_error("normalization failure: Pfaffians not proportional to grad S10");
    out.rho = *rho;
    const Q kappa = hesse::calibrate().pf;
    auto s = exact_sqrt(*rho / kappa);
    if (!s) throw std::logic_error("normalization failure: " + to_string(*rho / kappa) + " is not a rational square");
    om /= *s;
    // the sign is not determined by the syzygies; take the covariant one
    Pipeline p(phi);
    const Dense& direct = p.omega();
    if (om == -direct) om = -om;
    else if (om != direct) throw std::logic_error("omega: syzygy route disagrees with the covariant");
    out.omega = std::move(om);
    return out;
}

Dense omega_matrix(const GenusOneModel& phi) { return compute_omega(phi).omega; }

OmegaReport verify_omega(const GenusOneModel& phi, const Dense& om)
{
    OmegaReport r;
    const auto p = quadrics_of(pfaffians(phi));
    const QPoly f = secant_quintic_of_quadrics(p);

    r.alternating = om.rank() == 4 && sig::omega().well_formed(om);
    if (!r.alternating) r.failures.push_back("(i) not an alternating matrix of quadrics");

    if (r.alternating) {
        auto e = omega_entries(om);
        Matrix<QPoly> full(5, std::vector<QPoly>(5, QPoly(5)));
        for (int k = 0; k < 10; ++k) {
            auto [i, j] = model_pairs()[k];
            full[i][j] = e[k];
            full[j][i] = -e[k];
        }
        bool ok = true;
        for (int l = 0; l < 5 && ok; ++l)
            for (int j = 0; j < 5 && ok; ++j) {
                QPoly s(5);
                for (int i = 0; i < 5; ++i) s += p[l].derivative(i) * full[i][j];
                ok = in_quadric_ideal(s, p);
            }
        r.jacobian_in_ideal = ok;
        if (!ok) r.failures.push_back("(ii) J Omega not in I(C)_3");

        auto pf = omega_pfaffians(om);
        std::vector<QPoly> grad = gradient(f);
        const Q kappa = hesse::calibrate().pf;
        r.pfaffians_match = !f.is_zero();
        for (int i = 0; i < 5 && r.pfaffians_match; ++i) r.pfaffians_match = pf[i] == grad[i] * kappa;
        if (!r.pfaffians_match) r.failures.push_back("(iii) Pf4(Omega) != kappa grad S10");

        ok = true;
        for (const auto& x : pf) ok = ok && in_quadric_ideal(x, p);
        r.pfaffians_in_ideal = ok;
        if (!ok) r.failures.push_back("(iv) 4x4 Pfaffians not in I(C)_4");
    } else {
        r.failures.push_back("(ii)-(iv) skipped");
    }

    r.no_linear_syzygies = !f.is_zero() && linear_syzygy_dim(f) == 0;
    if (!r.no_linear_syzygies) r.failures.push_back("(v) grad S10 has linear syzygies");
    return r;
}

}  // namespace g1
