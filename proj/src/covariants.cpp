#include "g1/covariants.hpp"

#include "g1/contractions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace g1 {

namespace {

QPoly wvar(int k) { return QPoly::var(5, k); }

// canonical (a <= b, k) ordering shared by the Sym2 (x) Lin solves
std::vector<std::pair<int, int>> sym_pairs()
{
    std::vector<std::pair<int, int>> p;
    for (int a = 0; a < 5; ++a)
        for (int b = a; b < 5; ++b) p.emplace_back(a, b);
    return p;
}

QMatrix columns_to_matrix(const std::vector<QPoly>& cols, const std::vector<Exponent>& basis)
{
    QMatrix m(basis.size(), std::vector<Q>(cols.size(), Q(0)));
    std::map<Exponent, std::size_t, GrlexLess> row;
    for (std::size_t i = 0; i < basis.size(); ++i) row[basis[i]] = i;
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [e, c] : cols[j].terms()) m.at(row.at(e))[j] = c;
    return m;
}

std::vector<Q> vec_of(const QPoly& p, const std::vector<Exponent>& basis) { return p.coefficients_on(basis); }

LinearSolution unique_or_throw(LinearSolution s)
{
    if (s.kind == LinearSolution::Kind::Inconsistent) throw std::logic_error("covariant solve: inconsistent system");
    if (s.kind != LinearSolution::Kind::Unique) throw DomainError("singular model");
    return s;
}

// quadrics in the V variables from a Sym2(V)-first tensor: q_k = sum T[a][b][k] v_a v_b
std::vector<QPoly> v_quadrics(const Dense& t)
{
    std::vector<QPoly> out;
    for (int k = 0; k < 5; ++k) {
        QPoly f(5);
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) {
                if (is_zero(t(a, b, k))) continue;
                Exponent e{};
                ++e[a];
                ++e[b];
                f.add_term(e, t(a, b, k));
            }
        out.push_back(std::move(f));
    }
    return out;
}

Dense psi_as_model(const Dense& psi) { return psi.transposed({1, 2, 0}); }

}  // namespace

Weights weights_of(int degree, const Signature& y)
{
    auto [r, s] = y.homogeneity();
    Weights w;
    w.p = Q(2 * degree - r, 5);
    w.q = Q(degree - s, 5);
    w.p.canonicalize();
    w.q.canonicalize();
    w.integral = w.p.get_den() == 1 && w.q.get_den() == 1;
    return w;
}

DetMap det_map(const Tensor& x, const Tensor& y)
{
    auto scale_of = [](const Tensor& t) {
        if (t.sig == sig::model()) return Q(1);
        if (t.sig == sig::s2v_w()) return Q(2);
        throw std::invalid_argument("det_map: expected Alt2(V),W or Sym2(V),W, got " + t.sig.str());
    };
    const Q sx = scale_of(x), sy = scale_of(y);
    const int n = 7;  // v0..v4, lambda, mu
    Matrix<QPoly> a(5, std::vector<QPoly>(5, QPoly(n)));
    for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) {
            QPoly f(n);
            for (int i = 0; i < 5; ++i) {
                Exponent e{};
                e[i] = 1;
                e[5] = 1;
                f.add_term(e, sx * x.full(i, j, k));
                e[5] = 0;
                e[6] = 1;
                f.add_term(e, sy * y.full(i, j, k));
            }
            a[j][k] = f;
        }
    QPoly d = determinant_laplace(a);
    DetMap out;
    for (auto& c : out.coeff) c = QPoly(5);
    for (const auto& [e, c] : d.terms()) {
        Exponent f = e;
        int mu = f[6];
        f[5] = f[6] = 0;
        out.coeff[mu].add_term(f, c);
    }
    return out;
}

QPoly polarized_substitution(const Dense& q, const std::vector<QPoly>& f, const std::vector<QPoly>& g)
{
    QPoly out(5);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            QPoly lin(5);
            for (int k = 0; k < 5; ++k) lin += wvar(k) * q(a, b, k);
            if (lin.is_zero()) continue;
            out += f[a] * g[b] * lin;
        }
    return out;
}

PolarExpansion polar_expand(const Dense& x, const Dense& y)
{
    PolarExpansion e;
    e.l2 = pfaffian_tensor(x);
    e.m2 = pfaffian_tensor(y);
    e.lm = pfaffian_tensor(x + y) - e.l2 - e.m2;
    return e;
}

// ---- Pipeline

Pipeline::Pipeline(GenusOneModel phi, const hesse::CalibrationTable* table)
    : phi_(std::move(phi)), cal_(table ? table : &hesse::calibrate()), u_(phi_.full())
{
}

const Dense& Pipeline::p2()
{
    if (!p2_) p2_ = pfaffian_tensor(u_);
    return *p2_;
}

const Dense& Pipeline::omega()
{
    if (!omega_) omega_ = raw::omega(u_, p2()) / cal_->omega;
    return *omega_;
}

Invariants Pipeline::invariants()
{
    if (!inv_) {
        Invariants v;
        v.c4 = raw::trace_chain(omega(), 4) / cal_->c4;
        v.c6 = raw::trace_chain(omega(), 6) / cal_->c6;
        v.disc = (v.c4 * v.c4 * v.c4 - v.c6 * v.c6) / 1728;
        inv_ = v;
    }
    return *inv_;
}

bool Pipeline::nonsingular() { return !is_zero(invariants().disc); }

void Pipeline::require_nonsingular()
{
    if (!nonsingular()) throw DomainError("singular model");
}

const Dense& Pipeline::hessian()
{
    if (!h_) {
        require_nonsingular();
        h_ = raw::hessian(u_, p2(), omega()) / cal_->hessian;
    }
    return *h_;
}

const Dense& Pipeline::p12()
{
    if (!p12_) {
        auto e = polar_expand(u_, hessian());
        p12_ = e.lm / Q(2);
        p22_ = e.m2;
    }
    return *p12_;
}

const Dense& Pipeline::p22()
{
    p12();
    return *p22_;
}

const Dense& Pipeline::q6()
{
    if (!q6_) {
        require_nonsingular();
        q6_ = raw::q6(u_, p2()) / cal_->q6;
    }
    return *q6_;
}

void Pipeline::q_solves()
{
    const auto basis = monomials(5, 5);
    const auto pairs = sym_pairs();
    auto f = quadrics_of(p2()), g = quadrics_of(p12()), h = quadrics_of(p22());
    std::vector<QPoly> cols;
    for (auto [a, b] : pairs) {
        QPoly fg = a == b ? f[a] * g[a] : (f[a] * g[b] + f[b] * g[a]) * Q(1, 2);
        for (int k = 0; k < 5; ++k) cols.push_back(fg * wvar(k));
    }
    QMatrix m = columns_to_matrix(cols, basis);
    auto to_full = [&](const std::vector<Q>& x) {
        Dense t(3);
        std::size_t c = 0;
        for (auto [a, b] : pairs)
            for (int k = 0; k < 5; ++k, ++c) {
                if (a == b) {
                    t(a, a, k) = x[c];
                } else {
                    t(a, b, k) = x[c] / 2;
                    t(b, a, k) = x[c] / 2;
                }
            }
        return t;
    };
    const auto s16 = unique_or_throw(solve_linear(m, vec_of(polarized_substitution(q6(), g, g), basis)));
    q16_ = to_full(s16.particular);
    QPoly rhs = polarized_substitution(q6(), g, h) + polarized_substitution(*q16_, g, g) * Q(4);
    const auto s26 = unique_or_throw(solve_linear(m, vec_of(rhs, basis)));
    q26p_ = to_full(s26.particular);
    const Q c4 = invariants().c4;
    q26_ = (*q26p_ / Q(5) + q6() * (3 * c4)) / Q(4);
}

const Dense& Pipeline::q16()
{
    if (!q16_) q_solves();
    return *q16_;
}

const Dense& Pipeline::q26()
{
    if (!q26_) q_solves();
    return *q26_;
}

const Dense& Pipeline::q26_prime()
{
    if (!q26p_) q_solves();
    return *q26p_;
}

void Pipeline::det_maps()
{
    Tensor tu{sig::model(), u_}, th{sig::model(), hessian()};
    Tensor t6{sig::s2v_w(), q6()}, t16{sig::s2v_w(), q16()};
    auto d1 = det_map(tu, t6);
    m10_ = d1.coeff[1];
    m20_ = d1.coeff[3] * Q(-1, 2);
    m30_ = d1.coeff[5];
    auto d2 = det_map(th, t6);
    m50_ = d2.coeff[1];
    m40_ = d2.coeff[3] * Q(1, 2);
    auto d3 = det_map(tu, t16);
    m50p_ = d3.coeff[3] * Q(1, 2);
}

const QPoly& Pipeline::m10()
{
    if (!m10_) det_maps();
    return *m10_;
}
const QPoly& Pipeline::m20()
{
    if (!m20_) det_maps();
    return *m20_;
}
const QPoly& Pipeline::m30()
{
    if (!m30_) det_maps();
    return *m30_;
}
const QPoly& Pipeline::m40()
{
    if (!m40_) det_maps();
    return *m40_;
}
const QPoly& Pipeline::m50()
{
    if (!m50_) det_maps();
    return *m50_;
}
const QPoly& Pipeline::m50_prime()
{
    if (!m50p_) det_maps();
    return *m50p_;
}

void Pipeline::r_solves()
{
    const auto basis = monomials(5, 5);
    const auto pairs = sym_pairs();
    auto a = v_quadrics(q6()), b = v_quadrics(q16());
    std::vector<QPoly> cols;
    for (int i = 0; i < 5; ++i) {
        QPoly vi = QPoly::var(5, i);
        for (auto [k, l] : pairs) {
            QPoly e = k == l ? a[k] * b[k] : (a[k] * b[l] + a[l] * b[k]) * Q(1, 2);
            cols.push_back(vi * e);
        }
    }
    QMatrix m = columns_to_matrix(cols, basis);
    const auto inv = invariants();
    const Q c4 = inv.c4, c6 = inv.c6;
    QPoly rhs18 = (m10() * (5 * c6) + m20() * (14 * c4) + m40()) * Q(-1, 36);
    QPoly rhs28 = (m10() * (9 * c4 * c4) + m20() * (620 * c6) - m30() * (270 * c4) + m50() - m50_prime() * Q(216)) *
                  Q(-1, 1584);
    auto sols = solve_linear_multi(m, {vec_of(rhs18, basis), vec_of(rhs28, basis)});
    auto to_full = [&](const std::vector<Q>& x) {
        Dense t(3);
        std::size_t c = 0;
        for (int i = 0; i < 5; ++i)
            for (auto [k, l] : pairs) {
                if (k == l) {
                    t(i, k, k) = x[c];
                } else {
                    t(i, k, l) = x[c] / 2;
                    t(i, l, k) = x[c] / 2;
                }
                ++c;
            }
        return t;
    };
    r18_ = to_full(unique_or_throw(sols[0]).particular);
    r28_ = to_full(unique_or_throw(sols[1]).particular);
}

const Dense& Pipeline::r18()
{
    if (!r18_) r_solves();
    return *r18_;
}

const Dense& Pipeline::r28()
{
    if (!r28_) r_solves();
    return *r28_;
}

const Dense& Pipeline::pi19()
{
    if (!pi19_) pi19_ = raw::pi(u_, r18()) / cal_->pi;
    return *pi19_;
}

const Dense& Pipeline::pi29()
{
    if (!pi29_) pi29_ = raw::pi(u_, r28()) / cal_->pi;
    return *pi29_;
}

const Dense& Pipeline::pi49()
{
    if (!pi49_) {
        const auto inv = invariants();
        pi49_ = (pi19() * inv.c6 - pi29() * inv.c4) / Q(144);
    }
    return *pi49_;
}

const Dense& Pipeline::r38()
{
    if (!r38_) r38_ = pfaffian_tensor(pi19()) - r18() * invariants().c4;
    return *r38_;
}

void Pipeline::psi_solves()
{
    require_nonsingular();
    const auto basis = monomials(5, 2);
    auto entries = omega_entries(omega());
    QMatrix m = columns_to_matrix(entries, basis);
    auto t7 = quadrics_of(p12());
    auto p = quadrics_of(p2()), p22q = quadrics_of(p22());
    const Q c4 = invariants().c4;
    std::vector<std::vector<Q>> rhs;
    for (int k = 0; k < 5; ++k) rhs.push_back(vec_of(t7[k], basis));
    for (int k = 0; k < 5; ++k) rhs.push_back(vec_of((p22q[k] + p[k] * c4) * Q(1, 2), basis));
    auto sols = solve_linear_multi(m, rhs);
    Dense a(3), b(3);
    for (int k = 0; k < 5; ++k)
        for (int s = 0; s < 2; ++s) {
            const auto x = unique_or_throw(sols[5 * s + k]).particular;
            Dense& t = s == 0 ? a : b;
            for (int pi = 0; pi < 10; ++pi) {
                auto [i, j] = model_pairs()[pi];
                t(k, i, j) = x[pi] / cal_->psi;
                t(k, j, i) = -x[pi] / cal_->psi;
            }
        }
    psi7_ = std::move(a);
    psi17_ = std::move(b);
}

const Dense& Pipeline::psi7()
{
    if (!psi7_) psi_solves();
    return *psi7_;
}

const Dense& Pipeline::psi17()
{
    if (!psi17_) psi_solves();
    return *psi17_;
}

const Dense& Pipeline::xi13()
{
    if (!xi13_) xi13_ = raw::xi(psi7(), q6()) / cal_->xi13;
    return *xi13_;
}

const Dense& Pipeline::xi23()
{
    if (!xi23_) xi23_ = raw::xi(psi7(), q16()) / cal_->xi23;
    return *xi23_;
}

const Dense& Pipeline::s14()
{
    if (!s14_) {
        auto e = polar_expand(psi_as_model(psi7()), psi_as_model(psi17()));
        s14_ = e.l2.transposed({1, 2, 0});
        s24_ = (e.lm / Q(2)).transposed({1, 2, 0});
        s34_ = e.m2.transposed({1, 2, 0});
    }
    return *s14_;
}

const Dense& Pipeline::s24()
{
    s14();
    return *s24_;
}

const Dense& Pipeline::s34()
{
    s14();
    return *s34_;
}

namespace {

struct CovariantInfo {
    int degree;
    Signature (*sig)();
    const Dense& (Pipeline::*get)();
};

const std::map<std::string, CovariantInfo>& covariant_table()
{
    static const std::map<std::string, CovariantInfo> t{
        {"p2", {2, sig::quadrics, &Pipeline::p2}},
        {"omega", {5, sig::omega, &Pipeline::omega}},
        {"q6", {6, sig::s2v_w, &Pipeline::q6}},
        {"psi7", {7, sig::psi, &Pipeline::psi7}},
        {"hessian", {11, sig::model, &Pipeline::hessian}},
        {"p12", {12, sig::quadrics, &Pipeline::p12}},
        {"xi13", {13, sig::xi, &Pipeline::xi13}},
        {"s14", {14, sig::s2vd_wd, &Pipeline::s14}},
        {"q16", {16, sig::s2v_w, &Pipeline::q16}},
        {"psi17", {17, sig::psi, &Pipeline::psi17}},
        {"r18", {18, sig::v_s2wd, &Pipeline::r18}},
        {"pi19", {19, sig::dual_model, &Pipeline::pi19}},
        {"p22", {22, sig::quadrics, &Pipeline::p22}},
        {"xi23", {23, sig::xi, &Pipeline::xi23}},
        {"s24", {24, sig::s2vd_wd, &Pipeline::s24}},
        {"q26", {26, sig::s2v_w, &Pipeline::q26}},
        {"r28", {28, sig::v_s2wd, &Pipeline::r28}},
        {"pi29", {29, sig::dual_model, &Pipeline::pi29}},
        {"s34", {34, sig::s2vd_wd, &Pipeline::s34}},
        {"r38", {38, sig::v_s2wd, &Pipeline::r38}},
        {"pi49", {49, sig::dual_model, &Pipeline::pi49}},
    };
    return t;
}

const CovariantInfo& info_of(const std::string& name)
{
    auto it = covariant_table().find(name);
    if (it == covariant_table().end()) throw std::invalid_argument("unknown covariant '" + name + "'");
    return it->second;
}

}  // namespace

const std::vector<std::string>& Pipeline::covariant_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::pair<int, std::string>> v;
        for (const auto& [n, i] : covariant_table()) v.emplace_back(i.degree, n);
        std::sort(v.begin(), v.end());
        std::vector<std::string> out;
        for (auto& p : v) out.push_back(p.second);
        return out;
    }();
    return names;
}

int Pipeline::degree_of(const std::string& name) { return info_of(name).degree; }
Signature Pipeline::signature_of(const std::string& name) { return info_of(name).sig(); }

Tensor Pipeline::covariant(const std::string& name)
{
    const auto& i = info_of(name);
    if (name != "p2") require_nonsingular();
    return Tensor{i.sig(), (this->*i.get)()};
}

// ---- wrappers

Invariants invariants(const GenusOneModel& phi) { return Pipeline(phi).invariants(); }

GenusOneModel hessian(const GenusOneModel& phi)
{
    Pipeline p(phi);
    return GenusOneModel::from_full(p.hessian(), phi.dual());
}

GenusOneModel double_model(const GenusOneModel& phi, bool proper)
{
    Pipeline p(phi);
    GenusOneModel out = GenusOneModel::from_full(p.pi49(), !phi.dual());
    if (!proper) return out;
    // w0 -> disc^-4 w0 divides c4 by disc^16 and c6 by disc^24
    Transformation g = Transformation::identity();
    Q d = p.invariants().disc;
    g.gW[0][0] = 1 / (d * d * d * d);
    GenusOneModel r = apply(g, out);
    r.set_dual(out.dual());
    return r;
}

std::vector<QPoly> omega_entries(const Dense& om)
{
    std::vector<QPoly> out;
    for (auto [i, j] : model_pairs()) {
        QPoly f(5);
        for (int p = 0; p < 5; ++p)
            for (int q = 0; q < 5; ++q) {
                if (is_zero(om(i, j, p, q))) continue;
                Exponent e{};
                ++e[p];
                ++e[q];
                f.add_term(e, om(i, j, p, q));
            }
        out.push_back(std::move(f));
    }
    return out;
}

Dense omega_from_entries(const std::vector<QPoly>& e)
{
    Dense om(4);
    for (int pi = 0; pi < 10; ++pi) {
        auto [i, j] = model_pairs()[pi];
        for (const auto& [ex, c] : e[pi].terms()) {
            std::vector<int> idx;
            for (int v = 0; v < 5; ++v)
                for (int t = 0; t < ex[v]; ++t) idx.push_back(v);
            if (idx.size() != 2) throw std::invalid_argument("omega_from_entries: entries must be quadrics");
            if (idx[0] == idx[1]) {
                om(i, j, idx[0], idx[0]) += c;
                om(j, i, idx[0], idx[0]) -= c;
            } else {
                for (auto [p, q] : {std::pair{idx[0], idx[1]}, std::pair{idx[1], idx[0]}}) {
                    om(i, j, p, q) += c / 2;
                    om(j, i, p, q) -= c / 2;
                }
            }
        }
    }
    return om;
}

std::vector<QPoly> omega_pfaffians(const Dense& om)
{
    auto e = omega_entries(om);
    Matrix<QPoly> m(5, std::vector<QPoly>(5, QPoly(5)));
    for (int pi = 0; pi < 10; ++pi) {
        auto [i, j] = model_pairs()[pi];
        m[i][j] = e[pi];
        m[j][i] = -e[pi];
    }
    std::vector<QPoly> out;
    for (int i = 0; i < 5; ++i) {
        std::vector<int> r;
        for (int k = 0; k < 5; ++k)
            if (k != i) r.push_back(k);
        Matrix<QPoly> s(4, std::vector<QPoly>(4, QPoly(5)));
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) s[x][y] = m[r[x]][r[y]];
        QPoly f = pfaffian4(s);
        out.push_back(i % 2 ? -f : f);
    }
    return out;
}

}  // namespace g1
