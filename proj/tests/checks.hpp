#pragma once

// Identity and equivariance checks shared by the unit tests and the
// acceptance runner. Polarizations, det maps and Pfaffian expansions are
// written out here rather than taken from the library.

#include "g1/covariants.hpp"
#include "g1/hesse.hpp"
#include "g1/model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace checks {

using namespace g1;

using Results = std::vector<std::pair<std::string, bool>>;

inline QPoly var(int i) { return QPoly::var(5, i); }

// f_k = sum T[a][b][k] x_a x_b for a tensor with two symmetric leading slots
inline std::vector<QPoly> forms_last_index(const Dense& t)
{
    std::vector<QPoly> f(5, QPoly(5));
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int k = 0; k < 5; ++k)
                if (!is_zero(t(a, b, k))) f[k] += var(a) * var(b) * t(a, b, k);
    return f;
}

// f_i = sum T[i][a][b] x_a x_b
inline std::vector<QPoly> forms_first_index(const Dense& t)
{
    std::vector<QPoly> f(5, QPoly(5));
    for (int i = 0; i < 5; ++i)
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                if (!is_zero(t(i, a, b))) f[i] += var(a) * var(b) * t(i, a, b);
    return f;
}

// Q in Sym2(X),Y evaluated on a pair of X-tuples of quadrics: sum_a,b Q[a][b][k] F_a G_b y_k
inline QPoly bilinear_last(const Dense& q, const std::vector<QPoly>& f, const std::vector<QPoly>& g)
{
    QPoly out(5);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int k = 0; k < 5; ++k)
                if (!is_zero(q(a, b, k))) out += f[a] * g[b] * var(k) * q(a, b, k);
    return out;
}

// R in X,Sym2(Y*) as a quadratic form sum_{k<=l} r_kl y_k y_l on the Y side, polarized as
// R(F, G) = sum_i x_i sum_{k<=l} r_ikl (F_k G_l + F_l G_k)
inline QPoly polarized_form(const Dense& r, const std::vector<QPoly>& f, const std::vector<QPoly>& g)
{
    QPoly out(5);
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 5; ++k)
            for (int l = k; l < 5; ++l) {
                const Q rkl = k == l ? r(i, k, k) : r(i, k, l) + r(i, l, k);
                if (is_zero(rkl)) continue;
                out += var(i) * (f[k] * g[l] + f[l] * g[k]) * rkl;
            }
    return out;
}

// det(l X + m Y) as coefficients of l^(5-j) m^j. X, Y are [i][j][k] with the V
// index first; alternating ones enter as they are, symmetric ones doubled.
inline std::array<QPoly, 6> pencil_det(const Dense& x, bool x_sym, const Dense& y, bool y_sym)
{
    const Q sx = x_sym ? 2 : 1, sy = y_sym ? 2 : 1;
    const QPoly l = QPoly::var(7, 5), m = QPoly::var(7, 6);
    Matrix<QPoly> a(5, std::vector<QPoly>(5, QPoly(7)));
    for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k)
            for (int i = 0; i < 5; ++i) {
                const QPoly v = QPoly::var(7, i);
                if (!is_zero(x(i, j, k))) a[j][k] += v * l * (sx * x(i, j, k));
                if (!is_zero(y(i, j, k))) a[j][k] += v * m * (sy * y(i, j, k));
            }
    const QPoly d = determinant_laplace(a);
    std::array<QPoly, 6> out;
    for (auto& c : out) c = QPoly(5);
    for (const auto& [e, c] : d.terms()) {
        Exponent f = e;
        const int j = f[6];
        f[5] = f[6] = 0;
        out[j].add_term(f, c);
    }
    return out;
}

struct Pencil {
    Dense l2, lm, m2;  // P2(l X + m Y) = l^2 l2 + l m lm + m^2 m2
};
inline Pencil pfaffian_pencil(const Dense& x, const Dense& y)
{
    const Dense a = pfaffian_tensor(x), b = pfaffian_tensor(y);
    const Dense plus = pfaffian_tensor(x + y), minus = pfaffian_tensor(x - y);
    Pencil p{a, (plus - minus) / Q(2), b};
    // l^2 and m^2 terms are recovered from x +- y as a consistency check of quadratic homogeneity
    if ((plus + minus) / Q(2) != a + b) throw std::logic_error("pfaffian pencil: not quadratic");
    return p;
}

// Ξ-like (V,Alt2(W*)) and Ψ-like tensors are read as models with the Alt2 slots first
inline Dense alt_first(const Dense& t) { return t.transposed({1, 2, 0}); }
// Pfaffian output [k][a][b] moved to the Sym2(V),W layout [a][b][k]
inline Dense sym_first(const Dense& t) { return t.transposed({1, 2, 0}); }

// the construction identities on one nonsingular model
inline Results construction_identities(Pipeline& p)
{
    Results r;
    const auto inv = p.invariants();
    const Q c4 = inv.c4, c6 = inv.c6;
    const Dense& u = p.u();

    // P2(l U + m H) = l^2 P2 + 2 l m P12 + m^2 P22
    const Pencil uh = pfaffian_pencil(u, p.hessian());
    r.emplace_back("P2 pencil of U and H", uh.l2 == p.p2() && uh.lm == p.p12() * Q(2) && uh.m2 == p.p22());

    const auto P2 = forms_first_index(p.p2()), P12 = forms_first_index(p.p12()), P22 = forms_first_index(p.p22());
    r.emplace_back("Q16(P2,P12) = Q6(P12,P12)", bilinear_last(p.q16(), P2, P12) == bilinear_last(p.q6(), P12, P12));
    r.emplace_back("Q'26(P2,P12) = Q6(P12,P22) + 4 Q16(P12,P12)",
                   bilinear_last(p.q26_prime(), P2, P12) ==
                       bilinear_last(p.q6(), P12, P22) + bilinear_last(p.q16(), P12, P12) * Q(4));

    // determinant maps
    const auto d1 = pencil_det(u, false, p.q6(), true);
    const auto d2 = pencil_det(p.hessian(), false, p.q6(), true);
    const auto d3 = pencil_det(u, false, p.q16(), true);
    auto shape = [](const std::array<QPoly, 6>& d) { return d[0].is_zero() && d[2].is_zero() && d[4].is_zero(); };
    r.emplace_back("det(lU + mQ6) = l^4 m M10 - 2 l^2 m^3 M20 + m^5 M30",
                   shape(d1) && d1[1] == p.m10() && d1[3] == p.m20() * Q(-2) && d1[5] == p.m30());
    r.emplace_back("det(lH + mQ6) = l^4 m M50 + 2 l^2 m^3 M40 + m^5 M30",
                   shape(d2) && d2[1] == p.m50() && d2[3] == p.m40() * Q(2) && d2[5] == p.m30());
    r.emplace_back("det(lU + mQ16) = l^4 m M20 + 2 l^2 m^3 M'50 + m^5 M80",
                   shape(d3) && d3[1] == p.m20() && d3[3] == p.m50_prime() * Q(2));
    r.emplace_back("M20 agrees between det(lU + mQ6) and det(lU + mQ16)", d1[3] * Q(-1, 2) == d3[1]);
    r.emplace_back("M30 agrees between det(lU + mQ6) and det(lH + mQ6)", d1[5] == d2[5] && !d1[5].is_zero());

    const auto F6 = forms_last_index(p.q6()), F16 = forms_last_index(p.q16());
    const QPoly M10 = d1[1], M20 = d1[3] * Q(-1, 2), M30 = d1[5], M40 = d2[3] * Q(1, 2), M50 = d2[1],
                M50p = d3[3] * Q(1, 2);
    r.emplace_back("R18(Q6,Q16) = -(5 c6 M10 + 14 c4 M20 + M40)/18",
                   polarized_form(p.r18(), F6, F16) == (M10 * (5 * c6) + M20 * (14 * c4) + M40) * Q(-1, 18));
    r.emplace_back("R28(Q6,Q16) = -(9 c4^2 M10 + 620 c6 M20 - 270 c4 M30 + M50 - 216 M'50)/792",
                   polarized_form(p.r28(), F6, F16) ==
                       (M10 * (9 * c4 * c4) + M20 * (620 * c6) - M30 * (270 * c4) + M50 - M50p * Q(216)) *
                           Q(-1, 792));

    // Pfaffian identities on the dual side
    const Pencil xi = pfaffian_pencil(alt_first(p.xi13()), alt_first(p.xi23()));
    r.emplace_back("P2(l Xi13 + m Xi23) = l^2 Q26 - l m (c6 Q6 + c4 Q16) + m^2 (c4^2 Q6 + c6 Q16 - c4 Q26)",
                   sym_first(xi.l2) == p.q26() && sym_first(xi.lm) == -(p.q6() * c6 + p.q16() * c4) &&
                       sym_first(xi.m2) == p.q6() * (c4 * c4) + p.q16() * c6 - p.q26() * c4);
    const Pencil pi = pfaffian_pencil(p.pi19(), p.pi29());
    r.emplace_back("P2(l Pi19 + m Pi29) = l^2 (c4 R18 + R38) + l m (c6 R18 + c4 R28) + m^2 (c6 R28 - c4 R38)",
                   pi.l2 == p.r18() * c4 + p.r38() && pi.lm == p.r18() * c6 + p.r28() * c4 &&
                       pi.m2 == p.r28() * c6 - p.r38() * c4);
    const Pencil ps = pfaffian_pencil(alt_first(p.psi7()), alt_first(p.psi17()));
    r.emplace_back("P2(l Psi7 + m Psi17) = l^2 S14 + 2 l m S24 + m^2 S34",
                   sym_first(ps.l2) == p.s14() && sym_first(ps.lm) == p.s24() * Q(2) && sym_first(ps.m2) == p.s34());

    // Psi tells how to write P12 and (P22 + c4 P2)/2 in terms of the Omega entries
    const auto om = omega_entries(p.omega());
    const Q sign = hesse::calibrate().psi;
    bool psi_ok = true;
    for (int k = 0; k < 5; ++k) {
        QPoly a(5), b(5);
        for (int e = 0; e < 10; ++e) {
            auto [i, j] = model_pairs()[e];
            a += om[e] * (sign * p.psi7()(k, i, j));
            b += om[e] * (sign * p.psi17()(k, i, j));
        }
        psi_ok = psi_ok && a == P12[k] && b == (P22[k] + P2[k] * c4) * Q(1, 2);
    }
    r.emplace_back("(Psi7, Omega) -> P12 and (Psi17, Omega) -> (P22 + c4 P2)/2", psi_ok);

    r.emplace_back("Pi49 = (c6 Pi19 - c4 Pi29)/144", p.pi49() == (p.pi19() * c6 - p.pi29() * c4) / Q(144));
    return r;
}

inline Q power(const Q& x, const Q& e)
{
    if (e.get_den() != 1) throw std::invalid_argument("power: non-integral exponent");
    long n = e.get_num().get_si();
    Q base = n < 0 ? Q(1) / x : x, r = 1;
    for (long k = 0; k < std::abs(n); ++k) r *= base;
    return r;
}

// F(g phi) = (det gV)^p (det gW)^q rho(g) F(phi)
inline bool equivariant(const std::string& name, Pipeline& before, Pipeline& after, const Transformation& g)
{
    const Signature y = Pipeline::signature_of(name);
    const Weights w = weights_of(Pipeline::degree_of(name), y);
    if (!w.integral) return false;
    const Q scale = power(determinant(g.gV), w.p) * power(determinant(g.gW), w.q);
    return after.covariant(name).full == act(g, y, before.covariant(name).full) * scale;
}

}  // namespace checks
