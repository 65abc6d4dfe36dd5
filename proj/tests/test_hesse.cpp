#include "g1/covariants.hpp"
#include "g1/hesse.hpp"
#include "g1/model.hpp"

#include "printed.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace g1;
using BF = BinaryForm<Q>;
using namespace printed;

namespace {

// f(l F + m G, l H + m K) as a form in (l, m), F..K evaluated at (a, b)
BF compose(const BF& f, const Q& F, const Q& G, const Q& H, const Q& K) { return f.substitute(F, G, H, K); }

// remainder of f(1, t) modulo g(1, t)
std::vector<Q> remainder_at_a1(const BF& f, const BF& g)
{
    std::vector<Q> r = f.coeffs(), d = g.coeffs();
    while (!d.empty() && d.back() == 0) d.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    while (r.size() >= d.size()) {
        const Q q = r.back() / d.back();
        const std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= q * d[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return r;
}

Dense dual_hesse(const Q& a, const Q& b) { return hesse_model(a, b).full(); }

// X[k][1+k][4+k] = f, X[k][2+k][3+k] = g, alternating in the last two slots
Dense psi_shape(const Q& f, const Q& g)
{
    Dense x(3);
    for (int k = 0; k < 5; ++k) {
        x(k, (1 + k) % 5, (4 + k) % 5) = f;
        x(k, (4 + k) % 5, (1 + k) % 5) = -f;
        x(k, (2 + k) % 5, (3 + k) % 5) = g;
        x(k, (3 + k) % 5, (2 + k) % 5) = -g;
    }
    return x;
}

QPoly w(int i) { return QPoly::var(5, ((i % 5) + 5) % 5); }

// the printed Omega display with alpha_i, beta_i; entries in model order
std::vector<QPoly> printed_omega(const Q& a, const Q& b)
{
    std::vector<QPoly> al, be;
    for (int i = 0; i < 5; ++i) {
        al.push_back(w(i) * w(i) * (5 * a * a * a * a * b) - w(i - 1) * w(i + 1) * (10 * a * a * a * b * b) +
                     w(i - 2) * w(i + 2) * (a * a * a * a * a - 3 * b * b * b * b * b));
        be.push_back(w(i) * w(i) * (5 * a * b * b * b * b) - w(i - 1) * w(i + 1) * (3 * a * a * a * a * a + b * b * b * b * b) +
                     w(i - 2) * w(i + 2) * (10 * a * a * b * b * b));
    }
    // rows of the upper triangle: (0,1) a3, (0,2) b1, (0,3) -b4, (0,4) -a2, (1,2) a4, (1,3) b2, (1,4) -b0,
    // (2,3) a0, (2,4) b3, (3,4) a1
    return {al[3], be[1], -be[4], -al[2], al[4], be[2], -be[0], al[0], be[3], al[1]};
}

}  // namespace

TEST_CASE("discrete invariants")
{
    const auto& d = hesse::discrete_invariants();
    CHECK(d.D == printed_D());
    CHECK(d.c4 == printed_c4());
    CHECK(d.c6 == printed_c6());
    CHECK(printed_c4().pow(3, Q(1)) - printed_c6() * printed_c6() == printed_D().pow(5, Q(1)) * Q(1728));

    const auto e = hesse::discrete_invariants(1, 1);
    CHECK(e.D == -11);
    CHECK(e.c4 == 496);
    CHECK(e.c6 == 20008);
    const auto cusp = hesse::discrete_invariants(1, 0);
    CHECK(cusp.D == 0);
    CHECK(cusp.c4 == 1);
    CHECK(cusp.c6 == -1);
    CHECK(hesse::discrete_invariants(1, 2).D == -2750);
}

TEST_CASE("forms of the Psi and Xi covariants")
{
    const auto& p = hesse::psi_ref_forms();
    CHECK(p.f_lo == printed_f7());
    CHECK(p.g_lo == printed_g7());
    CHECK(p.f_hi == printed_f17());
    CHECK(p.g_hi == printed_g17());
    const auto& x = hesse::xi_ref_forms();
    CHECK(x.f_lo == printed_f13());
    CHECK(x.g_lo == printed_g13());
    CHECK(x.f_hi == printed_f23());
    CHECK(x.g_hi == printed_g23());

    CHECK(p.f_lo.evaluate(1, 1) == 6);
    CHECK(p.g_lo.evaluate(1, 1) == 8);
    CHECK(p.f_hi.evaluate(1, 1) == 324);
    CHECK(p.g_hi.evaluate(1, 1) == -52);
    CHECK(x.f_lo.evaluate(1, 1) == 64);
    CHECK(x.g_lo.evaluate(1, 1) == 14);

    const BF lhs = printed_f7() * printed_g17() - printed_g7() * printed_f17();
    CHECK(lhs == printed_D() * printed_D() * Q(-24));
    CHECK(lhs.evaluate(1, 1) == -2904);
}

TEST_CASE("Hesse polynomials match the printed display")
{
    const auto sym = hesse::hesse_polynomials_symbolic();
    REQUIRE(sym.D.degree() == 12);
    const auto printed = printed_hesse_D();
    for (int i = 0; i <= 12; ++i) CHECK(sym.D[i] == printed[i]);

    for (auto [c4, c6] : std::vector<std::pair<long, long>>{{496, 20008}, {29137, -4986649}, {-3, 7}}) {
        const auto h = hesse::hesse_polynomials(c4, c6);
        const BF D = specialize(printed, c4, c6);
        CHECK(h.D == D);
        CHECK(h.D[0] == -(125 * Q(c4) * c4 * c4 + 64 * Q(c6) * c6));
        const BF c4f = hesse::hessian_det(D).scaled(Q(-1, 121 * 144));
        CHECK(h.c4 == c4f);
        CHECK(h.c6 == hesse::jacobian_det(D, c4f).scaled(Q(-1, 240)));
    }
}

TEST_CASE("Hesse polynomials satisfy the syzygy at random specializations")
{
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int trial = 0; trial < 5; ++trial) {
        const Q c4 = d(rng), c6 = d(rng), l = d(rng), m = d(rng);
        const auto h = hesse::hesse_polynomials(c4, c6);
        const Q D = h.D.evaluate(l, m), C4 = h.c4.evaluate(l, m), C6 = h.c6.evaluate(l, m);
        const Q disc = c4 * c4 * c4 - c6 * c6;
        CHECK(C4 * C4 * C4 - C6 * C6 == disc * disc * D * D * D * D * D);
    }
}

TEST_CASE("Hesse polynomials from the Psi pencil")
{
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, -3}, {3, 1}}) {
        const Q f7 = printed_f7().evaluate(a, b), g7 = printed_g7().evaluate(a, b);
        const Q f17 = printed_f17().evaluate(a, b), g17 = printed_g17().evaluate(a, b);
        const Q D = printed_D().evaluate(a, b);
        const auto h = hesse::hesse_polynomials(printed_c4().evaluate(a, b), printed_c6().evaluate(a, b));
        CHECK(h.D == compose(printed_D(), f7, f17, g7, g17).scaled(27 / (D * D)));
        CHECK(h.c4 == compose(printed_c4(), f7, f17, g7, g17).scaled(Q(54 * 54)));
        CHECK(h.c6 == compose(printed_c6(), f7, f17, g7, g17).scaled(Q(54 * 54 * 54)));
        CHECK(hesse::hesse_D_via_psi(a, b) == h.D);
    }
}

TEST_CASE("D of the Psi pencil is divisible by D squared")
{
    const BF d2 = printed_D() * printed_D();
    const BF f7 = printed_f7(), g7 = printed_g7(), f17 = printed_f17(), g17 = printed_g17();
    // D(l X + m Y) for binary-form-valued X = (f7, g7), Y = (f17, g17): the coefficient of l^(12-i) m^i is
    // sum over monomials a^r b^s of D, a form in (a, b) of degree 7 (12 - i) + 17 i
    const BF& D = printed_D();
    for (int i = 0; i <= 12; ++i) {
        BF coeff = BF::zero(7 * (12 - i) + 17 * i);
        for (int s = 0; s <= 12; ++s) {
            if (D[s] == 0) continue;
            const int r = 12 - s;
            // expand (l f7 + m f17)^r (l g7 + m g17)^s and keep l^(12-i) m^i
            for (int j = 0; j <= std::min(r, i); ++j) {
                const int jj = i - j;
                if (jj > s) continue;
                Q binom = 1;
                for (int t = 0; t < j; ++t) binom = binom * (r - t) / (t + 1);
                for (int t = 0; t < jj; ++t) binom = binom * (s - t) / (t + 1);
                BF term = f7.pow(r - j, Q(1)) * f17.pow(j, Q(1)) * g7.pow(s - jj, Q(1)) * g17.pow(jj, Q(1));
                coeff += term * (binom * D[s]);
            }
        }
        const auto rem = remainder_at_a1(coeff, d2);
        CHECK(rem.empty());
        // the factor a^2 of D^2 is invisible at a = 1: the top two b-powers must vanish
        const int n = coeff.degree();
        CHECK(coeff[n] == 0);
        CHECK(coeff[n - 1] == 0);
    }
}

TEST_CASE("three by three block of the Omega display")
{
    using F = BF;
    const F a = form(1, {{1, 0, 1}}), b = form(1, {{0, 1, 1}});
    auto mono = [](long c, int i, int j) { return form(i + j, {{i, j, c}}); };
    // rows: (ab, b^2, -a^2), (5a^4 b, -10 a^3 b^2, a^5 - 3 b^5), (5 a b^4, -3 a^5 - b^5, 10 a^2 b^3)
    const std::array<std::array<F, 3>, 3> m{{
        {a * b, b * b, -(a * a)},
        {mono(5, 4, 1), mono(-10, 3, 2), mono(1, 5, 0) + mono(-3, 0, 5)},
        {mono(5, 1, 4), mono(-3, 5, 0) + mono(-1, 0, 5), mono(10, 2, 3)},
    }};
    const F det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    CHECK(det == printed_D() * Q(18));
    CHECK(hesse::omega_block_determinant() == printed_D() * Q(18));
    CHECK(hesse::omega_block_determinant().evaluate(1, 1) == -198);
}

TEST_CASE("reference tensors on the Hesse family")
{
    // H = u(-dD/db, dD/da); at (1,1) the partials are -56 and -76
    CHECK(printed_D().dx().evaluate(1, 1) == -56);
    CHECK(printed_D().dy().evaluate(1, 1) == -76);
    CHECK(hesse::hessian_ref(1, 1) == hesse_model(76, -56).full());

    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {-2, 3}}) {
        const Q D = printed_D().evaluate(a, b);
        CHECK(hesse::pi49_ref(a, b) == dual_hesse(b, -a) * (D * D * D * D));
        CHECK(hesse::pi19_ref(a, b) ==
              dual_hesse(printed_c4().dx().evaluate(a, b) / 20, printed_c4().dy().evaluate(a, b) / 20));
        CHECK(hesse::pi29_ref(a, b) ==
              dual_hesse(printed_c6().dx().evaluate(a, b) / 30, printed_c6().dy().evaluate(a, b) / 30));
        CHECK(hesse::psi7_ref(a, b) == psi_shape(printed_f7().evaluate(a, b), printed_g7().evaluate(a, b)));
        CHECK(hesse::psi17_ref(a, b) == psi_shape(printed_f17().evaluate(a, b), printed_g17().evaluate(a, b)));
        CHECK(hesse::xi13_ref(a, b) == psi_shape(printed_f13().evaluate(a, b), printed_g13().evaluate(a, b)));
        CHECK(hesse::xi23_ref(a, b) == psi_shape(printed_f23().evaluate(a, b), printed_g23().evaluate(a, b)));
        CHECK(hesse::psi_like(3, 4) == psi_shape(3, 4));
        CHECK(omega_entries(hesse::omega_ref(a, b)) == printed_omega(a, b));

        // Q6 = sum (5 a^3 b^3 v0^2 + a (a^5 - 3 b^5) v1 v4 - b (3 a^5 + b^5) v2 v3) w0
        const Dense q = hesse::q6_ref(a, b);
        const Q A = a, B = b;
        for (int s = 0; s < 5; ++s) {
            CHECK(q(s, s, s) == 5 * A * A * A * B * B * B);
            CHECK(2 * q((1 + s) % 5, (4 + s) % 5, s) == A * (A * A * A * A * A - 3 * B * B * B * B * B));
            CHECK(2 * q((2 + s) % 5, (3 + s) % 5, s) == -B * (3 * A * A * A * A * A + B * B * B * B * B));
        }
    }
    const Dense q11 = hesse::q6_ref(1, 1);
    CHECK(q11(0, 0, 0) == 5);
    CHECK(2 * q11(1, 4, 0) == -2);
    CHECK(2 * q11(2, 3, 0) == -4);
}

TEST_CASE("calibration constants")
{
    const auto& c = hesse::calibrate();
    CHECK(c.omega == 1);
    CHECK(c.c4 == Q(665, 2));
    CHECK(c.c6 == Q(12825, 4));
    CHECK(c.hessian == Q(5, 2));
    CHECK(c.q6 == 32);
    CHECK(c.pf == Q(5, 2));
    CHECK(c.q6_subst == Q(-5, 2));
    CHECK((c.psi == 1 || c.psi == -1));
    CHECK(c.pi == 2);
    CHECK(c.xi13 == 2);
    CHECK(c.xi23 == -2);
    CHECK_FALSE(c.schemes.empty());
    CHECK(&hesse::calibrate() == &c);

    // Pf4(Omega) = pf grad S10 and Q6(P2, P2) = q6_subst S10 on the Hesse family
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, -1}}) {
        const GenusOneModel u = hesse_model(a, b);
        const QPoly s = secant_quintic(u);
        const auto pf = omega_pfaffians(hesse::omega_ref(a, b));
        for (int j = 0; j < 5; ++j) CHECK(pf[j] == s.derivative(j) * c.pf);
        const auto p = quadrics_of(pfaffians(u));
        CHECK(polarized_substitution(hesse::q6_ref(a, b), p, p) == s * c.q6_subst);
    }
}
