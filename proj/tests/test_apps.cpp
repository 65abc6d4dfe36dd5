#include "g1/apps.hpp"
#include "g1/covariants.hpp"
#include "g1/hesse.hpp"
#include "g1/model.hpp"

#include "support.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace g1;

namespace {

const WeierstrassCurve E{{1, -1, 1, -8109, -279017}};
const WeierstrassCurve F{{1, 0, 0, -607, 5721}};

Q j_E()
{
    const Q c = 389217;
    return -(c * c * c) / (Q(2) * 13 * 109 * 109 * 109);
}

WeierstrassCurve family_member(const Q& xi, const Q& eta)
{
    return congruent_family(29137, -4986649, 1663 * xi + 2850 * eta, 7 * xi + 18 * eta);
}

std::array<Q, 5> minimal_of(const WeierstrassCurve& c) { return minimal_model(c.c4(), c.c6()).a; }

std::array<Q, 5> coeffs(std::initializer_list<long> xs)
{
    std::array<Q, 5> a{};
    std::size_t i = 0;
    for (long x : xs) a[i++] = x;
    return a;
}

bool same_j(const WeierstrassCurve& a, const WeierstrassCurve& b)
{
    return a.c4() * a.c4() * a.c4() * b.c6() * b.c6() == b.c4() * b.c4() * b.c4() * a.c6() * a.c6() &&
           a.c4() * a.c4() * a.c4() * b.disc() == b.c4() * b.c4() * b.c4() * a.disc();
}

}  // namespace

TEST_CASE("Weierstrass invariants")
{
    CHECK(F.c4() == 29137);
    CHECK(F.c6() == -4986649);
    CHECK(F.j() == Q(29137) * 29137 * 29137 / F.disc());
    CHECK(E.c4() == 389217);
    CHECK(E.c6() == 242821935);
    CHECK(E.j() == j_E());
    CHECK(E.c4() * E.c4() * E.c4() - E.c6() * E.c6() == E.disc() * 1728);

    const auto w = weierstrass_invariants({0, 0, 0, 0, 0});
    CHECK(w.disc == 0);
    CHECK_FALSE(w.j.has_value());
    CHECK(WeierstrassCurve{}.singular());

    // y^2 = x^3 - x by hand: c4 = 48, c6 = 0, disc = 64
    const auto c = weierstrass_invariants(coeffs({0, 0, 0, -1, 0}));
    CHECK(c.c4 == 48);
    CHECK(c.c6 == 0);
    CHECK(c.disc == 64);
    CHECK(c.j == Q(1728));
}

TEST_CASE("Jacobian of a model")
{
    const WeierstrassCurve j = jacobian_curve(hesse_model(1, 1));
    CHECK(j == WeierstrassCurve::short_form(-27 * 496, -54 * 20008));
    const WeierstrassCurve jf = jacobian_curve(testing::fixture("f_model.json"));
    CHECK(jf == WeierstrassCurve::short_form(-786699, 269279046));
    CHECK(same_j(jf, F));
    CHECK(minimal_of(jf) == F.a);
    CHECK_THROWS_AS(jacobian_curve(hesse_model(1, 0)), DomainError);
}

TEST_CASE("Jacobians of a model and its double agree")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 2;) {
        const GenusOneModel phi = testing::random_model(rng);
        if (is_zero(invariants(phi).disc)) continue;
        ++trial;
        CHECK(same_j(jacobian_curve(phi), jacobian_curve(double_model(phi))));
    }
}

TEST_CASE("minimal models")
{
    CHECK(minimal_model(29137, -4986649).a == F.a);
    CHECK(minimal_model(E.c4(), E.c6()).a == E.a);
    CHECK(minimal_model(48, 0).a == coeffs({0, 0, 0, -1, 0}));
    CHECK(minimal_model(48, -216).a == coeffs({0, 0, 1, -1, 0}));
    // scaling by u^4, u^6 does not change the minimal model
    CHECK(minimal_model(48 * 16, 0).a == coeffs({0, 0, 0, -1, 0}));
    CHECK(minimal_model(Q(29137) * 81 * 16, Q(-4986649) * 729 * 64).a == F.a);
    // idempotent on minimal curves
    for (const auto& c : {E, F}) CHECK(minimal_of(WeierstrassCurve{minimal_of(c)}) == c.a);
    CHECK_THROWS_AS(minimal_model(1, 1), DomainError);
    // (3, 5) fails the Kraus conditions as it stands; a rescaling passes them
    const WeierstrassCurve s = minimal_model(3, 5);
    CHECK(s.j() == Q(27, 2) * 1728);
    CHECK(kraus_conditions(s.c4().get_num(), s.c6().get_num()));
}

TEST_CASE("Kraus conditions")
{
    CHECK(kraus_conditions(29137, -4986649));
    CHECK(kraus_conditions(48, 0));
    CHECK(kraus_conditions(48, -216));
    CHECK_FALSE(kraus_conditions(3, 5));
    CHECK_FALSE(kraus_conditions(1, 2));
    // every integral model gives a pair that passes
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int k = 0; k < 40; ++k) {
        WeierstrassCurve c;
        for (auto& x : c.a) x = d(rng);
        if (c.singular()) continue;
        CHECK(kraus_conditions(c.c4().get_num(), c.c6().get_num()));
    }
}

TEST_CASE("factorization")
{
    auto product = [](const std::vector<std::pair<Z, int>>& f) {
        Z p = 1;
        for (const auto& [q, e] : f)
            for (int i = 0; i < e; ++i) p *= q;
        return p;
    };
    auto prime = [](const Z& n) {
        if (n < 2) return false;
        for (Z d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (long n : {2L, 12L, 97L, 2834L, 1417L, -360L, 1000003L, 600851475143L}) {
        const auto f = factorize(n);
        CHECK(product(f) == Z(std::abs(n)));
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(f[i].second >= 1);
            if (f[i].first < 10000000) CHECK(prime(f[i].first));
            if (i) CHECK(f[i - 1].first < f[i].first);
        }
    }
    CHECK(factorize(2834) == std::vector<std::pair<Z, int>>{{2, 1}, {13, 1}, {109, 1}});
    // a product of two large primes needs more than trial division
    const Z big = Z(1000000007) * Z(998244353);
    CHECK(factorize(big) == std::vector<std::pair<Z, int>>{{998244353, 1}, {1000000007, 1}});
    CHECK_THROWS(factorize(0));
}

TEST_CASE("rational roots of binary forms")
{
    // brute force over small primitive pairs
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        // product of three linear factors (m_i x - l_i y) and a random quadratic
        BinaryForm<Q> f = BinaryForm<Q>(std::vector<Q>{1});
        for (int k = 0; k < 3; ++k) {
            int l = d(rng), m = d(rng);
            if (l == 0 && m == 0) l = 1;
            f = f * BinaryForm<Q>(std::vector<Q>{m, -l});
        }
        f = f * BinaryForm<Q>(std::vector<Q>{1, d(rng), 5});
        std::set<ProjectivePoint> expect;
        for (int l = -12; l <= 12; ++l)
            for (int m = 0; m <= 12; ++m) {
                if (std::gcd(l, m) != 1) continue;
                if (m == 0 && l != 1) continue;
                if (is_zero(f.evaluate(l, m))) expect.insert({l, m});
            }
        const auto got = rational_roots(f);
        CHECK(std::set<ProjectivePoint>(got.begin(), got.end()) == expect);
    }
    CHECK(rational_roots(BinaryForm<Q>(std::vector<Q>{1, 0, -2})).empty());
}

TEST_CASE("the congruent family")
{
    CHECK(minimal_of(family_member(3, 2)) == E.a);
    CHECK(minimal_of(family_member(0, 1)) == coeffs({1, -1, 1, 68377761, 119969009527L}));
    CHECK(minimal_of(family_member(1, 0)) == coeffs({1, 0, 0, 895245563, 21917334070263L}));

    // the family curve is built from the Hesse polynomials
    const WeierstrassCurve base = congruent_family(29137, -4986649, 1, 0);
    const auto h = hesse::hesse_polynomials(29137, -4986649);
    CHECK(base == WeierstrassCurve::short_form(-12 * h.c4.evaluate(1, 0), -16 * h.c6.evaluate(1, 0)));

    // a root of D gives a singular member
    const auto hu = hesse::hesse_polynomials(496, 20008);
    const auto roots = rational_roots(hu.D);
    for (const auto& r : roots)
        CHECK_THROWS_AS(congruent_family(496, 20008, Q(r.l), Q(r.m)), DomainError);
    CHECK_THROWS_AS(congruent_family(1, 1, 1, 0), DomainError);
}

TEST_CASE("indirect congruences")
{
    const auto r = find_indirect_congruence(E, F);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == ProjectivePoint{3563, 19});

    // the form vanishes at the root and not at a nearby point
    const BinaryForm<Q> form = congruence_form(E, F);
    CHECK(form.degree() == 60);
    CHECK(is_zero(form.evaluate(3563, 19)));
    CHECK_FALSE(is_zero(form.evaluate(3563, 20)));

    // F against itself has no rational root
    CHECK(find_indirect_congruence(F, F).empty());

    // (1 : 0) is a root when E is the member of F's family at (1 : 0)
    const WeierstrassCurve e1 = congruent_family(F.c4(), F.c6(), 1, 0);
    CHECK(is_zero(congruence_form(e1, F).evaluate(1, 0)));
    const auto r1 = find_indirect_congruence(e1, F);
    CHECK(std::find(r1.begin(), r1.end(), ProjectivePoint{1, 0}) != r1.end());

    // an unrelated pair
    CHECK(find_indirect_congruence(WeierstrassCurve{{0, 0, 1, -1, 0}}, F).empty());
    CHECK_THROWS_AS(find_indirect_congruence(WeierstrassCurve{}, F), DomainError);
}

TEST_CASE("visible elements")
{
    const GenusOneModel phi = testing::fixture("f_model.json");
    const GenusOneModel v = visible_element(phi, 3563, 19);
    CHECK(v.dual());
    const WeierstrassCurve jv = jacobian_curve(v);
    CHECK(jv.j() == j_E());
    CHECK(same_j(jv, E));

    // the printed small model has the same invariants as the visible element up to scaling
    const WeierstrassCurve js = jacobian_curve(testing::fixture("visible_small.json"));
    CHECK(js.j() == j_E());

    // invariants follow the Hesse polynomials
    const GenusOneModel u = visible_element(hesse_model(1, 1), 1, 0);
    const auto h = hesse::hesse_polynomials(496, 20008);
    const Invariants i = invariants(u);
    CHECK(i.c4 == h.c4.evaluate(1, 0) / (54 * 54));
    CHECK(i.c6 == h.c6.evaluate(1, 0) / (54 * 54 * 54));

    // the family member and the visible element at (1 : 0) share a j-invariant
    CHECK(same_j(jacobian_curve(u), congruent_family(496, 20008, 1, 0)));
    CHECK(same_j(jacobian_curve(visible_element(phi, 2, -1)), congruent_family(29137, -4986649, 2, -1)));

    CHECK_THROWS_AS(visible_element(hesse_model(1, 0), 1, 0), DomainError);
}
