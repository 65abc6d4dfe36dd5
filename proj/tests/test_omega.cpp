#include "g1/covariants.hpp"
#include "g1/hesse.hpp"
#include "g1/model.hpp"
#include "g1/omega.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace g1;

namespace {

QPoly w(int i) { return QPoly::var(5, ((i % 5) + 5) % 5); }

GenusOneModel nonsingular_random(std::mt19937& rng)
{
    for (;;) {
        GenusOneModel phi = testing::random_model(rng);
        if (!is_zero(invariants(phi).disc)) return phi;
    }
}

Matrix<QPoly> as_matrix(const Dense& om)
{
    const auto e = omega_entries(om);
    Matrix<QPoly> m(5, std::vector<QPoly>(5, QPoly(5)));
    for (int k = 0; k < 10; ++k) {
        auto [i, j] = model_pairs()[k];
        m[i][j] = e[k];
        m[j][i] = -e[k];
    }
    return m;
}

}  // namespace

TEST_CASE("Omega from the syzygies of the secant quintic")
{
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}) {
        const OmegaComputation c = compute_omega(hesse_model(a, b));
        CHECK(c.syzygy_equations == 210);
        CHECK(c.syzygy_unknowns == 75);
        CHECK(c.syzygy_rank == 70);
        CHECK(c.kernel_dim == 5);
        CHECK(c.alternating_dim == 1);
        CHECK(c.omega == hesse::omega_ref(a, b));
    }
}

TEST_CASE("Omega of u(1,1) written out")
{
    // alpha_i = 5w_i^2 - 10w_{i-1}w_{i+1} - 2w_{i-2}w_{i+2}, beta_i = 5w_i^2 - 4w_{i-1}w_{i+1} + 10w_{i-2}w_{i+2}
    std::vector<QPoly> al, be;
    for (int i = 0; i < 5; ++i) {
        al.push_back(w(i) * w(i) * Q(5) - w(i - 1) * w(i + 1) * Q(10) - w(i - 2) * w(i + 2) * Q(2));
        be.push_back(w(i) * w(i) * Q(5) - w(i - 1) * w(i + 1) * Q(4) + w(i - 2) * w(i + 2) * Q(10));
    }
    const std::vector<QPoly> display{al[3], be[1], -be[4], -al[2], al[4], be[2], -be[0], al[0], be[3], al[1]};
    const auto e = omega_entries(omega_matrix(hesse_model(1, 1)));
    bool plus = e == display;
    std::vector<QPoly> neg;
    for (const auto& x : display) neg.push_back(-x);
    CHECK((plus || e == neg));
}

TEST_CASE("syzygy route equals the direct covariant")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 2; ++trial) {
        const GenusOneModel phi = nonsingular_random(rng);
        Pipeline p(phi);
        CHECK(omega_matrix(phi) == p.omega());
    }
}

TEST_CASE("verification of Omega-matrices")
{
    const GenusOneModel u = hesse_model(1, 1);
    const Dense om = hesse::omega_ref(1, 1);
    const OmegaReport good = verify_omega(u, om);
    CHECK(good.ok());
    CHECK(good.alternating);
    CHECK(good.jacobian_in_ideal);
    CHECK(good.pfaffians_match);
    CHECK(good.pfaffians_in_ideal);
    CHECK(good.no_linear_syzygies);

    const OmegaReport zero = verify_omega(u, Dense(4));
    CHECK_FALSE(zero.ok());
    CHECK_FALSE(zero.pfaffians_match);

    // adding p0 times an elementary alternating matrix keeps J Omega in the ideal
    auto e = omega_entries(om);
    e[0] += quadrics_of(pfaffians(u))[0];
    const OmegaReport moved = verify_omega(u, omega_from_entries(e));
    CHECK(moved.jacobian_in_ideal);
    CHECK_FALSE(moved.pfaffians_match);
    CHECK_FALSE(moved.ok());

    Dense sym = om;
    sym(0, 1, 0, 0) += 1;
    CHECK_FALSE(verify_omega(u, sym).alternating);
}

TEST_CASE("Omega on transformed and random models")
{
    std::mt19937 rng(13);
    const Transformation g{testing::random_unimodular(rng), testing::random_unimodular(rng)};
    const GenusOneModel phi = apply(g, hesse_model(1, 1));
    const OmegaComputation c = compute_omega(phi);
    CHECK(c.kernel_dim == 5);
    CHECK(verify_omega(phi, c.omega).ok());

    const GenusOneModel r = nonsingular_random(rng);
    CHECK(verify_omega(r, omega_matrix(r)).ok());
}

TEST_CASE("Omega is w wedge a tangent field along the curve")
{
    // on C, Omega = w ^ T, so the 3-form w ^ Omega vanishes modulo the ideal of C
    std::mt19937 rng(29);
    for (const GenusOneModel& phi : {hesse_model(1, 2), nonsingular_random(rng)}) {
        const auto m = as_matrix(omega_matrix(phi));
        const auto p = quadrics_of(pfaffians(phi));
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                for (int k = j + 1; k < 5; ++k) {
                    const QPoly f = w(i) * m[j][k] - w(j) * m[i][k] + w(k) * m[i][j];
                    CHECK(in_quadric_ideal(f, p));
                }
        // and it does not vanish identically: Omega is not itself in the ideal
        bool outside = false;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) outside = outside || !in_quadric_ideal(m[i][j], p);
        CHECK(outside);
    }
}

TEST_CASE("Pfaffians of Omega are a multiple of the gradient of the secant quintic")
{
    std::mt19937 rng(31);
    const GenusOneModel phi = nonsingular_random(rng);
    const QPoly s = secant_quintic(phi);
    const auto pf = omega_pfaffians(omega_matrix(phi));
    for (int j = 0; j < 5; ++j) CHECK(pf[j] == s.derivative(j) * hesse::calibrate().pf);
    CHECK(linear_syzygy_dim(s) == 0);
}

TEST_CASE("singular models are rejected")
{
    CHECK_THROWS_AS(compute_omega(hesse_model(1, 0)), DomainError);
    CHECK_THROWS_AS(omega_matrix(GenusOneModel{}), DomainError);
}

TEST_CASE("Omega entries round trip")
{
    const Dense om = hesse::omega_ref(2, -1);
    CHECK(omega_from_entries(omega_entries(om)) == om);
}
