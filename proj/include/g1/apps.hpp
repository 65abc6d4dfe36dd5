#pragma once

#include "g1/exact.hpp"
#include "g1/model.hpp"
#include "g1/mpoly.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace g1 {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, stored as (a1, a2, a3, a4, a6)
struct WeierstrassCurve {
    std::array<Q, 5> a{};

    Q b2() const;
    Q b4() const;
    Q b6() const;
    Q b8() const;
    Q c4() const;
    Q c6() const;
    Q disc() const;
    bool singular() const { return is_zero(disc()); }
    std::optional<Q> j() const;  // none when singular

    static WeierstrassCurve short_form(const Q& a4, const Q& a6) { return {{0, 0, 0, a4, a6}}; }
    bool operator==(const WeierstrassCurve& o) const { return a == o.a; }
};

struct WeierstrassInvariants {
    Q c4, c6, disc;
    std::optional<Q> j;
};
WeierstrassInvariants weierstrass_invariants(const std::array<Q, 5>& a);

// y^2 = x^3 - 27 c4 x - 54 c6; DomainError on a singular model
WeierstrassCurve jacobian_curve(const GenusOneModel& phi);

// y^2 = x^3 - 12 c4(l, m) x - 16 c6(l, m) with the Hesse polynomials of (c4, c6);
// DomainError("singular member") when D(l, m) = 0
WeierstrassCurve congruent_family(const Q& c4, const Q& c6, const Q& l, const Q& m);

// c4(E)^3 c6(l, m)^2 - c6(E)^2 c4(l, m)^3, the Hesse polynomials taken at F's invariants
BinaryForm<Q> congruence_form(const WeierstrassCurve& e, const WeierstrassCurve& f);

// primitive (l : m) with l, m coprime, m > 0 or (1 : 0)
struct ProjectivePoint {
    Z l, m;
    bool operator==(const ProjectivePoint& o) const { return l == o.l && m == o.m; }
    bool operator<(const ProjectivePoint& o) const { return l < o.l || (l == o.l && m < o.m); }
};
std::vector<ProjectivePoint> rational_roots(const BinaryForm<Q>& f);
std::vector<ProjectivePoint> find_indirect_congruence(const WeierstrassCurve& e, const WeierstrassCurve& f);

// l Psi7 + m Psi17 read as a model X[i][j][k] = Psi[k][i][j] (tagged dual)
GenusOneModel visible_element(const GenusOneModel& phi, const Q& l, const Q& m);

// global minimal model with a1, a3 in {0, 1} and a2 in {-1, 0, 1}
WeierstrassCurve minimal_model(const Q& c4, const Q& c6);

// Kraus: integral (c4, c6) come from an integral model
bool kraus_conditions(const Z& c4, const Z& c6);

// prime factorization of |n|, n != 0 (trial division and Pollard rho)
std::vector<std::pair<Z, int>> factorize(const Z& n);

}  // namespace g1
