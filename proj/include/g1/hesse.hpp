#pragma once

// Closed forms on the Hesse family u(a,b) and the constants tying the raw
// contractions to them.

#include "g1/model.hpp"
#include "g1/mpoly.hpp"
#include "g1/tensor.hpp"

#include <string>
#include <vector>

namespace g1::hesse {

using BForm = BinaryForm<Q>;

struct DiscreteInvariants {
    BForm D, c4, c6;  // degrees 12, 20, 30
};
const DiscreteInvariants& discrete_invariants();

struct EvaluatedInvariants {
    Q D, c4, c6;
};
EvaluatedInvariants discrete_invariants(const Q& a, const Q& b);

struct PairForms {
    BForm f_lo, g_lo, f_hi, g_hi;  // (f7,g7,f17,g17) or (f13,g13,f23,g23)
};
const PairForms& psi_ref_forms();
const PairForms& xi_ref_forms();

// reference tensors at a point (full storage, signatures as in sig::)
Dense omega_ref(const Q& a, const Q& b);
Dense hessian_ref(const Q& a, const Q& b);  // u(-dD/db, dD/da)
Dense q6_ref(const Q& a, const Q& b);
Dense psi_like(const Q& f, const Q& g);     // X[k][1+k][4+k] = f, X[k][2+k][3+k] = g
Dense psi7_ref(const Q& a, const Q& b);
Dense psi17_ref(const Q& a, const Q& b);
Dense xi13_ref(const Q& a, const Q& b);
Dense xi23_ref(const Q& a, const Q& b);
Dense pi19_ref(const Q& a, const Q& b);     // evectant of c4, dual Hesse shape
Dense pi29_ref(const Q& a, const Q& b);
Dense pi49_ref(const Q& a, const Q& b);     // D^4 u(b, -a), dual

// Hesse polynomials in (lambda, mu), over any coefficient ring holding c4, c6
template <class R>
struct HessePolys {
    BinaryForm<R> D, c4, c6;
};
HessePolys<Q> hesse_polynomials(const Q& c4, const Q& c6);
HessePolys<QPoly> hesse_polynomials_symbolic();  // coefficients in Q[c4, c6]

// 27 D(l f7 + m f17, l g7 + m g17) / D(a,b)^2 at a point, as a form in (l, m)
BForm hesse_D_via_psi(const Q& a, const Q& b);

// determinant of the 3x3 coefficient block of the omega display
BForm omega_block_determinant();

template <class R>
BinaryForm<R> hessian_det(const BinaryForm<R>& f)
{
    auto fxx = f.dx().dx(), fyy = f.dy().dy(), fxy = f.dx().dy();
    return fxx * fyy - fxy * fxy;
}
template <class R>
BinaryForm<R> jacobian_det(const BinaryForm<R>& f, const BinaryForm<R>& g)
{
    return f.dx() * g.dy() - f.dy() * g.dx();
}

struct CalibrationTable {
    Q omega;      // raw Omega = omega * Omega
    Q c4, c6;     // raw trace = c * invariant
    Q hessian;
    Q q6;
    Q pf;         // Pf4(Omega) = pf * grad S10
    Q q6_subst;   // Q6(P2, P2) = q6_subst * S10
    Q psi;        // solved Psi = psi * printed Psi (a sign)
    Q pi;         // natural map (U, R18) -> pi * Pi19
    Q xi13, xi23;  // (Psi7, Q6) -> xi13 * Xi13, (Psi7, Q16) -> xi23 * Xi23
    std::vector<std::pair<std::string, std::string>> schemes;
};

// Computed once (thread-safe), then read-only. Throws "calibration drift" if a
// constant depends on the test point.
const CalibrationTable& calibrate();

}  // namespace g1::hesse
