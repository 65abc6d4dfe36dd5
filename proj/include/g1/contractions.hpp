#pragma once

// Fixed contraction schemes behind the covariants. Each returns a raw value;
// the normalizing constants come from the calibration table.

#include "g1/tensor.hpp"

#include <optional>
#include <string>

namespace g1::raw {

// Omega_5 from (U, P2): eps_W (P2, P2, U), symmetrized in the quadric slots.
// Full [i][j][p][q], alternating in i,j.
Dense omega(const Dense& u, const Dense& p2);
extern const char* const omega_scheme;

// tr(N^k) with N_{(a,i),(j,b)} = Omega[i][j][a][b]
Q trace_chain(const Dense& omega, int k);
extern const char* const c4_scheme;
extern const char* const c6_scheme;

// degree 11: eps_V (U.P2)(U.P2) Omega, antisymmetrized
Dense hessian(const Dense& u, const Dense& p2, const Dense& omega);
extern const char* const hessian_scheme;

// degree 6: U^4 P2 with one eps_V and one eps_W, symmetrized in S2V
Dense q6(const Dense& u, const Dense& p2);
extern const char* const q6_scheme;

// natural maps
Dense pi(const Dense& u, const Dense& r);    // Alt2(V) (x) V -> Alt2(V*), W contracted into S2W*
Dense xi(const Dense& psi, const Dense& q);  // V* against S2V, Alt2(W) (x) W -> Alt2(W*)
extern const char* const pi_scheme;
extern const char* const xi_scheme;

// r with a == r * b, if it exists (b nonzero)
std::optional<Q> ratio(const Dense& a, const Dense& b);

}  // namespace g1::raw
