#pragma once

#include "g1/model.hpp"
#include "g1/mpoly.hpp"
#include "g1/tensor.hpp"

#include <string>
#include <vector>

namespace g1 {

// Omega-matrix from the quadratic syzygies of the partials of S10.
struct OmegaComputation {
    Dense omega;                     // full [i][j][p][q]
    std::size_t syzygy_equations = 0, syzygy_unknowns = 0, syzygy_rank = 0;
    std::size_t kernel_dim = 0;      // quadric syzygies, 5 for a nonsingular model
    std::size_t alternating_dim = 0; // constant changes of basis making it alternating, 1
    Q rho;                           // Pf4(B M) = rho grad S10 before normalization
};

OmegaComputation compute_omega(const GenusOneModel& phi);
Dense omega_matrix(const GenusOneModel& phi);

struct OmegaReport {
    bool alternating = false;
    bool jacobian_in_ideal = false;    // entries of J Omega lie in I(C)_3
    bool pfaffians_match = false;      // Pf4(Omega) = kappa grad S10
    bool pfaffians_in_ideal = false;   // rank <= 2 on C
    bool no_linear_syzygies = false;   // minimality of the resolution
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
OmegaReport verify_omega(const GenusOneModel& phi, const Dense& omega);

// f in the degree-deg part of the ideal generated by the quadrics q
bool in_quadric_ideal(const QPoly& f, const std::vector<QPoly>& q);

// dimension of the linear syzygies sum l_i dF/dw_i = 0
std::size_t linear_syzygy_dim(const QPoly& f);

}  // namespace g1
