#pragma once

#include "g1/hesse.hpp"
#include "g1/model.hpp"
#include "g1/tensor.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace g1 {

struct Invariants {
    Q c4, c6, disc;  // disc = (c4^3 - c6^2) / 1728
};

// (p, q) with 2d = 5p + r and d = 5q + s
struct Weights {
    Q p, q;
    bool integral = false;
};
Weights weights_of(int degree, const Signature& y);

// Binary form in (lambda, mu) with quintic coefficients in v0..v4:
// coeff[j] multiplies lambda^(5-j) mu^j.
struct DetMap {
    std::array<QPoly, 6> coeff;
};
// det of the 5x5 matrix A[j][k] = sum_i (l X + m Y)[i][j][k] v_i. Tensors in
// Sym2(V),W are embedded by v_i v_j -> v_i (x) v_j + v_j (x) v_i.
DetMap det_map(const Tensor& x, const Tensor& y);

// sum Q[a][b][k] F_a G_b w_k for a Sym2(V),W tensor and quadric tuples F, G
QPoly polarized_substitution(const Dense& q, const std::vector<QPoly>& f, const std::vector<QPoly>& g);

// P2 on a pencil: coefficients of lambda^2, lambda mu, mu^2 in P2(l X + m Y),
// for full alternating-matrix tensors X[i][j][k].
struct PolarExpansion {
    Dense l2, lm, m2;
};
PolarExpansion polar_expand(const Dense& x, const Dense& y);

// Named evaluation of every covariant on one model. Stages are computed on
// demand and cached; not safe to share one instance across threads.
class Pipeline {
public:
    explicit Pipeline(GenusOneModel phi, const hesse::CalibrationTable* table = nullptr);

    const GenusOneModel& model() const { return phi_; }
    const Dense& u() const { return u_; }
    const Dense& p2();
    const Dense& omega();
    Invariants invariants();
    bool nonsingular();

    const Dense& hessian();
    const Dense& p12();
    const Dense& p22();
    const Dense& q6();
    const Dense& q16();
    const Dense& q26();
    const Dense& q26_prime();

    // from det(l U + m Q6), det(l H + m Q6), det(l U + m Q16)
    const QPoly& m10();
    const QPoly& m20();
    const QPoly& m30();
    const QPoly& m40();
    const QPoly& m50();
    const QPoly& m50_prime();

    const Dense& r18();
    const Dense& r28();
    const Dense& r38();
    const Dense& pi19();
    const Dense& pi29();
    const Dense& pi49();
    const Dense& psi7();
    const Dense& psi17();
    const Dense& xi13();
    const Dense& xi23();
    const Dense& s14();
    const Dense& s24();
    const Dense& s34();

    // by CLI name: hessian, psi7, ..., omega
    Tensor covariant(const std::string& name);
    static const std::vector<std::string>& covariant_names();
    static int degree_of(const std::string& name);
    static Signature signature_of(const std::string& name);

private:
    void require_nonsingular();
    void det_maps();
    void q_solves();
    void r_solves();
    void psi_solves();

    GenusOneModel phi_;
    const hesse::CalibrationTable* cal_;
    Dense u_;
    std::optional<Dense> p2_, omega_, h_, p12_, p22_, q6_, q16_, q26_, q26p_;
    std::optional<Invariants> inv_;
    std::optional<QPoly> m10_, m20_, m30_, m40_, m50_, m50p_;
    std::optional<Dense> r18_, r28_, r38_, pi19_, pi29_, pi49_, psi7_, psi17_, xi13_, xi23_, s14_, s24_, s34_;
};

// Convenience wrappers.
Invariants invariants(const GenusOneModel& phi);
GenusOneModel hessian(const GenusOneModel& phi);
// Pi49 as a dual model. With proper = true it is rescaled by a diagonal pair
// with (det gV)^2 det gW = disc^4, which leaves the invariants equal to those of phi.
GenusOneModel double_model(const GenusOneModel& phi, bool proper = false);

// Pfaffians (-1)^i Pf of the 4x4 minors of an alternating matrix of quadrics,
// given as a full [i][j][p][q] tensor.
std::vector<QPoly> omega_pfaffians(const Dense& omega);
std::vector<QPoly> omega_entries(const Dense& omega);  // the 10 upper entries, model order
Dense omega_from_entries(const std::vector<QPoly>& e);

}  // namespace g1
