#pragma once

// Heisenberg group, its SL2(Z/5) extension, Molien series and discrete
// covariants. All arithmetic is in Q(zeta_5).

#include "g1/covariants.hpp"
#include "g1/exact.hpp"
#include "g1/linalg.hpp"
#include "g1/mpoly.hpp"
#include "g1/tensor.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace g1::rep {

using CMatrix = Matrix<Cyc5>;

CMatrix c_identity(std::size_t n);
CMatrix c_multiply(const CMatrix& a, const CMatrix& b);
CMatrix c_inverse(const CMatrix& a);
CMatrix c_transpose(const CMatrix& a);
Cyc5 c_trace(const CMatrix& a);
Cyc5 c_det(const CMatrix& a);

struct SchrodingerPair {
    int t = 1;
    CMatrix sigma, tau;  // sigma = Diag(z^(t i)), tau: e_i -> e_(i+1)
};
// t a unit mod 5; t = 1 acts on W, t = 2 on V
SchrodingerPair schrodinger(int t);

// rho(S), rho(T) in SL5 normalizing the pair, with S = [[0,1],[-1,0]] and
// T = [[1,1],[0,1]] mod 5
struct Lift {
    CMatrix S, T;
    int sign = 1, r = 0, k = 0;  // rho(S) = sign z^r (z^(t i j)) / sqrt5, rho(T) = z^k Diag(z^(3 t i^2))
};
Lift extend_rep(const SchrodingerPair& p);

// SL2(Z/5) element stored as (a, b, c, d) for [[a, b], [c, d]]
using Mod5 = std::array<int, 4>;
Mod5 mod5_mul(const Mod5& x, const Mod5& y);
const Mod5& gen_S();
const Mod5& gen_T();

// Closure of a representation given on S and T; throws if the images do not
// define a homomorphism.
std::map<Mod5, CMatrix> enumerate_gamma(const CMatrix& s, const CMatrix& t);

// chi1 on the (a, b)-plane of the Hesse family
CMatrix chi1_S();
CMatrix chi1_T();

// Y^{H5}: tau-orbit sums of sigma-weight-zero basis elements, kept in
// canonical coordinates (Sym10 would not fit as a full tensor)
using Sparse = std::map<std::vector<int>, Q>;
struct FixedSubspace {
    Signature sig;
    std::vector<Sparse> basis;
    std::vector<std::vector<int>> reps;  // an index where basis[j] is nonzero and the others vanish
    std::size_t dimension() const { return basis.size(); }
    Dense full(std::size_t j) const;
};
FixedSubspace h5_fixed_subspace(const Signature& y);

// rho_Y restricted to Y^{H5}, on the generators
struct RestrictedRep {
    FixedSubspace fixed;
    CMatrix S, T;
};
RestrictedRep restricted_rep(const Signature& y);

// named characters of SL2(Z/5): psi1..psi5, chi1..chi4
std::vector<std::string> character_names();
int character_degree(const std::string& name);
// values on the class representatives I, -I, ST, -ST, S, T, -T, T^2, -T^2
std::array<Cyc5, 9> character_values(const std::string& name);
const std::array<Mod5, 9>& class_representatives();
// class sizes, counted by conjugation in SL2(Z/5)
const std::array<int, 9>& class_sizes();
// pi(g) for g a word in S and T
CMatrix evaluate_word(const CMatrix& s, const CMatrix& t, const std::string& word);
const std::array<std::string, 9>& class_words();
// label of an irreducible restricted representation, "" if it is none of them
std::string character_label(const RestrictedRep& r);

// dim M_{pi,d} for d = 0..n
std::vector<Q> molien(const std::string& character, int n);
std::vector<Q> molien(const RestrictedRep& r, int n);

// integer-weight generator degrees: per residue class of integer weight,
// series times (1 - t^20)(1 - t^30)
std::vector<int> generator_degrees(const Signature& y, const std::vector<Q>& series);

struct TableRow {
    Signature sig;
    std::string label;
    std::vector<int> degrees;
};
const std::vector<TableRow>& covariant_table();

// basis of degree-d polynomial maps (a, b) -> Y^{H5} commuting with Gamma;
// element[j] is the coefficient form of fixed basis vector j
struct DiscreteCovariantSpace {
    Signature sig;
    int degree = 0;
    FixedSubspace fixed;
    std::vector<std::vector<BinaryForm<Cyc5>>> basis;
    bool integer_weight = false;
};
DiscreteCovariantSpace discrete_covariant_space(const Signature& y, int d);

}  // namespace g1::rep
