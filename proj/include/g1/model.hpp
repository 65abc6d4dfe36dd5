#pragma once

#include "g1/exact.hpp"
#include "g1/linalg.hpp"
#include "g1/mpoly.hpp"
#include "g1/tensor.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace g1 {

// Entry order used everywhere: (0,1),(0,2),(0,3),(0,4),(1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
const std::array<std::pair<int, int>, 10>& model_pairs();
int pair_index(int i, int j);  // i < j

// A 5x5 alternating matrix of linear forms in w0..w4. A dual model lives in
// Alt2(V*) (x) W*; the arithmetic is identical, only the tag differs.
class GenusOneModel {
public:
    using Form = std::array<Q, 5>;

    GenusOneModel() = default;
    explicit GenusOneModel(std::array<Form, 10> entries, bool dual = false) : e_(std::move(entries)), dual_(dual) {}

    // from the full tensor X[i][j][k] (alternating in i, j)
    static GenusOneModel from_full(const Dense& x, bool dual = false);
    Dense full() const;

    const Form& entry(int pair) const { return e_[pair]; }
    Form& entry(int pair) { return e_[pair]; }
    // signed coefficient of w_k in phi_{ij}
    Q coeff(int i, int j, int k) const;

    bool dual() const { return dual_; }
    void set_dual(bool d) { dual_ = d; }
    bool is_zero() const;

    // matrix of linear forms as polynomials in 5 variables
    Matrix<QPoly> matrix() const;

    bool operator==(const GenusOneModel& o) const { return e_ == o.e_ && dual_ == o.dual_; }
    bool operator!=(const GenusOneModel& o) const { return !(*this == o); }

private:
    std::array<Form, 10> e_{};
    bool dual_ = false;
};

// Hesse model u(a,b) = a sum (v1^v4) w0 + b sum (v2^v3) w0, sums cyclic.
GenusOneModel hesse_model(const Q& a, const Q& b);

struct Transformation {
    QMatrix gV, gW;
    static Transformation identity();
};

QMatrix identity_matrix(std::size_t n = 5);
QMatrix transpose(const QMatrix& m);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
QMatrix inverse(const QMatrix& m);  // throws DomainError if singular

// g_V phi(g_W w) g_V^T
GenusOneModel apply(const Transformation& g, const GenusOneModel& phi);

// full-tensor action of g on a signature, in the convention of apply():
// V slots by g_V, V* by g_V^{-T}, W by g_W^T (substitution), W* by g_W^{-1}
Dense act(const Transformation& g, const Signature& s, const Dense& x);

// P2: p_i = (-1)^i Pf(phi minus row/column i), as the full V* (x) Sym2(W) tensor
// [i][a][b]; also works for any full alternating-matrix tensor X[i][j][k].
Dense pfaffian_tensor(const Dense& x);
Dense pfaffians(const GenusOneModel& phi);

// quadric tuple <-> polynomials
std::vector<QPoly> quadrics_of(const Dense& p);   // p[i][a][b] -> sum_ab p w_a w_b
Dense quadric_tensor(const std::vector<QPoly>& q);

// secant quintic S10 = det(d p_i / d w_j)
QPoly secant_quintic(const GenusOneModel& phi);
QPoly secant_quintic_of_quadrics(const std::vector<QPoly>& p);

// serialization
std::string to_json(const GenusOneModel& phi);
GenusOneModel model_from_json(const std::string& text);
std::string to_text(const GenusOneModel& phi);
GenusOneModel model_from_text(const std::string& text);
// sniffs the format
GenusOneModel parse_model(const std::string& text);

}  // namespace g1
