#pragma once

#include "g1/exact.hpp"
#include "g1/linalg.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace g1 {

// Dense array with every axis of length 5.
template <class R>
class DenseT {
public:
    static constexpr int kDim = 5;

    DenseT() = default;
    explicit DenseT(int rank) : rank_(rank), data_(power(rank), R(0)) {}

    static std::size_t power(int r)
    {
        std::size_t n = 1;
        for (int i = 0; i < r; ++i) n *= kDim;
        return n;
    }

    int rank() const { return rank_; }
    std::size_t size() const { return data_.size(); }
    std::vector<R>& data() { return data_; }
    const std::vector<R>& data() const { return data_; }

    R& operator[](std::size_t flat) { return data_[flat]; }
    const R& operator[](std::size_t flat) const { return data_[flat]; }

    template <class... I>
    R& operator()(I... idx)
    {
        return data_[flat_of({static_cast<int>(idx)...})];
    }
    template <class... I>
    const R& operator()(I... idx) const
    {
        return data_[flat_of({static_cast<int>(idx)...})];
    }
    R& at(const std::vector<int>& idx) { return data_[flat_of(idx)]; }
    const R& at(const std::vector<int>& idx) const { return data_[flat_of(idx)]; }

    static std::size_t flat_of(const std::vector<int>& idx)
    {
        std::size_t f = 0;
        for (int i : idx) f = f * kDim + static_cast<std::size_t>(i);
        return f;
    }
    std::vector<int> index_of(std::size_t flat) const
    {
        std::vector<int> idx(rank_);
        for (int k = rank_ - 1; k >= 0; --k) {
            idx[k] = static_cast<int>(flat % kDim);
            flat /= kDim;
        }
        return idx;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!g1::is_zero(x)) return false;
        return true;
    }

    DenseT& operator+=(const DenseT& o)
    {
        check(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    DenseT& operator-=(const DenseT& o)
    {
        check(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    DenseT& operator*=(const R& s)
    {
        for (auto& x : data_) x *= s;
        return *this;
    }
    DenseT& operator/=(const R& s)
    {
        for (auto& x : data_) x /= s;
        return *this;
    }
    friend DenseT operator+(DenseT a, const DenseT& b) { return a += b; }
    friend DenseT operator-(DenseT a, const DenseT& b) { return a -= b; }
    friend DenseT operator*(DenseT a, const R& s) { return a *= s; }
    friend DenseT operator*(const R& s, DenseT a) { return a *= s; }
    friend DenseT operator/(DenseT a, const R& s) { return a /= s; }
    DenseT operator-() const
    {
        DenseT r(*this);
        for (auto& x : r.data_) x = -x;
        return r;
    }
    bool operator==(const DenseT& o) const { return rank_ == o.rank_ && data_ == o.data_; }
    bool operator!=(const DenseT& o) const { return !(*this == o); }

    // numpy-style transpose: out[i_0..i_{r-1}] = in[j] with j[axes[k]] = i_k
    DenseT transposed(const std::vector<int>& axes) const
    {
        DenseT out(rank_);
        std::vector<int> j(rank_);
        for (std::size_t f = 0; f < data_.size(); ++f) {
            if (g1::is_zero(data_[f])) continue;
            auto i = index_of(f);
            // data_[f] sits at input index i; it lands at out index o with o_k = i[axes[k]]
            for (int k = 0; k < rank_; ++k) j[k] = i[axes[k]];
            out.data_[flat_of(j)] = data_[f];
        }
        return out;
    }

private:
    void check(const DenseT& o) const
    {
        if (o.rank_ != rank_) throw std::invalid_argument("DenseT: rank mismatch");
    }

    int rank_ = 0;
    std::vector<R> data_;
};

using Dense = DenseT<Q>;

namespace detail {

template <class R>
DenseT<R> contract_pair(const DenseT<R>& a, const std::string& la, const DenseT<R>* b, const std::string& lb,
                        const std::string& keep)
{
    constexpr int D = DenseT<R>::kDim;
    DenseT<R> out(static_cast<int>(keep.size()));
    std::array<int, 128> val{};
    std::array<std::size_t, 128> out_stride{}, b_stride{};
    {
        std::size_t s = 1;
        for (int k = static_cast<int>(keep.size()) - 1; k >= 0; --k) {
            out_stride[static_cast<unsigned char>(keep[k])] = s;
            s *= D;
        }
        s = 1;
        for (int k = static_cast<int>(lb.size()) - 1; k >= 0; --k) {
            b_stride[static_cast<unsigned char>(lb[k])] = s;
            s *= D;
        }
    }
    std::string free_b;
    for (char l : lb)
        if (la.find(l) == std::string::npos) free_b.push_back(l);
    const std::size_t n_free = DenseT<R>::power(static_cast<int>(free_b.size()));
    R prod;
    for (std::size_t fa = 0; fa < a.size(); ++fa) {
        const R& x = a[fa];
        if (g1::is_zero(x)) continue;
        std::size_t t = fa;
        for (int k = static_cast<int>(la.size()) - 1; k >= 0; --k) {
            val[static_cast<unsigned char>(la[k])] = static_cast<int>(t % D);
            t /= D;
        }
        std::size_t base_out = 0, base_b = 0;
        for (char l : la) base_out += out_stride[static_cast<unsigned char>(l)] * val[static_cast<unsigned char>(l)];
        if (!b) {
            out[base_out] += x;
            continue;
        }
        for (char l : la) base_b += b_stride[static_cast<unsigned char>(l)] * val[static_cast<unsigned char>(l)];
        for (std::size_t ff = 0; ff < n_free; ++ff) {
            std::size_t u = ff, ib = base_b, io = base_out;
            for (int k = static_cast<int>(free_b.size()) - 1; k >= 0; --k) {
                auto l = static_cast<unsigned char>(free_b[k]);
                std::size_t digit = u % D;
                u /= D;
                ib += b_stride[l] * digit;
                io += out_stride[l] * digit;
            }
            const R& y = (*b)[ib];
            if (g1::is_zero(y)) continue;
            prod = x;
            prod *= y;
            out[io] += prod;
        }
    }
    return out;
}

}  // namespace detail

// Einstein summation over 5-dimensional axes, evaluated pairwise left to
// right; a label is summed as soon as no later operand (or the output) uses
// it. Operand order therefore controls the cost.
template <class R>
DenseT<R> einsum(std::string_view spec, const std::vector<const DenseT<R>*>& ops)
{
    auto arrow = spec.find("->");
    if (arrow == std::string_view::npos) throw std::invalid_argument("einsum: missing '->'");
    std::string out_labels(spec.substr(arrow + 2));
    std::vector<std::string> in;
    {
        std::string cur;
        for (char ch : spec.substr(0, arrow)) {
            if (ch == ',') {
                in.push_back(cur);
                cur.clear();
            } else if (ch != ' ') {
                cur.push_back(ch);
            }
        }
        in.push_back(cur);
    }
    if (in.size() != ops.size()) throw std::invalid_argument("einsum: operand count mismatch");
    for (std::size_t k = 0; k < in.size(); ++k) {
        if (static_cast<int>(in[k].size()) != ops[k]->rank())
            throw std::invalid_argument("einsum: label count does not match rank");
        for (std::size_t i = 0; i < in[k].size(); ++i)
            if (in[k].find(in[k][i], i + 1) != std::string::npos)
                throw std::invalid_argument("einsum: repeated label within an operand");
    }
    for (char l : out_labels) {
        bool found = false;
        for (const auto& s : in) found = found || s.find(l) != std::string::npos;
        if (!found) throw std::invalid_argument("einsum: output label not present in inputs");
    }
    auto needed_after = [&](std::size_t k) {
        std::string need = out_labels;
        for (std::size_t j = k + 1; j < in.size(); ++j) need += in[j];
        return need;
    };
    auto keep_of = [](const std::string& a, const std::string& b, const std::string& need) {
        std::string keep;
        for (char l : a + b)
            if (need.find(l) != std::string::npos && keep.find(l) == std::string::npos) keep.push_back(l);
        return keep;
    };

    DenseT<R> cur;
    std::string cl;
    if (in.size() == 1) {
        cl = keep_of(in[0], "", out_labels);
        cur = detail::contract_pair<R>(*ops[0], in[0], nullptr, "", cl);
    } else {
        cl = keep_of(in[0], in[1], needed_after(1));
        cur = detail::contract_pair<R>(*ops[0], in[0], ops[1], in[1], cl);
        for (std::size_t k = 2; k < in.size(); ++k) {
            std::string nl = keep_of(cl, in[k], needed_after(k));
            cur = detail::contract_pair<R>(cur, cl, ops[k], in[k], nl);
            cl = nl;
        }
    }
    if (cl == out_labels) return cur;
    std::vector<int> axes;
    for (char l : out_labels) axes.push_back(static_cast<int>(cl.find(l)));
    return cur.transposed(axes);
}

// epsilon_{abcde}
const Dense& levi_civita();

// Applies m_k to axis k (x'_{i..} = sum m_k[i_k][j_k] x_{j..}); null leaves the axis alone.
template <class R>
DenseT<R> transform_axes(const DenseT<R>& x, const std::vector<const Matrix<R>*>& m)
{
    DenseT<R> cur = x;
    const int r = x.rank();
    for (int k = 0; k < r; ++k) {
        if (!m[k]) continue;
        DenseT<R> next(r);
        std::size_t stride = DenseT<R>::power(r - 1 - k);
        R prod;
        for (std::size_t f = 0; f < cur.size(); ++f) {
            if (g1::is_zero(cur[f])) continue;
            int jk = static_cast<int>((f / stride) % 5);
            std::size_t base = f - static_cast<std::size_t>(jk) * stride;
            for (int i = 0; i < 5; ++i) {
                const R& c = (*m[k])[i][jk];
                if (g1::is_zero(c)) continue;
                prod = c;
                prod *= cur[f];
                next[base + static_cast<std::size_t>(i) * stride] += prod;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// ---- signatures and canonical storage

enum class Space { V, W };

struct Factor {
    enum class Kind { Lin, Alt, Sym };
    Space space = Space::V;
    bool dual = false;
    Kind kind = Kind::Lin;
    int degree = 1;  // number of tensor slots

    bool operator==(const Factor& o) const
    {
        return space == o.space && dual == o.dual && kind == o.kind && degree == o.degree;
    }
};

// Ordered factors. Alternating factors are stored in "canonical full" form
// (T[i][j] = c for i<j, T[j][i] = -c); symmetric ones with the coefficient of a
// monomial spread evenly over its permutations, so that contracting with
// x^{(x)d} reproduces the form.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<Factor> f) : f_(std::move(f)) {}

    // "Alt2(V),W", "V*,Sym2(W)", "Sym5(W)", "Alt2(W*),Sym2(W)"
    static Signature parse(const std::string& s);
    std::string str() const;

    const std::vector<Factor>& factors() const { return f_; }
    int slots() const;
    // (r, s): V-weight and W-weight of the homogeneous components
    std::pair<int, int> homogeneity() const;

    // canonical multi-indices in serialization order
    std::vector<std::vector<int>> canonical_indices() const;
    // full tensor from canonical coefficients, and back
    Dense from_canonical(const std::vector<std::pair<std::vector<int>, Q>>& c) const;
    std::vector<std::pair<std::vector<int>, Q>> to_canonical(const Dense& full, bool nonzero_only = true) const;
    // full tensor is consistent with the factor symmetries
    bool well_formed(const Dense& full) const;

    std::size_t dimension() const;

    bool operator==(const Signature& o) const { return f_ == o.f_; }

private:
    std::vector<Factor> f_;
};

struct Tensor {
    Signature sig;
    Dense full;
};

// Common signatures.
namespace sig {
Signature model();        // Alt2(V),W
Signature dual_model();   // Alt2(V*),W*
Signature quadrics();     // V*,Sym2(W)       P2, P12, P22
Signature s2v_w();        // Sym2(V),W        Q6, Q16, Q26
Signature v_s2wd();       // V,Sym2(W*)       R18, R28, R38
Signature s2vd_wd();      // Sym2(V*),W*      S14, S24, S34
Signature psi();          // V*,Alt2(W)
Signature xi();           // V,Alt2(W*)
Signature omega();        // Alt2(W*),Sym2(W)
Signature quintic_v();    // Sym5(V)
Signature quintic_w();    // Sym5(W)
}  // namespace sig

}  // namespace g1
