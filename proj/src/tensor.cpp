#include "g1/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace g1 {

const Dense& levi_civita()
{
    static const Dense eps = [] {
        Dense e(5);
        std::array<int, 5> p{0, 1, 2, 3, 4};
        do {
            int inv = 0;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    if (p[i] > p[j]) ++inv;
            e(p[0], p[1], p[2], p[3], p[4]) = (inv % 2) ? -1 : 1;
        } while (std::next_permutation(p.begin(), p.end()));
        return e;
    }();
    return eps;
}

namespace {

std::string space_str(const Factor& f)
{
    std::string s = f.space == Space::V ? "V" : "W";
    if (f.dual) s += "*";
    return s;
}

// (local index tuple, weight) pairs making up one canonical basis element
using Spread = std::vector<std::pair<std::vector<int>, Q>>;

Spread spread(const Factor& f, const std::vector<int>& c)
{
    switch (f.kind) {
    case Factor::Kind::Lin:
        return {{c, Q(1)}};
    case Factor::Kind::Alt:
        return {{{c[0], c[1]}, Q(1)}, {{c[1], c[0]}, Q(-1)}};
    case Factor::Kind::Sym: {
        std::vector<int> p = c;
        std::sort(p.begin(), p.end());
        Spread out;
        do {
            out.push_back({p, Q(1)});
        } while (std::next_permutation(p.begin(), p.end()));
        Q w(1, static_cast<unsigned long>(out.size()));
        for (auto& e : out) e.second = w;
        return out;
    }
    }
    return {};
}

std::vector<std::vector<int>> local_canonical(const Factor& f)
{
    std::vector<std::vector<int>> out;
    switch (f.kind) {
    case Factor::Kind::Lin:
        for (int i = 0; i < 5; ++i) out.push_back({i});
        break;
    case Factor::Kind::Alt:
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) out.push_back({i, j});
        break;
    case Factor::Kind::Sym: {
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int lo) {
            if (static_cast<int>(cur.size()) == f.degree) {
                out.push_back(cur);
                return;
            }
            for (int i = lo; i < 5; ++i) {
                cur.push_back(i);
                rec(i);
                cur.pop_back();
            }
        };
        rec(0);
        break;
    }
    }
    return out;
}

Q canonical_multiplier(const Factor& f, const std::vector<int>& c)
{
    if (f.kind != Factor::Kind::Sym) return 1;
    // number of distinct permutations of c
    std::vector<int> p = c;
    std::sort(p.begin(), p.end());
    unsigned long n = 0;
    do {
        ++n;
    } while (std::next_permutation(p.begin(), p.end()));
    return Q(static_cast<long>(n));
}

}  // namespace

Signature Signature::parse(const std::string& text)
{
    std::vector<Factor> fs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (tok.empty()) throw std::invalid_argument("signature: empty factor in '" + text + "'");
        Factor f;
        std::string inner = tok;
        auto open = tok.find('(');
        if (open != std::string::npos) {
            if (tok.back() != ')') throw std::invalid_argument("signature: bad factor '" + tok + "'");
            std::string head = tok.substr(0, open);
            inner = tok.substr(open + 1, tok.size() - open - 2);
            if (head.rfind("Alt", 0) == 0) {
                f.kind = Factor::Kind::Alt;
                if (head != "Alt2") throw std::invalid_argument("signature: only Alt2 is supported");
                f.degree = 2;
            } else if (head.rfind("Sym", 0) == 0) {
                f.kind = Factor::Kind::Sym;
                try {
                    f.degree = std::stoi(head.substr(3));
                } catch (const std::exception&) {
                    throw std::invalid_argument("signature: bad symmetric power '" + head + "'");
                }
                if (f.degree < 1 || f.degree > 10) throw std::invalid_argument("signature: symmetric power out of range");
                if (f.degree == 1) f.kind = Factor::Kind::Lin;
            } else {
                throw std::invalid_argument("signature: unknown functor '" + head + "'");
            }
        }
        if (inner == "V" || inner == "V*") f.space = Space::V;
        else if (inner == "W" || inner == "W*") f.space = Space::W;
        else throw std::invalid_argument("signature: unknown space '" + inner + "'");
        f.dual = inner.size() == 2;
        fs.push_back(f);
    }
    if (fs.empty()) throw std::invalid_argument("signature: no factors");
    return Signature(std::move(fs));
}

std::string Signature::str() const
{
    std::string s;
    for (std::size_t k = 0; k < f_.size(); ++k) {
        if (k) s += ",";
        const auto& f = f_[k];
        switch (f.kind) {
        case Factor::Kind::Lin: s += space_str(f); break;
        case Factor::Kind::Alt: s += "Alt2(" + space_str(f) + ")"; break;
        case Factor::Kind::Sym: s += "Sym" + std::to_string(f.degree) + "(" + space_str(f) + ")"; break;
        }
    }
    return s;
}

int Signature::slots() const
{
    int n = 0;
    for (const auto& f : f_) n += f.degree;
    return n;
}

std::pair<int, int> Signature::homogeneity() const
{
    int r = 0, s = 0;
    for (const auto& f : f_) {
        int d = f.dual ? -f.degree : f.degree;
        (f.space == Space::V ? r : s) += d;
    }
    return {r, s};
}

std::size_t Signature::dimension() const
{
    std::size_t n = 1;
    for (const auto& f : f_) n *= local_canonical(f).size();
    return n;
}

std::vector<std::vector<int>> Signature::canonical_indices() const
{
    std::vector<std::vector<int>> out{{}};
    for (const auto& f : f_) {
        auto loc = local_canonical(f);
        std::vector<std::vector<int>> next;
        for (const auto& prefix : out)
            for (const auto& l : loc) {
                auto v = prefix;
                v.insert(v.end(), l.begin(), l.end());
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

Dense Signature::from_canonical(const std::vector<std::pair<std::vector<int>, Q>>& coeffs) const
{
    Dense full(slots());
    for (const auto& [idx, c] : coeffs) {
        if (is_zero(c)) continue;
        if (static_cast<int>(idx.size()) != slots()) throw std::invalid_argument("from_canonical: index length");
        Spread acc{{{}, c}};
        std::size_t pos = 0;
        for (const auto& f : f_) {
            std::vector<int> local(idx.begin() + static_cast<long>(pos), idx.begin() + static_cast<long>(pos + f.degree));
            pos += f.degree;
            Spread next;
            for (const auto& [pre, w] : acc)
                for (const auto& [loc, w2] : spread(f, local)) {
                    auto v = pre;
                    v.insert(v.end(), loc.begin(), loc.end());
                    next.push_back({std::move(v), w * w2});
                }
            acc = std::move(next);
        }
        for (const auto& [v, w] : acc) full.at(v) += w;
    }
    return full;
}

std::vector<std::pair<std::vector<int>, Q>> Signature::to_canonical(const Dense& full, bool nonzero_only) const
{
    std::vector<std::pair<std::vector<int>, Q>> out;
    for (const auto& idx : canonical_indices()) {
        Q m = 1;
        std::size_t pos = 0;
        for (const auto& f : f_) {
            std::vector<int> local(idx.begin() + static_cast<long>(pos), idx.begin() + static_cast<long>(pos + f.degree));
            pos += f.degree;
            m *= canonical_multiplier(f, local);
        }
        Q c = full.at(idx) * m;
        if (nonzero_only && is_zero(c)) continue;
        out.push_back({idx, c});
    }
    return out;
}

bool Signature::well_formed(const Dense& full) const
{
    if (full.rank() != slots()) return false;
    return from_canonical(to_canonical(full)) == full;
}

namespace sig {
namespace {
Factor lin(Space s, bool d) { return {s, d, Factor::Kind::Lin, 1}; }
Factor alt(Space s, bool d) { return {s, d, Factor::Kind::Alt, 2}; }
Factor sym(Space s, bool d, int k) { return {s, d, Factor::Kind::Sym, k}; }
}  // namespace
Signature model() { return Signature({alt(Space::V, false), lin(Space::W, false)}); }
Signature dual_model() { return Signature({alt(Space::V, true), lin(Space::W, true)}); }
Signature quadrics() { return Signature({lin(Space::V, true), sym(Space::W, false, 2)}); }
Signature s2v_w() { return Signature({sym(Space::V, false, 2), lin(Space::W, false)}); }
Signature v_s2wd() { return Signature({lin(Space::V, false), sym(Space::W, true, 2)}); }
Signature s2vd_wd() { return Signature({sym(Space::V, true, 2), lin(Space::W, true)}); }
Signature psi() { return Signature({lin(Space::V, true), alt(Space::W, false)}); }
Signature xi() { return Signature({lin(Space::V, false), alt(Space::W, true)}); }
Signature omega() { return Signature({alt(Space::W, true), sym(Space::W, false, 2)}); }
Signature quintic_v() { return Signature({sym(Space::V, false, 5)}); }
Signature quintic_w() { return Signature({sym(Space::W, false, 5)}); }
}  // namespace sig

}  // namespace g1
