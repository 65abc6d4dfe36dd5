#include "g1/reptheory.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace g1::rep {

CMatrix c_identity(std::size_t n)
{
    CMatrix m(n, std::vector<Cyc5>(n, Cyc5(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Cyc5(1);
    return m;
}

CMatrix c_multiply(const CMatrix& a, const CMatrix& b)
{
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    CMatrix r(n, std::vector<Cyc5>(m, Cyc5(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

CMatrix c_transpose(const CMatrix& a)
{
    const std::size_t n = a.size(), m = n ? a[0].size() : 0;
    CMatrix r(m, std::vector<Cyc5>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

CMatrix c_inverse(const CMatrix& a)
{
    const std::size_t n = a.size();
    CMatrix m = a, inv = c_identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) throw std::invalid_argument("c_inverse: singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        const Cyc5 s = m[c][c].inverse();
        for (std::size_t k = 0; k < n; ++k) {
            m[c][k] *= s;
            inv[c][k] *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            const Cyc5 f = m[i][c];
            for (std::size_t k = 0; k < n; ++k) {
                if (!m[c][k].is_zero()) m[i][k] -= f * m[c][k];
                if (!inv[c][k].is_zero()) inv[i][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

Cyc5 c_trace(const CMatrix& a)
{
    Cyc5 t(0);
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

Cyc5 c_det(const CMatrix& a)
{
    const std::size_t n = a.size();
    CMatrix m = a;
    Cyc5 d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Cyc5(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        const Cyc5 s = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const Cyc5 f = m[i][c] * s;
            for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
        }
    }
    return d;
}

namespace {

int mod5(long x) { return static_cast<int>(((x % 5) + 5) % 5); }

bool is_identity(const CMatrix& m) { return m == c_identity(m.size()); }

CMatrix power(const CMatrix& m, int k)
{
    CMatrix r = c_identity(m.size());
    for (int i = 0; i < k; ++i) r = c_multiply(r, m);
    return r;
}

// g in mu5 . H5 as a 5x5 matrix
bool in_heisenberg(const CMatrix& g, const SchrodingerPair& p)
{
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            CMatrix h = c_multiply(power(p.sigma, a), power(p.tau, b));
            // g = c h with c a fifth root of unity
            std::size_t j = 0;
            while (h[0][j].is_zero()) ++j;
            if (g[0][j].is_zero()) continue;
            const Cyc5 c = g[0][j] / h[0][j];
            bool root = false;
            for (int e = 0; e < 5; ++e) root = root || c == Cyc5::zeta_pow(e);
            if (!root) continue;
            bool eq = true;
            for (std::size_t r = 0; r < 5 && eq; ++r)
                for (std::size_t s = 0; s < 5 && eq; ++s) eq = g[r][s] == c * h[r][s];
            if (eq) return true;
        }
    return false;
}

bool normalizes(const CMatrix& g, const SchrodingerPair& p)
{
    const CMatrix gi = c_inverse(g);
    return in_heisenberg(c_multiply(c_multiply(g, p.sigma), gi), p) &&
           in_heisenberg(c_multiply(c_multiply(g, p.tau), gi), p);
}

}  // namespace

SchrodingerPair schrodinger(int t)
{
    if (mod5(t) == 0) throw std::invalid_argument("schrodinger: t must be a unit mod 5");
    SchrodingerPair p;
    p.t = mod5(t);
    p.sigma = CMatrix(5, std::vector<Cyc5>(5, Cyc5(0)));
    p.tau = p.sigma;
    for (int i = 0; i < 5; ++i) {
        p.sigma[i][i] = Cyc5::zeta_pow(p.t * i);
        p.tau[(i + 1) % 5][i] = Cyc5(1);
    }
    return p;
}

Lift extend_rep(const SchrodingerPair& p)
{
    const Cyc5 inv_sqrt5 = Cyc5::sqrt5() * Q(1, 5);
    std::optional<Lift> found;
    int count = 0;
    for (int sign : {1, -1})
        for (int r = 0; r < 5; ++r)
            for (int k = 0; k < 5; ++k) {
                Lift l;
                l.sign = sign;
                l.r = r;
                l.k = k;
                l.S = CMatrix(5, std::vector<Cyc5>(5, Cyc5(0)));
                l.T = l.S;
                const Cyc5 s = Cyc5::zeta_pow(r) * inv_sqrt5 * Cyc5(sign);
                for (int i = 0; i < 5; ++i) {
                    for (int j = 0; j < 5; ++j) l.S[i][j] = s * Cyc5::zeta_pow(p.t * i * j);
                    l.T[i][i] = Cyc5::zeta_pow(k + 3 * p.t * i * i);
                }
                if (c_det(l.S) != Cyc5(1) || c_det(l.T) != Cyc5(1)) continue;
                if (!is_identity(power(l.S, 4))) continue;
                if (!is_identity(power(c_multiply(l.S, l.T), 3))) continue;
                ++count;
                if (!found) found = l;
            }
    if (count != 1) throw std::logic_error("extend_rep: expected a unique lift, found " + std::to_string(count));
    if (!normalizes(found->S, p) || !normalizes(found->T, p))
        throw std::logic_error("extend_rep: lift does not normalize the Heisenberg group");
    return *found;
}

Mod5 mod5_mul(const Mod5& x, const Mod5& y)
{
    return {mod5(x[0] * y[0] + x[1] * y[2]), mod5(x[0] * y[1] + x[1] * y[3]), mod5(x[2] * y[0] + x[3] * y[2]),
            mod5(x[2] * y[1] + x[3] * y[3])};
}

const Mod5& gen_S()
{
    static const Mod5 s{0, 1, 4, 0};
    return s;
}

const Mod5& gen_T()
{
    static const Mod5 t{1, 1, 0, 1};
    return t;
}

std::map<Mod5, CMatrix> enumerate_gamma(const CMatrix& s, const CMatrix& t)
{
    std::map<Mod5, CMatrix> seen;
    const Mod5 id{1, 0, 0, 1};
    seen[id] = c_identity(s.size());
    std::deque<Mod5> queue{id};
    while (!queue.empty()) {
        const Mod5 g = queue.front();
        queue.pop_front();
        for (int w = 0; w < 2; ++w) {
            const Mod5 h = mod5_mul(g, w ? gen_T() : gen_S());
            CMatrix m = c_multiply(seen.at(g), w ? t : s);
            auto it = seen.find(h);
            if (it == seen.end()) {
                seen.emplace(h, std::move(m));
                queue.push_back(h);
            } else if (it->second != m) {
                throw std::logic_error("enumerate_gamma: images do not define a representation of SL2(Z/5)");
            }
        }
    }
    if (seen.size() != 120) throw std::logic_error("enumerate_gamma: closure is not SL2(Z/5)");
    return seen;
}

CMatrix chi1_S()
{
    const Cyc5 phi = Cyc5::phi();
    const Cyc5 d = (Cyc5::zeta_pow(4) - Cyc5::zeta_pow(1)).inverse();
    return {{phi * d, d}, {d, -phi * d}};
}

CMatrix chi1_T() { return {{Cyc5::zeta_pow(2), Cyc5(0)}, {Cyc5(0), Cyc5::zeta_pow(3)}}; }

// ---------------------------------------------------------------------------
// action on canonical coordinates

namespace {

// element of Z[C5], reduced to Q(zeta_5) only at the end
using GR = std::array<long long, 5>;

bool gr_zero(const GR& a) { return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; }); }

GR gr_mul(const GR& a, const GR& b)
{
    GR r{};
    for (int i = 0; i < 5; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < 5; ++j) r[(i + j) % 5] += a[i] * b[j];
    }
    return r;
}

GR& gr_add(GR& a, const GR& b, long long s = 1)
{
    for (int i = 0; i < 5; ++i) a[i] += s * b[i];
    return a;
}

Cyc5 gr_value(const GR& a)
{
    Cyc5 r(0);
    for (int i = 0; i < 5; ++i)
        if (a[i]) r += Cyc5::zeta_pow(i) * Cyc5(a[i]);
    return r;
}

// M = scale * P with P having entries 0 or +-zeta^e
struct Monomialish {
    Cyc5 scale;
    std::array<std::array<GR, 5>, 5> p{};
};

Monomialish split(const CMatrix& m)
{
    Monomialish out;
    bool have = false;
    for (int i = 0; i < 5 && !have; ++i)
        for (int j = 0; j < 5 && !have; ++j)
            if (!m[i][j].is_zero()) {
                out.scale = m[i][j];
                have = true;
            }
    if (!have) throw std::invalid_argument("split: zero matrix");
    const Cyc5 inv = out.scale.inverse();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (m[i][j].is_zero()) continue;
            const Cyc5 x = m[i][j] * inv;
            bool ok = false;
            for (int e = 0; e < 5 && !ok; ++e)
                for (int sg : {1, -1})
                    if (x == Cyc5::zeta_pow(e) * Cyc5(sg)) {
                        out.p[i][j][e] = sg;
                        ok = true;
                        break;
                    }
            if (!ok) throw std::logic_error("split: entry is not a root of unity times the scale");
        }
    return out;
}

using LocalImage = std::vector<std::pair<std::vector<int>, GR>>;

std::uint32_t pack(const std::array<int, 5>& e)
{
    std::uint32_t k = 0;
    for (int i = 0; i < 5; ++i) k = k * 64 + static_cast<std::uint32_t>(e[i]);
    return k;
}

std::array<int, 5> unpack(std::uint32_t k)
{
    std::array<int, 5> e{};
    for (int i = 4; i >= 0; --i) {
        e[i] = static_cast<int>(k % 64);
        k /= 64;
    }
    return e;
}

LocalImage local_image(const Factor& f, const std::array<std::array<GR, 5>, 5>& p, const std::vector<int>& idx)
{
    LocalImage out;
    switch (f.kind) {
    case Factor::Kind::Lin:
        for (int k = 0; k < 5; ++k)
            if (!gr_zero(p[k][idx[0]])) out.push_back({{k}, p[k][idx[0]]});
        break;
    case Factor::Kind::Alt:
        for (int k = 0; k < 5; ++k)
            for (int l = k + 1; l < 5; ++l) {
                GR v = gr_mul(p[k][idx[0]], p[l][idx[1]]);
                gr_add(v, gr_mul(p[l][idx[0]], p[k][idx[1]]), -1);
                if (!gr_zero(v)) out.push_back({{k, l}, v});
            }
        break;
    case Factor::Kind::Sym: {
        std::unordered_map<std::uint32_t, GR> poly{{0u, GR{1, 0, 0, 0, 0}}};
        for (int i : idx) {
            std::unordered_map<std::uint32_t, GR> next;
            for (const auto& [key, c] : poly) {
                auto e = unpack(key);
                for (int k = 0; k < 5; ++k) {
                    if (gr_zero(p[k][i])) continue;
                    ++e[k];
                    gr_add(next[pack(e)], gr_mul(c, p[k][i]));
                    --e[k];
                }
            }
            poly = std::move(next);
        }
        for (const auto& [key, c] : poly) {
            if (gr_zero(c)) continue;
            auto e = unpack(key);
            std::vector<int> v;
            for (int k = 0; k < 5; ++k) v.insert(v.end(), static_cast<std::size_t>(e[k]), k);
            out.push_back({std::move(v), c});
        }
        break;
    }
    }
    return out;
}

struct YAction {
    Cyc5 scale = Cyc5(1);
    std::vector<Monomialish> per_factor;
};

// g acts by mv on V and mw on W, by the inverse transposes on the duals
YAction y_action(const Signature& y, const CMatrix& mv, const CMatrix& mw)
{
    YAction a;
    const Monomialish v = split(mv), w = split(mw);
    const Monomialish vd = split(c_transpose(c_inverse(mv))), wd = split(c_transpose(c_inverse(mw)));
    for (const auto& f : y.factors()) {
        const Monomialish& m = f.space == Space::V ? (f.dual ? vd : v) : (f.dual ? wd : w);
        a.per_factor.push_back(m);
        for (int i = 0; i < f.degree; ++i) a.scale *= m.scale;
    }
    return a;
}

// image of a canonical basis element, up to the common scale
std::map<std::vector<int>, GR> apply_basis(const Signature& y, const YAction& a, const std::vector<int>& idx)
{
    std::vector<std::pair<std::vector<int>, GR>> acc{{{}, GR{1, 0, 0, 0, 0}}};
    std::size_t pos = 0;
    const auto& fs = y.factors();
    for (std::size_t k = 0; k < fs.size(); ++k) {
        std::vector<int> local(idx.begin() + static_cast<long>(pos), idx.begin() + static_cast<long>(pos + fs[k].degree));
        pos += fs[k].degree;
        auto img = local_image(fs[k], a.per_factor[k].p, local);
        std::vector<std::pair<std::vector<int>, GR>> next;
        for (const auto& [pre, c] : acc)
            for (const auto& [loc, d] : img) {
                auto v = pre;
                v.insert(v.end(), loc.begin(), loc.end());
                next.push_back({std::move(v), gr_mul(c, d)});
            }
        acc = std::move(next);
    }
    std::map<std::vector<int>, GR> out;
    for (auto& [k, c] : acc) gr_add(out[k], c);
    return out;
}

int space_t(Space s) { return s == Space::V ? 2 : 1; }

int sigma_weight(const Signature& y, const std::vector<int>& idx)
{
    long w = 0;
    std::size_t pos = 0;
    for (const auto& f : y.factors()) {
        const int t = f.dual ? -space_t(f.space) : space_t(f.space);
        for (int i = 0; i < f.degree; ++i) w += t * idx[pos++];
    }
    return mod5(w);
}

int central_character(const Signature& y)
{
    long c = 0;
    for (const auto& f : y.factors()) c += (f.dual ? -space_t(f.space) : space_t(f.space)) * f.degree;
    return mod5(c);
}

// tau applied to a canonical index: every slot index shifts by one
std::pair<std::vector<int>, int> tau_shift(const Signature& y, const std::vector<int>& idx)
{
    std::vector<int> out;
    int sign = 1;
    std::size_t pos = 0;
    for (const auto& f : y.factors()) {
        std::vector<int> local;
        for (int i = 0; i < f.degree; ++i) local.push_back((idx[pos++] + 1) % 5);
        if (f.kind == Factor::Kind::Alt) {
            if (local[0] > local[1]) {
                std::swap(local[0], local[1]);
                sign = -sign;
            }
        } else if (f.kind == Factor::Kind::Sym) {
            std::sort(local.begin(), local.end());
        }
        out.insert(out.end(), local.begin(), local.end());
    }
    return {out, sign};
}

}  // namespace

Dense FixedSubspace::full(std::size_t j) const
{
    std::vector<std::pair<std::vector<int>, Q>> c(basis.at(j).begin(), basis.at(j).end());
    return sig.from_canonical(c);
}

FixedSubspace h5_fixed_subspace(const Signature& y)
{
    FixedSubspace out;
    out.sig = y;
    if (central_character(y) != 0) return out;
    std::set<std::vector<int>> done;
    for (const auto& idx : y.canonical_indices()) {
        if (done.count(idx) || sigma_weight(y, idx) != 0) continue;
        Sparse f;
        std::vector<int> cur = idx;
        int sign = 1;
        for (int k = 0; k < 5; ++k) {
            f[cur] += Q(sign);
            done.insert(cur);
            auto [nxt, s] = tau_shift(y, cur);
            cur = std::move(nxt);
            sign *= s;
        }
        for (auto it = f.begin(); it != f.end();)
            it = is_zero(it->second) ? f.erase(it) : std::next(it);
        if (f.empty()) continue;
        const Q lead = abs(f.at(idx));
        for (auto& [k, c] : f) c /= lead;
        out.reps.push_back(idx);
        out.basis.push_back(std::move(f));
    }
    return out;
}

namespace {

CMatrix restricted_matrix(const FixedSubspace& fs, const CMatrix& mv, const CMatrix& mw)
{
    const std::size_t m = fs.basis.size();
    CMatrix r(m, std::vector<Cyc5>(m, Cyc5(0)));
    if (m == 0) return r;
    std::map<std::vector<int>, std::pair<std::size_t, Q>> owner;
    for (std::size_t j = 0; j < m; ++j)
        for (const auto& [k, c] : fs.basis[j]) owner[k] = {j, c};
    const YAction a = y_action(fs.sig, mv, mw);
    for (std::size_t j = 0; j < m; ++j) {
        std::map<std::vector<int>, GR> img;
        for (const auto& [k, c] : fs.basis[j]) {
            if (c.get_den() != 1 || !c.get_num().fits_slong_p())
                throw std::logic_error("restricted_rep: non-integral orbit coefficient");
            const long ci = c.get_num().get_si();
            for (const auto& [key, v] : apply_basis(fs.sig, a, k)) gr_add(img[key], v, ci);
        }
        // coordinates on the fixed basis, read off at the representatives
        std::vector<GR> coord(m, GR{});
        for (std::size_t i = 0; i < m; ++i) {
            auto it = img.find(fs.reps[i]);
            if (it != img.end()) coord[i] = it->second;
        }
        for (std::size_t i = 0; i < m; ++i) {
            const Q c0 = fs.basis[i].at(fs.reps[i]);
            r[i][j] = gr_value(coord[i]) * a.scale / Cyc5(c0);
        }
        // the image must lie in the fixed subspace
        for (const auto& [key, v] : img) {
            const Cyc5 val = gr_value(v);
            auto it = owner.find(key);
            if (it == owner.end()) {
                if (!val.is_zero()) throw std::logic_error("restricted_rep: image leaves the fixed subspace");
                continue;
            }
            const auto& [i, c] = it->second;
            if (val * a.scale != r[i][j] * Cyc5(c))
                throw std::logic_error("restricted_rep: image leaves the fixed subspace");
        }
    }
    return r;
}

const Lift& lift_v()
{
    static const Lift l = extend_rep(schrodinger(2));
    return l;
}

const Lift& lift_w()
{
    static const Lift l = extend_rep(schrodinger(1));
    return l;
}

}  // namespace

RestrictedRep restricted_rep(const Signature& y)
{
    RestrictedRep r;
    r.fixed = h5_fixed_subspace(y);
    r.S = restricted_matrix(r.fixed, lift_v().S, lift_w().S);
    r.T = restricted_matrix(r.fixed, lift_v().T, lift_w().T);
    return r;
}

// ---------------------------------------------------------------------------
// characters

const std::array<std::string, 9>& class_words()
{
    static const std::array<std::string, 9> w{"", "SS", "ST", "SSST", "S", "T", "SST", "TT", "SSTT"};
    return w;
}

CMatrix evaluate_word(const CMatrix& s, const CMatrix& t, const std::string& word)
{
    CMatrix r = c_identity(s.size());
    for (char c : word) {
        if (c == 'S') r = c_multiply(r, s);
        else if (c == 'T') r = c_multiply(r, t);
        else throw std::invalid_argument("evaluate_word: letters are S and T");
    }
    return r;
}

namespace {

Mod5 word_element(const std::string& word)
{
    Mod5 g{1, 0, 0, 1};
    for (char c : word) g = mod5_mul(g, c == 'S' ? gen_S() : gen_T());
    return g;
}

std::vector<Mod5> all_elements()
{
    std::vector<Mod5> out;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = 0; d < 5; ++d)
                    if (mod5(a * d - b * c) == 1) out.push_back({a, b, c, d});
    return out;
}

Mod5 mod5_inv(const Mod5& g) { return {g[3], mod5(-g[1]), mod5(-g[2]), g[0]}; }

}  // namespace

const std::array<Mod5, 9>& class_representatives()
{
    static const std::array<Mod5, 9> reps = [] {
        std::array<Mod5, 9> r{};
        for (int i = 0; i < 9; ++i) r[i] = word_element(class_words()[i]);
        return r;
    }();
    return reps;
}

const std::array<int, 9>& class_sizes()
{
    static const std::array<int, 9> sizes = [] {
        const auto group = all_elements();
        std::array<int, 9> s{};
        std::set<Mod5> covered;
        for (int i = 0; i < 9; ++i) {
            std::set<Mod5> cls;
            const Mod5 x = class_representatives()[i];
            for (const auto& g : group) cls.insert(mod5_mul(mod5_mul(g, x), mod5_inv(g)));
            for (const auto& c : cls)
                if (!covered.insert(c).second) throw std::logic_error("class_sizes: representatives are conjugate");
            s[i] = static_cast<int>(cls.size());
        }
        if (covered.size() != group.size()) throw std::logic_error("class_sizes: classes do not cover the group");
        return s;
    }();
    return sizes;
}

std::vector<std::string> character_names()
{
    return {"psi1", "psi2", "psi3", "psi4", "psi5", "chi1", "chi2", "chi3", "chi4"};
}

std::array<Cyc5, 9> character_values(const std::string& name)
{
    const Cyc5 f = Cyc5::phi(), fb = Cyc5(1) - f;
    auto row = [](std::initializer_list<Cyc5> l) {
        std::array<Cyc5, 9> a{};
        std::copy(l.begin(), l.end(), a.begin());
        return a;
    };
    if (name == "psi1") return row({1, 1, 1, 1, 1, 1, 1, 1, 1});
    if (name == "psi2") return row({4, 4, 1, 1, 0, -1, -1, -1, -1});
    if (name == "psi3") return row({5, 5, -1, -1, 1, 0, 0, 0, 0});
    if (name == "psi4") return row({3, 3, 0, 0, -1, f, f, fb, fb});
    if (name == "psi5") return row({3, 3, 0, 0, -1, fb, fb, f, f});
    if (name == "chi1") return row({2, -2, -1, 1, 0, -f, f, -fb, fb});
    if (name == "chi2") return row({2, -2, -1, 1, 0, -fb, fb, -f, f});
    if (name == "chi3") return row({4, -4, 1, -1, 0, -1, 1, -1, 1});
    if (name == "chi4") return row({6, -6, 0, 0, 0, 1, -1, 1, -1});
    throw std::invalid_argument("unknown character: " + name);
}

int character_degree(const std::string& name) { return static_cast<int>(character_values(name)[0][0].get_num().get_si()); }

namespace {

std::array<Cyc5, 9> traces_of(const CMatrix& s, const CMatrix& t)
{
    std::array<Cyc5, 9> tr{};
    for (int i = 0; i < 9; ++i) tr[i] = c_trace(evaluate_word(s, t, class_words()[i]));
    return tr;
}

std::vector<Q> molien_from_traces(const std::array<Cyc5, 9>& tr, int n)
{
    const auto chi = traces_of(chi1_S(), chi1_T());
    std::vector<Q> out;
    std::array<Cyc5, 9> prev{}, cur{};
    for (int c = 0; c < 9; ++c) {
        prev[c] = Cyc5(0);
        cur[c] = Cyc5(1);
    }
    for (int d = 0; d <= n; ++d) {
        Cyc5 s(0);
        for (int c = 0; c < 9; ++c) s += Cyc5(class_sizes()[c]) * tr[c] * cur[c];
        s *= Cyc5(Q(1, 120));
        if (!s.is_rational() || s[0].get_den() != 1 || s[0] < 0)
            throw std::logic_error("molien: multiplicity is not a natural number");
        out.push_back(s[0]);
        for (int c = 0; c < 9; ++c) {
            Cyc5 nxt = chi[c] * cur[c] - prev[c];
            prev[c] = cur[c];
            cur[c] = nxt;
        }
    }
    return out;
}

}  // namespace

std::string character_label(const RestrictedRep& r)
{
    if (r.fixed.basis.empty()) return "";
    const auto tr = traces_of(r.S, r.T);
    for (const auto& name : character_names())
        if (character_values(name) == tr) return name;
    return "";
}

std::vector<Q> molien(const std::string& character, int n) { return molien_from_traces(character_values(character), n); }

std::vector<Q> molien(const RestrictedRep& r, int n)
{
    if (r.fixed.basis.empty()) return std::vector<Q>(static_cast<std::size_t>(n + 1), Q(0));
    return molien_from_traces(traces_of(r.S, r.T), n);
}

std::vector<int> generator_degrees(const Signature& y, const std::vector<Q>& series)
{
    constexpr int kTop = 60;  // generators sit below this degree
    const int n = static_cast<int>(series.size()) - 1;
    if (n < kTop + 30) throw std::invalid_argument("generator_degrees: need the series up to degree 90");
    std::vector<Q> s(series.size(), Q(0));
    for (int d = 0; d <= n; ++d)
        if (weights_of(d, y).integral) s[d] = series[d];
    // times (1 - t^20)(1 - t^30)
    auto shift_sub = [&](int k) {
        for (int d = n; d >= k; --d) s[d] -= s[d - k];
    };
    shift_sub(20);
    shift_sub(30);
    std::vector<int> out;
    for (int d = 0; d <= n; ++d) {
        if (s[d] < 0 || (d >= kTop && !is_zero(s[d])) || s[d].get_den() != 1)
            throw std::logic_error("generator_degrees: integer-weight part is not free over the invariants");
        for (long k = 0; k < s[d].get_num().get_si(); ++k) out.push_back(d);
    }
    return out;
}

const std::vector<TableRow>& covariant_table()
{
    static const std::vector<TableRow> table = [] {
        std::vector<TableRow> t;
        for (const auto& y : {sig::model(), sig::psi(), sig::xi(), sig::dual_model(), sig::quadrics(), sig::s2vd_wd(),
                              sig::s2v_w(), sig::v_s2wd()}) {
            RestrictedRep r = restricted_rep(y);
            TableRow row;
            row.sig = y;
            row.label = character_label(r);
            row.degrees = generator_degrees(y, molien(r, 90));
            t.push_back(std::move(row));
        }
        return t;
    }();
    return table;
}

DiscreteCovariantSpace discrete_covariant_space(const Signature& y, int d)
{
    if (d < 0) throw std::invalid_argument("discrete_covariant_space: negative degree");
    DiscreteCovariantSpace out;
    out.sig = y;
    out.degree = d;
    out.integer_weight = weights_of(d, y).integral;
    const RestrictedRep r = restricted_rep(y);
    out.fixed = r.fixed;
    const std::size_t m = r.fixed.basis.size();
    if (m == 0) return out;

    // F(chi1(g) x) = pi(g) F(x) for g = S, T; unknown c[j][i] multiplies a^(d-i) b^i in F_j
    const bool t_diag = [&] {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j && !r.T[i][j].is_zero()) return false;
        return true;
    }();
    std::vector<std::pair<std::size_t, int>> unknowns;
    for (std::size_t j = 0; j < m; ++j)
        for (int i = 0; i <= d; ++i)
            if (!t_diag || Cyc5::zeta_pow(2 * (d - i) + 3 * i) == r.T[j][j]) unknowns.push_back({j, i});

    const CMatrix cs = chi1_S(), ct = chi1_T();
    std::vector<BinaryForm<Cyc5>> sub_s, sub_t;
    for (int i = 0; i <= d; ++i) {
        auto mono = BinaryForm<Cyc5>::zero(d);
        mono[i] = Cyc5(1);
        sub_s.push_back(mono.substitute(cs[0][0], cs[0][1], cs[1][0], cs[1][1]));
        sub_t.push_back(mono.substitute(ct[0][0], ct[0][1], ct[1][0], ct[1][1]));
    }
    Matrix<Cyc5> a;
    auto add_generator = [&](const CMatrix& pi, const std::vector<BinaryForm<Cyc5>>& sub) {
        // row (j, l): coefficient of a^(d-l) b^l in F_j(chi1 x) - sum_k pi[j][k] F_k(x)
        for (std::size_t j = 0; j < m; ++j)
            for (int l = 0; l <= d; ++l) {
                std::vector<Cyc5> row(unknowns.size(), Cyc5(0));
                for (std::size_t u = 0; u < unknowns.size(); ++u) {
                    const auto [k, i] = unknowns[u];
                    if (k == j) row[u] += sub[i][l];
                    if (i == l) row[u] -= pi[j][k];
                }
                if (std::any_of(row.begin(), row.end(), [](const Cyc5& x) { return !x.is_zero(); }))
                    a.push_back(std::move(row));
            }
    };
    add_generator(r.S, sub_s);
    if (!t_diag) add_generator(r.T, sub_t);
    std::vector<std::vector<Cyc5>> kernel;
    if (a.empty()) {
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            std::vector<Cyc5> v(unknowns.size(), Cyc5(0));
            v[u] = Cyc5(1);
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = solve_linear_field<Cyc5>(a, std::vector<Cyc5>(a.size(), Cyc5(0))).kernel;
    }
    for (const auto& v : kernel) {
        std::vector<BinaryForm<Cyc5>> f(m, BinaryForm<Cyc5>::zero(d));
        for (std::size_t u = 0; u < unknowns.size(); ++u) f[unknowns[u].first][unknowns[u].second] = v[u];
        out.basis.push_back(std::move(f));
    }
    return out;
}

}  // namespace g1::rep
