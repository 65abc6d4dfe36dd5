#include "g1/apps.hpp"

#include "g1/covariants.hpp"
#include "g1/hesse.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace g1 {

Q WeierstrassCurve::b2() const { return a[0] * a[0] + 4 * a[1]; }
Q WeierstrassCurve::b4() const { return 2 * a[3] + a[0] * a[2]; }
Q WeierstrassCurve::b6() const { return a[2] * a[2] + 4 * a[4]; }
Q WeierstrassCurve::b8() const
{
    return a[0] * a[0] * a[4] + 4 * a[1] * a[4] - a[0] * a[2] * a[3] + a[1] * a[2] * a[2] - a[3] * a[3];
}
Q WeierstrassCurve::c4() const { return b2() * b2() - 24 * b4(); }
Q WeierstrassCurve::c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
Q WeierstrassCurve::disc() const
{
    const Q b2_ = b2(), b4_ = b4(), b6_ = b6(), b8_ = b8();
    return -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ + 9 * b2_ * b4_ * b6_;
}
std::optional<Q> WeierstrassCurve::j() const
{
    const Q d = disc();
    if (is_zero(d)) return std::nullopt;
    const Q c = c4();
    return Q(c * c * c / d);
}

WeierstrassInvariants weierstrass_invariants(const std::array<Q, 5>& a)
{
    const WeierstrassCurve e{a};
    return {e.c4(), e.c6(), e.disc(), e.j()};
}

WeierstrassCurve jacobian_curve(const GenusOneModel& phi)
{
    const Invariants inv = invariants(phi);
    if (is_zero(inv.disc)) throw DomainError("singular model");
    return WeierstrassCurve::short_form(-27 * inv.c4, -54 * inv.c6);
}

WeierstrassCurve congruent_family(const Q& c4, const Q& c6, const Q& l, const Q& m)
{
    if (is_zero(c4 * c4 * c4 - c6 * c6)) throw DomainError("singular curve");
    const auto h = hesse::hesse_polynomials(c4, c6);
    if (is_zero(h.D.evaluate(l, m))) throw DomainError("singular member");
    return WeierstrassCurve::short_form(-12 * h.c4.evaluate(l, m), -16 * h.c6.evaluate(l, m));
}

BinaryForm<Q> congruence_form(const WeierstrassCurve& e, const WeierstrassCurve& f)
{
    if (e.singular() || f.singular()) throw DomainError("singular curve");
    const auto h = hesse::hesse_polynomials(f.c4(), f.c6());
    const Q ce4 = e.c4(), ce6 = e.c6();
    return (h.c6 * h.c6) * (ce4 * ce4 * ce4) - (h.c4 * h.c4 * h.c4) * (ce6 * ce6);
}

// ---------------------------------------------------------------------------
// integer polynomials, lowest degree first

namespace {

using ZPoly = std::vector<Z>;

void trim(ZPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Z content(const ZPoly& p)
{
    Z g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

ZPoly primitive(ZPoly p)
{
    trim(p);
    if (p.empty()) return p;
    Z g = content(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

ZPoly derivative(const ZPoly& p)
{
    ZPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
    trim(d);
    return d;
}

// lc(b)^(deg a - deg b + 1) a mod b
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b)
{
    const int db = deg(b);
    const Z& lb = b.back();
    while (deg(a) >= db && !a.empty()) {
        const Z la = a.back();
        const int shift = deg(a) - db;
        for (auto& c : a) c *= lb;
        for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
        trim(a);
    }
    return a;
}

ZPoly poly_gcd(ZPoly a, ZPoly b)
{
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = primitive(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// exact quotient a / b over Z, b primitive
ZPoly exact_divide(ZPoly a, const ZPoly& b)
{
    ZPoly q(static_cast<std::size_t>(std::max(deg(a) - deg(b) + 1, 0)), Z(0));
    while (!a.empty() && deg(a) >= deg(b)) {
        const int shift = deg(a) - deg(b);
        if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t()))
            throw std::logic_error("exact_divide: not divisible");
        const Z c = a.back() / b.back();
        q[static_cast<std::size_t>(shift)] = c;
        for (int k = 0; k <= deg(b); ++k) a[static_cast<std::size_t>(k + shift)] -= c * b[static_cast<std::size_t>(k)];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("exact_divide: nonzero remainder");
    return q;
}

// polynomials over F_l
using FPoly = std::vector<long>;

FPoly reduce(const ZPoly& p, long l)
{
    FPoly r;
    for (const auto& c : p) r.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(l))));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

long inv_mod(long a, long l)
{
    long t = 0, nt = 1, r = l, nr = ((a % l) + l) % l;
    while (nr) {
        const long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return ((t % l) + l) % l;
}

int fpoly_gcd_degree(FPoly a, FPoly b, long l)
{
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            const long c = a.back() * inv_mod(b.back(), l) % l;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = ((a[k + shift] - c * b[k]) % l + l) % l;
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

long eval_mod(const FPoly& p, long x, long l)
{
    long s = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = (s * x + *it) % l;
    return s;
}

Z eval_z(const ZPoly& p, const Z& x, const Z& m)
{
    Z s = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        s = s * x + *it;
        s %= m;
    }
    if (s < 0) s += m;
    return s;
}

// r/t = a mod m with |r| <= n, 0 < t <= d
std::optional<std::pair<Z, Z>> rational_reconstruction(const Z& a, const Z& m, const Z& n, const Z& d)
{
    Z r0 = m, r1 = a, t0 = 0, t1 = 1;
    while (abs(r1) > n) {
        const Z q = r0 / r1;
        Z r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > d) return std::nullopt;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (gcd(r1, t1) != 1) return std::nullopt;
    return std::make_pair(r1, t1);
}

// sum p_k num^k den^(n-k) == 0
bool is_root(const ZPoly& p, const Z& num, const Z& den)
{
    Z s = 0, pow_num = 1;
    std::vector<Z> dens(p.size(), Z(1));
    for (std::size_t k = 1; k < p.size(); ++k) dens[k] = dens[k - 1] * den;
    const std::size_t n = p.size() - 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
        s += p[k] * pow_num * dens[n - k];
        pow_num *= num;
    }
    return s == 0;
}

bool small_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// nonzero rational roots of a squarefree primitive polynomial with p(0) != 0
std::vector<std::pair<Z, Z>> nonzero_roots(const ZPoly& p)
{
    std::vector<std::pair<Z, Z>> out;
    if (deg(p) < 1) return out;
    const ZPoly dp = derivative(p);
    long l = 1009;
    for (;; ++l) {
        if (!small_prime(l)) continue;
        if (mpz_divisible_ui_p(p.back().get_mpz_t(), static_cast<unsigned long>(l))) continue;
        if (fpoly_gcd_degree(reduce(p, l), reduce(dp, l), l) != 0) continue;
        break;
    }
    const FPoly pl = reduce(p, l), dl = reduce(dp, l);
    const Z bound_n = abs(p.front()), bound_d = abs(p.back());
    const Z need = 2 * bound_n * bound_d + 1;
    for (long x0 = 0; x0 < l; ++x0) {
        if (eval_mod(pl, x0, l) != 0) continue;
        // Newton lifting to l^(2^k) > need
        Z x = x0, mod = l;
        while (mod <= need) {
            mod *= mod;
            Z fx = eval_z(p, x, mod), dx = eval_z(dp, x, mod), inv;
            if (mpz_invert(inv.get_mpz_t(), dx.get_mpz_t(), mod.get_mpz_t()) == 0)
                throw std::logic_error("rational_roots: derivative not invertible");
            x = (x - fx * inv) % mod;
            if (x < 0) x += mod;
        }
        auto rt = rational_reconstruction(x, mod, bound_n, bound_d);
        if (rt && is_root(p, rt->first, rt->second)) out.push_back(*rt);
    }
    return out;
}

}  // namespace

std::vector<ProjectivePoint> rational_roots(const BinaryForm<Q>& f)
{
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero form");
    const int n = f.degree();
    // g(x) = f(x, 1), lowest degree first: coefficient of x^k is f[n - k]
    std::vector<Q> c;
    for (int k = 0; k <= n; ++k) c.push_back(f[n - k]);
    const Z den = lcm_of_denominators(c);
    ZPoly g;
    for (const auto& q : c) g.push_back(Z(q * den));
    std::set<ProjectivePoint> roots;
    if (g.back() == 0) roots.insert({Z(1), Z(0)});
    trim(g);
    if (g.front() == 0) roots.insert({Z(0), Z(1)});
    while (g.front() == 0) g.erase(g.begin());
    g = primitive(g);
    if (deg(g) >= 1) {
        const ZPoly d = derivative(g);
        const ZPoly h = poly_gcd(g, d);
        const ZPoly sf = deg(h) > 0 ? primitive(exact_divide(g, h)) : g;
        for (const auto& [num, dn] : nonzero_roots(sf)) roots.insert({num, dn});
    }
    return {roots.begin(), roots.end()};
}

std::vector<ProjectivePoint> find_indirect_congruence(const WeierstrassCurve& e, const WeierstrassCurve& f)
{
    return rational_roots(congruence_form(e, f));
}

GenusOneModel visible_element(const GenusOneModel& phi, const Q& l, const Q& m)
{
    Pipeline p(phi);
    if (!p.nonsingular()) throw DomainError("singular model");
    const Dense x = (p.psi7() * l + p.psi17() * m).transposed({1, 2, 0});
    GenusOneModel out = GenusOneModel::from_full(x, true);
    if (is_zero(invariants(out).disc)) throw DomainError("singular member");
    return out;
}

// ---------------------------------------------------------------------------
// factoring and minimal models

namespace {

Z pollard_brent(const Z& n, unsigned long c)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    auto f = [&](const Z& x) {
        Z y = x * x + c;
        y %= n;
        return y;
    };
    Z y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = (q * abs(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
        if (r > (1ul << 26)) return n;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

void split(const Z& n, std::vector<Z>& primes)
{
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        primes.push_back(n);
        return;
    }
    for (unsigned long c = 1; c < 64; ++c) {
        const Z d = pollard_brent(n, c);
        if (d != n && d != 1) {
            split(d, primes);
            split(n / d, primes);
            return;
        }
    }
    throw DomainError("factorization failed for " + n.get_str());
}

int valuation(const Z& n, const Z& p)
{
    if (n == 0) return 1 << 20;
    int v = 0;
    Z m = n;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

Z zpow(const Z& p, int e)
{
    Z r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// integral model with the standard reduction of a1, a2, a3; none if (c4, c6) is not valid
std::optional<WeierstrassCurve> integral_model(const Z& c4, const Z& c6)
{
    Z b2 = (-c6) % 12;
    if (b2 < 0) b2 += 12;
    if (b2 > 6) b2 -= 12;
    Z t = b2 * b2 - c4;
    if (!mpz_divisible_ui_p(t.get_mpz_t(), 24)) return std::nullopt;
    const Z b4 = t / 24;
    t = -b2 * b2 * b2 + 36 * b2 * b4 - c6;
    if (!mpz_divisible_ui_p(t.get_mpz_t(), 216)) return std::nullopt;
    const Z b6 = t / 216;
    const Z a1 = mpz_odd_p(b2.get_mpz_t()) ? 1 : 0;
    const Z a3 = mpz_odd_p(b6.get_mpz_t()) ? 1 : 0;
    Z a2 = b2 - a1, a4 = b4 - a1 * a3, a6 = b6 - a3;
    if (!mpz_divisible_ui_p(a2.get_mpz_t(), 4) || !mpz_divisible_ui_p(a4.get_mpz_t(), 2) ||
        !mpz_divisible_ui_p(a6.get_mpz_t(), 4))
        return std::nullopt;
    WeierstrassCurve e{{Q(a1), Q(a2 / 4), Q(a3), Q(a4 / 2), Q(a6 / 4)}};
    if (e.c4() != Q(c4) || e.c6() != Q(c6)) return std::nullopt;
    return e;
}

}  // namespace

std::vector<std::pair<Z, int>> factorize(const Z& n)
{
    if (n == 0) throw std::invalid_argument("factorize: zero");
    Z m = abs(n);
    std::vector<std::pair<Z, int>> out;
    for (unsigned long p = 2; p < 100000 && m > 1; ++p) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++e;
        }
        out.push_back({Z(p), e});
    }
    std::vector<Z> big;
    split(m, big);
    std::sort(big.begin(), big.end());
    for (const auto& p : big) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.push_back({p, 1});
    }
    return out;
}

bool kraus_conditions(const Z& c4, const Z& c6)
{
    const Z d = c4 * c4 * c4 - c6 * c6;
    if (d == 0 || !mpz_divisible_ui_p(d.get_mpz_t(), 1728)) return false;
    if (valuation(c6, Z(3)) == 2) return false;
    Z r4 = c6 % 4;
    if (r4 < 0) r4 += 4;
    if (r4 == 3) return true;
    Z r32 = c6 % 32;
    if (r32 < 0) r32 += 32;
    return valuation(c4, Z(2)) >= 4 && (r32 == 0 || r32 == 8);
}

WeierstrassCurve minimal_model(const Q& c4, const Q& c6)
{
    if (is_zero(c4 * c4 * c4 - c6 * c6)) throw DomainError("singular curve");
    const Z den = lcm_of_denominators({c4, c6});
    const Z C4 = Z(c4 * zpow(den, 4)), C6 = Z(c6 * zpow(den, 6));
    Z g = C4 == 0 ? C6 : C6 == 0 ? C4 : gcd(C4, C6);
    auto fac = factorize(g);
    // scale by u: odd-part primes >= 5 as far as divisibility allows
    Z u = 1;
    int e2 = 0, e3 = 0;
    for (const auto& [p, mult] : fac) {
        (void)mult;
        const int e = std::min(valuation(C4, p) / 4, valuation(C6, p) / 6);
        if (p == 2) e2 = e;
        else if (p == 3) e3 = e;
        else u *= zpow(p, e);
    }
    // at 2 and 3 take the largest admissible power, possibly negative
    std::optional<WeierstrassCurve> best;
    Q best_u;
    for (int k2 = e2; k2 >= e2 - 3; --k2)
        for (int k3 = e3; k3 >= e3 - 3; --k3) {
            Q uu = Q(u);
            uu *= k2 >= 0 ? Q(zpow(Z(2), k2)) : Q(1) / Q(zpow(Z(2), -k2));
            uu *= k3 >= 0 ? Q(zpow(Z(3), k3)) : Q(1) / Q(zpow(Z(3), -k3));
            const Q u4 = uu * uu * uu * uu;
            const Q n4 = Q(C4) / u4, n6 = Q(C6) / (u4 * uu * uu);
            if (n4.get_den() != 1 || n6.get_den() != 1) continue;
            const bool kraus = kraus_conditions(n4.get_num(), n6.get_num());
            auto e = integral_model(n4.get_num(), n6.get_num());
            if (kraus != e.has_value()) throw std::logic_error("minimal_model: Kraus test and model recovery disagree");
            if (e && (!best || uu > best_u)) {
                best = e;
                best_u = uu;
            }
        }
    if (!best) throw DomainError("not a valid invariant pair");
    return *best;
}

}  // namespace g1
