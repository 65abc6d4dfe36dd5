#include "g1/contractions.hpp"

#include "g1/model.hpp"

namespace g1::raw {

const char* const omega_scheme = "O = einsum('cKp,cdM,ijKLM,dLq->ijpq', P2, U, eps, P2); raw = -(O + O^T_pq)";
const char* const c4_scheme = "tr(N^4), N[(5a+i),(5j+b)] = Omega[i][j][a][b]";
const char* const c6_scheme = "tr(N^6), N[(5a+i),(5j+b)] = Omega[i][j][a][b]";
const char* const hessian_scheme =
    "Hc = einsum('HxA,HCF,ABCDE,IyB,IDG,FGzE->xyz', U, P2, eps, U, P2, Omega); raw = Hc - Hc^T_xy";
const char* const q6_scheme =
    "X = einsum('DEI,ABCDE,cCH,cJz,FGHIJ,xAF,yBG->xyz', U, eps, U, P2, eps, U, U); raw = X + X^T_xy";
const char* const pi_scheme = "einsum('deabc,abk,ckn->den', eps, U, R)";
const char* const xi_scheme = "einsum('rsijm,kij,kbm->brs', eps, Psi, Q)";

namespace {

Dense sym_last_two(const Dense& o)
{
    return o + o.transposed({0, 1, 3, 2});
}

}  // namespace

Dense omega(const Dense& u, const Dense& p2)
{
    Dense o = einsum<Q>("cKp,cdM,ijKLM,dLq->ijpq", {&p2, &u, &levi_civita(), &p2});
    return -sym_last_two(o);
}

Q trace_chain(const Dense& om, int k)
{
    QMatrix n(25, std::vector<Q>(25, Q(0)));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int a = 0; a < 5; ++a)
                for (int b = 0; b < 5; ++b) n[5 * a + i][5 * j + b] = om(i, j, a, b);
    QMatrix p = n;
    for (int t = 1; t < k; ++t) p = multiply(p, n);
    Q tr = 0;
    for (int i = 0; i < 25; ++i) tr += p[i][i];
    return tr;
}

Dense hessian(const Dense& u, const Dense& p2, const Dense& om)
{
    Dense hc = einsum<Q>("HxA,HCF,ABCDE,IyB,IDG,FGzE->xyz", {&u, &p2, &levi_civita(), &u, &p2, &om});
    return hc - hc.transposed({1, 0, 2});
}

Dense q6(const Dense& u, const Dense& p2)
{
    const Dense& e = levi_civita();
    Dense x = einsum<Q>("DEI,ABCDE,cCH,cJz,FGHIJ,xAF,yBG->xyz", {&u, &e, &u, &p2, &e, &u, &u});
    return x + x.transposed({1, 0, 2});
}

Dense pi(const Dense& u, const Dense& r)
{
    return einsum<Q>("abk,deabc,ckn->den", {&u, &levi_civita(), &r});
}

Dense xi(const Dense& psi, const Dense& q)
{
    return einsum<Q>("kij,kbm,rsijm->brs", {&psi, &q, &levi_civita()});
}

std::optional<Q> ratio(const Dense& a, const Dense& b)
{
    if (a.rank() != b.rank()) return std::nullopt;
    std::optional<Q> r;
    for (std::size_t f = 0; f < b.size(); ++f) {
        if (is_zero(b[f])) continue;
        r = a[f] / b[f];
        break;
    }
    if (!r) return std::nullopt;
    for (std::size_t f = 0; f < b.size(); ++f)
        if (a[f] != *r * b[f]) return std::nullopt;
    return r;
}

}  // namespace g1::raw
