#include "g1/model.hpp"

#include <json.hpp>

#include <sstream>

namespace g1 {

const std::array<std::pair<int, int>, 10>& model_pairs()
{
    static const std::array<std::pair<int, int>, 10> p{{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                                        {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    return p;
}

int pair_index(int i, int j)
{
    static const int idx[5][5] = {{-1, 0, 1, 2, 3}, {0, -1, 4, 5, 6}, {1, 4, -1, 7, 8}, {2, 5, 7, -1, 9}, {3, 6, 8, 9, -1}};
    return idx[i][j];
}

GenusOneModel GenusOneModel::from_full(const Dense& x, bool dual)
{
    if (x.rank() != 3) throw std::invalid_argument("model: full tensor must have rank 3");
    std::array<Form, 10> e;
    for (int p = 0; p < 10; ++p) {
        auto [i, j] = model_pairs()[p];
        for (int k = 0; k < 5; ++k) {
            e[p][k] = x(i, j, k);
            if (x(j, i, k) != -x(i, j, k) || !g1::is_zero(x(i, i, k)))
                throw std::invalid_argument("model: tensor is not alternating");
        }
    }
    return GenusOneModel(std::move(e), dual);
}

Dense GenusOneModel::full() const
{
    Dense x(3);
    for (int p = 0; p < 10; ++p) {
        auto [i, j] = model_pairs()[p];
        for (int k = 0; k < 5; ++k) {
            x(i, j, k) = e_[p][k];
            x(j, i, k) = -e_[p][k];
        }
    }
    return x;
}

Q GenusOneModel::coeff(int i, int j, int k) const
{
    if (i == j) return 0;
    if (i < j) return e_[pair_index(i, j)][k];
    return -e_[pair_index(i, j)][k];
}

bool GenusOneModel::is_zero() const
{
    for (const auto& f : e_)
        for (const auto& c : f)
            if (!g1::is_zero(c)) return false;
    return true;
}

Matrix<QPoly> GenusOneModel::matrix() const
{
    Matrix<QPoly> m(5, std::vector<QPoly>(5, QPoly(5)));
    for (int p = 0; p < 10; ++p) {
        auto [i, j] = model_pairs()[p];
        QPoly f(5);
        for (int k = 0; k < 5; ++k) f += QPoly::var(5, k, e_[p][k]);
        m[i][j] = f;
        m[j][i] = -f;
    }
    return m;
}

GenusOneModel hesse_model(const Q& a, const Q& b)
{
    Dense x(3);
    auto put = [&](int i, int j, int k, const Q& v) {
        i %= 5;
        j %= 5;
        x(i, j, k) += v;
        x(j, i, k) -= v;
    };
    for (int k = 0; k < 5; ++k) {
        put(1 + k, 4 + k, k, a);
        put(2 + k, 3 + k, k, b);
    }
    return GenusOneModel::from_full(x);
}

Transformation Transformation::identity() { return {identity_matrix(), identity_matrix()}; }

QMatrix identity_matrix(std::size_t n)
{
    QMatrix m(n, std::vector<Q>(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix transpose(const QMatrix& m)
{
    QMatrix t(m.empty() ? 0 : m[0].size(), std::vector<Q>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b)
{
    QMatrix c(a.size(), std::vector<Q>(b.empty() ? 0 : b[0].size(), Q(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

QMatrix inverse(const QMatrix& m)
{
    const std::size_t n = m.size();
    QMatrix inv(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Q> e(n, Q(0));
        e[j] = 1;
        auto s = solve_linear(m, e);
        if (s.kind != LinearSolution::Kind::Unique) throw DomainError("singular matrix");
        for (std::size_t i = 0; i < n; ++i) {
            if (j == 0) inv[i].resize(n);
            inv[i][j] = s.particular[i];
        }
    }
    return inv;
}

Dense act(const Transformation& g, const Signature& s, const Dense& x)
{
    if (x.rank() != s.slots()) throw std::invalid_argument("act: signature/tensor mismatch");
    QMatrix v = g.gV, vd = transpose(inverse(g.gV)), w = transpose(g.gW), wd = inverse(g.gW);
    std::vector<const QMatrix*> per_slot;
    for (const auto& f : s.factors()) {
        const QMatrix* m = f.space == Space::V ? (f.dual ? &vd : &v) : (f.dual ? &wd : &w);
        for (int k = 0; k < f.degree; ++k) per_slot.push_back(m);
    }
    return transform_axes(x, per_slot);
}

GenusOneModel apply(const Transformation& g, const GenusOneModel& phi)
{
    if (is_zero(determinant(g.gV)) || is_zero(determinant(g.gW))) throw DomainError("singular transformation");
    return GenusOneModel::from_full(act(g, sig::model(), phi.full()), phi.dual());
}

Dense pfaffian_tensor(const Dense& x)
{
    Dense p = einsum<Q>("jka,ijklm,lmb->iab", {&x, &levi_civita(), &x});
    Dense out(3);
    for (int i = 0; i < 5; ++i)
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) out(i, a, b) = (p(i, a, b) + p(i, b, a)) / 16;
    return out;
}

Dense pfaffians(const GenusOneModel& phi) { return pfaffian_tensor(phi.full()); }

std::vector<QPoly> quadrics_of(const Dense& p)
{
    std::vector<QPoly> q;
    for (int i = 0; i < 5; ++i) {
        QPoly f(5);
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) {
                if (is_zero(p(i, a, b))) continue;
                Exponent e{};
                ++e[a];
                ++e[b];
                f.add_term(e, p(i, a, b));
            }
        q.push_back(std::move(f));
    }
    return q;
}

Dense quadric_tensor(const std::vector<QPoly>& q)
{
    Dense p(3);
    for (int i = 0; i < 5; ++i)
        for (const auto& [e, c] : q[i].terms()) {
            std::vector<int> idx;
            for (int v = 0; v < 5; ++v)
                for (int t = 0; t < e[v]; ++t) idx.push_back(v);
            if (idx.size() != 2) throw std::invalid_argument("quadric_tensor: not a quadric");
            if (idx[0] == idx[1]) {
                p(i, idx[0], idx[0]) += c;
            } else {
                p(i, idx[0], idx[1]) += c / 2;
                p(i, idx[1], idx[0]) += c / 2;
            }
        }
    return p;
}

QPoly secant_quintic_of_quadrics(const std::vector<QPoly>& p)
{
    Matrix<QPoly> j(5, std::vector<QPoly>(5));
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 5; ++k) j[i][k] = p[i].derivative(k);
    QPoly d = determinant_laplace(j);
    return d.is_zero() ? QPoly(5) : d;
}

QPoly secant_quintic(const GenusOneModel& phi) { return secant_quintic_of_quadrics(quadrics_of(pfaffians(phi))); }

// ---- serialization

std::string to_json(const GenusOneModel& phi)
{
    // one entry per line keeps files diffable
    std::ostringstream os;
    os << "{\n";
    if (phi.dual()) os << "  \"space\": \"dual\",\n";
    os << "  \"entries\": [\n";
    for (int p = 0; p < 10; ++p) {
        os << "    [";
        for (int k = 0; k < 5; ++k) os << (k ? ", " : "") << nlohmann::json(to_string(phi.entry(p)[k])).dump();
        os << "]" << (p < 9 ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

GenusOneModel model_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("model JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != 10)
        throw std::invalid_argument("model JSON: expected {\"entries\": [10 x 5 rationals]}");
    std::array<GenusOneModel::Form, 10> e;
    for (int p = 0; p < 10; ++p) {
        const auto& row = j["entries"][p];
        if (!row.is_array() || row.size() != 5) throw std::invalid_argument("model JSON: each entry needs 5 coefficients");
        for (int k = 0; k < 5; ++k) {
            const auto& c = row[k];
            if (c.is_string()) e[p][k] = parse_rational(c.get<std::string>());
            else if (c.is_number_integer()) e[p][k] = parse_rational(std::to_string(c.get<long long>()));
            else throw std::invalid_argument("model JSON: coefficients must be \"p/q\" strings or integers");
        }
    }
    bool dual = false;
    if (j.contains("space")) {
        auto s = j["space"].get<std::string>();
        if (s != "dual" && s != "primal") throw std::invalid_argument("model JSON: space must be \"dual\" or \"primal\"");
        dual = s == "dual";
    }
    return GenusOneModel(std::move(e), dual);
}

std::string to_text(const GenusOneModel& phi)
{
    std::ostringstream os;
    if (phi.dual()) os << "# space: dual\n";
    for (int p = 0; p < 10; ++p) {
        for (int k = 0; k < 5; ++k) os << (k ? " " : "") << to_string(phi.entry(p)[k]);
        os << "\n";
    }
    return os.str();
}

GenusOneModel model_from_text(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    std::array<GenusOneModel::Form, 10> e;
    int p = 0;
    bool dual = false;
    while (std::getline(is, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            if (line.find("space: dual") != std::string::npos) dual = true;
            continue;
        }
        if (p == 10) throw std::invalid_argument("model text: more than 10 lines");
        std::istringstream ls(line);
        std::string tok;
        int k = 0;
        while (ls >> tok) {
            if (k == 5) throw std::invalid_argument("model text: more than 5 coefficients on a line");
            e[p][k++] = parse_rational(tok);
        }
        if (k != 5) throw std::invalid_argument("model text: each line needs 5 coefficients");
        ++p;
    }
    if (p != 10) throw std::invalid_argument("model text: expected 10 lines");
    return GenusOneModel(std::move(e), dual);
}

GenusOneModel parse_model(const std::string& text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return model_from_json(text);
    return model_from_text(text);
}

}  // namespace g1
