// Command-line front end. Exit status: 0 success, 1 domain error (singular
// model etc.), 2 usage or input error.

#include "g1/apps.hpp"
#include "g1/covariants.hpp"
#include "g1/hesse.hpp"
#include "g1/model.hpp"
#include "g1/omega.hpp"
#include "g1/reptheory.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace g1;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GenusOneModel read_model(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

Q rational_arg(const std::string& s, const char* what)
{
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw UsageError(std::string("bad rational for ") + what + ": " + s);
    }
}

std::array<Q, 5> curve_arg(const std::string& s, const char* what)
{
    std::vector<Q> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(rational_arg(item, what));
    if (v.size() != 5) throw UsageError(std::string(what) + " takes a1,a2,a3,a4,a6");
    return {v[0], v[1], v[2], v[3], v[4]};
}

void print_curve(const WeierstrassCurve& e)
{
    std::cout << "[" << to_string(e.a[0]);
    for (int i = 1; i < 5; ++i) std::cout << "," << to_string(e.a[i]);
    std::cout << "]\n";
}

void print_curve_invariants(const WeierstrassCurve& e)
{
    std::cout << "c4 " << to_string(e.c4()) << "\n";
    std::cout << "c6 " << to_string(e.c6()) << "\n";
    std::cout << "disc " << to_string(e.disc()) << "\n";
    const auto j = e.j();
    std::cout << "j " << (j ? to_string(*j) : std::string("undefined")) << "\n";
}

void print_form(const char* name, const BinaryForm<Q>& f)
{
    std::cout << name << " degree " << f.degree() << "\n";
    for (int i = 0; i <= f.degree(); ++i)
        std::cout << "  l^" << f.degree() - i << " m^" << i << " " << to_string(f[i]) << "\n";
}

void print_tensor(const Tensor& t)
{
    std::cout << "signature " << t.sig.str() << "\n";
    for (const auto& [idx, c] : t.sig.to_canonical(t.full)) {
        for (int i : idx) std::cout << i << " ";
        std::cout << to_string(c) << "\n";
    }
}

const std::vector<std::string> kVars{"w0", "w1", "w2", "w3", "w4"};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Genus one models of degree 5: invariants, covariants, Hesse polynomials and applications"};
    app.require_subcommand(1);

    std::string model_path, name, rep, signature, e_str, f_str, c4_s, c6_s, l_s, m_s, a_str;
    bool proper = false, text = false;
    int terms = 20, degree = 0;

    auto* show = app.add_subcommand("show", "print a model in canonical form");
    show->add_option("model", model_path, "model file (JSON or text)")->required();
    show->add_flag("--text", text, "plain-text format instead of JSON");

    auto* inv = app.add_subcommand("invariants", "c4, c6 and the discriminant of a model");
    inv->add_option("model", model_path)->required();

    auto* cov = app.add_subcommand("covariant", "evaluate a named covariant");
    cov->add_option("--name", name, "hessian|psi7|psi17|xi13|xi23|pi19|pi29|pi49|q6|q16|q26|r18|r28|r38|s14|s24|s34|omega|p2|p12|p22")
        ->required();
    cov->add_option("model", model_path)->required();

    auto* dbl = app.add_subcommand("double", "the doubled model Pi49 (a dual model)");
    dbl->add_option("model", model_path)->required();
    dbl->add_flag("--proper", proper, "rescale so the invariants equal those of the input");

    auto* om = app.add_subcommand("omega", "Omega-matrix from the quadric syzygies, with its verification report");
    om->add_option("model", model_path)->required();

    auto* hp = app.add_subcommand("hesse-polynomials", "D, c4, c6 in (lambda, mu) for given invariants");
    hp->add_option("--c4", c4_s)->required();
    hp->add_option("--c6", c6_s)->required();

    auto* mol = app.add_subcommand("molien", "Molien series of a character or of a signature's Y^{H5}");
    mol->add_option("--rep", rep, "psi1..psi5, chi1..chi4, or a signature such as \"Alt2(V),W\"")->required();
    mol->add_option("--terms", terms, "number of coefficients")->check(CLI::Range(1, 500));

    auto* disc = app.add_subcommand("discrete", "discrete covariants of a given degree over Q(zeta_5)");
    disc->add_option("--signature", signature)->required();
    disc->add_option("--degree", degree)->required()->check(CLI::Range(0, 200));

    auto* wi = app.add_subcommand("weierstrass", "invariants of a Weierstrass equation");
    wi->add_option("--a", a_str, "a1,a2,a3,a4,a6")->required();

    auto* jac = app.add_subcommand("jacobian", "Jacobian y^2 = x^3 - 27 c4 x - 54 c6");
    jac->add_option("model", model_path)->required();

    auto* cf = app.add_subcommand("congruent-family", "member (lambda : mu) of the family attached to (c4, c6)");
    cf->add_option("--c4", c4_s)->required();
    cf->add_option("--c6", c6_s)->required();
    cf->add_option("--lambda", l_s)->required();
    cf->add_option("--mu", m_s)->required();

    auto* fc = app.add_subcommand("find-congruence", "rational (lambda : mu) with the family member of F isomorphic to E");
    fc->add_option("--e", e_str, "a1,a2,a3,a4,a6")->required();
    fc->add_option("--f", f_str, "a1,a2,a3,a4,a6")->required();

    auto* vis = app.add_subcommand("visible", "lambda Psi7 + mu Psi17 as a model");
    vis->add_option("--model", model_path)->required();
    vis->add_option("--lambda", l_s)->required();
    vis->add_option("--mu", m_s)->required();

    auto* mm = app.add_subcommand("minimal-model", "global minimal Weierstrass model");
    mm->add_option("--c4", c4_s)->required();
    mm->add_option("--c6", c6_s)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*show) {
            const GenusOneModel phi = read_model(model_path);
            std::cout << (text ? to_text(phi) : to_json(phi));
        } else if (*inv) {
            const Invariants i = invariants(read_model(model_path));
            std::cout << "c4 " << to_string(i.c4) << "\nc6 " << to_string(i.c6) << "\ndisc " << to_string(i.disc) << "\n";
        } else if (*cov) {
            const auto& names = Pipeline::covariant_names();
            if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown covariant " + name);
            Pipeline p(read_model(model_path));
            std::cout << "degree " << Pipeline::degree_of(name) << "\n";
            print_tensor(p.covariant(name));
        } else if (*dbl) {
            std::cout << to_json(double_model(read_model(model_path), proper));
        } else if (*om) {
            const GenusOneModel phi = read_model(model_path);
            const OmegaComputation c = compute_omega(phi);
            std::cout << "syzygy system " << c.syzygy_equations << " x " << c.syzygy_unknowns << ", rank "
                      << c.syzygy_rank << ", kernel " << c.kernel_dim << "\n";
            std::cout << "alternating assembly dimension " << c.alternating_dim << "\n";
            const auto entries = omega_entries(c.omega);
            for (std::size_t k = 0; k < entries.size(); ++k) {
                auto [i, j] = model_pairs()[k];
                std::cout << "Omega[" << i << "," << j << "] = " << entries[k].str(kVars) << "\n";
            }
            const OmegaReport r = verify_omega(phi, c.omega);
            std::cout << "verification " << (r.ok() ? "ok" : "FAILED") << "\n";
            for (const auto& f : r.failures) std::cout << "  " << f << "\n";
            if (!r.ok()) return 1;
        } else if (*hp) {
            const auto h = hesse::hesse_polynomials(rational_arg(c4_s, "--c4"), rational_arg(c6_s, "--c6"));
            print_form("D", h.D);
            print_form("c4", h.c4);
            print_form("c6", h.c6);
        } else if (*mol) {
            std::vector<Q> s;
            const auto names = rep::character_names();
            if (std::find(names.begin(), names.end(), rep) != names.end()) {
                s = rep::molien(rep, terms - 1);
            } else {
                Signature y;
                try {
                    y = Signature::parse(rep);
                } catch (const std::exception&) {
                    throw UsageError("unknown representation " + rep);
                }
                const auto r = rep::restricted_rep(y);
                std::cout << "dim " << r.fixed.dimension() << " character "
                          << (rep::character_label(r).empty() ? "reducible" : rep::character_label(r)) << "\n";
                s = rep::molien(r, terms - 1);
            }
            for (std::size_t d = 0; d < s.size(); ++d) std::cout << d << " " << to_string(s[d]) << "\n";
        } else if (*disc) {
            Signature y;
            try {
                y = Signature::parse(signature);
            } catch (const std::exception&) {
                throw UsageError("bad signature " + signature);
            }
            const auto sp = rep::discrete_covariant_space(y, degree);
            std::cout << "fixed dimension " << sp.fixed.dimension() << "\n";
            std::cout << "integer weight " << (sp.integer_weight ? "yes" : "no") << "\n";
            std::cout << "dimension " << sp.basis.size() << "\n";
            for (std::size_t b = 0; b < sp.basis.size(); ++b) {
                std::cout << "element " << b << "\n";
                for (std::size_t j = 0; j < sp.basis[b].size(); ++j) {
                    const auto& f = sp.basis[b][j];
                    if (f.is_zero()) continue;
                    std::cout << "  at";
                    for (int i : sp.fixed.reps[j]) std::cout << " " << i;
                    std::cout << ":";
                    for (int i = 0; i <= f.degree(); ++i)
                        if (!f[i].is_zero()) std::cout << " (" << f[i].str() << ")*a^" << f.degree() - i << "*b^" << i;
                    std::cout << "\n";
                }
            }
        } else if (*wi) {
            print_curve_invariants(WeierstrassCurve{curve_arg(a_str, "--a")});
        } else if (*jac) {
            const WeierstrassCurve e = jacobian_curve(read_model(model_path));
            print_curve(e);
            print_curve_invariants(e);
        } else if (*cf) {
            const WeierstrassCurve e = congruent_family(rational_arg(c4_s, "--c4"), rational_arg(c6_s, "--c6"),
                                                        rational_arg(l_s, "--lambda"), rational_arg(m_s, "--mu"));
            print_curve(e);
            print_curve_invariants(e);
            std::cout << "minimal ";
            print_curve(minimal_model(e.c4(), e.c6()));
        } else if (*fc) {
            const auto roots =
                find_indirect_congruence(WeierstrassCurve{curve_arg(e_str, "--e")}, WeierstrassCurve{curve_arg(f_str, "--f")});
            if (roots.empty()) std::cout << "none\n";
            for (const auto& r : roots) std::cout << "(" << r.l.get_str() << ":" << r.m.get_str() << ")\n";
        } else if (*vis) {
            std::cout << to_json(visible_element(read_model(model_path), rational_arg(l_s, "--lambda"),
                                                 rational_arg(m_s, "--mu")));
        } else if (*mm) {
            print_curve(minimal_model(rational_arg(c4_s, "--c4"), rational_arg(c6_s, "--c6")));
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
