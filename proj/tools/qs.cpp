// qs: command-line front end for the qsphere library.
//
// Exit codes: 0 success / positive verdict, 1 negative mathematical verdict,
// 2 usage or input error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "qsphere/qsphere.hpp"

namespace {

using namespace qsphere;
using io::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct RunConfig {
    int n = 1;
    std::string q = "q";
    bool gaussian = false;
    unsigned long depth = 4;
    std::size_t schema_bound = 3;
    bool json_output = false;
    std::uint64_t seed = 1;

    QMode qmode() const {
        QMode m = QMode::parse(q);
        m.require_unit_interval();
        return m;
    }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fields of a --config file; keys mirror the long option names.
void apply_config_file(RunConfig& cfg, const std::string& path) {
    json j = io::read_json_file(path);
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    for (const auto& [key, v] : j.items()) {
        if (key == "n") cfg.n = v.get<int>();
        else if (key == "q") cfg.q = io::q_text(v);
        else if (key == "gaussian") cfg.gaussian = v.get<bool>();
        else if (key == "depth") cfg.depth = v.get<unsigned long>();
        else if (key == "schema_bound") cfg.schema_bound = v.get<std::size_t>();
        else if (key == "output") cfg.json_output = v.get<std::string>() == "json";
        else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
        else throw UsageError("unknown config key '" + key + "'");
    }
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

template <class C>
NCPoly<C> parse_expr(const std::string& text, int n, bool gaussian) {
    return parse_poly<C>(text, ExprContext{n, gaussian, n == 1});
}

template <class C>
LaurentPoly<C> laurent_of(const std::string& text, bool gaussian) {
    ExprContext ctx{0, gaussian, false, true};
    return project_to_circle(parse_poly<C>(text, ctx), QMode::symbolic());
}

DescentCase parse_case(const std::string& s) {
    if (s == "A" || s == "a") return DescentCase::A;
    if (s == "B" || s == "b") return DescentCase::B;
    throw UsageError("--case must be A or B");
}

Rational fixed_value(const std::string& text, const char* what) {
    QMode m = QMode::parse(text);
    if (m.is_symbolic()) throw UsageError(std::string(what) + " must be a fixed rational");
    return m.value();
}

// ---------------------------------------------------------------------------
// Subcommands

template <class C>
int cmd_normalize(const RunConfig& cfg, const std::string& expr) {
    RuleSet<C> rules(cfg.n, cfg.qmode());
    NormalForm<C> nf = normalize(parse_expr<C>(expr, cfg.n, cfg.gaussian), rules);
    if (cfg.json_output) print(io::to_json(nf.value()));
    else std::cout << format_poly(nf.value()) << '\n';
    return kOk;
}

template <class C>
BasisVector<C> basis_of(const RunConfig& cfg, const std::string& expr) {
    return word_to_basis(parse_expr<C>(expr, 1, cfg.gaussian), cfg.qmode());
}

template <class C>
int cmd_basis(const RunConfig& cfg, const std::string& expr) {
    BasisVector<C> x = basis_of<C>(cfg, expr);
    if (cfg.json_output) print(io::to_json(x));
    else std::cout << x.str() << '\n';
    return kOk;
}

template <class C>
int cmd_star(const RunConfig& cfg, const std::string& expr, bool in_basis) {
    if (in_basis) {
        BasisVector<C> x = basis_star(basis_of<C>(cfg, expr));
        if (cfg.json_output) print(io::to_json(x));
        else std::cout << x.str() << '\n';
        return kOk;
    }
    RuleSet<C> rules(cfg.n, cfg.qmode());
    NormalForm<C> nf = normalize(involution(parse_expr<C>(expr, cfg.n, cfg.gaussian)), rules);
    if (cfg.json_output) print(io::to_json(nf.value()));
    else std::cout << format_poly(nf.value()) << '\n';
    return kOk;
}

template <class C>
int cmd_filtration(const RunConfig& cfg, const std::string& expr) {
    BasisVector<C> x = basis_of<C>(cfg, expr);
    FiltrationDegree d = filtration_degree(x);
    if (cfg.json_output) print({{"degree", io::to_json(d)}, {"vector", io::to_json(x)}});
    else std::cout << d.str() << '\n';
    return kOk;
}

template <class C>
int cmd_confluence(const RunConfig& cfg) {
    RuleSet<C> rules(cfg.n, cfg.qmode());
    auto reports = check_local_confluence(rules, cfg.schema_bound);
    std::size_t joined = 0;
    for (const auto& r : reports) joined += r.joined ? 1 : 0;
    if (cfg.json_output) {
        json all = json::array();
        for (const auto& r : reports) all.push_back(io::to_json(r));
        print({{"n", cfg.n}, {"q", rules.qmode().str()}, {"schema_bound", cfg.schema_bound},
               {"pairs", reports.size()}, {"joined", joined}, {"reports", all}});
    } else {
        std::cout << "n = " << cfg.n << ", q = " << rules.qmode().str() << ", schema bound " << cfg.schema_bound << ": "
                  << reports.size() << " critical pairs, " << joined << " joined\n";
        for (const auto& r : reports)
            if (!r.joined)
                std::cout << "  not joined: " << r.overlap.str() << " (" << r.first_rule << " / " << r.second_rule << ")\n"
                          << "    " << format_poly(r.first_normal) << "\n    " << format_poly(r.second_normal) << '\n';
    }
    return joined == reports.size() ? kOk : kNegative;
}

template <class C>
int cmd_ideal_cert(const RunConfig& cfg, const std::string& expr) {
    NCPoly<C> target = parse_expr<C>(expr, cfg.n, cfg.gaussian);
    IdealCertificate<C> cert;
    try {
        cert = commutator_ideal_certificate(cfg.n, target, cfg.qmode());
    } catch (const NotCertifiable& e) {
        if (cfg.json_output) print({{"verdict", "not_certifiable"}, {"reason", e.what()}});
        else std::cout << e.what() << '\n';
        return kNegative;
    }
    bool ok = verify_certificate(cert, cfg.qmode());
    if (cfg.json_output) {
        json j = io::to_json(cert);
        j["verified"] = ok;
        print(j);
    } else {
        for (const auto& t : cert.terms) {
            std::cout << "(" << t.coeff.str() << ")";
            if (!t.left.empty()) std::cout << ' ' << t.left.str();
            std::cout << " [" << format_poly(t.x) << ", " << format_poly(t.y) << "]";
            if (!t.right.empty()) std::cout << ' ' << t.right.str();
            std::cout << '\n';
        }
        std::cout << "verified: " << (ok ? "yes" : "no") << '\n';
    }
    return ok ? kOk : kNegative;
}

template <class C>
int cmd_circle(const RunConfig& cfg, const std::string& expr, const std::optional<std::string>& lambda) {
    QMode qm = cfg.qmode();
    NCPoly<C> a = parse_expr<C>(expr, cfg.n, cfg.gaussian);
    LaurentPoly<C> u = project_to_circle(a, qm);
    json j{{"circle", io::to_json(u)}};
    std::string text = u.str();
    if (lambda) {
        C lam = parse_scalar<C>(*lambda, cfg.gaussian);
        C value = character_eval(a, lam, qm);
        j["lambda"] = lam.str();
        j["character"] = value.str();
        text += "\nchi(" + lam.str() + ") = " + value.str();
    }
    if (cfg.json_output) print(j);
    else std::cout << text << '\n';
    return kOk;
}

template <class C>
int cmd_unitary(const RunConfig& cfg, const std::string& expr) {
    LaurentPoly<C> a = laurent_of<C>(expr, cfg.gaussian);
    auto v = is_unitary_laurent(a);
    if (cfg.json_output) {
        json j = io::to_json(v);
        j["input"] = io::to_json(a);
        print(j);
    } else if (const auto* u = std::get_if<Unitary<C>>(&v)) {
        std::cout << "unitary: lambda = " << u->lambda.str() << ", j = " << u->j << '\n';
    } else {
        const auto& nu = std::get<NotUnitary<C>>(v);
        std::cout << "not unitary: a a* - 1 has coefficient " << nu.coefficient.str() << " at u^" << nu.exponent << '\n';
    }
    return std::holds_alternative<Unitary<C>>(v) ? kOk : kNegative;
}

template <class C>
int cmd_check_hom(const RunConfig& cfg, const std::string& spec_path) {
    HomSpec<C> spec = io::homspec_from_json<C>(io::read_json_file(spec_path));
    HomCheck<C> h = check_homomorphism(spec);
    if (cfg.json_output) {
        print(io::to_json(h));
    } else if (h.ok()) {
        std::cout << "Ok\n";
    } else {
        std::cout << "Violated\n";
        for (const auto& v : h.violations) std::cout << "  " << v.relation.str() << ": " << format_poly(v.residue) << '\n';
    }
    return h.ok() ? kOk : kNegative;
}

template <class C>
int cmd_descent(const RunConfig& cfg, const std::string& qprime, const std::string& which, const std::string& y_text) {
    Rational q = fixed_value(cfg.q, "--q");
    Rational qp = fixed_value(qprime, "--qprime");
    if (qp.is_zero()) throw QZeroUnsupported();
    QMode qm = QMode::fixed(qp);
    qm.require_unit_interval();
    QMode::fixed(q).require_unit_interval();
    BasisVector<C> y = word_to_basis(parse_expr<C>(y_text, 1, cfg.gaussian), qm);
    DescentOutcome<C> out = run_descent(y, q, parse_case(which), cfg.depth);
    // certificates are structured evidence, so this command always prints JSON
    json j = io::to_json(out);
    j["q"] = q.str();
    j["qprime"] = qp.str();
    j["case"] = which;
    j["y"] = io::to_json(y);
    print(j);
    return std::holds_alternative<ZeroCertificate<C>>(out) ? kOk : kNegative;
}

template <class C>
int cmd_obstruct(const RunConfig& cfg, const std::string& spec_path) {
    HomSpec<C> spec = io::homspec_from_json<C>(io::read_json_file(spec_path));
    ObstructionReport<C> rep = verify_nonvanishing_obstruction(spec, cfg.depth);
    if (cfg.json_output) {
        print(io::to_json(rep));
    } else {
        std::cout << "(1) homomorphism: " << to_string(rep.homomorphism) << '\n';
        for (const auto& v : rep.hom.violations) std::cout << "      " << v.relation.str() << ": " << format_poly(v.residue) << '\n';
        std::cout << "(2) is_power(" << rep.q.str() << ", " << rep.qprime.str()
                  << "): " << (rep.power.m ? "some(" + std::to_string(*rep.power.m) + ")" : "none") << '\n';
        std::cout << "(3) decomposition of z0 image: " << to_string(rep.decomposition);
        if (rep.lemma10) {
            if (const auto* f = std::get_if<Lemma10Form<C>>(&*rep.lemma10))
                std::cout << " (case " << to_string(f->which) << ", lambda = " << f->lambda.str() << ", x = " << f->x.str() << ")";
        }
        std::cout << "\n(4) descent to depth " << rep.depth << ": " << to_string(rep.descent) << '\n';
        if (!rep.descent_note.empty()) std::cout << "      " << rep.descent_note << '\n';
        for (const auto& g : rep.generators) {
            std::cout << "      z" << g.index << ": ";
            if (!g.error.empty()) std::cout << g.error;
            else if (const auto* s = std::get_if<Stalled<C>>(&*g.outcome)) std::cout << "stalled at m = " << s->m << " on " << s->term.str();
            else std::cout << "forced zero";
            std::cout << '\n';
        }
        std::cout << rep.conclusion << '\n';
    }
    return rep.outcome == ObstructionOutcome::Obstructed ? kOk : kNegative;
}

int cmd_verify_lemmas(const RunConfig& cfg, bool n_given, const std::string& suite) {
    SuiteConfig sc;
    sc.max_n = n_given ? cfg.n : 3;
    sc.qmode = cfg.qmode();
    sc.seed = cfg.seed;
    sc.schema_bound = cfg.schema_bound;
    if (sc.max_n < 1) throw UsageError("verify-lemmas needs --n >= 1");
    auto results = run_suites(suite, sc);
    bool failed = false;
    json all = json::array();
    for (const auto& r : results) {
        failed |= r.verdict == SuiteVerdict::Fail;
        json e{{"suite", r.name}, {"verdict", to_string(r.verdict)}, {"checks", r.checks}, {"failures", r.failures}};
        if (!r.first_failure.empty()) e["first_failure"] = r.first_failure;
        if (!r.reason.empty()) e["reason"] = r.reason;
        all.push_back(e);
        if (!cfg.json_output) {
            std::cout << to_string(r.verdict) << ' ' << r.name;
            if (r.verdict == SuiteVerdict::Skipped) std::cout << ": " << r.reason;
            else std::cout << " (" << r.checks << " checks, " << r.failures << " failures)";
            if (!r.first_failure.empty()) std::cout << "\n  first failure: " << r.first_failure;
            std::cout << '\n';
        }
    }
    if (cfg.json_output) print({{"seed", cfg.seed}, {"q", sc.qmode.str()}, {"max_n", sc.max_n}, {"suites", all}});
    return failed ? kNegative : kOk;
}

template <template <class> class F, class... Args>
int dispatch(bool gaussian, Args&&... args) {
    return gaussian ? F<QRatI>::run(std::forward<Args>(args)...) : F<QRat>::run(std::forward<Args>(args)...);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qs: exact computation in the quantum sphere algebras and A(SU_q(2))"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string config_path;
    std::optional<int> n_opt;
    std::optional<std::string> q_opt;
    std::optional<unsigned long> depth_opt;
    std::optional<std::size_t> bound_opt;
    std::optional<std::uint64_t> seed_opt;
    bool gaussian_flag = false, json_flag = false;

    app.add_option("--n", n_opt, "arity n of A(S^{2n+1}_q)");
    app.add_option("--q", q_opt, "deformation parameter: 'q' (symbolic) or a rational in [0,1)");
    app.add_flag("--gaussian", gaussian_flag, "Gaussian-rational coefficients (enables i)");
    app.add_flag("--json", json_flag, "JSON output");
    app.add_option("--config", config_path, "RunConfig JSON file");
    app.add_option("--depth", depth_opt, "descent depth M (default 4, or $QS_DEPTH)");
    app.add_option("--schema-bound", bound_opt, "gap-rule word length audited by confluence");
    app.add_option("--seed", seed_opt, "seed for verify-lemmas");

    std::string expr, qprime, which = "A", y_text, spec_path, suite = "all";
    std::optional<std::string> lambda;
    bool in_basis = false;

    auto* normalize_cmd = app.add_subcommand("normalize", "normal form of an expression");
    normalize_cmd->add_option("expr", expr)->required();
    auto* basis_cmd = app.add_subcommand("basis", "expand an n = 1 expression in the basis e(j,k,l)");
    basis_cmd->add_option("expr", expr)->required();
    auto* star_cmd = app.add_subcommand("star", "the involution, normalized");
    star_cmd->add_option("expr", expr)->required();
    star_cmd->add_flag("--basis", in_basis, "print the result in the e(j,k,l) basis");
    auto* filtration_cmd = app.add_subcommand("filtration", "filtration degree of an n = 1 expression");
    filtration_cmd->add_option("expr", expr)->required();
    auto* confluence_cmd = app.add_subcommand("confluence", "critical-pair audit");
    auto* cert_cmd = app.add_subcommand("ideal-cert", "commutator-ideal certificate");
    cert_cmd->add_option("expr", expr)->required();
    auto* circle_cmd = app.add_subcommand("circle", "projection to the circle algebra");
    circle_cmd->add_option("expr", expr)->required();
    circle_cmd->add_option("--lambda", lambda, "also evaluate the character at this unit scalar");
    auto* unitary_cmd = app.add_subcommand("unitary", "decide whether a Laurent polynomial in u is unitary");
    unitary_cmd->add_option("expr", expr)->required();
    auto* hom_cmd = app.add_subcommand("check-hom", "check a homomorphism candidate");
    hom_cmd->add_option("--spec", spec_path)->required();
    auto* descent_cmd = app.add_subcommand("descent", "run the filtration descent on one element");
    descent_cmd->add_option("--qprime", qprime, "parameter of the SU_q'(2) target")->required();
    descent_cmd->add_option("--case", which, "A (z0 -> lambda alpha + x) or B (z0 -> lambda alpha* + x)");
    descent_cmd->add_option("--y", y_text, "element of V_1, e.g. \"e(0,1,0)\"")->required();
    auto* obstruct_cmd = app.add_subcommand("obstruct", "full obstruction pipeline for a homomorphism candidate");
    obstruct_cmd->add_option("--spec", spec_path)->required();
    auto* verify_cmd = app.add_subcommand("verify-lemmas", "run the property suites");
    verify_cmd->add_option("--suite", suite, "suite name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (const char* env = std::getenv("QS_DEPTH")) {
            try {
                cfg.depth = std::stoul(env);
            } catch (const std::exception&) {
                throw UsageError("QS_DEPTH must be a positive integer");
            }
        }
        if (!config_path.empty()) apply_config_file(cfg, config_path);
        if (n_opt) cfg.n = *n_opt;
        if (q_opt) cfg.q = *q_opt;
        if (depth_opt) cfg.depth = *depth_opt;
        if (bound_opt) cfg.schema_bound = *bound_opt;
        if (seed_opt) cfg.seed = *seed_opt;
        cfg.gaussian = cfg.gaussian || gaussian_flag;
        cfg.json_output = cfg.json_output || json_flag;
        if (cfg.n < 0) throw UsageError("--n must be non-negative");
        if (cfg.depth < 1) throw UsageError("--depth must be at least 1");
        if (cfg.schema_bound < 1) throw UsageError("--schema-bound must be at least 1");
        cfg.qmode();

        const bool g = cfg.gaussian;
        auto pick = [g](auto rational, auto gaussian) { return g ? gaussian() : rational(); };
        if (normalize_cmd->parsed())
            return pick([&] { return cmd_normalize<QRat>(cfg, expr); }, [&] { return cmd_normalize<QRatI>(cfg, expr); });
        if (basis_cmd->parsed())
            return pick([&] { return cmd_basis<QRat>(cfg, expr); }, [&] { return cmd_basis<QRatI>(cfg, expr); });
        if (star_cmd->parsed())
            return pick([&] { return cmd_star<QRat>(cfg, expr, in_basis); }, [&] { return cmd_star<QRatI>(cfg, expr, in_basis); });
        if (filtration_cmd->parsed())
            return pick([&] { return cmd_filtration<QRat>(cfg, expr); }, [&] { return cmd_filtration<QRatI>(cfg, expr); });
        if (confluence_cmd->parsed())
            return pick([&] { return cmd_confluence<QRat>(cfg); }, [&] { return cmd_confluence<QRatI>(cfg); });
        if (cert_cmd->parsed())
            return pick([&] { return cmd_ideal_cert<QRat>(cfg, expr); }, [&] { return cmd_ideal_cert<QRatI>(cfg, expr); });
        if (circle_cmd->parsed())
            return pick([&] { return cmd_circle<QRat>(cfg, expr, lambda); }, [&] { return cmd_circle<QRatI>(cfg, expr, lambda); });
        if (unitary_cmd->parsed())
            return pick([&] { return cmd_unitary<QRat>(cfg, expr); }, [&] { return cmd_unitary<QRatI>(cfg, expr); });
        if (hom_cmd->parsed())
            return pick([&] { return cmd_check_hom<QRat>(cfg, spec_path); }, [&] { return cmd_check_hom<QRatI>(cfg, spec_path); });
        if (descent_cmd->parsed())
            return pick([&] { return cmd_descent<QRat>(cfg, qprime, which, y_text); },
                        [&] { return cmd_descent<QRatI>(cfg, qprime, which, y_text); });
        if (obstruct_cmd->parsed())
            return pick([&] { return cmd_obstruct<QRat>(cfg, spec_path); }, [&] { return cmd_obstruct<QRatI>(cfg, spec_path); });
        if (verify_cmd->parsed()) return cmd_verify_lemmas(cfg, n_opt.has_value(), suite);
    } catch (const ParseError& e) {
        std::cerr << "qs: parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "qs: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "qs: " << e.what() << '\n';
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "qs: malformed JSON input: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
