#pragma once

/**
 * @file io.hpp
 * @brief JSON encodings (nlohmann::json) for every engine value and report.
 *
 * Scalars are strings in the parser's text form. A polynomial is
 * {"n": 1, "terms": [{"coeff": "1-q^2", "word": [[1, false], [1, true]]}]},
 * a basis vector is {"q": "1/2", "terms": [{"j": 0, "k": 1, "l": 0, "coeff": "1"}]}.
 * The `from_json`-style readers accept what the writers produce, so every
 * document round-trips.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>

#include <json.hpp>

#include "descent.hpp"
#include "parser.hpp"
#include "quotients.hpp"
#include "rewrite.hpp"
#include "suq2.hpp"

namespace qsphere::io {

using json = nlohmann::ordered_json;

template <class C>
constexpr bool is_gaussian_v = std::is_same_v<typename C::scalar_type, Gaussian>;

template <class C>
C scalar_from(const json& j) {
    if (j.is_number_integer()) return C(j.get<long>());
    if (!j.is_string()) throw SyntaxError("expected a scalar string", 0);
    return parse_scalar<C>(j.get<std::string>(), is_gaussian_v<C>);
}

// ---------------------------------------------------------------------------
// Words and polynomials

inline json to_json(const Word& w) {
    json a = json::array();
    for (const auto& l : w) a.push_back(json::array({l.index, l.starred}));
    return a;
}

inline Word word_from_json(const json& j) {
    Word w;
    for (const auto& l : j) w.push_back(Letter{l.at(0).get<int>(), l.at(1).get<bool>()});
    return w;
}

template <class C>
json to_json(const NCPoly<C>& a) {
    json terms = json::array();
    for (const auto& [w, c] : a.terms()) terms.push_back({{"coeff", c.str()}, {"word", to_json(w)}});
    return {{"n", a.arity()}, {"terms", terms}, {"text", format_poly(a)}};
}

/// Accepts the object form or a text expression parsed at `arity`.
template <class C>
NCPoly<C> poly_from_json(const json& j, int arity = -1) {
    if (j.is_string()) {
        if (arity < 0) throw SyntaxError("a text polynomial needs a known arity", 0);
        return parse_poly<C>(j.get<std::string>(), ExprContext{arity, is_gaussian_v<C>, arity == 1});
    }
    int n = j.at("n").get<int>();
    if (arity >= 0 && n != arity) throw ArityMismatch(n, arity);
    NCPoly<C> out(n);
    for (const auto& t : j.at("terms")) out.add_term(word_from_json(t.at("word")), scalar_from<C>(t.at("coeff")));
    return out;
}

// ---------------------------------------------------------------------------
// Basis vectors and Laurent polynomials

inline json to_json(const BasisTerm& t) { return {{"j", t.j}, {"k", t.k}, {"l", t.l}}; }

inline BasisTerm basis_term_from_json(const json& j) {
    long k = j.at("k").get<long>(), l = j.at("l").get<long>();
    if (k < 0 || l < 0) throw InvalidRange("basis term exponents k, l must be non-negative");
    return BasisTerm{j.at("j").get<long>(), static_cast<unsigned long>(k), static_cast<unsigned long>(l)};
}

template <class C>
json to_json(const BasisVector<C>& x) {
    json terms = json::array();
    for (const auto& [t, c] : x.terms()) {
        json e = to_json(t);
        e["coeff"] = c.str();
        terms.push_back(e);
    }
    return {{"q", x.qmode().str()}, {"terms", terms}};
}

template <class C>
BasisVector<C> basis_vector_from_json(const json& j) {
    BasisVector<C> x(QMode::parse(j.value("q", std::string("q"))));
    for (const auto& t : j.at("terms")) x.add_term(basis_term_from_json(t), scalar_from<C>(t.at("coeff")));
    return x;
}

inline json to_json(const FiltrationDegree& d) {
    if (d.is_infinite()) return "inf";
    return d.value();
}

template <class C>
json to_json(const LaurentPoly<C>& a) {
    json terms = json::array();
    for (const auto& [k, c] : a.terms()) terms.push_back({{"exp", k}, {"coeff", c.str()}});
    return {{"terms", terms}, {"text", a.str()}};
}

template <class C>
LaurentPoly<C> laurent_from_json(const json& j) {
    LaurentPoly<C> a;
    for (const auto& t : j.at("terms")) a.add_term(t.at("exp").get<long>(), scalar_from<C>(t.at("coeff")));
    return a;
}

template <class C>
json to_json(const UnitaryVerdict<C>& v) {
    if (const auto* u = std::get_if<Unitary<C>>(&v))
        return {{"verdict", "unitary"}, {"lambda", u->lambda.str()}, {"j", u->j}};
    const auto& nu = std::get<NotUnitary<C>>(v);
    return {{"verdict", "not_unitary"}, {"witness", {{"exp", nu.exponent}, {"coeff", nu.coefficient.str()}}}};
}

// ---------------------------------------------------------------------------
// Rewriting reports

template <class C>
json to_json(const CriticalPairReport<C>& r) {
    return {{"overlap", r.overlap.str()},
            {"first_rule", r.first_rule},
            {"second_rule", r.second_rule},
            {"first_reduct", to_json(r.first_reduct)},
            {"second_reduct", to_json(r.second_reduct)},
            {"first_normal", to_json(r.first_normal)},
            {"second_normal", to_json(r.second_normal)},
            {"joined", r.joined}};
}

inline json to_json(const RelationId& id) {
    json j{{"id", id.str()}, {"equation", id.equation}};
    if (id.i >= 0) j["i"] = id.i;
    if (id.j >= 0) j["j"] = id.j;
    return j;
}

// ---------------------------------------------------------------------------
// Certificates and homomorphisms

template <class C>
json to_json(const IdealCertificate<C>& cert) {
    json terms = json::array();
    for (const auto& t : cert.terms)
        terms.push_back({{"coeff", t.coeff.str()},
                         {"left", to_json(t.left)},
                         {"commutator", {{"x", to_json(t.x)}, {"y", to_json(t.y)}}},
                         {"right", to_json(t.right)}});
    return {{"n", cert.arity}, {"target", to_json(cert.target)}, {"terms", terms}};
}

template <class C>
IdealCertificate<C> certificate_from_json(const json& j) {
    IdealCertificate<C> cert;
    cert.arity = j.at("n").get<int>();
    cert.target = poly_from_json<C>(j.at("target"), cert.arity);
    for (const auto& t : j.at("terms"))
        cert.terms.push_back({scalar_from<C>(t.at("coeff")), word_from_json(t.at("left")),
                              poly_from_json<C>(t.at("commutator").at("x"), cert.arity),
                              poly_from_json<C>(t.at("commutator").at("y"), cert.arity), word_from_json(t.at("right"))});
    return cert;
}

inline TargetKind target_from_string(const std::string& s) {
    if (s == "sphere") return TargetKind::Sphere;
    if (s == "suq2") return TargetKind::SUq2;
    if (s == "circle") return TargetKind::Circle;
    throw SyntaxError("unknown target '" + s + "' (expected sphere, suq2 or circle)", 0);
}

inline std::string q_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long>());
    throw SyntaxError("q must be given as a string such as \"1/3\"", 0);
}

/// {"source": {"n": 1, "q": "1/3"}, "target": "suq2", "target_q": "1/2",
///  "images": {"z0": <poly JSON or text>, "z1": ...}}; sphere targets also carry "target_n".
template <class C>
HomSpec<C> homspec_from_json(const json& j) {
    HomSpec<C> spec;
    const json& src = j.at("source");
    spec.source_n = src.at("n").get<int>();
    spec.source_q = QMode::parse(src.contains("q") ? q_text(src.at("q")) : "q");
    spec.target = target_from_string(j.at("target").get<std::string>());
    spec.target_n = j.value("target_n", 1);
    spec.target_q = QMode::parse(j.contains("target_q") ? q_text(j.at("target_q")) : "q");
    const json& images = j.at("images");
    for (int i = 0; i <= spec.source_n; ++i) {
        std::string key = "z" + std::to_string(i);
        if (!images.contains(key)) throw ArityMismatch(i - 1, spec.source_n);
        spec.images.push_back(poly_from_json<C>(images.at(key), spec.target_arity()));
    }
    if (images.size() != static_cast<std::size_t>(spec.source_n + 1))
        throw ArityMismatch(static_cast<int>(images.size()) - 1, spec.source_n);
    return spec;
}

template <class C>
json to_json(const HomSpec<C>& spec) {
    json images = json::object();
    for (std::size_t i = 0; i < spec.images.size(); ++i) images["z" + std::to_string(i)] = to_json(spec.images[i]);
    json j{{"source", {{"n", spec.source_n}, {"q", spec.source_q.str()}}}, {"target", to_string(spec.target)}};
    if (spec.target == TargetKind::Sphere) j["target_n"] = spec.target_n;
    j["target_q"] = spec.target_q.str();
    j["images"] = images;
    return j;
}

template <class C>
json to_json(const HomCheck<C>& h) {
    json v = json::array();
    for (const auto& x : h.violations) {
        json e = to_json(x.relation);
        e["residue"] = to_json(x.residue);
        v.push_back(e);
    }
    return {{"verdict", h.ok() ? "ok" : "violated"}, {"violations", v}};
}

// ---------------------------------------------------------------------------
// Descent

inline json to_json(const PowerWitness& p) {
    if (!p.m) return nullptr;
    return *p.m;
}

template <class C>
json to_json(const DescentReport<C>& r) {
    json conds = json::array();
    for (const auto& c : r.conditions) {
        json e = to_json(c.term);
        e["factor"] = c.factor.str();
        conds.push_back(e);
    }
    json j{{"m", r.m},
           {"case", to_string(r.which)},
           {"conditions", conds},
           {"forced_zero", r.forced_zero},
           {"factors_match", r.factors_match},
           {"updated", to_json(r.updated)}};
    if (r.remainder_ok) j["remainder_in_next_level"] = *r.remainder_ok;
    return j;
}

template <class C>
json to_json(const DescentOutcome<C>& o) {
    json steps = json::array();
    auto add_steps = [&steps](const auto& v) {
        for (const auto& s : v) steps.push_back(to_json(s));
    };
    if (const auto* z = std::get_if<ZeroCertificate<C>>(&o)) {
        add_steps(z->steps);
        return {{"verdict", "ZeroCertificate"}, {"depth", z->depth}, {"steps", steps}, {"residual", to_json(z->residual)}};
    }
    const auto& s = std::get<Stalled<C>>(o);
    add_steps(s.steps);
    return {{"verdict", "Stalled"}, {"m", s.m}, {"term", to_json(s.term)}, {"steps", steps}};
}

template <class C>
json to_json(const Lemma10Result<C>& r) {
    if (const auto* f = std::get_if<Lemma10Form<C>>(&r))
        return {{"verdict", "ok"}, {"case", to_string(f->which)}, {"lambda", f->lambda.str()}, {"x", to_json(f->x)}};
    const auto& nf = std::get<NotOfForm<C>>(r);
    return {{"verdict", "not_of_form"}, {"circle_part", to_json(nf.circle_part)}, {"reason", nf.reason}};
}

template <class C>
json to_json(const ObstructionReport<C>& r) {
    json gens = json::array();
    for (const auto& g : r.generators) {
        json e{{"index", g.index}};
        if (g.outcome) e["descent"] = to_json(*g.outcome);
        if (!g.error.empty()) e["error"] = g.error;
        gens.push_back(e);
    }
    json stages = json::array();
    stages.push_back({{"stage", 1}, {"name", "homomorphism"}, {"verdict", to_string(r.homomorphism)}, {"report", to_json(r.hom)}});
    stages.push_back({{"stage", 2}, {"name", "is_power"}, {"verdict", r.power.is_some() ? "some" : "none"}, {"m", to_json(r.power)}});
    json dec{{"stage", 3}, {"name", "decompose_z0"}, {"verdict", to_string(r.decomposition)}};
    if (r.lemma10) dec["report"] = to_json(*r.lemma10);
    stages.push_back(dec);
    json des{{"stage", 4}, {"name", "descent"}, {"verdict", to_string(r.descent)}, {"generators", gens}};
    if (!r.descent_note.empty()) des["note"] = r.descent_note;
    stages.push_back(des);
    return {{"q", r.q.str()},
            {"qprime", r.qprime.str()},
            {"depth", r.depth},
            {"stages", stages},
            {"outcome", to_string(r.outcome)},
            {"conclusion", r.conclusion}};
}

// ---------------------------------------------------------------------------
// Files

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON in ") + path + ": " + e.what(), e.byte);
    }
}

}  // namespace qsphere::io
