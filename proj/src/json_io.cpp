#include "tropcrit/json_io.hpp"

#include <algorithm>

namespace tropcrit {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
}

Json to_json(const DominantWeight& w) { return to_json(w.lift()); }

Json to_json(const ParabolicType& p) { return p.I_P; }

Json tropical_json(const Quiver& q, const TropicalPoint& p) {
    Json arrows = Json::array();
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& ar = q.arrows()[a];
        arrows.push_back({{"label", ar.label},
                          {"tail", q.vertices()[static_cast<std::size_t>(ar.tail)].name},
                          {"head", q.vertices()[static_cast<std::size_t>(ar.head)].name},
                          {"sigma", to_json(p.sigma[a])}});
    }
    std::stable_sort(arrows.begin(), arrows.end(),
                     [](const Json& x, const Json& y) { return x["label"].get<std::string>() < y["label"].get<std::string>(); });
    Json vertices = Json::array();
    for (std::size_t v = 0; v < q.vertices().size(); ++v)
        vertices.push_back({{"name", q.vertices()[v].name}, {"delta", to_json(p.delta[v])}});
    return {{"n", q.n()}, {"M", p.M}, {"arrows", arrows}, {"vertices", vertices}};
}

Json filling_json(const IdealFilling& f) {
    Json entries = Json::array();
    for (int i = 1; i <= f.n(); ++i)
        for (int j = i + 1; j <= f.n(); ++j) entries.push_back({{"i", i}, {"j", j}, {"value", to_json(f(i, j))}});
    return {{"n", f.n()}, {"entries", entries}, {"is_integral", f.is_integral()}};
}

Json chain_json(const ChainDecomposition& c) {
    Json terms = Json::array();
    for (const auto& t : c)
        terms.push_back({{"I_P", to_json(t.P)}, {"lambda_P", to_json(lambda_P(t.P))}, {"coefficient", to_json(t.coefficient)}});
    return terms;
}

Json expansion_json(const CriticalExpansion& e) {
    Json arrows = Json::array();
    for (std::size_t a = 0; a < e.quiver.arrows().size(); ++a) {
        auto s = e.arrow_series(static_cast<int>(a));
        Json coeffs = Json::array(), exact = Json::array();
        for (double c : s.coefficients()) {
            coeffs.push_back(c);
            auto r = recognize_rational(c);
            exact.push_back(r ? Json(r->str()) : Json(nullptr));
        }
        arrows.push_back({{"label", e.quiver.arrows()[a].label},
                          {"valuation", to_json(e.trop.sigma[a])},
                          {"series", series_pretty(s)},
                          {"coefficients", coeffs},
                          {"recognized", exact}});
    }
    return {{"n", e.quiver.n()}, {"K", e.K}, {"M", e.M()}, {"residual", residual_report(e)}, {"arrows", arrows}};
}

Json polytope_json(const StringPolytope& P) {
    Json A = Json::array(), forms = Json::array(), points = Json::array();
    for (const auto& row : P.A) A.push_back(to_json(row));
    for (const auto& f : P.forms) forms.push_back(f.str() + " >= 0");
    for (const auto& p : P.points) points.push_back(p);
    return {{"n", P.n},     {"lambda", to_json(P.lambda)}, {"word", word_str(P.word)}, {"A", A},
            {"b", to_json(P.b)}, {"inequalities", forms},   {"points", points}};
}

Json section_json(const SectionFunction& s) {
    return {{"n", s.n}, {"word", word_str(s.word)}, {"f", s.f.str()}, {"nu", nu(s)}};
}

Json conjecture_json(const ConjectureReport& r) {
    return {{"n", r.lambda.n()},       {"lambda", to_json(r.lambda)}, {"word", word_str(r.word)},
            {"nu", r.nu},              {"nu_vee", to_json(r.nu_vee)}, {"equal", r.equal},
            {"omega_inv", r.omega.f.str()}};
}

Json sweep_case_json(const SweepCase& c) {
    if (c.report) return conjecture_json(*c.report);
    return {{"n", c.lambda.n()},
            {"lambda", to_json(c.lambda)},
            {"word", word_str(c.word)},
            {"unsupported", c.error_code},
            {"message", c.error}};
}

Json error_json(const std::string& code, const std::string& message) {
    return {{"error", code}, {"message", message}};
}

Json error_json(const Error& e) { return error_json(e.code(), e.what()); }

} // namespace tropcrit
