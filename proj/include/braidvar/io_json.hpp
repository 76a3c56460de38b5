#pragma once

#include <json.hpp>

#include "cuts.hpp"
#include "forms.hpp"
#include "positroid.hpp"
#include "seed.hpp"

namespace braidvar {

using json = nlohmann::ordered_json;

inline json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json t;
        t["coef"] = it->second.get_str();
        json exps = json::object();
        for (auto& [v, e] : it->first.entries()) exps[std::to_string(v)] = e;
        t["exps"] = exps;
        terms.push_back(t);
    }
    return json{{"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
    Polynomial p;
    for (auto& t : j.at("terms")) {
        Rational c = parse_rational(t.at("coef").get<std::string>());
        Monomial m;
        for (auto& [k, v] : t.at("exps").items())
            m = m * Monomial::var(std::stoi(k), v.get<int>());
        p.add_term(m, c);
    }
    return p;
}

inline json rational_function_to_json(const RationalFunction& f) {
    return json{{"num", f.num().to_string()}, {"den", f.den().to_string()}};
}

inline json matrix_to_json(const PositroidMatrix& m) {
    json cols = json::array();
    for (auto& c : m.cols) cols.push_back(json::array({c[0].get_str(), c[1].get_str()}));
    return json{{"n", m.n()}, {"cols", cols}};
}

inline PositroidMatrix matrix_from_json(const json& j) {
    PositroidMatrix m;
    for (auto& c : j.at("cols"))
        m.cols.push_back({parse_rational(c.at(0).get<std::string>()),
                          parse_rational(c.at(1).get<std::string>())});
    if (j.contains("n") && j.at("n").get<int>() != m.n())
        throw error("matrix JSON: 'n' does not match the number of columns");
    return m;
}

inline json form_to_json(const DifferentialForm& f) {
    json terms = json::array();
    for (auto& [idx, c] : f.terms()) {
        json t;
        t["dz"] = idx;
        t["coef"] = rational_function_to_json(c);
        terms.push_back(t);
    }
    return json{{"degree", f.degree()}, {"terms", terms}};
}

inline json quiver_to_json(const Quiver& q) {
    auto label = [](const Diagonal& d) {
        return std::to_string(d.first) + "-" + std::to_string(d.second);
    };
    json vertices = json::array();
    for (int v = 0; v < q.size(); ++v)
        vertices.push_back(json{{"label", label(q.labels[static_cast<std::size_t>(v)])},
                                {"frozen", static_cast<bool>(q.frozen[static_cast<std::size_t>(v)])}});
    json arrows = json::array();
    for (int u = 0; u < q.size(); ++u)
        for (int v = 0; v < q.size(); ++v) {
            int e = q.eps[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (e > 0)
                arrows.push_back(json{{"from", label(q.labels[static_cast<std::size_t>(u)])},
                                      {"to", label(q.labels[static_cast<std::size_t>(v)])},
                                      {"mult", e}});
        }
    return json{{"vertices", vertices}, {"arrows", arrows}};
}

inline json report_to_json(const TrialReport& r) {
    return json{{"name", r.name},
                {"trials", r.trials},
                {"passed", r.passed},
                {"resampled", r.resampled},
                {"counterexamples", r.counterexamples}};
}

inline std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace braidvar
