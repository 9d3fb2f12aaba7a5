#include "charrel/json_io.hpp"

#include "charrel/errors.hpp"

namespace charrel {

json to_json(const UniPoly& p) {
    json coeffs = json::array();
    for (auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return coeffs;
}

UniPoly unipoly_from_json(const json& j) {
    std::vector<BigRat> coeffs;
    for (auto& c : j) {
        BigRat q(c.get<std::string>());
        q.canonicalize();
        coeffs.push_back(std::move(q));
    }
    return UniPoly(std::move(coeffs));
}

json to_json(const RelationPoly& p) {
    json terms = json::array();
    for (auto& [m, c] : p.terms()) {
        json mono = json::array();
        for (auto& [cls, e] : m.exps()) mono.push_back(json::array({cls.str(), e}));
        terms.push_back(json{{"monomial", mono}, {"num", to_json(c.num())}, {"den", to_json(c.den())}});
    }
    return json{{"terms", terms}};
}

RelationPoly relpoly_from_json(const json& j) {
    RelationPoly p;
    for (auto& t : j.at("terms")) {
        Monomial m;
        for (auto& entry : t.at("monomial")) {
            Partition cls = Partition::parse(entry.at(0).get<std::string>());
            m = m * Monomial::var(cls, entry.at(1).get<int>());
        }
        p.add_term(m, RationalFunction(unipoly_from_json(t.at("num")), unipoly_from_json(t.at("den"))));
    }
    return p;
}

namespace {

json to_json(const RationalFunction& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", f.str()}};
}

const char* kind_name(FactorFinding::Kind k) {
    switch (k) {
        case FactorFinding::Kind::forced_zero: return "forced_zero";
        case FactorFinding::Kind::square_condition: return "square_condition";
        case FactorFinding::Kind::linear_forcing: return "linear_forcing";
        case FactorFinding::Kind::curve_model: return "curve_model";
    }
    return "?";
}

}  // namespace

json to_json(const AnalysisReport& report) {
    json vanish = json::array();
    for (auto& v : report.vanishing) vanish.push_back(v.str());
    json basis = json::array();
    for (auto& g : report.basis) basis.push_back(json{{"text", g.str()}, {"poly", to_json(g)}});
    json univ = json::array();
    for (auto& u : report.univariate) {
        json factors = json::array();
        for (auto& f : u.factors) {
            json fj{{"kind", kind_name(f.kind)},
                    {"multiplicity", f.multiplicity},
                    {"text", f.factor.str()}};
            switch (f.kind) {
                case FactorFinding::Kind::square_condition:
                    fj["value"] = to_json(f.value);
                    fj["square_quantity"] = to_json(f.square_quantity);
                    break;
                case FactorFinding::Kind::linear_forcing:
                    fj["rho"] = to_json(f.value);
                    fj["omega"] = to_json(f.omega_value);
                    break;
                case FactorFinding::Kind::curve_model: {
                    json curve = json::array();
                    for (auto& c : f.curve) curve.push_back(to_json(c));
                    fj["curve"] = curve;
                    break;
                }
                default:
                    break;
            }
            factors.push_back(std::move(fj));
        }
        univ.push_back(json{{"variable", u.poly.variable.str()},
                            {"element", u.element.str()},
                            {"factors", factors}});
    }
    return json{{"cap", report.norm_cap},
                {"vanishing", vanish},
                {"basis", basis},
                {"univariate", univ}};
}

json to_json(const CoverResult& result) {
    json witness = json::array();
    for (auto& w : result.witness) witness.push_back(w.str());
    const char* status = result.status == CoverResult::Status::found        ? "found"
                         : result.status == CoverResult::Status::no_cover   ? "no_cover"
                                                                            : "exceeds_limit";
    json j{{"n", result.n}, {"status", status}, {"witness", witness}};
    if (result.norm_cap) j["cap"] = *result.norm_cap;
    if (result.status != CoverResult::Status::no_cover) j["value"] = result.value;
    return j;
}

json to_json(const ScanReport& report) {
    json entries = json::array();
    for (auto& e : report.entries) {
        json vanish = json::array();
        for (auto& v : e.vanishing) vanish.push_back(v.str());
        entries.push_back(json{{"shape_idx", e.shape_idx},
                               {"vanishing", vanish},
                               {"subsets_ge4", e.subset_count},
                               {"cases", e.matched_cases}});
    }
    return json{{"n", report.n}, {"cap", report.norm_cap}, {"entries", entries}};
}

json to_json(const FamilyEval& ev) {
    return json{{"shape", ev.shape.str()},
                {"n", ev.n},
                {"class", ev.cls.str()},
                {"omega_closed", ev.closed.get_str()},
                {"omega_oracle", ev.oracle.get_str()}};
}

}  // namespace charrel
