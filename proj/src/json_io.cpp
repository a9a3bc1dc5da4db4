#include "chowcfg/json_io.hpp"

namespace chowcfg {

Json to_json(const ChowElement& a) {
    Json terms = Json::array();
    for (const auto& [l, c] : a.terms()) {
        terms.push_back(Json{{"J", mask_members(l.J)}, {"k", l.k}, {"c", rational_str(c)}});
    }
    return Json{{"m", a.arity()}, {"terms", terms}};
}

ChowElement chow_from_json(const Json& j) {
    ChowElement a(j.at("m").get<int>());
    for (const auto& t : j.at("terms")) {
        SubsetIndex J(a.arity(), t.at("J").get<std::vector<int>>());
        a.add_term(ChowLabel{J.mask(), t.at("k").get<int>()},
                   parse_rational(t.at("c").get<std::string>()));
    }
    return a;
}

Json to_json(const Stability& theta) {
    Json weights = Json::array();
    for (const Rational& w : theta.weights()) weights.push_back(rational_str(w));
    return Json{{"m", theta.arity()}, {"weights", weights}};
}

Stability stability_from_json(const Json& j) {
    std::vector<Rational> weights;
    for (const auto& w : j.at("weights")) weights.push_back(parse_rational(w.get<std::string>()));
    if (j.contains("m") && j.at("m").get<int>() != static_cast<int>(weights.size()))
        throw std::invalid_argument("stability arity does not match its weight count");
    return Stability(std::move(weights));
}

Json to_json(const LinearForm& a) {
    Json out = Json::array();
    for (const Rational& c : a.coeffs) out.push_back(rational_str(c));
    return out;
}

Json to_json(const RelationPair& pair) {
    return Json{{"I", pair.I.members()}, {"R", to_json(pair.R)}, {"S", to_json(pair.S)}};
}

Json to_json(const ForbiddenFamily& fam) {
    Json all = Json::array(), minimal = Json::array();
    for (Mask I : fam.all) all.push_back(mask_members(I));
    for (Mask I : fam.minimal) minimal.push_back(mask_members(I));
    return Json{{"m", fam.m}, {"all", all}, {"minimal", minimal}};
}

Json to_json(const Certificate& cert) {
    Json cases = Json::array();
    for (const CertificateCase& c : cert.cases)
        cases.push_back(Json{{"support", c.support}, {"status", c.status}, {"reason", c.reason}});
    return Json{{"cases", cases}, {"all_closed", cert.all_closed}, {"verdict", cert.conclusion}};
}

Json to_json(const DistinguishReport& rep) {
    Json out{{"schema", kSchemaTag},
             {"n", rep.n},
             {"m", rep.m},
             {"seed", rep.seed},
             {"verdict", rep.verdict},
             {"distinguished", rep.distinguished},
             {"notes", rep.notes}};
    if (rep.poincare_computed) {
        out["poincare"] = Json{{"plus", rep.poincare_plus},
                               {"minus", rep.poincare_minus},
                               {"equal", rep.poincare_equal}};
    }
    if (rep.nilpotent_section) {
        out["square_zero"] = Json{{"witness", to_json(rep.witness)},
                                  {"witness_square_zero_in_minus", rep.witness_zero_in_minus},
                                  {"witness_square_nonzero_in_plus", rep.witness_nonzero_in_plus},
                                  {"certificate_plus", to_json(rep.certificate)}};
    }
    if (rep.hyperplane_section) {
        Json scan{{"power", rep.power},
                  {"minus_e1_vanishes", rep.minus_e1_vanishes},
                  {"plus_e1_vanishes", rep.plus_e1_vanishes},
                  {"patterns_tested", rep.minus_scan.tested},
                  {"minus_has_vanishing_hyperplane", rep.minus_scan.found},
                  {"plus_has_vanishing_hyperplane", rep.plus_scan.found}};
        if (rep.minus_scan.found) scan["minus_witness"] = to_json(rep.minus_scan.witness);
        if (rep.plus_scan.found) scan["plus_witness"] = to_json(rep.plus_scan.witness);
        out["hyperplane"] = scan;
    }
    out["sampling"] = Json{{"count", rep.minus_sampling.total},
                           {"minus_membership_failures", rep.minus_sampling.failures},
                           {"plus_genericity_failures", rep.plus_sampling.failures}};
    return out;
}

Json to_json(const SignedScaledPermutation& g) {
    std::vector<int> sigma;
    for (int v : g.sigma) sigma.push_back(v + 1);
    return Json{{"d", rational_str(g.d)}, {"sigma", sigma}, {"signs", g.signs}};
}

CandidateMatrix matrix_from_json(const Json& j) {
    std::vector<std::vector<Rational>> entries;
    for (const auto& row : j) {
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back(parse_rational(x.get<std::string>()));
        entries.push_back(std::move(r));
    }
    return CandidateMatrix(std::move(entries));
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace chowcfg
