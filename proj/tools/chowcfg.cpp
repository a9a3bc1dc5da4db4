// chowcfg: exact Chow rings of point-configuration moduli on the projective
// line, with verification commands for the tautological presentation, the
// automorphism classification, and the two small-desingularization rings.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "chowcfg/json_io.hpp"
#include "chowcfg/verify.hpp"

namespace {

using namespace chowcfg;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

std::optional<Rational> parse_epsilon(const std::string& eps) {
    if (eps.empty()) return std::nullopt;
    return parse_rational(eps);
}

Stability resolve_theta(const std::string& theta, const std::string& weights, int m,
                        const std::string& eps) {
    if (!weights.empty()) return Stability(parse_rational_list(weights));
    if (theta.empty()) throw UsageError("need --theta or --weights");
    if (theta == "canonical") {
        if (m <= 0) throw UsageError("--theta canonical needs --m");
        return canonical(m);
    }
    if (theta == "theta-plus" || theta == "theta-minus") {
        if (m <= 0) throw UsageError("--theta " + theta + " needs --m");
        if (m % 2 != 0) throw UsageError("--theta " + theta + " needs even m");
        return theta_pm(m / 2, theta == "theta-plus" ? Sign::plus : Sign::minus,
                        parse_epsilon(eps));
    }
    return stability_from_json(load_json_file(theta));
}

void emit(const Json& j) { std::cout << render_json(j); }

int run_stability(const std::string& theta, const std::string& weights, int m,
                  const std::string& eps, const std::string& output) {
    Stability st = resolve_theta(theta, weights, m, eps);
    ForbiddenFamily fam = forbidden(st);
    bool nontrivial = is_nontrivial(st);
    bool coprime = is_coprime(st);
    bool deforms_canonical = is_deformation(canonical(st.arity()), st);
    if (output == "json") {
        Json j{{"schema", kSchemaTag},
               {"command", "stability"},
               {"stability", to_json(st)},
               {"nontrivial", nontrivial},
               {"coprime", coprime},
               {"deformation_of_canonical", deforms_canonical},
               {"forbidden", to_json(fam)}};
        emit(j);
    } else {
        std::cout << "m = " << st.arity() << ", weights:";
        for (const Rational& w : st.weights()) std::cout << " " << rational_str(w);
        std::cout << "\nnontrivial (stable locus non-empty): " << (nontrivial ? "yes" : "no")
                  << "\ncoprime (no walls): " << (coprime ? "yes" : "no")
                  << "\ndeformation of the canonical stability: "
                  << (deforms_canonical ? "yes" : "no") << "\nforbidden subsets: "
                  << fam.all.size() << " (" << fam.minimal.size() << " minimal)\n";
        std::cout << "minimal family:";
        for (Mask I : fam.minimal) {
            std::cout << " {";
            bool first = true;
            for (int i : mask_members(I)) {
                std::cout << (first ? "" : ",") << i;
                first = false;
            }
            std::cout << "}";
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int run_relations(int m, const std::string& subset, const std::string& output) {
    SubsetIndex I(m, parse_int_list(subset));
    ChowElement R = relation_r(m, I), S = relation_s(m, I);
    if (output == "json") {
        emit(Json{{"schema", kSchemaTag},
                  {"command", "relations"},
                  {"m", m},
                  {"I", I.members()},
                  {"R", to_json(R)},
                  {"S", to_json(S)}});
    } else {
        std::cout << "R_I = " << R.str() << "\nS_I = " << S.str() << "\n";
    }
    return kExitOk;
}

int run_betti(int m, const std::string& theta, const std::string& weights, const std::string& eps,
              int max_degree, const std::string& family, const std::string& output) {
    Stability st = resolve_theta(theta, weights, m, eps);
    if (max_degree < 0) max_degree = st.arity();
    GeneratorFamily fam =
        family == "full" ? GeneratorFamily::full : GeneratorFamily::minimal;
    QuotientRing q = QuotientRing::build(st, max_degree, fam);
    std::vector<long> dims = q.poincare();
    if (output == "json") {
        Json gens = Json::array();
        for (const RelationPair& p : q.generators()) gens.push_back(to_json(p));
        emit(Json{{"schema", kSchemaTag},
                  {"command", "betti"},
                  {"stability", to_json(st)},
                  {"max_degree", max_degree},
                  {"dimensions", dims},
                  {"generators", gens}});
    } else if (output == "csv") {
        std::cout << "degree,dimension\n";
        for (size_t d = 0; d < dims.size(); ++d) std::cout << d << "," << dims[d] << "\n";
    } else {
        std::cout << "quotient dimensions by degree:";
        for (long d : dims) std::cout << " " << d;
        std::cout << "\ngenerators: " << q.generators().size() << " relation pairs\n";
    }
    return kExitOk;
}

int run_verify(const std::string& suite, int m, const std::string& output) {
    std::vector<SuiteResult> results;
    if (suite == "all") {
        results = verify_all();
    } else if (suite == "lemma-rs") {
        results.push_back(m > 0 ? verify_lemma_rs(m, m) : verify_lemma_rs());
    } else if (suite == "recursions") {
        results.push_back(m > 0 ? verify_recursions(m, m) : verify_recursions());
    } else if (suite == "stability") {
        results.push_back(verify_stability());
    } else if (suite == "hilbert") {
        results.push_back(verify_hilbert());
    } else if (suite == "quotient") {
        results.push_back(verify_quotient());
    } else if (suite == "minimality") {
        results.push_back(verify_minimality());
    } else if (suite == "nonisom") {
        results.push_back(verify_nonisom());
    } else if (suite == "bring") {
        results.push_back(verify_bring());
    } else if (suite == "aut") {
        results.push_back(verify_aut());
    } else if (suite == "determinism") {
        results.push_back(verify_determinism());
    } else {
        throw UsageError("unknown verify suite: " + suite);
    }

    bool all_pass = true;
    if (output == "json") {
        Json suites = Json::array();
        for (const SuiteResult& r : results) {
            Json checks = Json::array();
            for (const Check& c : r.checks)
                checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            suites.push_back(Json{{"suite", r.suite}, {"pass", r.pass}, {"checks", checks}});
            all_pass = all_pass && r.pass;
        }
        emit(Json{{"schema", kSchemaTag}, {"command", "verify"}, {"pass", all_pass},
                  {"suites", suites}});
    } else {
        for (const SuiteResult& r : results) {
            for (const Check& c : r.checks) {
                std::cout << (c.pass ? "  ok  " : " FAIL ") << c.name;
                if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
                if (c.micros >= 0) std::cout << "  " << c.micros << " us";
                std::cout << "\n";
            }
            std::cout << (r.pass ? "PASS" : "FAIL") << " suite " << r.suite << " ("
                      << r.checks.size() << " checks, " << r.seconds << " s)\n";
            all_pass = all_pass && r.pass;
        }
        if (results.size() > 1)
            std::cout << (all_pass ? "PASS" : "FAIL") << " all suites\n";
    }
    return all_pass ? kExitOk : kExitVerificationFailure;
}

int run_nilpotent(const std::string& theta, const std::string& weights, int m,
                  const std::string& eps, const std::string& witness,
                  const std::string& output) {
    Stability st = resolve_theta(theta, weights, m, eps);
    LinearForm a{parse_rational_list(witness)};
    if (a.arity() != st.arity()) throw UsageError("witness length must match m");
    QuotientRing q = QuotientRing::build(st, 2);
    ChowElement square = square_in_quotient(q, a);
    if (output == "json") {
        emit(Json{{"schema", kSchemaTag},
                  {"command", "nilpotent"},
                  {"stability", to_json(st)},
                  {"witness", to_json(a)},
                  {"square_normal_form", to_json(square)},
                  {"is_zero", square.is_zero()}});
    } else {
        std::cout << "square normal form: " << square.str() << "\n"
                  << (square.is_zero() ? "witness squares to zero in the quotient\n"
                                       : "witness square is nonzero in the quotient\n");
    }
    return kExitOk;
}

int run_distinguish(int n, std::uint64_t seed, const std::string& output) {
    DistinguishReport rep = distinguish(n, seed);
    if (output == "json") {
        emit(to_json(rep));
    } else {
        std::cout << "n = " << rep.n << " (m = " << rep.m << "), seed " << rep.seed << "\n";
        if (rep.poincare_computed) {
            std::cout << "poincare plus: ";
            for (long d : rep.poincare_plus) std::cout << d << " ";
            std::cout << "\npoincare minus:";
            for (long d : rep.poincare_minus) std::cout << " " << d;
            std::cout << "\nequal: " << (rep.poincare_equal ? "yes" : "no") << "\n";
        }
        if (rep.nilpotent_section) {
            std::cout << "witness (0,1,1,1,1,0): zero on the minus side: "
                      << (rep.witness_zero_in_minus ? "yes" : "no")
                      << ", nonzero on the plus side: "
                      << (rep.witness_nonzero_in_plus ? "yes" : "no") << "\n"
                      << "plus-side certificate: " << rep.certificate.conclusion << "\n";
        }
        if (rep.hyperplane_section) {
            std::cout << "e1-hyperplane power test: minus "
                      << (rep.minus_e1_vanishes ? "vanishes" : "survives") << ", plus "
                      << (rep.plus_e1_vanishes ? "vanishes" : "survives") << "\n"
                      << "sign-pattern scan (" << rep.minus_scan.tested
                      << " patterns): minus has a vanishing hyperplane: "
                      << (rep.minus_scan.found ? "yes" : "no")
                      << ", plus: " << (rep.plus_scan.found ? "yes" : "no") << "\n";
        }
        std::cout << "sampling: " << rep.minus_sampling.failures << " membership failures, "
                  << rep.plus_sampling.failures << " genericity failures out of "
                  << rep.minus_sampling.total << "\n";
        for (const std::string& note : rep.notes) std::cout << "note: " << note << "\n";
        std::cout << "verdict: " << rep.verdict << "\n";
    }
    return kExitOk;
}

int run_aut_check(const std::string& matrix_path, const std::string& output) {
    CandidateMatrix A = matrix_from_json(load_json_file(matrix_path));
    bool conditions = false;
    std::optional<SignedScaledPermutation> dec;
    std::string error;
    try {
        conditions = check_conditions(A);
        if (A.arity() > 2) dec = decompose(A);
    } catch (const SingularMatrixError& e) {
        error = e.what();
    }
    if (output == "json") {
        Json j{{"schema", kSchemaTag},
               {"command", "aut-check"},
               {"m", A.arity()},
               {"conditions_hold", conditions},
               {"verdict", conditions ? "automorphism" : "not an automorphism"}};
        if (!error.empty()) j["error"] = error;
        j["factorization"] = dec ? to_json(*dec) : Json(nullptr);
        emit(j);
    } else {
        if (!error.empty()) {
            std::cout << "error: " << error << "\n";
            return kExitVerificationFailure;
        }
        std::cout << (conditions ? "automorphism" : "not an automorphism") << "\n";
        if (dec) {
            std::cout << "d = " << rational_str(dec->d) << ", sigma =";
            for (int v : dec->sigma) std::cout << " " << v + 1;
            std::cout << ", signs =";
            for (int s : dec->signs) std::cout << " " << (s > 0 ? "+1" : "-1");
            std::cout << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chow rings of point configurations on the projective line"};
    app.require_subcommand(1);

    std::string theta, weights, eps, output = "text", subset, witness, matrix_path, suite;
    int m = -1, n = 3, max_degree = -1;
    std::uint64_t seed = 0;
    std::string family = "minimal";

    auto add_theta_opts = [&](CLI::App* cmd) {
        cmd->add_option("--theta", theta, "preset (canonical, theta-plus, theta-minus) or JSON file");
        cmd->add_option("--weights", weights, "inline weights p/q,p/q,...");
        cmd->add_option("--epsilon", eps, "deformation parameter for the presets, as p/q");
        cmd->add_option("--m", m, "number of marked points");
    };

    CLI::App* c_stability = app.add_subcommand("stability", "analyze a stability condition");
    add_theta_opts(c_stability);
    c_stability->add_option("--output", output, "json|text");

    CLI::App* c_relations = app.add_subcommand("relations", "relation pair of a subset");
    c_relations->add_option("--m", m, "number of marked points")->required();
    c_relations->add_option("--subset", subset, "comma-separated indices")->required();
    c_relations->add_option("--output", output, "json|text");

    CLI::App* c_betti = app.add_subcommand("betti", "graded dimensions of the quotient ring");
    add_theta_opts(c_betti);
    c_betti->add_option("--max-degree", max_degree, "cache depth (default m)");
    c_betti->add_option("--family", family, "minimal|full generator family");
    c_betti->add_option("--output", output, "json|csv|text");

    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", suite,
                         "lemma-rs|recursions|stability|hilbert|quotient|minimality|"
                         "nonisom|bring|aut|determinism|all")
        ->required();
    c_verify->add_option("--m", m, "restrict lemma-rs/recursions to one arity");
    c_verify->add_option("--output", output, "json|text");

    CLI::App* c_nilpotent = app.add_subcommand("nilpotent", "square a degree-1 element in a quotient");
    add_theta_opts(c_nilpotent);
    c_nilpotent->add_option("--witness", witness, "coefficients a1,...,am")->required();
    c_nilpotent->add_option("--output", output, "json|text");

    CLI::App* c_distinguish = app.add_subcommand("distinguish", "compare the two small resolutions");
    c_distinguish->add_option("--n", n, "half the number of points")->required();
    c_distinguish->add_option("--seed", seed, "sampling seed");
    c_distinguish->add_option("--output", output, "json|text");

    CLI::App* c_aut = app.add_subcommand("aut", "automorphism tools");
    c_aut->require_subcommand(1);
    CLI::App* c_aut_check = c_aut->add_subcommand("check", "check a candidate matrix");
    c_aut_check->add_option("--matrix", matrix_path, "JSON m x m matrix of p/q strings")->required();
    c_aut_check->add_option("--output", output, "json|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_stability->parsed()) return run_stability(theta, weights, m, eps, output);
        if (c_relations->parsed()) return run_relations(m, subset, output);
        if (c_betti->parsed()) return run_betti(m, theta, weights, eps, max_degree, family, output);
        if (c_verify->parsed()) return run_verify(suite, m, output);
        if (c_nilpotent->parsed()) return run_nilpotent(theta, weights, m, eps, witness, output);
        if (c_distinguish->parsed()) return run_distinguish(n, seed, output);
        if (c_aut->parsed() && c_aut_check->parsed()) return run_aut_check(matrix_path, output);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}
