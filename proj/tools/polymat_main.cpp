// polymat: decide structural properties of monomial ideals and verify the
// classification theorems they satisfy at desk scale.
//
// Subcommands: parse, decompose, localize, check, homology, verify.
// Exit codes: 0 verdict computed, 1 usage or parse error, 2 counterexample
// found by verify, 3 work budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "polymat/polymat.hpp"

using json = nlohmann::ordered_json;
using namespace polymat;

namespace {

constexpr int kSchemaVersion = 1;

std::string read_ideal_argument(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(arg);
    if (file.good()) {
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }
    return arg;
}

json generators_json(const MonomialIdeal& ideal) {
    json out = json::array();
    for (const Monomial& g : ideal.gens()) out.push_back(render(g, ideal.vars()));
    return out;
}

json names_json(const VariableSet& vars, const std::vector<int>& indices) {
    json out = json::array();
    for (int i : indices) out.push_back(vars.name(i));
    return out;
}

json prime_json(const MonomialPrime& p) { return names_json(p.vars(), p.members()); }

std::vector<int> parse_variable_list(const VariableSet& vars, const std::string& list) {
    std::vector<int> out;
    std::stringstream stream(list);
    std::string name;
    while (std::getline(stream, name, ',')) {
        auto idx = vars.index(name);
        if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
        out.push_back(*idx);
    }
    return out;
}

FieldSpec parse_field(const std::string& text) {
    if (text == "q" || text == "Q") return FieldSpec::rationals();
    if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F'))
        return FieldSpec::prime(std::stoi(text.substr(1)));
    throw std::invalid_argument("field must be q or f<p>");
}

void emit(const json& doc, bool asJson) {
    if (asJson) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // Plain text mirrors the JSON structure.
    std::function<void(const json&, int)> walk = [&](const json& node, int indent) {
        std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
        if (node.is_object()) {
            for (const auto& [key, value] : node.items()) {
                if (value.is_object() || (value.is_array() && !value.empty() &&
                                          (value.front().is_object() || value.front().is_array()))) {
                    std::cout << pad << key << ":\n";
                    walk(value, indent + 1);
                } else {
                    std::cout << pad << key << ": " << (value.is_string()
                        ? value.get<std::string>() : value.dump()) << "\n";
                }
            }
        } else if (node.is_array()) {
            for (const auto& value : node) {
                if (value.is_object() || value.is_array()) {
                    std::cout << pad << "-\n";
                    walk(value, indent + 1);
                } else {
                    std::cout << pad << "- " << (value.is_string()
                        ? value.get<std::string>() : value.dump()) << "\n";
                }
            }
        } else {
            std::cout << pad << node.dump() << "\n";
        }
    };
    walk(doc, 0);
}

json component_json(const MonomialIdeal& component, const MonomialPrime& prime, bool minimal) {
    json entry;
    // Prime power form when the component is one; irreducible form when all
    // generators are pure powers; otherwise the raw generator list.
    int v = prime.containment_exponent(component);
    if (component == prime.power_ideal(v)) {
        entry["prime"] = prime_json(prime);
        entry["exponent"] = v;
    } else {
        bool irreducible = true;
        for (const Monomial& g : component.gens())
            if (!g.is_pure_power()) irreducible = false;
        if (irreducible) {
            json corner = json::object();
            for (const Monomial& g : component.gens()) {
                int var = 0;
                g.is_pure_power(&var);
                corner[component.vars().name(var)] = g.degree_in(var);
            }
            entry["irreducible"] = corner;
        } else {
            entry["generators"] = generators_json(component);
        }
    }
    entry["minimal"] = minimal;
    return entry;
}

int run_parse(const std::string& text, bool asJson) {
    ParseResult parsed = parse_ideal_text(text);
    if (parsed.implied_vars)
        std::cerr << "note: variables implied as x1..x" << parsed.ideal.vars().size() << "\n";
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["vars"] = parsed.ideal.vars().names();
    doc["normalized_generators"] = generators_json(parsed.ideal);
    doc["rendered"] = render(parsed.ideal);
    emit(doc, asJson);
    return 0;
}

int run_decompose(const std::string& text, bool irreducible, bool hv, bool asJson) {
    MonomialIdeal ideal = parse_ideal(text);
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["ideal"] = render(ideal);
    if (hv) {
        HVPresentation presentation = hv_presentation(ideal);
        json powers = json::array();
        for (const PrimePower& pp : presentation.prime_powers) {
            json entry;
            entry["prime"] = prime_json(pp.prime);
            entry["exponent"] = pp.exponent;
            powers.push_back(entry);
        }
        doc["prime_powers"] = powers;
        doc["socle_exponent"] = presentation.socle_exponent;
    } else if (irreducible) {
        json comps = json::array();
        for (const IrreducibleComponent& c : irreducible_decomposition(ideal)) {
            json corner = json::object();
            for (int i : c.corner().support())
                corner[ideal.vars().name(i)] = c.corner().degree_in(i);
            comps.push_back({{"irreducible", corner}});
        }
        doc["components"] = comps;
    } else {
        Decomposition dec = primary_decomposition(ideal);
        json comps = json::array();
        for (std::size_t i = 0; i < dec.components.size(); ++i)
            comps.push_back(component_json(dec.components[i], dec.primes[i], dec.minimal[i]));
        doc["components"] = comps;
        json ass = json::array();
        for (const MonomialPrime& p : dec.primes) ass.push_back(prime_json(p));
        doc["associated_primes"] = ass;
    }
    emit(doc, asJson);
    return 0;
}

int run_localize(const std::string& text, const std::string& kill, const std::string& at,
                 bool asJson) {
    MonomialIdeal ideal = parse_ideal(text);
    std::vector<int> killed;
    if (!kill.empty()) {
        killed = parse_variable_list(ideal.vars(), kill);
    } else {
        std::vector<int> keep = parse_variable_list(ideal.vars(), at);
        std::vector<bool> keepMask(static_cast<std::size_t>(ideal.vars().size()), false);
        for (int i : keep) keepMask[static_cast<std::size_t>(i)] = true;
        for (int i = 0; i < ideal.vars().size(); ++i)
            if (!keepMask[static_cast<std::size_t>(i)]) killed.push_back(i);
    }
    MonomialIdeal localized = localization_killing(ideal, killed);
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["ideal"] = render(ideal);
    doc["killed"] = names_json(ideal.vars(), killed);
    doc["localization"] = render(localized);
    doc["unit_ideal"] = localized.is_unit();
    emit(doc, asJson);
    return 0;
}

json check_polymatroidal(const MonomialIdeal& ideal) {
    PolymatroidalVerdict verdict = is_polymatroidal(ideal);
    json out;
    out["verdict"] = verdict.value;
    if (verdict.witness) {
        out["witness"] = {{"u", render(verdict.witness->u, ideal.vars())},
                          {"v", render(verdict.witness->v, ideal.vars())},
                          {"variable", ideal.vars().name(verdict.witness->var)}};
    }
    return out;
}

json check_cm_shape(const MonomialIdeal& ideal) {
    CmShape shape = recognize_cm_shape(ideal);
    json out;
    switch (shape.kind) {
        case CmShapeKind::Principal: out["shape"] = "principal"; break;
        case CmShapeKind::Veronese: out["shape"] = "veronese"; break;
        case CmShapeKind::SquarefreeVeronese: out["shape"] = "squarefree-veronese"; break;
        case CmShapeKind::None: out["shape"] = "none"; break;
    }
    if (shape.kind != CmShapeKind::None) {
        out["degree"] = shape.degree;
        out["support"] = names_json(ideal.vars(), shape.support);
    }
    return out;
}

json check_codim1(const MonomialIdeal& ideal, bool certificate) {
    Codim1Verdict verdict = is_connected_codim_one(ideal);
    json out;
    out["verdict"] = verdict.connected;
    switch (verdict.reason) {
        case Codim1Reason::Connected: out["reason"] = "connected"; break;
        case Codim1Reason::Disconnected: out["reason"] = "disconnected"; break;
        case Codim1Reason::NotEquidimensional: out["reason"] = "not-equidimensional"; break;
    }
    if (certificate && verdict.reason != Codim1Reason::NotEquidimensional) {
        json nodes = json::array();
        for (const MonomialPrime& p : verdict.graph.nodes) nodes.push_back(prime_json(p));
        out["certificate"]["minimal_primes"] = nodes;
        if (verdict.connected) {
            json edges = json::array();
            for (auto [a, b] : verdict.spanning_edges) edges.push_back({a, b});
            out["certificate"]["spanning_edges"] = edges;
        } else {
            json reached = json::array(), unreached = json::array();
            for (std::size_t i = 0; i < verdict.reached.size(); ++i)
                (verdict.reached[i] ? reached : unreached).push_back(static_cast<int>(i));
            out["certificate"]["bipartition"] = {{"reached", reached}, {"unreached", unreached}};
        }
    }
    return out;
}

json check_gcm(const MonomialIdeal& ideal) {
    GcmVerdict verdict = is_generalized_cm(ideal);
    json out;
    out["verdict"] = verdict.value;
    out["equidimensional"] = verdict.equidimensional;
    if (verdict.witness) {
        out["witness_prime"] = prime_json(*verdict.witness);
        out["witness_localization"] = render(monomial_localization(ideal, *verdict.witness));
    }
    return out;
}

json check_theorem_th(const MonomialIdeal& ideal) {
    auto canonical = canonical_theorem_th_input(ideal);
    json out;
    if (!canonical) {
        out["error"] = "ideal is not of the form sat(I) cap m^s";
        return out;
    }
    TheoremThReport report = theorem_th_classify(canonical->first, canonical->second);
    out["j"] = render(canonical->first);
    out["s"] = canonical->second;
    json clauses = json::array();
    if (report.clause_a) clauses.push_back("a");
    if (report.clause_b) clauses.push_back("b");
    if (report.clause_c) clauses.push_back("c");
    out["clauses"] = clauses;
    out["polymatroidal"] = report.polymatroidal;
    out["gcm"] = report.polymatroidal ? json(report.gcm) : json(false);
    out["consistent"] = report.consistent();
    return out;
}

int run_check(const std::string& text, const std::set<std::string>& checks, bool certificate,
              const FieldSpec& field, bool asJson) {
    MonomialIdeal ideal = parse_ideal(text);
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["ideal"] = render(ideal);
    doc["normalized_generators"] = generators_json(ideal);
    json results;
    auto guarded = [&](const std::string& name, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        try {
            results[name] = fn();
        } catch (const std::invalid_argument& e) {
            results[name] = {{"error", e.what()}};
        }
        auto stop = std::chrono::steady_clock::now();
        doc["timings_ms"][name] =
            std::chrono::duration<double, std::milli>(stop - start).count();
    };
    for (const std::string& name : checks) {
        if (name == "polymatroidal")
            guarded(name, [&] { return check_polymatroidal(ideal); });
        else if (name == "matroidal")
            guarded(name, [&] { return json{{"verdict", is_matroidal(ideal)}}; });
        else if (name == "cm-shape")
            guarded(name, [&] { return check_cm_shape(ideal); });
        else if (name == "unmixed")
            guarded(name, [&] { return json{{"verdict", is_unmixed(ideal)}}; });
        else if (name == "equidimensional")
            guarded(name, [&] { return json{{"verdict", is_equidimensional(ideal)}}; });
        else if (name == "codim1")
            guarded(name, [&] { return check_codim1(ideal, certificate); });
        else if (name == "cm")
            guarded(name, [&] { return json{{"verdict", is_cm_polymatroidal(ideal)}}; });
        else if (name == "gcm")
            guarded(name, [&] { return check_gcm(ideal); });
        else if (name == "theorem-th")
            guarded(name, [&] { return check_theorem_th(ideal); });
        else if (name == "cm-oracle")
            guarded(name, [&] {
                return json{{"verdict", is_cm_reisner(ideal, field)},
                            {"field", field.rational ? "q" : "f" + std::to_string(field.p)}};
            });
    }
    doc["checks"] = results;
    emit(doc, asJson);
    return 0;
}

int run_homology(const std::string& text, const FieldSpec& field, bool asJson) {
    MonomialIdeal ideal = parse_ideal(text);
    Polarization pol = polarize(ideal);
    SimplicialComplex complex = stanley_reisner_complex(pol.ideal);
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["ideal"] = render(ideal);
    doc["polarized"] = !pol.identity;
    if (!pol.identity) doc["polarization"] = render(pol.ideal);
    doc["vertices"] = complex.vertices().names();
    json facets = json::array();
    for (const auto& facet : complex.facets()) facets.push_back(names_json(complex.vertices(), facet));
    doc["facets"] = facets;
    std::vector<int> ranks = reduced_homology_ranks(complex, field);
    json betti = json::object();
    for (std::size_t k = 0; k < ranks.size(); ++k)
        betti[std::to_string(static_cast<int>(k) - 1)] = ranks[k];
    doc["reduced_betti"] = betti;
    doc["field"] = field.rational ? "q" : "f" + std::to_string(field.p);
    doc["cm_reisner"] = is_cm_reisner(ideal, field);
    emit(doc, asJson);
    return 0;
}

int run_verify(const std::string& suite, const SuiteParams& params, bool asJson) {
    SuiteReport report = run_suite(suite, params);
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["suite"] = report.name;
    doc["population"] = report.population;
    doc["counts"] = report.counts;
    doc["counterexamples"] = report.counterexamples;
    if (!report.warnings.empty()) doc["warnings"] = report.warnings;
    doc["elapsed_seconds"] = report.elapsed_seconds;
    doc["budget"] = {{"limit", report.budget_limit},
                     {"used", report.budget_used},
                     {"exceeded", report.budget_exceeded}};
    doc["passed"] = report.passed();
    emit(doc, asJson);
    if (!asJson)
        std::cout << "counterexamples: " << report.counterexamples.size() << "\n";
    if (!report.counterexamples.empty()) return 2;
    if (report.budget_exceeded) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural checks for monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();
    bool asJson = false;
    app.add_flag("--json", asJson, "emit JSON instead of plain text");

    std::string idealArg;
    std::string fieldArg = "q";

    auto* parseCmd = app.add_subcommand("parse", "parse and normalize an ideal");
    parseCmd->add_option("ideal", idealArg, "ideal text, file, or - for stdin")->required();

    auto* decomposeCmd = app.add_subcommand("decompose", "primary decomposition");
    bool irreducibleFlag = false, hvFlag = false;
    decomposeCmd->add_option("ideal", idealArg)->required();
    decomposeCmd->add_flag("--irreducible", irreducibleFlag, "irreducible components instead");
    decomposeCmd->add_flag("--hv", hvFlag, "prime-power presentation (polymatroidal only)");

    auto* localizeCmd = app.add_subcommand("localize", "monomial localization");
    std::string killArg, atArg;
    localizeCmd->add_option("ideal", idealArg)->required();
    auto* killOpt = localizeCmd->add_option("--kill", killArg, "variables to substitute by 1");
    auto* atOpt = localizeCmd->add_option("--at", atArg, "variables of the prime to keep");
    killOpt->excludes(atOpt);

    auto* checkCmd = app.add_subcommand("check", "structural verdicts");
    checkCmd->add_option("ideal", idealArg)->required();
    bool all = false, certificate = false;
    std::set<std::string> checks;
    checkCmd->add_flag("--all", all, "run every check");
    checkCmd->add_flag("--certificate", certificate, "include the codim-1 certificate");
    checkCmd->add_option("--field", fieldArg, "oracle field: q or f<p>");
    for (const char* name : {"polymatroidal", "matroidal", "cm-shape", "unmixed",
                             "equidimensional", "codim1", "cm", "gcm", "theorem-th",
                             "cm-oracle"}) {
        checkCmd->add_flag_callback(std::string("--") + name,
                                    [&checks, name] { checks.insert(name); });
    }

    auto* homologyCmd = app.add_subcommand("homology", "Stanley-Reisner homology");
    homologyCmd->add_option("ideal", idealArg)->required();
    homologyCmd->add_option("--field", fieldArg, "q or f<p>");

    auto* verifyCmd = app.add_subcommand("verify", "run a theorem suite");
    std::string suiteArg;
    SuiteParams params;
    verifyCmd->add_option("--suite", suiteArg, "suite name")->required();
    verifyCmd->add_option("--n", params.max_n, "max variable count");
    verifyCmd->add_option("--d", params.max_d, "max degree");
    std::uint64_t budgetArg = 0, casesArg = 0;
    verifyCmd->add_option("--budget", budgetArg, "work budget override");
    verifyCmd->add_option("--cases", casesArg, "randomized case count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (parseCmd->parsed()) return run_parse(read_ideal_argument(idealArg), asJson);
        if (decomposeCmd->parsed())
            return run_decompose(read_ideal_argument(idealArg), irreducibleFlag, hvFlag, asJson);
        if (localizeCmd->parsed()) {
            if (killArg.empty() && atArg.empty())
                throw std::invalid_argument("localize requires --kill or --at");
            return run_localize(read_ideal_argument(idealArg), killArg, atArg, asJson);
        }
        if (checkCmd->parsed()) {
            if (all)
                checks = {"polymatroidal", "matroidal", "cm-shape", "unmixed",
                          "equidimensional", "codim1", "cm", "gcm", "theorem-th", "cm-oracle"};
            if (checks.empty()) throw std::invalid_argument("no checks requested");
            return run_check(read_ideal_argument(idealArg), checks, certificate,
                             parse_field(fieldArg), asJson);
        }
        if (homologyCmd->parsed())
            return run_homology(read_ideal_argument(idealArg), parse_field(fieldArg), asJson);
        if (verifyCmd->parsed()) {
            params.budget = budgetArg;
            params.cases = casesArg;
            return run_verify(suiteArg, params, asJson);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
