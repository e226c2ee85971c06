#include "logops/report_json.hpp"

#include "logops/errors.hpp"

namespace logops {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json pairs_to_json(const std::vector<std::pair<PauliVector, PauliVector>>& pairs) {
    ordered_json arr = ordered_json::array();
    for (const auto& [a, b] : pairs) {
        arr.push_back(ordered_json::array({a.to_string(), b.to_string()}));
    }
    return arr;
}

ordered_json gens_to_json(const std::vector<PauliVector>& gens) {
    ordered_json arr = ordered_json::array();
    for (const PauliVector& g : gens) arr.push_back(g.to_string());
    return arr;
}

}  // namespace

ordered_json report_to_json(const CodeReport& report) {
    ordered_json j;
    j["schema"] = kReportSchemaVersion;
    j["kind"] = report.kind;
    j["entanglement_assisted"] = report.entanglement_assisted;
    j["n"] = report.n;
    j["k"] = report.k;
    j["c"] = report.c;
    j["i"] = report.i;
    j["m"] = report.m;
    if (report.l) j["l"] = *report.l;
    if (report.p) j["p"] = *report.p;
    j["logical_pairs"] = pairs_to_json(report.logical_pairs);
    j["isotropic_generators"] = gens_to_json(report.isotropic_gens);
    ordered_json checks = ordered_json::array();
    for (const FormulaCheck& c : report.checks) {
        checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"agree", c.agree}});
    }
    j["formula_checks"] = checks;
    j["all_checks_pass"] = report.all_checks_pass();
    return j;
}

CodeReport report_from_json(const json& j) {
    if (!j.contains("schema") || j.at("schema").get<int>() != kReportSchemaVersion) {
        throw ParseError("unsupported report schema");
    }
    CodeReport report;
    report.kind = j.at("kind").get<std::string>();
    report.entanglement_assisted = j.at("entanglement_assisted").get<bool>();
    report.n = j.at("n").get<std::size_t>();
    report.k = j.at("k").get<long long>();
    report.c = j.at("c").get<std::size_t>();
    report.i = j.at("i").get<std::size_t>();
    report.m = j.at("m").get<std::size_t>();
    if (j.contains("l")) report.l = j.at("l").get<std::size_t>();
    if (j.contains("p")) report.p = j.at("p").get<std::size_t>();
    for (const auto& pair : j.at("logical_pairs")) {
        report.logical_pairs.emplace_back(parse_pauli(pair.at(0).get<std::string>()),
                                          parse_pauli(pair.at(1).get<std::string>()));
    }
    for (const auto& gen : j.at("isotropic_generators")) {
        report.isotropic_gens.push_back(parse_pauli(gen.get<std::string>()));
    }
    for (const auto& check : j.at("formula_checks")) {
        report.checks.push_back({check.at("name").get<std::string>(),
                                 check.at("lhs").get<long long>(),
                                 check.at("rhs").get<long long>(),
                                 check.at("agree").get<bool>()});
    }
    return report;
}

ordered_json decomposition_to_json(const SymplecticDecomposition& d) {
    ordered_json j;
    j["schema"] = kReportSchemaVersion;
    j["n"] = d.n;
    j["input_size"] = d.input_size();
    j["pairs"] = pairs_to_json(d.pairs);
    j["isotropic"] = gens_to_json(d.isotropic);
    ordered_json log = ordered_json::array();
    for (const SgsopStep& step : d.log) {
        ordered_json s;
        switch (step.kind) {
            case SgsopStepKind::SetAside:
                s["kind"] = "set-aside";
                s["pos"] = step.pos;
                break;
            case SgsopStepKind::PairFound:
                s["kind"] = "pair-found";
                s["pos"] = step.pos;
                s["partner"] = step.partner;
                break;
            case SgsopStepKind::RowUpdate:
                s["kind"] = "row-update";
                s["pos"] = step.pos;
                s["pivot_a"] = step.pivot_a;
                s["pivot_b"] = step.pivot_b;
                s["exp_a"] = step.exp_a;
                s["exp_b"] = step.exp_b;
                break;
        }
        log.push_back(std::move(s));
    }
    j["log"] = log;
    return j;
}

ordered_json verification_to_json(const oracle::VerificationReport& report) {
    ordered_json j;
    j["schema"] = kReportSchemaVersion;
    j["seed"] = report.seed;
    ordered_json checks = ordered_json::array();
    for (const oracle::VerificationCheck& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
    }
    j["checks"] = checks;
    j["all_pass"] = report.all_pass();
    return j;
}

}  // namespace logops
