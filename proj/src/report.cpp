#include "npc/report.hpp"

#include "npc/error.hpp"

namespace npc {

CheckReport CheckReport::pass(std::string name, json stats) {
    CheckReport r;
    r.check = std::move(name);
    r.verdict = Verdict::Pass;
    r.stats = std::move(stats);
    return r;
}

CheckReport CheckReport::fail(std::string name, json witness, json stats) {
    CheckReport r;
    r.check = std::move(name);
    r.verdict = Verdict::Fail;
    r.witness = std::move(witness);
    r.stats = std::move(stats);
    return r;
}

json to_json(const CheckReport& report) {
    json j;
    j["check"] = report.check;
    j["verdict"] = report.passed() ? "pass" : "fail";
    j["witness"] = report.witness;
    j["stats"] = report.stats;
    return j;
}

CheckReport report_from_json(const json& j) {
    if (!j.is_object() || !j.contains("check") || !j.contains("verdict")) {
        throw Error(ErrorKind::ParseError, "report object needs 'check' and 'verdict'");
    }
    CheckReport r;
    r.check = j.at("check").get<std::string>();
    const auto v = j.at("verdict").get<std::string>();
    if (v != "pass" && v != "fail") {
        throw Error(ErrorKind::ParseError, "verdict must be 'pass' or 'fail', got '" + v + "'");
    }
    r.verdict = v == "pass" ? Verdict::Pass : Verdict::Fail;
    r.witness = j.value("witness", json());
    r.stats = j.value("stats", json::object());
    return r;
}

}  // namespace npc
