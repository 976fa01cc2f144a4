#pragma once

#include <string>

#include <json.hpp>

namespace npc {

using json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail };

// Uniform result of every verifier: {"check","verdict","witness","stats"}.
struct CheckReport {
    std::string check;
    Verdict verdict = Verdict::Pass;
    json witness;  // null when passing
    json stats = json::object();

    bool passed() const { return verdict == Verdict::Pass; }

    static CheckReport pass(std::string name, json stats = json::object());
    static CheckReport fail(std::string name, json witness, json stats = json::object());
};

json to_json(const CheckReport& report);
CheckReport report_from_json(const json& j);

}  // namespace npc
