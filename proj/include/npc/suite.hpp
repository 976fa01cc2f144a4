#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "npc/report.hpp"

namespace npc {

inline constexpr std::string_view kSuiteFormat = "npc-suite-v1";
inline constexpr std::string_view kSuiteReportFormat = "npc-suite-report-v1";

std::string_view version();

struct SuiteCheck {
    std::string name;
    std::filesystem::path target;  // resolved against the config directory
    json params = json::object();
};

struct SuiteConfig {
    std::vector<SuiteCheck> checks;
    int threads = 0;  // 0: NPC_THREADS or machine parallelism
    json caps = json::object();
    std::optional<std::filesystem::path> output;
};

// Names accepted in "checks[].name".
const std::vector<std::string>& suite_check_names();

// Throws ConfigError for unknown check names, missing target files and schema problems.
SuiteConfig parse_suite_config(const json& j, const std::filesystem::path& base_dir = ".");
SuiteConfig load_suite_config(const std::filesystem::path& path);

struct SuiteEntry {
    std::string name;
    std::string target;  // as written in the config
    CheckReport report;
    bool exhaustive = true;
};

struct SuiteReport {
    std::vector<SuiteEntry> entries;
    double wall_time_s = 0;

    bool passed() const;
    bool exhaustive() const;
};

// Per-check errors become failing entries whose witness names the error class.
SuiteReport run_suite(const SuiteConfig& config);

// "wall_time_s" is the last field; everything else is deterministic.
json to_json(const SuiteReport& r);

}  // namespace npc
