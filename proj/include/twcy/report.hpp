#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twcy/parser.hpp"

namespace twcy {

inline constexpr const char* kSchemaVersion = "1";

struct RunOptions {
    int cutoff = 6;
    int dim = 1;
    std::optional<int> shift;
    // Debug: drop one summand of ω before the closure checks.
    bool perturb_omega = false;
    std::size_t bimodule_samples = 24;
};

struct RunResult {
    nlohmann::ordered_json report;
    bool ok = true;
    std::vector<std::string> failed;
};

const std::vector<std::string>& commands();

// Throws InputError for an unknown command or an input the pipeline rejects.
RunResult run_command(const std::string& command, const PresentationFile& pf, const RunOptions& opt);

std::string render_json(const nlohmann::ordered_json& report);
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace twcy
