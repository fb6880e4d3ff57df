#pragma once

#include "cfbfhs/correlation.hpp"
#include "cfbfhs/error.hpp"
#include "cfbfhs/fhma_sim.hpp"
#include "cfbfhs/lfsr.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cfbfhs::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
    std::uint32_t p = 2;
    /// Unset means: degree of `poly` when given, else 14.
    std::optional<std::size_t> l;
    std::size_t b = 4;
    std::size_t q = 5;
    std::optional<std::uint64_t> tau;
    std::optional<Polynomial> poly;
    std::filesystem::path out = ".";
    OutputFormat format = OutputFormat::csv;
};

struct FairnessSweep {
    std::uint32_t p = 2;
    /// Empty means: degree of `poly` when given, else {14}.
    std::vector<std::size_t> degrees;
    std::vector<std::size_t> tuple_widths{4};
    std::optional<std::uint64_t> tau;
    std::optional<Polynomial> poly;
    std::filesystem::path out = ".";
    OutputFormat format = OutputFormat::csv;
};

enum ExitCode : int {
    exit_ok = 0,
    exit_config = 2,
    exit_domain = 3,
    exit_io = 4,
};

int exit_code_for(ErrorKind kind) noexcept;

/// Entry point shared by the executable and the tests; argv[0] is ignored.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Overlays the keys present in a RunConfig-shaped JSON object.
void apply_config_json(const nlohmann::json& doc, RunConfig& cfg);
void apply_config_json(const nlohmann::json& doc, FairnessSweep& sweep);
nlohmann::json load_config_file(const std::filesystem::path& path);

void cmd_generate(const RunConfig& cfg, std::ostream& out);
void cmd_analyze(const std::vector<std::filesystem::path>& inputs, const std::filesystem::path& out_dir,
                 bool write_profiles, std::ostream& out);
void cmd_fairness(const FairnessSweep& sweep, std::ostream& out);
void cmd_simulate(const std::filesystem::path& scenario, const std::optional<std::filesystem::path>& out_file,
                  std::ostream& out);

nlohmann::json report_json(const AnalysisReport& report, const SequenceSet& set);
nlohmann::json collision_json(const CollisionReport& report);

} // namespace cfbfhs::cli
