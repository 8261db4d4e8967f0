#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "p1p1/exact/prime_field.hpp"
#include "p1p1/fat/conditions.hpp"

namespace p1p1::cli {

enum class OutputFormat { json, csv, text };

std::string to_string(OutputFormat f);
OutputFormat parse_output(const std::string& text);

// Settings shared by every subcommand. Precedence, lowest first: built-in
// defaults, the P1P1_FIELD environment variable, a key=value config file,
// command-line flags.
struct RunConfig {
    exact::FieldSpec field = exact::FieldSpec::rationals();
    std::uint64_t seed = 1;
    OutputFormat output = OutputFormat::json;
    fat::Bidegree window{8, 8};
    unsigned threads = 1;
};

inline constexpr const char* field_env_var = "P1P1_FIELD";

// Keys: field, seed, output, window_i, window_j, threads. Blank lines and
// lines starting with '#' are skipped. Throws InvalidInput on unknown keys.
std::map<std::string, std::string> read_config_file(const std::string& path);
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

RunConfig defaults_from_environment();

} // namespace p1p1::cli
