#include "p1p1/cli/run_config.hpp"

#include <cstdlib>
#include <fstream>

#include "p1p1/error.hpp"

namespace p1p1::cli {

std::string to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
    }
    return "json";
}

OutputFormat parse_output(const std::string& text)
{
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "text") return OutputFormat::text;
    throw InvalidInput("unknown output format '" + text + "' (json, csv, text)");
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& value, long lo)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(value, &used);
        if (used != value.size() || v < lo) throw InvalidInput("");
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("setting '" + key + "' needs an integer >= " + std::to_string(lo) + ", got '" + value + "'");
    }
}

} // namespace

std::map<std::string, std::string> read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidInput(path + ":" + std::to_string(n) + ": expected key=value");
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value)
{
    if (key == "field")
        config.field = exact::FieldSpec::parse(value);
    else if (key == "seed") {
        try {
            std::size_t used = 0;
            config.seed = std::stoull(value, &used);
            if (used != value.size() || value[0] == '-') throw InvalidInput("");
        } catch (const std::exception&) {
            throw InvalidInput("seed must be a non-negative 64-bit integer, got '" + value + "'");
        }
    } else if (key == "output")
        config.output = parse_output(value);
    else if (key == "window_i")
        config.window.i = static_cast<int>(parse_long(key, value, 0));
    else if (key == "window_j")
        config.window.j = static_cast<int>(parse_long(key, value, 0));
    else if (key == "threads")
        config.threads = static_cast<unsigned>(parse_long(key, value, 1));
    else
        throw InvalidInput("unknown setting '" + key + "'");
}

RunConfig defaults_from_environment()
{
    RunConfig config;
    if (const char* f = std::getenv(field_env_var); f && *f) config.field = exact::FieldSpec::parse(f);
    return config;
}

} // namespace p1p1::cli
