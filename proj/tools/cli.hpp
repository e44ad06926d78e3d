#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gperm/rational.hpp"

namespace gperm::cli {

/// Missing or conflicting arguments; reported with exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool verify = false;
    std::string format = "json";
    std::uint64_t seed = 0x5eed;
    bool force = false;
};

/// Rows for --format csv; the first row is the header.
using Table = std::vector<std::vector<std::string>>;

struct Output {
    nlohmann::json body = nlohmann::json::object();
    std::vector<std::pair<std::string, bool>> checks;
    std::optional<Table> table;

    void check(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
};

struct Context {
    Options opt;
    std::function<Output()> action;
};

/// Creates a subcommand that also accepts the global flags after its own arguments.
CLI::App* add_command(CLI::App& parent, const std::string& name, const std::string& help);

std::vector<Rational> parse_rationals(const std::string& s);
std::vector<long> parse_longs(const std::string& s);
std::vector<int> parse_ints(const std::string& s);
nlohmann::json read_json(const std::string& path);

/// Joins integers with commas, e.g. for table keys.
std::string join(const std::vector<long>& v);
std::string join(const std::vector<int>& v);

/// Runs `fn` and records its verdict; a ConsistencyError counts as a failure.
void run_check(Output& out, const std::string& name, const std::function<bool()>& fn);

void register_permutohedron(CLI::App& app, Context& ctx);
void register_genperm(CLI::App& app, Context& ctx);
void register_minkowski(CLI::App& app, Context& ctx);
void register_rootpoly(CLI::App& app, Context& ctx);
void register_eulerian(CLI::App& app, Context& ctx);
void register_weyl(CLI::App& app, Context& ctx);
void register_brion(CLI::App& app, Context& ctx);
void register_tableaux(CLI::App& app, Context& ctx);

}  // namespace gperm::cli
