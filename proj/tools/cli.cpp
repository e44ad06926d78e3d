#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "gperm/errors.hpp"

namespace gperm::cli {

CLI::App* add_command(CLI::App& parent, const std::string& name, const std::string& help) {
    auto* sub = parent.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
}

namespace {

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& item : split(s)) out.push_back(Rational::parse(item));
    return out;
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    for (const auto& item : split(s)) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw DomainError("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (long v : parse_longs(s)) out.push_back(static_cast<int>(v));
    return out;
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(path + ": " + e.what());
    }
}

std::string join(const std::vector<long>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

std::string join(const std::vector<int>& v) { return join(std::vector<long>(v.begin(), v.end())); }

void run_check(Output& out, const std::string& name, const std::function<bool()>& fn) {
    try {
        out.check(name, fn());
    } catch (const ConsistencyError&) {
        out.check(name, false);
    }
}

}  // namespace gperm::cli
