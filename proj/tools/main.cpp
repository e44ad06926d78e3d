#include <iostream>

#include "cli.hpp"
#include "gperm/errors.hpp"

using namespace gperm;

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

int emit(const cli::Output& out, const cli::Options& opt) {
    bool ok = true;
    for (const auto& [name, pass] : out.checks) ok &= pass;
    if (opt.format == "csv") {
        if (!out.table) {
            std::cerr << "error: --format csv is only available for tabular output\n";
            return 2;
        }
        for (const auto& row : *out.table) {
            for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? "," : "") << csv_field(row[k]);
            std::cout << '\n';
        }
        for (const auto& [name, pass] : out.checks) std::cerr << (pass ? "PASS " : "FAIL ") << name << '\n';
    } else {
        auto body = out.body;
        if (opt.verify) {
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& [name, pass] : out.checks) checks.push_back({{"name", name}, {"pass", pass}});
            body["checks"] = checks;
            body["verified"] = ok;
        }
        std::cout << body.dump() << '\n';
    }
    return ok ? 0 : 5;
}

int fail(const char* kind, const std::exception& e, int code) {
    std::cerr << nlohmann::json{{"error", kind}, {"message", e.what()}}.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Volumes, lattice points and combinatorics of generalized permutohedra", "gperm"};
    cli::Context ctx;
    app.add_flag("--verify", ctx.opt.verify, "Run every applicable cross-check and report each one");
    app.add_option("--format", ctx.opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", ctx.opt.seed, "Seed for the generic-coefficient test in mixed volume checks");
    app.add_flag("--force", ctx.opt.force, "Lift the default resource guards");
    app.require_subcommand(1);

    cli::register_permutohedron(app, ctx);
    cli::register_genperm(app, ctx);
    cli::register_minkowski(app, ctx);
    cli::register_rootpoly(app, ctx);
    cli::register_eulerian(app, ctx);
    cli::register_weyl(app, ctx);
    cli::register_brion(app, ctx);
    cli::register_tableaux(app, ctx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (!ctx.action) {
        std::cerr << app.help();
        return 2;
    }

    try {
        return emit(ctx.action(), ctx.opt);
    } catch (const cli::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        return fail("domain", e, 3);
    } catch (const ResourceLimitError& e) {
        return fail("resource-limit", e, 4);
    } catch (const ConsistencyError& e) {
        return fail("consistency", e, 5);
    }
}
