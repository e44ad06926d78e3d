#include "cli.hpp"
#include "gperm/errors.hpp"
#include "gperm/eulerian.hpp"

namespace gperm::cli {

namespace {

Output value_cmd(int n, const std::string& c_text, const Options& opt) {
    Output out;
    auto parts = parse_ints(c_text);
    require_domain(n == 0 || static_cast<int>(parts.size()) == n, "--c must have n entries");
    Composition c(parts.begin(), parts.end());
    auto v = mixed_eulerian(c, opt.force);
    out.body["value"] = v.value.get_str();
    if (!opt.verify) return out;
    out.body["by_volume"] = v.by_volume.get_str();
    out.body["by_trees"] = v.by_trees.get_str();
    if (v.by_draconian) out.body["by_draconian"] = v.by_draconian->get_str();
    out.check("volume_route", v.by_volume == v.value);
    out.check("tree_route", v.by_trees == v.value);
    if (v.by_draconian) out.check("draconian_route", *v.by_draconian == v.value);
    run_check(out, "cyclic_class_sum", [&] {
        auto cls = cyclic_class_check(c, opt.force);
        out.body["cyclic_class_size"] = cls.members.size();
        return cls.sum == factorial(static_cast<unsigned>(c.size()));
    });
    return out;
}

Output table_cmd(int n, const Options& opt) {
    Output out;
    auto t = mixed_eulerian_table(n, opt.force);
    out.body = t.to_json();
    Table rows{{"c", "A"}};
    for (const auto& [c, a] : t.entries) rows.push_back({join(std::vector<int>(c.begin(), c.end())), a.get_str()});
    out.table = std::move(rows);
    if (opt.verify)
        for (const auto& [name, ok] : mixed_eulerian_properties(t)) out.check(name, ok);
    return out;
}

}  // namespace

void register_eulerian(CLI::App& app, Context& ctx) {
    static int n = 0;
    static std::string c;
    static bool table = false;

    auto* cmd = add_command(app, "mixed-eulerian", "Mixed Eulerian numbers A_c");
    cmd->add_option("--n", n, "Number of parts of c");
    auto* copt = cmd->add_option("--c", c, "Composition c_1,...,c_n with sum n");
    auto* topt = cmd->add_flag("--table", table, "Print the whole table for n");
    copt->excludes(topt);
    cmd->callback([&ctx] {
        ctx.action = [&ctx] {
            if (table) {
                if (n < 1) throw UsageError("--table needs --n");
                return table_cmd(n, ctx.opt);
            }
            if (c.empty()) throw UsageError("give --c or --table");
            return value_cmd(n, c, ctx.opt);
        };
    });
}

}  // namespace gperm::cli
