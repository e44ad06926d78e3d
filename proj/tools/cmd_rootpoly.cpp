#include "cli.hpp"
#include "gperm/errors.hpp"
#include "gperm/rootpoly.hpp"

namespace gperm::cli {

namespace {

struct GraphArgs {
    std::string file;
    std::string complete;
};

void add_graph_args(CLI::App* cmd, GraphArgs& a) {
    auto* file = cmd->add_option("--graph", a.file, "Bipartite graph JSON {\"m\":..,\"n\":..,\"edges\":[[i,j],..]}");
    auto* kmn = cmd->add_option("--complete", a.complete, "Complete bipartite graph m,n");
    file->excludes(kmn);
}

BipartiteGraph load_graph(const GraphArgs& a) {
    if (!a.file.empty()) return BipartiteGraph::from_json(read_json(a.file));
    auto mn = parse_ints(a.complete);
    if (mn.size() != 2) throw UsageError("give --graph or --complete m,n");
    return BipartiteGraph::complete(mn[0], mn[1]);
}

Output triangulate_cmd(const BipartiteGraph& g, const Options& opt) {
    Output out;
    auto t = triangulate(g);
    out.body = t.to_json();
    out.body["count"] = t.trees.size();
    Table rows{{"tree", "edges", "LD", "RD"}};
    for (std::size_t k = 0; k < t.trees.size(); ++k) {
        std::string edges;
        for (auto [i, j] : t.trees[k].edges)
            edges += (edges.empty() ? "" : " ") + std::to_string(i) + "-" + std::to_string(j);
        rows.push_back({std::to_string(k + 1), edges, join(t.trees[k].left_degrees()), join(t.trees[k].right_degrees())});
    }
    out.table = std::move(rows);
    if (opt.verify) {
        run_check(out, "triangulation", [&] { return is_triangulation(g, t); });
        run_check(out, "count_matches_volume", [&] {
            return volume_root_polytope(g) * Rational(factorial(static_cast<unsigned>(g.m + g.n - 2))) ==
                   Rational(static_cast<long>(t.trees.size()));
        });
    }
    return out;
}

Output volume_cmd(const BipartiteGraph& g, const Options& opt) {
    Output out;
    Rational v = volume_root_polytope(g);
    out.body["volume"] = v.str();
    if (opt.verify)
        run_check(out, "triangulation_size", [&] {
            return Rational(static_cast<long>(triangulate(g).trees.size())) ==
                   v * Rational(factorial(static_cast<unsigned>(g.m + g.n - 2)));
        });
    return out;
}

Output bijection_cmd(const BipartiteGraph& g, const Options& opt) {
    Output out;
    auto t = triangulate(g);
    auto map = rd_ld_bijection(t);
    nlohmann::json list = nlohmann::json::array();
    Table rows{{"RD", "LD"}};
    for (const auto& [rd, ld] : map) {
        list.push_back({{"RD", rd}, {"LD", ld}});
        rows.push_back({join(rd), join(ld)});
    }
    out.body["count"] = map.size();
    out.body["pairs"] = list;
    out.table = std::move(rows);
    if (opt.verify) {
        out.check("one_pair_per_simplex", map.size() == t.trees.size());
        run_check(out, "triangulation", [&] { return is_triangulation(g, t); });
    }
    return out;
}

}  // namespace

void register_rootpoly(CLI::App& app, Context& ctx) {
    static GraphArgs tri_args, vol_args, bij_args;

    auto* r = add_command(app, "rootpoly", "Root polytopes of bipartite graphs");
    r->require_subcommand(1);

    auto* tri = add_command(*r, "triangulate", "Triangulation of Q_G by compatible spanning trees");
    add_graph_args(tri, tri_args);
    tri->callback([&ctx] { ctx.action = [&ctx] { return triangulate_cmd(load_graph(tri_args), ctx.opt); }; });

    auto* vol = add_command(*r, "volume", "Volume of the root polytope Q_G");
    add_graph_args(vol, vol_args);
    vol->callback([&ctx] { ctx.action = [&ctx] { return volume_cmd(load_graph(vol_args), ctx.opt); }; });

    auto* bij = add_command(*r, "bijection", "Right-degree to left-degree vectors over a triangulation");
    add_graph_args(bij, bij_args);
    bij->callback([&ctx] { ctx.action = [&ctx] { return bijection_cmd(load_graph(bij_args), ctx.opt); }; });
}

}  // namespace gperm::cli
