#include "cli.hpp"
#include "gperm/errors.hpp"
#include "gperm/minkowski.hpp"

namespace gperm::cli {

namespace {

struct FamilyArgs {
    std::string file;
    std::string kind;
    int n = 0;
    int k = 0;
    std::string weights;
};

void add_family_args(CLI::App* cmd, FamilyArgs& a) {
    auto* file = cmd->add_option("--family", a.file, "Family JSON {\"n\":..,\"subsets\":[..],\"weights\":[..]}");
    auto* kind = cmd->add_option("--kind", a.kind, "Named family")
                     ->check(CLI::IsMember({"all", "intervals", "hall", "pitman-stanley", "uniform", "complete-bipartite"}));
    file->excludes(kind);
    cmd->add_option("--n", a.n, "Ground set size");
    cmd->add_option("--k", a.k, "Subset size for uniform, number of copies for complete-bipartite");
    cmd->add_option("--weights", a.weights, "Comma-separated weights overriding the family's");
}

SubsetFamily load_family(const FamilyArgs& a) {
    SubsetFamily f;
    if (!a.file.empty()) {
        f = SubsetFamily::from_json(read_json(a.file));
    } else {
        if (a.n < 1) throw UsageError("--n must be positive");
        if (a.kind == "all") f = SubsetFamily::all_subsets(a.n);
        else if (a.kind == "intervals") f = SubsetFamily::intervals(a.n);
        else if (a.kind == "hall") f = SubsetFamily::hall(a.n);
        else if (a.kind == "pitman-stanley") f = SubsetFamily::pitman_stanley(a.n);
        else if (a.kind == "uniform") f = SubsetFamily::uniform(a.n, a.k);
        else if (a.kind == "complete-bipartite") f = SubsetFamily::complete_bipartite(a.k, a.n);
        else throw UsageError("give --family or --kind");
    }
    if (!a.weights.empty()) {
        auto w = parse_rationals(a.weights);
        require_domain(static_cast<int>(w.size()) == f.m(), "--weights needs one weight per subset");
        f.weights = w;
    }
    return f;
}

Output volume_cmd(const SubsetFamily& f, const Options& opt) {
    Output out;
    Rational v = volume(f, opt.force);
    out.body["volume"] = v.str();
    if (!opt.verify) return out;
    run_check(out, "volume_polynomial", [&] { return volume_polynomial(f, opt.force).evaluate(f.weights) == v; });
    run_check(out, "vertex_sum", [&] { return volume_vertex_sum(weights_by_subset(f), f.n) == v; });
    if (f.n <= 4)
        run_check(out, "descent_sum", [&] { return volume_descent_sum(weights_by_subset(f), f.n, opt.force) == v; });
    return out;
}

Output lattice_cmd(const SubsetFamily& f, bool trimmed, const Options& opt) {
    Output out;
    Integer c = lattice_points(f, trimmed, opt.force);
    out.body["trimmed"] = trimmed;
    out.body["count"] = c.get_str();
    if (opt.verify)
        run_check(out, "enumeration", [&] { return lattice_points_enumerated(f, trimmed, opt.force) == c; });
    return out;
}

Output draconian_cmd(const SubsetFamily& f, const Options& opt) {
    Output out;
    auto seqs = g_draconian_sequences(f, opt.force);
    out.body["count"] = seqs.size();
    out.body["sequences"] = seqs;
    Table t;
    std::vector<std::string> header;
    for (int i = 1; i <= f.m(); ++i) header.push_back("a" + std::to_string(i));
    t.push_back(header);
    for (const auto& a : seqs) {
        std::vector<std::string> row;
        for (int x : a) row.push_back(std::to_string(x));
        t.push_back(row);
    }
    out.table = std::move(t);
    if (opt.verify) {
        bool ok = true;
        for (const auto& a : seqs) ok &= is_g_draconian(f, a);
        out.check("membership", ok);
    }
    return out;
}

Output duality_cmd(const SubsetFamily& f, const Options& opt) {
    Output out;
    auto [g, gstar] = duality_check(f, opt.force);
    out.body["count_G"] = g.get_str();
    out.body["count_G_star"] = gstar.get_str();
    if (opt.verify) {
        SubsetFamily unit = f;
        unit.weights.assign(f.m(), Rational(1));
        run_check(out, "enumeration_G", [&] { return lattice_points_enumerated(unit, true, opt.force) == g; });
        run_check(out, "enumeration_G_star",
                  [&] { return lattice_points_enumerated(f.mirror(), true, opt.force) == gstar; });
    }
    return out;
}

Output mixed_volume_cmd(const std::string& sets_text, int n, const Options& opt) {
    Output out;
    std::vector<Mask> sets;
    std::size_t start = 0;
    while (start <= sets_text.size()) {
        auto end = sets_text.find(';', start);
        if (end == std::string::npos) end = sets_text.size();
        Mask s = 0;
        for (int e : parse_ints(sets_text.substr(start, end - start))) {
            require_domain(e >= 1 && e <= n, "subset element out of range");
            s |= Mask(1) << (e - 1);
        }
        require_domain(s != 0, "empty subset in --sets");
        sets.push_back(s);
        start = end + 1;
    }
    Rational v = mixed_volume_simplices(sets, n, opt.verify, opt.seed);
    out.body["mixed_volume"] = v.str();
    if (opt.verify) {
        auto r = dragon_marriage_report(sets, n);
        bool generic = generic_minors_nonzero(sets, n, opt.seed);
        out.check("condition_forms_agree", r.union_bound == r.sdr_avoiding_each && r.union_bound == r.spanning_tree);
        out.check("generic_minors", generic == r.union_bound);
    }
    return out;
}

}  // namespace

void register_minkowski(CLI::App& app, Context& ctx) {
    static FamilyArgs vol_args, lat_args, dra_args, dual_args;
    static bool trimmed = false;
    static std::string mv_sets;
    static int mv_n = 0;

    auto* m = add_command(app, "minkowski", "Minkowski sums of coordinate simplices");
    m->require_subcommand(1);

    auto* vol = add_command(*m, "volume", "Volume of P_G(y) from draconian sequences");
    add_family_args(vol, vol_args);
    vol->callback([&ctx] { ctx.action = [&ctx] { return volume_cmd(load_family(vol_args), ctx.opt); }; });

    auto* lat = add_command(*m, "lattice", "Integer points of P_G(y) (or P_G^-(y) with --trimmed)");
    add_family_args(lat, lat_args);
    lat->add_flag("--trimmed", trimmed, "Count the trimmed polytope");
    lat->callback([&ctx] { ctx.action = [&ctx] { return lattice_cmd(load_family(lat_args), trimmed, ctx.opt); }; });

    auto* dra = add_command(*m, "draconian", "G-draconian sequences");
    add_family_args(dra, dra_args);
    dra->callback([&ctx] { ctx.action = [&ctx] { return draconian_cmd(load_family(dra_args), ctx.opt); }; });

    auto* dual = add_command(*m, "duality", "Trimmed counts of G and its mirror G*");
    add_family_args(dual, dual_args);
    dual->callback([&ctx] { ctx.action = [&ctx] { return duality_cmd(load_family(dual_args), ctx.opt); }; });

    auto* mv = add_command(*m, "mixed-volume", "Mixed volume of n-1 coordinate simplices");
    mv->add_option("--sets", mv_sets, "Subsets separated by ';', e.g. 1,2;2,3")->required();
    mv->add_option("--n", mv_n, "Ground set size")->required();
    mv->callback([&ctx] { ctx.action = [&ctx] { return mixed_volume_cmd(mv_sets, mv_n, ctx.opt); }; });
}

}  // namespace gperm::cli
