#include "cli.hpp"
#include "gperm/brion.hpp"
#include "gperm/errors.hpp"
#include "gperm/minkowski.hpp"

namespace gperm::cli {

namespace {

struct RepArgs {
    std::string rep;
    std::string x;
};

void add_rep_args(CLI::App* cmd, RepArgs& a) {
    auto* rep = cmd->add_option("--rep", a.rep, "Polytope JSON {\"vertices\": [..], \"cones\": [..]}");
    auto* x = cmd->add_option("--x", a.x, "Permutohedron P_n(x) instead of a file");
    rep->excludes(x);
}

SimplePolytopeRep load_rep(const RepArgs& a) {
    if (!a.rep.empty()) return SimplePolytopeRep::from_json(read_json(a.rep));
    if (a.x.empty()) throw UsageError("give --rep or --x");
    return permutohedron_cone_rep(parse_rationals(a.x));
}

// Second form (1, -m, m^2, ...) that avoids every generator.
std::optional<IntVector> other_form(const SimplePolytopeRep& p) {
    for (long m = 5; m < 60; ++m) {
        IntVector h(p.dim);
        long power = 1;
        for (auto& c : h) {
            c = power;
            power *= -m;
        }
        bool ok = true;
        for (const auto& cone : p.cones)
            for (const auto& g : cone) {
                long s = 0;
                for (int k = 0; k < p.dim; ++k) s += h[k] * g[k];
                ok &= s != 0;
            }
        if (ok) return h;
    }
    return std::nullopt;
}

Output count_cmd(const RepArgs& a, const Options& opt) {
    Output out;
    auto p = load_rep(a);
    Integer c = lattice_count_brion(p);
    out.body["count"] = c.get_str();
    if (!opt.verify) return out;
    if (auto h = other_form(p)) run_check(out, "second_generic_form", [&] { return lattice_count_brion(p, *h) == c; });
    if (!a.x.empty()) {
        IntVector xi;
        for (const auto& v : parse_rationals(a.x)) {
            require_domain(v.is_integer(), "lattice counts need integer coordinates");
            xi.push_back(v.num().get_si());
        }
        run_check(out, "enumeration", [&] { return Integer(static_cast<unsigned long>(lattice_count_brute(xi))) == c; });
    }
    return out;
}

Output volume_cmd(const RepArgs& a, const Options& opt) {
    Output out;
    auto p = load_rep(a);
    Rational v = volume_brion(p);
    out.body["volume"] = v.str();
    if (!opt.verify) return out;
    if (auto h = other_form(p)) run_check(out, "second_generic_form", [&] { return volume_brion(p, *h) == v; });
    if (!a.x.empty())
        run_check(out, "symmetrization", [&] { return volume_numeric_symmetrization(parse_rationals(a.x)) == v; });
    return out;
}

struct ToddArgs {
    std::string family;
    std::string kind;
    int n = 0;
    std::string weights;
};

Output todd_cmd(const ToddArgs& a, const Options& opt) {
    Output out;
    SubsetFamily f;
    if (!a.family.empty()) {
        f = SubsetFamily::from_json(read_json(a.family));
    } else if (a.kind == "all") {
        f = SubsetFamily::all_subsets(a.n);
    } else if (a.kind == "intervals") {
        f = SubsetFamily::intervals(a.n);
    } else {
        throw UsageError("give --family or --kind");
    }
    if (!a.weights.empty()) {
        auto w = parse_rationals(a.weights);
        require_domain(static_cast<int>(w.size()) == f.m(), "--weights needs one weight per subset");
        f.weights = w;
    }
    Integer c = todd_count_genperm(f);
    out.body["count"] = c.get_str();
    if (!opt.verify) return out;
    run_check(out, "raising_powers", [&] { return lattice_points(f, false, opt.force) == c; });
    run_check(out, "enumeration", [&] { return lattice_points_enumerated(f, false, opt.force) == c; });
    run_check(out, "brion", [&] {
        auto b = BuildingSet::all_subsets(f.n);
        SubsetWeights y;
        for (Mask s : b.members()) y[s] = Rational(0);
        for (const auto& [s, w] : weights_by_subset(f)) y[s] = w;
        return lattice_count_brion(genperm_cone_rep(b, y)) == c;
    });
    return out;
}

}  // namespace

void register_brion(CLI::App& app, Context& ctx) {
    static RepArgs count_args, volume_args, alias_args;
    static ToddArgs todd_args;

    auto* b = add_command(app, "brion", "Vertex-cone formulas for simple lattice polytopes");
    b->require_subcommand(1);

    auto* count = add_command(*b, "count", "Integer points from the vertex cones");
    add_rep_args(count, count_args);
    count->callback([&ctx] { ctx.action = [&ctx] { return count_cmd(count_args, ctx.opt); }; });

    auto* vol = add_command(*b, "volume", "Volume from the vertex cones");
    add_rep_args(vol, volume_args);
    vol->callback([&ctx] { ctx.action = [&ctx] { return volume_cmd(volume_args, ctx.opt); }; });

    auto* todd = add_command(*b, "todd", "Integer points of P_G(y), n = 3 or 4, via the Todd operator");
    auto* fam = todd->add_option("--family", todd_args.family, "Family JSON");
    auto* kind = todd->add_option("--kind", todd_args.kind, "Named family")->check(CLI::IsMember({"all", "intervals"}));
    fam->excludes(kind);
    todd->add_option("--n", todd_args.n, "Ground set size");
    todd->add_option("--weights", todd_args.weights, "Comma-separated integer weights");
    todd->callback([&ctx] { ctx.action = [&ctx] { return todd_cmd(todd_args, ctx.opt); }; });

    auto* alias = add_command(app, "brion-count", "Same as 'brion count'");
    add_rep_args(alias, alias_args);
    alias->callback([&ctx] { ctx.action = [&ctx] { return count_cmd(alias_args, ctx.opt); }; });
}

}  // namespace gperm::cli
