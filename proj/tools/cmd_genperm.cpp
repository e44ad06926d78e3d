#include <set>

#include "cli.hpp"
#include "gperm/errors.hpp"
#include "gperm/genperm.hpp"

namespace gperm::cli {

namespace {

struct BuildingArgs {
    std::string file;
    std::string kind;
    std::string dynkin;
    int n = 0;
};

void add_building_args(CLI::App* cmd, BuildingArgs& a) {
    auto* file = cmd->add_option("--building", a.file, "Building set JSON {\"n\":..,\"members\":[[..],..]}");
    auto* kind = cmd->add_option("--kind", a.kind, "Named building set")
                     ->check(CLI::IsMember({"all", "intervals", "cyclic", "pitman-stanley", "path", "cycle",
                                            "complete"}));
    auto* dyn = cmd->add_option("--dynkin", a.dynkin, "Graphical building set of a Dynkin diagram")
                    ->check(CLI::IsMember({"A", "affineA", "D", "E"}));
    cmd->add_option("--n", a.n, "Size of the ground set (or Dynkin rank)");
    file->excludes(kind)->excludes(dyn);
    kind->excludes(dyn);
}

DynkinKind dynkin_kind(const std::string& s) {
    if (s == "A") return DynkinKind::A;
    if (s == "affineA") return DynkinKind::AffineA;
    if (s == "D") return DynkinKind::D;
    return DynkinKind::E;
}

BuildingSet load_building(const BuildingArgs& a) {
    if (!a.file.empty()) return BuildingSet::from_json(read_json(a.file));
    if (a.n < 1) throw UsageError("--n must be positive");
    if (!a.dynkin.empty()) return BuildingSet::graphical(dynkin_graph(dynkin_kind(a.dynkin), a.n));
    if (a.kind == "all") return BuildingSet::all_subsets(a.n);
    if (a.kind == "intervals") return BuildingSet::intervals(a.n);
    if (a.kind == "cyclic") return BuildingSet::cyclic(a.n);
    if (a.kind == "pitman-stanley") return BuildingSet::pitman_stanley(a.n);
    if (a.kind == "path") return BuildingSet::graphical(Graph::path(a.n));
    if (a.kind == "cycle") return BuildingSet::graphical(Graph::cycle(a.n));
    if (a.kind == "complete") return BuildingSet::graphical(Graph::complete(a.n));
    throw UsageError("give --building, --kind or --dynkin");
}

nlohmann::json subset_json(Mask s) { return elements_of(s); }

std::string subset_text(Mask s) {
    std::string out = "{";
    auto e = elements_of(s);
    for (std::size_t k = 0; k < e.size(); ++k) out += (k ? " " : "") + std::to_string(e[k]);
    return out + "}";
}

Output nested(const BuildingSet& b) {
    Output out;
    auto sets = nested_sets(b);
    nlohmann::json list = nlohmann::json::array();
    Table t{{"size", "members"}};
    for (const auto& ns : sets) {
        nlohmann::json one = nlohmann::json::array();
        std::string text;
        for (Mask s : ns) {
            one.push_back(subset_json(s));
            text += (text.empty() ? "" : " ") + subset_text(s);
        }
        list.push_back(one);
        t.push_back({std::to_string(ns.size()), text});
    }
    out.body["count"] = sets.size();
    out.body["nested_sets"] = list;
    out.table = std::move(t);
    return out;
}

Output f_poly(const BuildingSet& b, const Options& opt) {
    Output out;
    auto f = f_polynomial(b);
    out.body["f"] = f.to_json();
    out.body["text"] = f.str();
    Table t{{"degree", "coefficient"}};
    for (int d = 0; d <= f.degree(); ++d) t.push_back({std::to_string(d), f.coefficient(RationalPolynomial::Exponent{d}).str()});
    out.table = std::move(t);
    if (opt.verify) {
        run_check(out, "enumeration_vs_recurrence",
                  [&] { return f_polynomial_enumerated(b) == f_polynomial_recurrence(b); });
        run_check(out, "constant_term_is_catalan",
                  [&] { return f.constant_term() == Rational(generalized_catalan(b)); });
    }
    return out;
}

Output catalan_cmd(const BuildingSet& b, const BuildingArgs& a, const Options& opt) {
    Output out;
    Integer c = generalized_catalan(b);
    out.body["catalan"] = c.get_str();
    if (!opt.verify) return out;
    run_check(out, "b_forest_count", [&] { return Integer(static_cast<unsigned long>(b_forests(b).size())) == c; });
    run_check(out, "f_polynomial_at_zero", [&] { return f_polynomial(b).constant_term() == Rational(c); });
    const int n = b.n();
    if (!a.dynkin.empty())
        run_check(out, "closed_form", [&] { return dynkin_catalan(dynkin_kind(a.dynkin), a.n) == c; });
    else if (a.kind == "all")
        run_check(out, "closed_form", [&] { return factorial(static_cast<unsigned>(n)) == c; });
    else if (a.kind == "intervals" || a.kind == "path")
        run_check(out, "closed_form", [&] { return catalan(n) == c; });
    else if (a.kind == "cyclic" || a.kind == "cycle")
        run_check(out, "closed_form", [&] { return binomial(2 * n - 2, n - 1) == c; });
    else if (a.kind == "pitman-stanley")
        run_check(out, "closed_form", [&] { return Integer(1) << (n - 1) == c; });
    return out;
}

Output vertices(const BuildingSet& b, const std::string& ysize, const Options& opt) {
    Output out;
    const int n = b.n();
    auto by_size = ysize.empty() ? std::vector<Rational>(n, Rational(1)) : parse_rationals(ysize);
    require_domain(static_cast<int>(by_size.size()) == n, "--y-size needs one weight per subset size 1..n");
    SubsetWeights y;
    Rational total;
    for (Mask s : b.members()) {
        y[s] = by_size[popcount(s) - 1];
        total += y[s];
    }
    nlohmann::json list = nlohmann::json::array();
    Table t;
    std::vector<std::string> header{"parents"};
    for (int k = 1; k <= n; ++k) header.push_back("t" + std::to_string(k));
    t.push_back(header);
    std::set<std::vector<Rational>> distinct;
    bool sums_ok = true;
    auto forests = b_forests(b);
    for (const auto& f : forests) {
        auto v = vertex_coordinates(b, y, f);
        nlohmann::json coords = nlohmann::json::array();
        std::vector<std::string> row{join(f.parent)};
        Rational s;
        for (const auto& c : v) {
            coords.push_back(c.str());
            row.push_back(c.str());
            s += c;
        }
        sums_ok &= s == total;
        distinct.insert(v);
        list.push_back({{"parents", f.parent}, {"vertex", coords}});
        t.push_back(row);
    }
    out.body["count"] = forests.size();
    out.body["vertices"] = list;
    out.table = std::move(t);
    if (opt.verify) {
        out.check("coordinate_sum", sums_ok);
        bool positive = true;
        for (const auto& w : by_size) positive &= w > 0;
        if (positive) out.check("distinct_vertices", distinct.size() == forests.size());
        run_check(out, "count_is_catalan", [&] { return generalized_catalan(b) == Integer(static_cast<unsigned long>(forests.size())); });
    }
    return out;
}

}  // namespace

void register_genperm(CLI::App& app, Context& ctx) {
    static BuildingArgs nested_args, fpoly_args, catalan_args, vertex_args;
    static std::string ysize;

    auto* g = add_command(app, "genperm", "Building sets, nested complexes and nestohedra");
    g->require_subcommand(1);

    auto* ns = add_command(*g, "nested", "List the nested sets");
    add_building_args(ns, nested_args);
    ns->callback([&ctx] { ctx.action = [] { return nested(load_building(nested_args)); }; });

    auto* fp = add_command(*g, "f-poly", "f-polynomial of the nested complex");
    add_building_args(fp, fpoly_args);
    fp->callback([&ctx] { ctx.action = [&ctx] { return f_poly(load_building(fpoly_args), ctx.opt); }; });

    auto* cat = add_command(*g, "catalan", "Generalized Catalan number (number of B-forests)");
    add_building_args(cat, catalan_args);
    cat->callback([&ctx] {
        ctx.action = [&ctx] { return catalan_cmd(load_building(catalan_args), catalan_args, ctx.opt); };
    });

    auto* vs = add_command(*g, "vertices", "Vertices of the nestohedron P_B(y), one per B-forest");
    add_building_args(vs, vertex_args);
    vs->add_option("--y-size", ysize, "Weights y_I by |I| = 1..n (default all 1)");
    vs->callback([&ctx] { ctx.action = [&ctx] { return vertices(load_building(vertex_args), ysize, ctx.opt); }; });
}

}  // namespace gperm::cli
