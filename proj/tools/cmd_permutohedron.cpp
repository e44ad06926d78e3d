#include <algorithm>

#include "cli.hpp"
#include "gperm/brion.hpp"
#include "gperm/eulerian.hpp"
#include "gperm/errors.hpp"
#include "gperm/minkowski.hpp"
#include "gperm/permutohedron.hpp"

namespace gperm::cli {

namespace {

struct PointArgs {
    std::string x;
    std::string input;
};

void add_point_args(CLI::App* cmd, PointArgs& a) {
    auto* x = cmd->add_option("--x", a.x, "Comma-separated coordinates, e.g. 2,1,0");
    auto* in = cmd->add_option("--input", a.input, "Permutohedron JSON {\"x\": [...]}");
    x->excludes(in);
}

RationalVector load_x(const PointArgs& a) {
    RationalVector x;
    if (!a.input.empty()) {
        auto j = read_json(a.input);
        if (!j.contains("x") || !j["x"].is_array()) throw DomainError("permutohedron JSON needs an \"x\" array");
        for (const auto& v : j["x"])
            x.push_back(v.is_string() ? Rational::parse(v.get<std::string>()) : Rational(v.get<long>()));
    } else {
        x = parse_rationals(a.x);
    }
    if (x.empty()) throw UsageError("give the coordinates with --x or --input");
    return x;
}

IntVector integer_x(const RationalVector& x) {
    IntVector out;
    for (const auto& v : x) {
        require_domain(v.is_integer(), "lattice counts need integer coordinates");
        out.push_back(v.num().get_si());
    }
    return out;
}

RationalVector sorted_desc(RationalVector x) {
    std::sort(x.begin(), x.end(), [](const Rational& a, const Rational& b) { return b < a; });
    return x;
}

Output perm_volume(const RationalVector& x, const Options& opt) {
    Output out;
    const int n = static_cast<int>(x.size());
    const Rational vol = volume_numeric_symmetrization(x);
    out.body["n"] = n;
    out.body["volume"] = vol.str();
    if (!opt.verify) return out;

    const auto xs = sorted_desc(x);
    if (n <= 8) run_check(out, "descent_formula", [&] { return volume_symbolic(n).evaluate(xs) == vol; });
    if (n >= 2)
        run_check(out, "binary_trees", [&] { return volume_binary_trees(coords_x_to_u(xs)) == vol; });
    if (n >= 2 && n <= 5) {
        run_check(out, "draconian", [&] {
            auto ysize = coords_x_to_y(xs);
            auto f = SubsetFamily::all_subsets(n);
            for (int k = 0; k < f.m(); ++k) f.weights[k] = ysize[popcount(f.subsets[k]) - 1];
            return abs(volume(f, opt.force)) == vol;
        });
    }
    if (n >= 2 && n <= 6) run_check(out, "brion", [&] { return volume_brion(permutohedron_cone_rep(xs)) == vol; });
    bool integral = std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.is_integer(); });
    if (integral && n <= 4)
        run_check(out, "ehrhart", [&] { return volume_oracle_ehrhart(integer_x(xs)) == vol; });
    return out;
}

Output perm_lattice(const RationalVector& x, bool list, const Options& opt) {
    Output out;
    const int n = static_cast<int>(x.size());
    auto xi = integer_x(x);
    Integer count = n == 1 ? Integer(1) : lattice_count_brion(permutohedron_cone_rep(x));
    out.body["n"] = n;
    out.body["count"] = count.get_str();
    if (list || opt.verify || opt.format == "csv") {
        auto pts = lattice_points_brute(xi);
        if (list) out.body["points"] = pts;
        Table t;
        std::vector<std::string> header;
        for (int k = 1; k <= n; ++k) header.push_back("t" + std::to_string(k));
        t.push_back(header);
        for (const auto& p : pts) {
            std::vector<std::string> row;
            for (long v : p) row.push_back(std::to_string(v));
            t.push_back(row);
        }
        out.table = std::move(t);
        if (opt.verify) out.check("enumeration", Integer(static_cast<unsigned long>(pts.size())) == count);
    }
    if (opt.verify && n >= 2) {
        run_check(out, "generic_form_independence", [&] {
            auto rep = permutohedron_cone_rep(x);
            for (long m = 5; m < 50; ++m) {
                IntVector h(n - 1);
                long power = 1;
                for (auto& c : h) {
                    c = power;
                    power *= -m;
                }
                try {
                    return lattice_count_brion(rep, h) == count;
                } catch (const DomainError&) {
                    // form vanishes on some generator; try the next one
                }
            }
            return false;
        });
    }
    return out;
}

}  // namespace

void register_permutohedron(CLI::App& app, Context& ctx) {
    static PointArgs vol_args, lat_args;
    static bool list = false;

    auto* vol = add_command(app, "perm-volume", "Volume of the permutohedron P_n(x)");
    add_point_args(vol, vol_args);
    vol->callback([&ctx] { ctx.action = [&ctx] { return perm_volume(load_x(vol_args), ctx.opt); }; });

    auto* lat = add_command(app, "perm-lattice", "Integer points of P_n(x) for integer x");
    add_point_args(lat, lat_args);
    lat->add_flag("--list", list, "Include the points themselves");
    lat->callback([&ctx] { ctx.action = [&ctx] { return perm_lattice(load_x(lat_args), list, ctx.opt); }; });
}

}  // namespace gperm::cli
