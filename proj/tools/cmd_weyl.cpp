#include <algorithm>

#include "cli.hpp"
#include "gperm/errors.hpp"
#include "gperm/permutohedron.hpp"
#include "gperm/weyl.hpp"

namespace gperm::cli {

namespace {

struct WeylArgs {
    std::string cartan;
    std::string type;
    int rank = 0;
    std::string u;
    bool symbolic = false;
};

RootSystem load_system(const WeylArgs& a) {
    if (!a.cartan.empty()) return RootSystem::from_json(read_json(a.cartan));
    if (a.type.size() != 1 || a.rank < 1) throw UsageError("give --cartan or --type with --rank");
    return build_root_system(cartan_matrix(a.type[0], a.rank));
}

Output volume_cmd(const WeylArgs& a, const Options& opt) {
    Output out;
    auto phi = load_system(a);
    const int n = phi.rank();
    auto u = parse_rationals(a.u);
    require_domain(static_cast<int>(u.size()) == n, "--u needs one entry per simple root");
    Rational v = weight_polytope_volume(phi, u);
    out.body["rank"] = n;
    out.body["weyl_order"] = phi.weyl_order.get_str();
    out.body["volume"] = v.str();
    if (a.symbolic) out.body["polynomial"] = weight_polytope_volume_symbolic(phi).to_json();
    if (!opt.verify) return out;

    if (is_type_a(phi))
        run_check(out, "permutohedron", [&] { return volume_symbolic(n + 1).evaluate(coords_u_to_x(u)) == v; });
    if (n <= 4) run_check(out, "derivative_recurrence", [&] { return volume_recurrence_check(phi); });
    bool integral = std::all_of(u.begin(), u.end(), [](const Rational& x) { return x.is_integer() && x >= 0; });
    if (integral && n <= 3) {
        Weight lambda;
        for (const auto& x : u) lambda.push_back(x.num().get_si());
        auto r = brion_weight_report(phi, lambda);
        out.check("brion_volume", r.volume_ok && r.volume == v);
        out.check("brion_lattice_series", r.lattice_ok);
        out.body["lattice_count"] = r.lattice_count;
    }
    return out;
}

}  // namespace

void register_weyl(CLI::App& app, Context& ctx) {
    static WeylArgs args;
    auto* cmd = add_command(app, "weyl-volume", "Volume of the weight polytope P_W(x) for x = sum u_i omega_i");
    auto* file = cmd->add_option("--cartan", args.cartan, "Cartan matrix JSON {\"cartan\": [[2,-1],[-1,2]]}");
    auto* type = cmd->add_option("--type", args.type, "Cartan type A..G")
                     ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
    cmd->add_option("--rank", args.rank, "Rank for --type");
    file->excludes(type);
    cmd->add_option("--u", args.u, "Fundamental-weight coordinates u_1,...,u_n")->required();
    cmd->add_flag("--symbolic", args.symbolic, "Include the volume polynomial in u");
    cmd->callback([&ctx] { ctx.action = [&ctx] { return volume_cmd(args, ctx.opt); }; });
}

}  // namespace gperm::cli
