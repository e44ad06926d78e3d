#include "cli.hpp"
#include "gperm/errors.hpp"
#include "gperm/tableaux.hpp"

namespace gperm::cli {

namespace {

Output diagonals_cmd(int n, const Options& opt) {
    Output out;
    auto table = diagonal_table(n);
    Integer count = opt.verify && n <= 6 ? count_diagonal_vectors(n) : Integer(static_cast<unsigned long>(table.size()));
    // D_n is a plain count; the N(a) values can be large and stay strings
    out.body["count"] = table.size();
    nlohmann::json map = nlohmann::json::object();
    Table rows{{"a", "d", "N"}};
    for (const auto& [a, c] : table) {
        map[join(a)] = c.get_str();
        rows.push_back({join(a), join(DiagonalVector::from_gaps(a).d), c.get_str()});
    }
    out.body["N"] = map;
    out.table = std::move(rows);
    if (opt.verify) {
        out.check("associahedron_lattice_points", count == Integer(static_cast<unsigned long>(table.size())));
        if (n >= 2 && n <= 7) run_check(out, "vertex_formula", [&] { return !vertex_diagonals(n).empty(); });
    }
    return out;
}

Output count_cmd(const std::string& a_text, const Options& opt) {
    Output out;
    auto a = parse_longs(a_text);
    Integer c = tableaux_count(a);
    out.body["d"] = DiagonalVector::from_gaps(a).d;
    out.body["count"] = c.get_str();
    if (opt.verify) {
        auto p = diagonal_generating_function(static_cast<int>(a.size()) + 1);
        Rational coeff = p.coefficient(RationalPolynomial::Exponent(a.begin(), a.end()));
        for (long x : a) coeff *= Rational(factorial(static_cast<unsigned>(x)));
        out.check("generating_function", coeff == Rational(c));
    }
    return out;
}

Output rectangles_cmd(int n, const Options& opt) {
    Output out;
    auto v = vertex_diagonals(n + 1);
    nlohmann::json list = nlohmann::json::array();
    Table rows{{"parents", "rectangles", "N"}};
    for (const auto& d : v) {
        nlohmann::json rects = nlohmann::json::array();
        std::string text;
        for (const auto& r : rectangle_subdivision(d.tree)) {
            rects.push_back({{"node", r.node}, {"rows", {r.row_first, r.row_last}}, {"cols", {r.col_first, r.col_last}}});
            text += (text.empty() ? "" : " ") + std::to_string(r.rows()) + "x" + std::to_string(r.cols());
        }
        list.push_back({{"parents", d.tree.parent_vector()}, {"rectangles", rects}, {"gaps", d.gaps},
                        {"N", d.count.get_str()}});
        rows.push_back({join(d.tree.parent_vector()), text, d.count.get_str()});
    }
    out.body["count"] = v.size();
    out.body["subdivisions"] = list;
    out.table = std::move(rows);
    if (opt.verify) {
        bool ok = true;
        for (const auto& d : v) ok &= d.count == d.by_factorials && d.count == d.by_rectangles;
        out.check("vertex_formula", ok);
    }
    return out;
}

}  // namespace

void register_tableaux(CLI::App& app, Context& ctx) {
    static int diag_n = 0, rect_n = 0;
    static std::string a;

    auto* t = add_command(app, "tableaux", "Diagonals of shifted staircase tableaux");
    t->require_subcommand(1);

    auto* diag = add_command(*t, "diagonals", "All diagonal vectors with their tableau counts");
    diag->add_option("--n", diag_n, "Staircase size")->required();
    diag->callback([&ctx] { ctx.action = [&ctx] { return diagonals_cmd(diag_n, ctx.opt); }; });

    auto* count = add_command(*t, "count", "Tableaux with a given gap vector a_i = d_{i+1} - d_i - 1");
    count->add_option("--a", a, "Gap vector a_1,...,a_{n-1}")->required();
    count->callback([&ctx] { ctx.action = [&ctx] { return count_cmd(a, ctx.opt); }; });

    auto* rect = add_command(*t, "rectangles", "Rectangle subdivisions of the staircase (n, ..., 1)");
    rect->add_option("--n", rect_n, "Staircase size")->required();
    rect->callback([&ctx] { ctx.action = [&ctx] { return rectangles_cmd(rect_n, ctx.opt); }; });
}

}  // namespace gperm::cli
