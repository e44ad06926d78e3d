#include "doctest.h"

#include <algorithm>
#include <random>

#include "gperm/brion.hpp"
#include "gperm/errors.hpp"
#include "gperm/linalg.hpp"
#include "oracles.hpp"

using namespace gperm;

namespace {

std::vector<std::vector<int>> as_lists(const std::vector<Mask>& sets) {
    std::vector<std::vector<int>> out;
    for (Mask s : sets) out.push_back(elements_of(s));
    return out;
}

// Integer points of the permutohedron: t sums to sum x and is majorized by x.
std::size_t permutohedron_points_brute(std::vector<long> x) {
    std::sort(x.rbegin(), x.rend());
    const int n = static_cast<int>(x.size());
    long total = 0;
    for (long v : x) total += v;
    std::size_t count = 0;
    std::vector<long> t(n);
    std::function<void(int)> rec = [&](int k) {
        if (k == n - 1) {
            long s = 0;
            for (int i = 0; i < n - 1; ++i) s += t[i];
            t[n - 1] = total - s;
            if (t[n - 1] < x[n - 1] || t[n - 1] > x[0]) return;
            auto u = t;
            std::sort(u.rbegin(), u.rend());
            long a = 0, b = 0;
            for (int i = 0; i < n; ++i) {
                a += u[i];
                b += x[i];
                if (a > b) return;
            }
            ++count;
            return;
        }
        for (long v = x[n - 1]; v <= x[0]; ++v) {
            t[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("truncated series arithmetic") {
    auto e = TruncatedSeries::exp(Rational(2), 4);
    CHECK(e[3] == Rational(8, 6));
    auto prod = e * TruncatedSeries::exp(Rational(-2), 4);
    CHECK(prod[0] == Rational(1));
    for (int k = 1; k <= 4; ++k) CHECK(prod[k].is_zero());
    // t/(1-e^{-t}) = 1 + t/2 + t^2/12 - t^4/720
    auto td = todd_coefficients(4);
    CHECK(td[0] == Rational(1));
    CHECK(td[1] == Rational(1, 2));
    CHECK(td[2] == Rational(1, 12));
    CHECK(td[3].is_zero());
    CHECK(td[4] == Rational(-1, 720));
    auto f = TruncatedSeries::todd_factor(Rational(-1), 4);
    for (int k = 0; k <= 4; ++k) CHECK(f[k] == td[k]);
    CHECK_THROWS_AS(TruncatedSeries::todd_factor(Rational(0), 2), DomainError);
}

TEST_CASE("parallelepiped points") {
    auto pts = parallelepiped_points({Rational(0), Rational(0)}, {{1, 0}, {1, 2}});
    CHECK(pts == std::vector<IntVector>{{0, 0}, {1, 1}});

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-3, 3);
    int tested = 0;
    while (tested < 50) {
        int n = 1 + tested % 3;
        std::vector<IntVector> gens(n, IntVector(n));
        RationalMatrix m(n, RationalVector(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                gens[i][j] = d(rng);
                m[i][j] = Rational(gens[i][j]);
            }
        Rational det = oracle::determinant(m);
        if (det.is_zero()) continue;
        RationalVector v(n, Rational(0));
        CHECK(Rational(static_cast<long>(parallelepiped_points(v, gens).size())) == abs(det));
        ++tested;
    }
    CHECK_THROWS_AS(parallelepiped_points({Rational(0), Rational(0)}, {{1, 1}, {2, 2}}), DomainError);
}

TEST_CASE("cone representations of rays") {
    auto a = cone_S_representation({Rational(0)}, {{1}});
    CHECK(a.numerator == std::vector<IntVector>{{0}});
    auto b = cone_S_representation({Rational(1, 2)}, {{1}});
    CHECK(b.numerator == std::vector<IntVector>{{1}});
}

TEST_CASE("cones of a line cancel") {
    // [0, inf) and (-inf, -1] together cover the line, whose series vanishes
    std::vector<ConeSRepresentation> cones{cone_S_representation({Rational(0)}, {{1}}),
                                           cone_S_representation({Rational(-1)}, {{-1}})};
    for (auto [k, c] : laurent_expansion(cones, {1}, 5)) CHECK(c.is_zero());
}

TEST_CASE("small polytopes") {
    SimplePolytopeRep seg;
    seg.dim = 1;
    seg.vertices = {{Rational(0)}, {Rational(1)}};
    seg.cones = {{{1}}, {{-1}}};
    CHECK(lattice_count_brion(seg) == 2);
    CHECK(volume_brion(seg) == Rational(1));

    SimplePolytopeRep sq;
    sq.dim = 2;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            sq.vertices.push_back({Rational(a), Rational(b)});
            sq.cones.push_back({{a ? -1 : 1, 0}, {0, b ? -1 : 1}});
        }
    CHECK(lattice_count_brion(sq) == 4);
    CHECK(volume_brion(sq) == Rational(1));

    auto json = SimplePolytopeRep::from_json(sq.to_json());
    CHECK(json.vertices == sq.vertices);
    CHECK(json.cones == sq.cones);
    CHECK_THROWS_AS(SimplePolytopeRep::from_json(nlohmann::json{{"vertices", {{0}}}}), DomainError);

    // a lone pointed cone is not a polytope; its constant term is 7/18
    SimplePolytopeRep bad;
    bad.dim = 2;
    bad.vertices = {{Rational(0), Rational(0)}};
    bad.cones = {{{1, 0}, {1, 2}}};
    CHECK_THROWS_AS(lattice_count_brion(bad, IntVector{1, 1}), ConsistencyError);
}

TEST_CASE("permutohedra") {
    auto hex = permutohedron_cone_rep({Rational(2), Rational(1), Rational(0)});
    CHECK(hex.vertices.size() == 6);
    CHECK(lattice_count_brion(hex) == 7);
    CHECK(volume_brion(hex) == Rational(3));

    auto p4 = permutohedron_cone_rep({Rational(3), Rational(2), Rational(1), Rational(0)});
    CHECK(lattice_count_brion(p4) == 38);
    CHECK(volume_brion(p4) == Rational(16));
    CHECK(permutohedron_points_brute({3, 2, 1, 0}) == 38);

    // the count does not depend on the generic form
    for (IntVector h : {IntVector{1, 3, 7}, IntVector{-2, 5, 1}, IntVector{4, -1, 9}})
        CHECK(lattice_count_brion(p4, h) == 38);

    // dilations follow 3k^2 + 3k + 1
    for (long k = 1; k <= 5; ++k) {
        auto d = permutohedron_cone_rep({Rational(2 * k), Rational(k), Rational(0)});
        CHECK(lattice_count_brion(d) == 3 * k * k + 3 * k + 1);
        CHECK(permutohedron_points_brute({2 * k, k, 0}) == static_cast<std::size_t>(3 * k * k + 3 * k + 1));
    }

    auto x = permutohedron_cone_rep({Rational(5), Rational(2), Rational(2), Rational(0)});
    CHECK(lattice_count_brion(x) == permutohedron_points_brute({5, 2, 2, 0}));
}

TEST_CASE("random generalized permutohedra against sumset counts") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(0, 3);
    auto b = BuildingSet::all_subsets(3);
    for (int trial = 0; trial < 20; ++trial) {
        SubsetWeights y;
        std::vector<Mask> sets;
        std::vector<long> w;
        for (Mask s : b.members()) {
            long v = d(rng);
            y[s] = Rational(v);
            sets.push_back(s);
            w.push_back(v);
        }
        auto rep = genperm_cone_rep(b, y);
        auto pts = oracle::minkowski_points(3, as_lists(sets), w);
        CHECK(lattice_count_brion(rep) == static_cast<long>(pts.size()));

        SubsetFamily f(3, sets, std::vector<Rational>(y.size()));
        for (std::size_t k = 0; k < sets.size(); ++k) f.weights[k] = Rational(w[k]);
        CHECK(volume_brion(rep) == volume(f));
    }
}

TEST_CASE("Todd operator counts") {
    // hexagon as the sum of the three intervals
    SubsetFamily hex(3, {0b011, 0b101, 0b110}, {Rational(1), Rational(1), Rational(1)});
    CHECK(todd_count_genperm(hex) == 7);

    SubsetFamily simplex(3, {0b111}, {Rational(1)});
    CHECK(todd_count_genperm(simplex) == 3);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(0, 2);
    auto all = SubsetFamily::all_subsets(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<long> w;
        SubsetFamily f = all;
        for (auto& x : f.weights) {
            w.push_back(d(rng));
            x = Rational(w.back());
        }
        auto pts = oracle::minkowski_points(3, as_lists(f.subsets), w);
        CHECK(todd_count_genperm(f) == static_cast<long>(pts.size()));
    }

    SubsetFamily p4(4, {0b1111, 0b0011, 0b1100}, {Rational(1), Rational(2), Rational(1)});
    auto pts = oracle::minkowski_points(4, as_lists(p4.subsets), {1, 2, 1});
    CHECK(todd_count_genperm(p4) == static_cast<long>(pts.size()));

    CHECK_THROWS_AS(todd_count_genperm(SubsetFamily(3, {0b111}, {Rational(1, 2)})), DomainError);
    CHECK_THROWS_AS(todd_count_genperm(SubsetFamily(5, {0b11111}, {Rational(1)})), DomainError);
}
