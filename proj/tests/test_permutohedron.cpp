#include "doctest.h"

#include <random>
#include <set>

#include "gperm/errors.hpp"
#include "gperm/permutohedron.hpp"
#include "oracles.hpp"

using namespace gperm;

namespace {

RationalVector random_rationals(std::mt19937& rng, int n, int range = 9, int den = 4) {
    std::uniform_int_distribution<int> num(-range, range), d(1, den);
    RationalVector v;
    for (int i = 0; i < n; ++i) v.push_back(Rational(num(rng), Integer(d(rng))));
    return v;
}

RationalVector R(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("coordinate changes") {
    CHECK(coords_x_to_y(R({2, 1, 0})) == R({-2, 1, 0}));
    CHECK(coords_x_to_y(R({5, 5, 5, 5})) == R({-5, 0, 0, 0}));
    CHECK(coords_x_to_u(R({2, 1, 0})) == R({1, 1}));
    CHECK(coords_x_to_u(R({4, 4, 4})) == R({0, 0}));
    CHECK(coords_x_to_u(R({4, 3, 2, 1, 0})) == R({1, 1, 1, 1}));
    CHECK(coords_u_to_y(R({1, 1})) == R({1, 0}));
    CHECK(coords_u_to_y(R({1, 0, 0})) == R({1, -1, 1}));

    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        int n = 1 + it % 6;
        auto x = random_rationals(rng, n);
        CHECK(coords_y_to_x(coords_x_to_y(x)) == x);
        auto u = coords_x_to_u(x);
        CHECK(coords_u_to_x(u).size() == x.size());
        auto y = coords_x_to_y(x);
        auto yu = coords_u_to_y(u);
        CHECK(RationalVector(y.begin() + 1, y.end()) == yu);
    }
}

TEST_CASE("membership") {
    auto x = R({3, 1, 0, -2});
    Permutation w = identity_permutation(4);
    do {
        RationalVector t;
        for (int i : w) t.push_back(x[i - 1]);
        CHECK(contains_point(x, t));
    } while (std::next_permutation(w.begin(), w.end()));
    CHECK(contains_point(x, RationalVector(4, Rational(1, 2))));
    CHECK_FALSE(contains_point(x, R({0, 0, 0, 0})));
    CHECK_FALSE(contains_point(x, R({4, 0, 0, -2})));
    CHECK_THROWS_AS(contains_point(x, R({1, 1})), DomainError);
}

TEST_CASE("descent index sets") {
    auto d = descent_index_set({2, 0, 1, 1, 0, 1});
    CHECK(d.epsilon == std::vector<int>{1, 1, -1, -1, 1, -1, 1, -1, -1, 1});
    CHECK(descent_index_set({1, 0, 1}).I == std::vector<int>{2});
    for (int n = 1; n <= 6; ++n) {
        Composition c(n, 0);
        c[0] = n - 1;
        CHECK(descent_index_set(c).I.empty());
    }
    CHECK_THROWS_AS(descent_index_set({1, 1, 1}), DomainError);
}

TEST_CASE("symbolic volume") {
    CHECK(volume_symbolic(1).str() == "1");
    CHECK(volume_symbolic(2).str() == "x1 - x2");
    auto v3 = volume_symbolic(3);
    CHECK(v3.str() == "1/2*x1^2 + x1*x2 - 2*x1*x3 - x2^2 + x2*x3 + 1/2*x3^2");
    CHECK(v3.evaluate(R({2, 1, 0})) == Rational(3));
}

TEST_CASE("symmetrization volume") {
    CHECK(volume_numeric_symmetrization(R({0, 1, 2})) == Rational(3));
    CHECK(symmetrization_formula(R({0, 1})) == Rational(-1));
    CHECK(volume_numeric_symmetrization(R({1, 1, 0})) == Rational(1, 2));
    CHECK(volume_numeric_symmetrization(R({2, 1, 0})) == Rational(3));
    CHECK(volume_numeric_symmetrization(R({7, 7, 7, 7})) == Rational(0));
    CHECK(volume_numeric_symmetrization(R({4})) == Rational(1));

    std::mt19937 rng(17);
    for (int n = 1; n <= 5; ++n) {
        auto v = volume_symbolic(n);
        for (int it = 0; it < 50; ++it) {
            auto x = random_rationals(rng, n);
            CHECK(symmetrization_formula(x) == v.evaluate(x));
            std::sort(x.begin(), x.end(), std::greater<>());
            CHECK(volume_numeric_symmetrization(x) == v.evaluate(x));
            CHECK(v.evaluate(x).sign() >= 0);
        }
    }
}

TEST_CASE("divided symmetrization is constant and equals signed descent numbers") {
    for (int n = 1; n <= 5; ++n) {
        RationalVector l1, l2;
        for (int i = 1; i <= n; ++i) {
            l1.emplace_back(i);
            l2.emplace_back(2 * i);
        }
        for_each_composition(n - 1, n, [&](const Composition& c) {
            Rational a = divided_symmetrization(c, l1);
            CHECK(a == divided_symmetrization(c, l2));
            auto I = descent_index_set(c).I;
            Rational expect(descent_count(n, I));
            if (I.size() % 2) expect = -expect;
            CHECK(a == expect);
        });
        for (int deg = 0; deg < n - 1; ++deg)
            for_each_composition(deg, n, [&](const Composition& c) { CHECK(divided_symmetrization(c, l2).is_zero()); });
    }
}

TEST_CASE("lattice points and Ehrhart oracle") {
    CHECK(lattice_points_brute({2, 1, 0}).size() == 7);
    CHECK(lattice_points_brute({1, 0}) == std::vector<IntVector>{{0, 1}, {1, 0}});
    CHECK(lattice_count_brute({3, 2, 1, 0}) == 38);
    CHECK(volume_oracle_ehrhart({2, 1, 0}) == Rational(3));
    CHECK(volume_oracle_ehrhart({1, 0}) == Rational(1));

    for (int n = 1; n <= 5; ++n) {
        IntVector x;
        for (int i = n - 1; i >= 0; --i) x.push_back(i);
        auto xr = to_rational(x);
        Integer nn = 1;
        for (int k = 0; k < n - 2; ++k) nn *= n;
        CHECK(volume_numeric_symmetrization(xr) == Rational(n == 1 ? Integer(1) : nn));
        CHECK(lattice_count_brute(x) == oracle::labeled_forests(n));
    }

    std::mt19937 rng(23);
    std::uniform_int_distribution<long> d(0, 3);
    for (int it = 0; it < 50; ++it) {
        int n = 2 + it % 4;
        IntVector x(n);
        for (auto& a : x) a = d(rng);
        CHECK(volume_oracle_ehrhart(x) == volume_numeric_symmetrization(to_rational(x)));
    }
}

TEST_CASE("vertices and edges of the permutohedron") {
    for (int n = 2; n <= 4; ++n) {
        RationalVector x;
        for (int i = 0; i < n; ++i) x.emplace_back(i * i + 1);
        std::vector<RationalVector> pts;
        std::vector<Permutation> perms;
        for_each_permutation(n, [&](const Permutation& w) {
            RationalVector v;
            for (int i = 0; i + 1 < n; ++i) v.push_back(x[w[i] - 1]);  // drop the redundant last coordinate
            pts.push_back(v);
            perms.push_back(w);
        });
        for (size_t i = 0; i < pts.size(); ++i) CHECK(oracle::is_vertex(pts, i));
        for (size_t i = 0; i < pts.size(); ++i) {
            for (size_t j = i + 1; j < pts.size(); ++j) {
                // adjacent iff the value labels differ by swapping two consecutive values
                int diff = 0;
                bool consecutive = true;
                for (int k = 0; k < n; ++k) {
                    if (perms[i][k] != perms[j][k]) {
                        ++diff;
                        if (std::abs(perms[i][k] - perms[j][k]) != 1) consecutive = false;
                    }
                }
                CHECK(oracle::is_edge(pts, i, j) == (diff == 2 && consecutive));
            }
        }
    }
}
