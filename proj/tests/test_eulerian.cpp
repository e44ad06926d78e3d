#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include <unistd.h>

#include "gperm/errors.hpp"
#include "gperm/eulerian.hpp"
#include "oracles.hpp"

using namespace gperm;

namespace {

struct TempCache {
    std::filesystem::path dir;
    TempCache() {
        dir = std::filesystem::temp_directory_path() / ("gperm_cache_" + std::to_string(::getpid()));
        std::filesystem::remove_all(dir);
        set_cache_directory(dir);
    }
    ~TempCache() {
        std::filesystem::remove_all(dir);
        set_cache_directory(std::nullopt);
    }
};

bool is_increasing(const PlaneBinaryTree& t, const Permutation& v) {
    for (int j = 1; j <= t.size(); ++j)
        for (int c : {t.left[j], t.right[j]})
            if (c && v[c - 1] <= v[j - 1]) return false;
    return true;
}

}  // namespace

TEST_CASE("Eulerian numbers match descent counts") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) CHECK(eulerian_number(n, k) == Integer(static_cast<unsigned long>(oracle::eulerian(n, k))));
    CHECK(eulerian_number(4, 0) == 0);
    CHECK(eulerian_number(4, 5) == 0);
}

TEST_CASE("increasing labelings") {
    for (int n = 1; n <= 6; ++n) {
        std::size_t total = 0;
        for (const auto& t : plane_binary_trees(n)) {
            auto labs = increasing_labelings(t);
            std::size_t brute = 0;
            for_each_permutation(n, [&](const Permutation& v) { brute += is_increasing(t, v); });
            CHECK(labs.size() == brute);
            Integer hooks = 1;
            for (int j = 1; j <= n; ++j) hooks *= hook_lengths(t)[j];
            CHECK(Integer(static_cast<unsigned long>(labs.size())) == factorial(n) / hooks);
            for (const auto& v : labs) CHECK(is_increasing(t, v));
            total += labs.size();
        }
        CHECK(Integer(static_cast<unsigned long>(total)) == factorial(n));
        CHECK(increasing_binary_trees(n).size() == total);
    }
}

TEST_CASE("binary tree volume formula") {
    for (int n = 1; n <= 6; ++n) {
        Integer cayley;
        mpz_ui_pow_ui(cayley.get_mpz_t(), n + 1, n - 1);
        CHECK(volume_binary_trees(RationalVector(n, Rational(1))) == Rational(cayley));
        for (const auto& t : plane_binary_trees(n)) {
            auto h = hook_lengths(t);
            for (int j = 1; j <= n; ++j) {
                Rational s;
                for (int i = t.lo[j]; i <= t.hi[j]; ++i) s += binary_tree_weight(t, i, j);
                CHECK(s == Rational(Integer(h[j] + 1), Integer(2)));
            }
        }
        for (int k = 1; k <= n; ++k) {
            RationalVector u(n);
            u[k - 1] = 1;
            CHECK(volume_binary_trees(u) == Rational(eulerian_number(n, k), factorial(n)));
        }
    }
    CHECK_THROWS_AS(binary_tree_weight(plane_binary_trees(3).front(), 0, 1), DomainError);
}

TEST_CASE("three volume routes agree symbolically") {
    for (int n = 1; n <= 4; ++n) {
        auto a = permutohedron_volume_u(n);
        CHECK(a == volume_binary_trees_symbolic(n));
        CHECK(a == permutohedron_volume_u_draconian(n));
    }
    CHECK_THROWS_AS(permutohedron_volume_u_draconian(6), ResourceLimitError);
}

TEST_CASE("eight-node example tree") {
    auto t = PlaneBinaryTree::from_forest(BForest{{2, 5, 4, 2, 0, 5, 8, 6}});
    CHECK(t.root == 5);
    CHECK(t.lo[2] == 1);
    CHECK(t.hi[2] == 4);
    Permutation v{5, 2, 8, 7, 1, 3, 6, 4};
    std::vector<int> i{3, 4, 8, 7, 1, 7, 4, 3};
    CHECK(is_increasing(t, v));
    bool found = false;
    for (const auto& w : i_compatible_trees(i))
        if (w.tree.tree.root == t.root && w.tree.tree.left == t.left && w.tree.tree.right == t.right && w.tree.v == v) {
            found = true;
            CHECK(w.weight == Rational(Integer(1), Integer(30)));
        }
    CHECK(found);
}

TEST_CASE("mixed Eulerian numbers for n = 3") {
    TempCache cache;
    CHECK(mixed_eulerian({1, 1, 1}).value == 6);
    CHECK(mixed_eulerian({0, 3, 0}).value == 4);
    CHECK(mixed_eulerian({2, 0, 1}).value == 3);
    auto v = mixed_eulerian({1, 2, 0});
    CHECK(v.by_volume == 4);
    CHECK(v.by_trees == 4);
    REQUIRE(v.by_draconian.has_value());
    CHECK(*v.by_draconian == 4);

    auto t = mixed_eulerian_table(3);
    std::vector<Composition> order{{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}, {2, 0, 1},
                                   {1, 1, 1}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}, {0, 0, 3}};
    std::vector<int> values{1, 2, 4, 4, 3, 6, 4, 3, 2, 1};
    REQUIRE(t.entries.size() == order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        CHECK(t.entries[k].first == order[k]);
        CHECK(t.entries[k].second == values[k]);
    }
    Rational weighted;
    Integer plain = 0;
    for (const auto& [c, a] : t.entries) {
        Rational term(a);
        for (int x : c) term /= Rational(factorial(x));
        weighted += term;
        plain += a;
    }
    CHECK(weighted == 16);
    CHECK(plain == 30);

    // u1 u2^2 through each of its realizations
    for (const auto& r : std::vector<std::vector<int>>{{1, 2, 2}, {2, 1, 2}, {2, 2, 1}})
        CHECK(mixed_eulerian_trees({1, 2, 0}, r) == 4);
    CHECK_THROWS_AS(mixed_eulerian_trees({1, 2, 0}, {1, 1, 2}), DomainError);
    CHECK_THROWS_AS(mixed_eulerian({1, 2}), DomainError);
    CHECK_THROWS_AS(mixed_eulerian({2, -1, 2}), DomainError);
}

TEST_CASE("mixed Eulerian numbers against lattice-point differences") {
    TempCache cache;
    for (int n = 1; n <= 4; ++n) {
        auto t = mixed_eulerian_table(n);
        for (const auto& [c, a] : t.entries) CHECK(a == oracle::mixed_difference(c));
    }
}

TEST_CASE("table properties and realizations up to n = 5") {
    TempCache cache;
    for (int n = 1; n <= 5; ++n) {
        auto t = mixed_eulerian_table(n);
        CHECK(t.draconian_checked);
        CHECK(t.entries.size() == binomial(2 * n - 1, n).get_ui());
        for (const auto& [name, ok] : mixed_eulerian_properties(t)) {
            INFO(name);
            CHECK(ok);
        }
    }
    // every rearrangement of a realization gives the same count
    Composition c{1, 0, 2, 1};
    auto base = default_realization(c);
    auto r = base;
    std::sort(r.begin(), r.end());
    do CHECK(mixed_eulerian_trees(c, r) == mixed_eulerian_trees(c));
    while (std::next_permutation(r.begin(), r.end()));
}

TEST_CASE("property checks detect a corrupted table") {
    TempCache cache;
    auto t = mixed_eulerian_table(3);
    t.entries[4].second += 1;
    std::size_t failures = 0;
    for (const auto& [name, ok] : mixed_eulerian_properties(t)) failures += !ok;
    CHECK(failures > 0);
}

TEST_CASE("disk cache") {
    TempCache cache;
    auto first = mixed_eulerian_table(4);
    auto file = cache.dir / "mixed_eulerian_4.json";
    REQUIRE(std::filesystem::exists(file));
    auto loaded = MixedEulerianTable::from_json(nlohmann::json::parse(std::ifstream(file)));
    CHECK(loaded.entries == first.entries);
    CHECK(loaded.draconian_checked);

    { std::ofstream(file) << "{ not json"; }
    CHECK(mixed_eulerian_table(4).entries == first.entries);

    auto tampered = first;
    tampered.entries[0].second = 7;
    { std::ofstream(file) << tampered.to_json().dump(); }
    CHECK(mixed_eulerian_table(4).entries == first.entries);

    CHECK(MixedEulerianTable::from_json(first.to_json()).entries == first.entries);
    CHECK_THROWS_AS(MixedEulerianTable::from_json(nlohmann::json{{"n", 2}}), DomainError);
    CHECK_THROWS_AS(mixed_eulerian_table(7), ResourceLimitError);
}

TEST_CASE("cyclic classes") {
    TempCache cache;
    CHECK(cyclic_class_count(4) == 14);
    for (int n = 1; n <= 7; ++n) CHECK(Integer(static_cast<unsigned long>(cyclic_class_count(n))) == catalan(n));
    auto members = cyclic_class({1, 0, 2, 1});
    for (const auto& m : members) CHECK(cyclic_class(m) == members);
    for (int n = 1; n <= 5; ++n) {
        std::size_t covered = 0;
        std::set<Composition> seen;
        for (const auto& c : compositions_of(n, n)) {
            if (seen.count(c)) continue;
            auto r = cyclic_class_check(c);
            CHECK(r.sum == factorial(n));
            for (const auto& m : r.members) seen.insert(m);
            covered += r.members.size();
        }
        CHECK(covered == compositions_of(n, n).size());
    }
    auto r = cyclic_class_check({0, 3, 0});
    CHECK(r.representative == Composition{3, 0, 0});
    CHECK(r.representative_value == 1);
}

TEST_CASE("cyclic symmetrization") {
    for (int n = 1; n <= 4; ++n) CHECK(cyclic_symmetrization_check(n, 3, 7));
    CHECK_THROWS_AS(cyclic_symmetrization_check(6), ResourceLimitError);
}
