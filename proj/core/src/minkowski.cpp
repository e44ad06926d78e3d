#include "gperm/minkowski.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "gperm/errors.hpp"
#include "gperm/linalg.hpp"
#include "gperm/permutohedron.hpp"

namespace gperm {

namespace {

void check_subsets(const std::vector<Mask>& sets, int n) {
    require_domain(n >= 1 && n <= 20, "ground size out of range");
    for (Mask s : sets) require_domain(s != 0 && (s & ~full_mask(n)) == 0, "subset empty or outside [n]");
}

void guard(std::uint64_t work, bool force, const std::string& what) {
    if (!force && work > kEnumerationLimit)
        throw ResourceLimitError(what + ": estimated work " + std::to_string(work) + " exceeds limit " +
                                 std::to_string(kEnumerationLimit) + " (use force)");
}

bool augment(int k, const std::vector<Mask>& sets, Mask allowed, std::vector<int>& owner, std::vector<char>& seen) {
    for (int e : elements_of(sets[k] & allowed)) {
        if (seen[e]) continue;
        seen[e] = 1;
        if (owner[e] < 0 || augment(owner[e], sets, allowed, owner, seen)) {
            owner[e] = k;
            return true;
        }
    }
    return false;
}

bool has_sdr(const std::vector<Mask>& sets, int n, Mask allowed) {
    std::vector<int> owner(n + 1, -1);
    for (int k = 0; k < static_cast<int>(sets.size()); ++k) {
        std::vector<char> seen(n + 1, 0);
        if (!augment(k, sets, allowed, owner, seen)) return false;
    }
    return true;
}

Integer to_nonneg_integer(const Rational& r, const char* what) {
    require_domain(r.is_integer() && r.sign() >= 0, std::string(what) + ": weights must be nonnegative integers");
    return r.num();
}

}  // namespace

SubsetFamily::SubsetFamily(int n_, std::vector<Mask> subsets_, std::vector<Rational> weights_)
    : n(n_), subsets(std::move(subsets_)), weights(std::move(weights_)) {
    check_subsets(subsets, n);
    if (weights.empty()) weights.assign(subsets.size(), Rational(1));
    require_domain(weights.size() == subsets.size(), "one weight per subset required");
    for (const auto& w : weights) require_domain(w.sign() >= 0, "weights must be nonnegative");
}

SubsetFamily SubsetFamily::mirror() const {
    std::vector<Mask> star;
    for (int j = 1; j <= n; ++j) {
        Mask s = 0;
        for (int i = 0; i < m(); ++i)
            if (subsets[i] >> (j - 1) & 1u) s |= Mask(1) << i;
        require_domain(s != 0, "mirror: element " + std::to_string(j) + " lies in no subset");
        star.push_back(s);
    }
    return SubsetFamily(m(), star);
}

bool SubsetFamily::connected() const {
    if (subsets.empty()) return false;
    Mask covered = subsets[0];
    std::vector<char> used(subsets.size(), 0);
    used[0] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < subsets.size(); ++i) {
            if (!used[i] && (subsets[i] & covered)) {
                used[i] = 1;
                covered |= subsets[i];
                grew = true;
            }
        }
    }
    return covered == full_mask(n) && std::all_of(used.begin(), used.end(), [](char c) { return c; });
}

SubsetFamily SubsetFamily::from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Mask> subsets;
        for (const auto& s : j.at("subsets")) subsets.push_back(mask_of(s.get<std::vector<int>>()));
        std::vector<Rational> weights;
        if (j.contains("weights"))
            for (const auto& w : j.at("weights"))
                weights.push_back(w.is_string() ? Rational::parse(w.get<std::string>()) : Rational(w.get<long>()));
        return SubsetFamily(n, subsets, weights);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed subset family JSON: ") + e.what());
    }
}

nlohmann::json SubsetFamily::to_json() const {
    nlohmann::json subs = nlohmann::json::array(), ws = nlohmann::json::array();
    for (Mask s : subsets) subs.push_back(elements_of(s));
    for (const auto& w : weights) ws.push_back(w.str());
    return {{"n", n}, {"subsets", subs}, {"weights", ws}};
}

SubsetFamily SubsetFamily::all_subsets(int n) {
    std::vector<Mask> s;
    for (Mask m = 1; m <= full_mask(n); ++m) s.push_back(m);
    return SubsetFamily(n, s);
}

SubsetFamily SubsetFamily::intervals(int n) {
    std::vector<Mask> s;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) s.push_back(full_mask(j) & ~full_mask(i - 1));
    return SubsetFamily(n, s);
}

SubsetFamily SubsetFamily::hall(int n) {
    std::vector<Mask> s;
    for (Mask m = 1; m <= full_mask(n); ++m)
        if (m >> (n - 1) & 1u) s.push_back(m);
    return SubsetFamily(n, s);
}

SubsetFamily SubsetFamily::pitman_stanley(int n) {
    std::vector<Mask> s;
    for (int i = n; i >= 2; --i) s.push_back(full_mask(i));
    return SubsetFamily(n, s);
}

SubsetFamily SubsetFamily::uniform(int n, int k) {
    std::vector<Mask> s;
    for (Mask m = 1; m <= full_mask(n); ++m)
        if (popcount(m) == k) s.push_back(m);
    return SubsetFamily(n, s);
}

SubsetFamily SubsetFamily::complete_bipartite(int m, int n) { return SubsetFamily(n, std::vector<Mask>(m, full_mask(n))); }

bool dmc_union_bound(const std::vector<Mask>& sets, int n) {
    check_subsets(sets, n);
    const size_t k = sets.size();
    for (std::uint64_t pick = 1; pick < (std::uint64_t(1) << k); ++pick) {
        Mask u = 0;
        for (size_t i = 0; i < k; ++i)
            if (pick >> i & 1u) u |= sets[i];
        if (popcount(u) < __builtin_popcountll(pick) + 1) return false;
    }
    return true;
}

bool dmc_sdr(const std::vector<Mask>& sets, int n) {
    check_subsets(sets, n);
    for (int j = 1; j <= n; ++j)
        if (!has_sdr(sets, n, full_mask(n) & ~(Mask(1) << (j - 1)))) return false;
    return true;
}

bool dmc_spanning_tree(const std::vector<Mask>& sets, int n) {
    check_subsets(sets, n);
    if (static_cast<int>(sets.size()) != n - 1) return false;
    std::vector<int> comp(n + 1);
    std::function<bool(size_t)> search = [&](size_t k) {
        if (k == sets.size()) return true;
        auto el = elements_of(sets[k]);
        for (size_t a = 0; a < el.size(); ++a) {
            for (size_t b = a + 1; b < el.size(); ++b) {
                int ca = comp[el[a]], cb = comp[el[b]];
                if (ca == cb) continue;
                auto saved = comp;
                for (auto& c : comp)
                    if (c == cb) c = ca;
                if (search(k + 1)) return true;
                comp = std::move(saved);
            }
        }
        return false;
    };
    std::iota(comp.begin(), comp.end(), 0);
    return search(0);
}

DragonMarriageReport dragon_marriage_report(const std::vector<Mask>& sets, int n) {
    return {dmc_union_bound(sets, n), dmc_sdr(sets, n), dmc_spanning_tree(sets, n)};
}

bool dragon_marriage_check(const std::vector<Mask>& sets, int n, bool verify) {
    bool verdict = dmc_sdr(sets, n);
    if (verify) {
        auto r = dragon_marriage_report(sets, n);
        require_consistent(r.union_bound == verdict && r.spanning_tree == verdict,
                           "dragon marriage forms disagree");
    }
    return verdict;
}

Integer dragon_families_by_volume(int n) {
    require_domain(n >= 1 && n <= 12, "dragon_families_by_volume: n out of range");
    RationalVector x;
    for (int i = 0; i < n; ++i) x.push_back(-Rational(Integer(Integer(1) << i)));
    return to_integer(Rational(factorial(n - 1)) * volume_numeric_symmetrization(x));
}

Integer count_dragon_families(int n, bool force) {
    require_domain(n >= 2, "count_dragon_families: n must be at least 2");
    if (!force && n > 5) throw ResourceLimitError("count_dragon_families: n > 5 needs force");
    const Mask top = full_mask(n);
    std::vector<Mask> sets(n - 1, 1);
    std::uint64_t count = 0;
    std::function<void(int, Mask)> rec = [&](int k, Mask uni) {
        if (k == n - 1) {
            if (popcount(uni) == n && dmc_sdr(sets, n)) ++count;
            return;
        }
        for (Mask s = 1; s <= top; ++s) {
            sets[k] = s;
            rec(k + 1, uni | s);
        }
    };
    rec(0, 0);
    Integer enumerated(static_cast<unsigned long>(count));
    require_consistent(enumerated == dragon_families_by_volume(n), "dragon family count disagrees with volume route");
    return enumerated;
}

bool is_g_draconian(const SubsetFamily& f, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != f.m()) return false;
    int total = 0;
    for (int x : a) {
        if (x < 0) return false;
        total += x;
    }
    if (total != f.n - 1) return false;
    for (Mask u = 1; u <= full_mask(f.n); ++u) {
        int load = 0;
        for (int i = 0; i < f.m(); ++i)
            if ((f.subsets[i] & ~u) == 0) load += a[i];
        if (load > popcount(u) - 1) return false;
    }
    return true;
}

void for_each_g_draconian(const SubsetFamily& f, bool force, const std::function<void(const std::vector<int>&)>& fn) {
    const int n = f.n, m = f.m();
    guard(std::uint64_t(m) << n, force, "draconian enumeration");
    const Mask top = full_mask(n);
    std::vector<int> load(std::size_t(top) + 1, 0);
    std::vector<int> a(m, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == m) {
            if (left == 0) fn(a);
            return;
        }
        const Mask s = f.subsets[i];
        const Mask rest = top & ~s;
        int cap = std::min(left, popcount(s) - 1);
        for (int v = cap; v >= 0; --v) {
            bool ok = true;
            if (v > 0) {
                for (Mask sub = rest;; sub = (sub - 1) & rest) {
                    Mask u = s | sub;
                    if (load[u] + v > popcount(u) - 1) {
                        ok = false;
                        break;
                    }
                    if (sub == 0) break;
                }
            }
            if (!ok) continue;
            if (v > 0)
                for (Mask sub = rest;; sub = (sub - 1) & rest) {
                    load[s | sub] += v;
                    if (sub == 0) break;
                }
            a[i] = v;
            rec(i + 1, left - v);
            if (v > 0)
                for (Mask sub = rest;; sub = (sub - 1) & rest) {
                    load[s | sub] -= v;
                    if (sub == 0) break;
                }
        }
        a[i] = 0;
    };
    rec(0, n - 1);
}

std::vector<std::vector<int>> g_draconian_sequences(const SubsetFamily& f, bool force) {
    std::vector<std::vector<int>> out;
    for_each_g_draconian(f, force, [&](const std::vector<int>& a) { out.push_back(a); });
    return out;
}

Rational volume(const SubsetFamily& f, bool force) {
    Rational total;
    for_each_g_draconian(f, force, [&](const std::vector<int>& a) {
        Rational t(1);
        for (int i = 0; i < f.m(); ++i)
            if (a[i]) t *= pow(f.weights[i], static_cast<unsigned>(a[i])) / Rational(factorial(a[i]));
        total += t;
    });
    return total;
}

RationalPolynomial volume_polynomial(const SubsetFamily& f, bool force) {
    std::vector<std::string> vars;
    for (int i = 1; i <= f.m(); ++i) vars.push_back(indexed_var("y", i));
    RationalPolynomial p(vars);
    for_each_g_draconian(f, force, [&](const std::vector<int>& a) {
        Rational c(1);
        for (int x : a) c /= Rational(factorial(x));
        p.add_term(a, c);
    });
    return p;
}

Integer lattice_points(const SubsetFamily& f, bool trimmed, bool force) {
    SubsetFamily g = f;
    for (const auto& w : g.weights) to_nonneg_integer(w, "lattice_points");
    if (!trimmed) {
        auto it = std::find(g.subsets.begin(), g.subsets.end(), full_mask(g.n));
        if (it == g.subsets.end()) {
            g.subsets.insert(g.subsets.begin(), full_mask(g.n));
            g.weights.insert(g.weights.begin(), Rational(0));
            it = g.subsets.begin();
        }
        g.weights[it - g.subsets.begin()] += Rational(1);
    }
    Rational total;
    for_each_g_draconian(g, force, [&](const std::vector<int>& a) {
        Rational t(1);
        for (int i = 0; i < g.m(); ++i)
            if (a[i]) t *= rising_factorial(g.weights[i], static_cast<unsigned>(a[i])) / Rational(factorial(a[i]));
        total += t;
    });
    return to_integer(total);
}

SubsetMap weights_by_subset(const SubsetFamily& f) {
    SubsetMap y;
    for (int i = 0; i < f.m(); ++i) y[f.subsets[i]] += f.weights[i];
    return y;
}

SubsetMap z_from_y(const SubsetMap& y, int n) {
    require_domain(n >= 1 && n <= 20, "z_from_y: n out of range");
    const Mask top = full_mask(n);
    std::vector<Rational> z(std::size_t(top) + 1);
    for (const auto& [s, w] : y) {
        require_domain(s != 0 && (s & ~top) == 0, "z_from_y: subset outside [n]");
        z[s] += w;
    }
    for (int b = 0; b < n; ++b)
        for (Mask s = 1; s <= top; ++s)
            if (s >> b & 1u) z[s] += z[s & ~(Mask(1) << b)];
    SubsetMap out;
    for (Mask s = 1; s <= top; ++s) out[s] = z[s];
    return out;
}

SubsetMap z_from_y(const SubsetFamily& f) { return z_from_y(weights_by_subset(f), f.n); }

SubsetMap moebius_y_from_z(const SubsetMap& z, int n) {
    require_domain(n >= 1 && n <= 20, "moebius_y_from_z: n out of range");
    const Mask top = full_mask(n);
    std::vector<Rational> y(std::size_t(top) + 1);
    for (const auto& [s, w] : z) {
        require_domain(s != 0 && (s & ~top) == 0, "moebius_y_from_z: subset outside [n]");
        y[s] = w;
    }
    for (int b = 0; b < n; ++b)
        for (Mask s = 1; s <= top; ++s)
            if (s >> b & 1u) y[s] -= y[s & ~(Mask(1) << b)];
    SubsetMap out;
    for (Mask s = 1; s <= top; ++s) out[s] = y[s];
    return out;
}

Integer lattice_points_enumerated(const SubsetFamily& f, bool trimmed, bool force) {
    for (const auto& w : f.weights) to_nonneg_integer(w, "lattice_points_enumerated");
    const int n = f.n;
    const Mask top = full_mask(n);
    auto zmap = z_from_y(f);
    std::vector<long> z(std::size_t(top) + 1, 0);
    for (const auto& [s, v] : zmap) z[s] = to_integer(v).get_si();
    long target = z[top] - (trimmed ? 1 : 0);
    std::vector<long> lo(n), hi(n);
    std::uint64_t work = std::uint64_t(1) << n;
    for (int j = 0; j < n; ++j) {
        lo[j] = z[Mask(1) << j];
        hi[j] = target - z[top & ~(Mask(1) << j)];
        if (hi[j] < lo[j]) return 0;
        work *= std::uint64_t(hi[j] - lo[j] + 1);
        if (work > (std::uint64_t(1) << 62)) work = std::uint64_t(1) << 62;
    }
    guard(work, force, "lattice point enumeration");
    std::vector<long> sums(std::size_t(top) + 1, 0), t(n, 0);
    std::uint64_t count = 0;
    std::function<void(int, long)> rec = [&](int j, long partial) {
        if (j == n - 1) {
            long last = target - partial;
            if (last < lo[j] || last > hi[j]) return;
            t[j] = last;
            for (Mask s = 1; s < top; ++s) {
                long acc = 0;
                for (int k = 0; k < n; ++k)
                    if (s >> k & 1u) acc += t[k];
                if (acc < z[s]) return;
            }
            ++count;
            return;
        }
        for (long v = lo[j]; v <= hi[j]; ++v) {
            t[j] = v;
            rec(j + 1, partial + v);
        }
    };
    rec(0, 0);
    return Integer(static_cast<unsigned long>(count));
}

bool generic_minors_nonzero(const std::vector<Mask>& sets, int n, std::uint64_t seed) {
    check_subsets(sets, n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
    RationalMatrix a(sets.size(), std::vector<Rational>(n));
    for (size_t k = 0; k < sets.size(); ++k)
        for (int j : elements_of(sets[k])) {
            long v = 0;
            while (v == 0) v = num(rng);
            a[k][j - 1] = Rational(Integer(v), Integer(den(rng)));
        }
    for (int drop = 0; drop < n; ++drop) {
        RationalMatrix minor(sets.size());
        for (size_t k = 0; k < sets.size(); ++k)
            for (int j = 0; j < n; ++j)
                if (j != drop) minor[k].push_back(a[k][j]);
        if (determinant(minor).is_zero()) return false;
    }
    return true;
}

Rational mixed_volume_simplices(const std::vector<Mask>& sets, int n, bool verify, std::uint64_t seed) {
    require_domain(static_cast<int>(sets.size()) == n - 1, "mixed volume needs exactly n-1 simplices");
    bool dmc = dragon_marriage_check(sets, n, verify);
    if (verify) {
        bool generic = generic_minors_nonzero(sets, n, seed);
        if (!generic && dmc) generic = generic_minors_nonzero(sets, n, seed + 0x9e3779b97f4a7c15ULL);
        require_consistent(generic == dmc, "generic-minor test disagrees with the dragon marriage condition");
    }
    return dmc ? Rational(1) / Rational(factorial(n - 1)) : Rational(0);
}

Rational volume_vertex_sum(const SubsetMap& y, int n) {
    require_domain(n >= 1 && n <= 10, "volume_vertex_sum: n out of range");
    std::vector<std::pair<Mask, Rational>> terms;
    for (const auto& [s, w] : y) {
        require_domain(s != 0 && (s & ~full_mask(n)) == 0, "volume_vertex_sum: subset outside [n]");
        if (popcount(s) > 1 && !w.is_zero()) terms.emplace_back(s, w);
    }
    Rational total;
    std::vector<int> winv(n + 1);
    for_each_permutation(n, [&](const Permutation& w) {
        for (int k = 1; k <= n; ++k) winv[w[k - 1]] = k;
        Rational lin;
        for (const auto& [s, weight] : terms) {
            int k = n + 1;
            for (int j : elements_of(s)) k = std::min(k, winv[j]);
            lin += Rational(w[k - 1]) * weight;
        }
        Rational den(1);
        for (int i = 0; i + 1 < n; ++i) den *= Rational(w[i] - w[i + 1]);
        total += pow(lin, static_cast<unsigned>(n - 1)) / den;
    });
    return total / Rational(factorial(n - 1));
}

Rational volume_descent_sum(const SubsetMap& y, int n, bool force) {
    require_domain(n >= 1, "volume_descent_sum: n must be positive");
    if (!force && n > 4) throw ResourceLimitError("volume_descent_sum: n > 4 needs force");
    const Mask top = full_mask(n);
    std::vector<Rational> weight(std::size_t(top) + 1);
    for (const auto& [s, w] : y) {
        require_domain(s != 0 && (s & ~top) == 0, "volume_descent_sum: subset outside [n]");
        weight[s] = w;
    }
    std::map<Mask, std::vector<Permutation>> by_descent;
    for_each_permutation(n, [&](const Permutation& w) { by_descent[descent_mask(w)].push_back(w); });

    Rational total;
    std::vector<Mask> tuple(std::max(n - 1, 0), 1);
    std::function<void(int)> rec = [&](int k) {
        if (k == n - 1) {
            Composition a(n, 0);
            for (Mask s : tuple) ++a[min_element_of(s) - 1];
            auto I = descent_index_set(a).I;
            Mask im = I.empty() ? 0 : mask_of(I);
            Rational inner;
            for (const auto& w : by_descent[im]) {
                Rational prod(1);
                for (Mask s : tuple) {
                    Mask img = 0;
                    for (int j : elements_of(s)) img |= Mask(1) << (w[j - 1] - 1);
                    prod *= weight[img];
                    if (prod.is_zero()) break;
                }
                inner += prod;
            }
            if (I.size() % 2) total -= inner;
            else total += inner;
            return;
        }
        for (Mask s = 1; s <= top; ++s) {
            tuple[k] = s;
            rec(k + 1);
        }
    };
    rec(0);
    return total / Rational(factorial(n - 1));
}

std::pair<Integer, Integer> duality_check(const SubsetFamily& f, bool force) {
    for (const auto& w : f.weights) require_domain(w == Rational(1), "duality_check expects unit weights");
    Integer a = lattice_points(f, true, force);
    Integer b = lattice_points(f.mirror(), true, force);
    require_consistent(a == b, "trimmed lattice counts of G and G* differ");
    return {a, b};
}

}  // namespace gperm
