#include "gperm/genperm.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "gperm/errors.hpp"

namespace gperm {

namespace {

constexpr int kMaxGround = 20;

std::string subset_str(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

bool canonical_less(Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return elements_of(a) < elements_of(b);
}

template <class F>
void for_each_submask(Mask s, F&& f) {
    for (Mask t = s;; t = (t - 1) & s) {
        f(t);
        if (t == 0) break;
    }
}

}  // namespace

Graph Graph::path(int n) {
    Graph g{n, {}};
    for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.edges.emplace_back(1, n);
    return g;
}

Graph Graph::complete(int n) {
    Graph g{n, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.edges.emplace_back(i, j);
    return g;
}

Graph Graph::star(const std::vector<int>& arms) {
    Graph g{1, {}};
    for (int len : arms) {
        require_domain(len >= 0, "star: negative arm length");
        int prev = 1;
        for (int k = 0; k < len; ++k) {
            ++g.n;
            g.edges.emplace_back(prev, g.n);
            prev = g.n;
        }
    }
    return g;
}

bool Graph::connected_subset(Mask s) const {
    if (s == 0) return false;
    Mask seen = Mask(1) << (min_element_of(s) - 1);
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [a, b] : edges) {
            Mask ma = Mask(1) << (a - 1), mb = Mask(1) << (b - 1);
            if (!(s & ma) || !(s & mb)) continue;
            if ((seen & ma) && !(seen & mb)) { seen |= mb; grew = true; }
            if ((seen & mb) && !(seen & ma)) { seen |= ma; grew = true; }
        }
    }
    return seen == s;
}

BuildingCheck is_building(int n, const std::vector<Mask>& members) {
    require_domain(n >= 1 && n <= kMaxGround, "building set ground size out of range");
    for (Mask m : members)
        require_domain(m != 0 && (m & ~full_mask(n)) == 0, "building set member out of range");
    std::vector<Mask> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    BuildingCheck res;
    for (int i = 1; i <= n; ++i) {
        Mask s = Mask(1) << (i - 1);
        if (!std::binary_search(sorted.begin(), sorted.end(), s)) {
            res.ok = false;
            res.reason = "missing singleton " + subset_str(s);
            res.witness = std::make_pair(s, s);
            return res;
        }
    }
    for (size_t a = 0; a < sorted.size(); ++a) {
        for (size_t b = a + 1; b < sorted.size(); ++b) {
            Mask u = sorted[a] | sorted[b];
            if ((sorted[a] & sorted[b]) && !std::binary_search(sorted.begin(), sorted.end(), u)) {
                res.ok = false;
                res.reason = "union of intersecting " + subset_str(sorted[a]) + " and " + subset_str(sorted[b]) +
                             " is missing";
                res.witness = std::make_pair(sorted[a], sorted[b]);
                return res;
            }
        }
    }
    return res;
}

BuildingSet::BuildingSet(int n, std::vector<Mask> members, bool graphical)
    : n_(n), members_(std::move(members)), graphical_(graphical) {
    auto check = is_building(n_, members_);
    if (!check.ok) throw DomainError("not a building set: " + check.reason);
    std::sort(members_.begin(), members_.end(), canonical_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    member_flag_.assign(std::size_t(1) << n_, 0);
    for (Mask m : members_) member_flag_[m] = 1;
}

BuildingSet BuildingSet::all_subsets(int n) { return graphical(Graph::complete(n)); }
BuildingSet BuildingSet::intervals(int n) { return graphical(Graph::path(n)); }
BuildingSet BuildingSet::cyclic(int n) { return graphical(Graph::cycle(n)); }

BuildingSet BuildingSet::pitman_stanley(int n) {
    std::vector<Mask> m;
    for (int i = 1; i <= n; ++i) {
        m.push_back(Mask(1) << (i - 1));
        m.push_back(full_mask(i));
    }
    return BuildingSet(n, m);
}

BuildingSet BuildingSet::graphical(const Graph& g) {
    require_domain(g.n >= 1 && g.n <= kMaxGround, "graph size out of range");
    for (auto [a, b] : g.edges)
        require_domain(a >= 1 && a <= g.n && b >= 1 && b <= g.n && a != b, "graph edge out of range");
    std::vector<Mask> m;
    for (Mask s = 1; s <= full_mask(g.n); ++s)
        if (g.connected_subset(s)) m.push_back(s);
    return BuildingSet(g.n, m, true);
}

BuildingSet BuildingSet::from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Mask> m;
        for (const auto& s : j.at("members")) m.push_back(mask_of(s.get<std::vector<int>>()));
        return BuildingSet(n, m);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed building set JSON: ") + e.what());
    }
}

nlohmann::json BuildingSet::to_json() const {
    nlohmann::json members = nlohmann::json::array();
    for (Mask m : members_) members.push_back(elements_of(m));
    return {{"n", n_}, {"members", members}};
}

bool BuildingSet::contains(Mask s) const { return s != 0 && s <= full_mask(n_) && member_flag_[s]; }

std::vector<Mask> BuildingSet::components(Mask t) const {
    std::vector<Mask> out;
    while (t) {
        Mask low = t & (~t + 1);
        Mask best = low;
        for_each_submask(t, [&](Mask s) {
            if ((s & low) && member_flag_[s] && popcount(s) > popcount(best)) best = s;
        });
        out.push_back(best);
        t &= ~best;
    }
    return out;
}

bool is_nested_set(const BuildingSet& b, const NestedSet& nested) {
    for (Mask s : nested)
        if (!b.contains(s)) return false;
    for (size_t i = 0; i < nested.size(); ++i) {
        for (size_t j = i + 1; j < nested.size(); ++j) {
            Mask a = nested[i], c = nested[j];
            if (a == c) return false;
            bool comparable = (a & c) == a || (a & c) == c;
            if ((a & c) && !comparable) return false;
        }
    }
    // (N2) over families of >= 2 pairwise disjoint elements
    const size_t k = nested.size();
    bool pairs_only = b.is_graphical();
    std::function<bool(size_t, Mask, int)> bad = [&](size_t from, Mask uni, int count) {
        if (count >= 2 && b.contains(uni)) return true;
        if (pairs_only && count >= 2) return false;
        for (size_t i = from; i < k; ++i)
            if (!(nested[i] & uni) && bad(i + 1, uni | nested[i], count + 1)) return true;
        return false;
    };
    if (bad(0, 0, 0)) return false;
    for (Mask m : b.maximal())
        if (std::find(nested.begin(), nested.end(), m) == nested.end()) return false;
    return true;
}

namespace {

bool nested_less(const NestedSet& a, const NestedSet& c) {
    if (a.size() != c.size()) return a.size() < c.size();
    return std::lexicographical_compare(a.begin(), a.end(), c.begin(), c.end(), canonical_less);
}

struct NestedEnumerator {
    const BuildingSet& b;
    std::map<Mask, std::vector<NestedSet>> memo;

    // Nested sets of the components of b restricted to t, one from each, merged.
    std::vector<NestedSet> forest(Mask t) {
        std::vector<NestedSet> acc{NestedSet{}};
        for (Mask c : b.components(t)) {
            const auto& part = containing(c);
            std::vector<NestedSet> next;
            next.reserve(acc.size() * part.size());
            for (const auto& a : acc) {
                for (const auto& p : part) {
                    NestedSet merged = a;
                    merged.insert(merged.end(), p.begin(), p.end());
                    next.push_back(std::move(merged));
                }
            }
            acc = std::move(next);
        }
        return acc;
    }

    // Nested sets of b restricted to the member s that contain s.
    const std::vector<NestedSet>& containing(Mask s) {
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        std::vector<NestedSet> out;
        for_each_submask(s, [&](Mask t) {
            if (t == s) return;
            for (auto& below : forest(t)) {
                below.push_back(s);
                out.push_back(std::move(below));
            }
        });
        return memo.emplace(s, std::move(out)).first->second;
    }
};

}  // namespace

std::vector<NestedSet> nested_sets(const BuildingSet& b) {
    NestedEnumerator e{b, {}};
    auto all = e.forest(full_mask(b.n()));
    for (auto& ns : all) std::sort(ns.begin(), ns.end(), canonical_less);
    std::sort(all.begin(), all.end(), nested_less);
    return all;
}

RationalPolynomial f_polynomial_enumerated(const BuildingSet& b) {
    RationalPolynomial f({"q"});
    for (const auto& ns : nested_sets(b)) f.add_term({b.n() - static_cast<int>(ns.size())}, Rational(1));
    return f;
}

RationalPolynomial f_polynomial_recurrence(const BuildingSet& b) {
    std::map<Mask, RationalPolynomial> memo;
    auto q = RationalPolynomial::variable("q");
    std::function<RationalPolynomial(Mask)> f = [&](Mask t) -> RationalPolynomial {
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        RationalPolynomial result = RationalPolynomial::constant(Rational(1)).with_vars({"q"});
        for (Mask c : b.components(t)) {
            RationalPolynomial conn({"q"});
            if (popcount(c) == 1) {
                conn = RationalPolynomial::constant(Rational(1)).with_vars({"q"});
            } else {
                for_each_submask(c, [&](Mask sub) {
                    if (sub == c) return;
                    conn += q.pow(static_cast<unsigned>(popcount(c) - popcount(sub) - 1)) * f(sub);
                });
            }
            result *= conn;
        }
        memo.emplace(t, result);
        return result;
    };
    return f(full_mask(b.n())).with_vars({"q"});
}

RationalPolynomial f_polynomial(const BuildingSet& b) {
    auto a = f_polynomial_enumerated(b);
    auto r = f_polynomial_recurrence(b);
    require_consistent(a == r, "f-polynomial routes disagree: " + a.str() + " vs " + r.str());
    return r;
}

std::vector<int> BForest::roots() const {
    std::vector<int> r;
    for (size_t i = 0; i < parent.size(); ++i)
        if (parent[i] == 0) r.push_back(static_cast<int>(i) + 1);
    return r;
}

std::vector<int> BForest::children(int i) const {
    std::vector<int> c;
    for (size_t k = 0; k < parent.size(); ++k)
        if (parent[k] == i) c.push_back(static_cast<int>(k) + 1);
    return c;
}

Mask BForest::desc(int i) const {
    Mask m = Mask(1) << (i - 1);
    for (int c : children(i)) m |= desc(c);
    return m;
}

NestedSet nested_set_of(const BForest& f) {
    NestedSet ns;
    for (int i = 1; i <= static_cast<int>(f.parent.size()); ++i) ns.push_back(f.desc(i));
    std::sort(ns.begin(), ns.end(), canonical_less);
    return ns;
}

bool is_b_forest(const BuildingSet& b, const BForest& f) {
    const int n = static_cast<int>(f.parent.size());
    if (n != b.n()) return false;
    for (int i = 1; i <= n; ++i) {
        int p = f.parent[i - 1];
        if (p < 0 || p > n || p == i) return false;
    }
    // acyclic: every node reaches a root within n steps
    for (int i = 1; i <= n; ++i) {
        int cur = i, steps = 0;
        while (cur != 0 && steps <= n) {
            cur = f.parent[cur - 1];
            ++steps;
        }
        if (cur != 0) return false;
    }
    for (int i = 1; i <= n; ++i)
        if (!b.contains(f.desc(i))) return false;
    std::vector<Mask> root_sets;
    for (int r : f.roots()) root_sets.push_back(f.desc(r));
    std::sort(root_sets.begin(), root_sets.end());
    auto maxes = b.maximal();
    std::sort(maxes.begin(), maxes.end());
    if (root_sets != maxes) return false;
    return is_nested_set(b, nested_set_of(f));
}

std::vector<BForest> b_forests(const BuildingSet& b) {
    const int n = b.n();
    std::map<Mask, std::vector<std::vector<int>>> memo;
    std::function<const std::vector<std::vector<int>>&(Mask)> forests;
    std::function<std::vector<std::vector<int>>(Mask)> trees = [&](Mask c) {
        std::vector<std::vector<int>> out;
        for (int i : elements_of(c)) {
            Mask rest = c & ~(Mask(1) << (i - 1));
            for (auto p : forests(rest)) {
                for (int k : elements_of(rest))
                    if (p[k - 1] == 0) p[k - 1] = i;
                out.push_back(std::move(p));
            }
        }
        return out;
    };
    forests = [&](Mask t) -> const std::vector<std::vector<int>>& {
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        std::vector<std::vector<int>> acc{std::vector<int>(n, 0)};
        for (Mask c : b.components(t)) {
            auto part = trees(c);
            std::vector<std::vector<int>> next;
            for (const auto& a : acc) {
                for (const auto& p : part) {
                    std::vector<int> merged = a;
                    for (int k : elements_of(c)) merged[k - 1] = p[k - 1];
                    next.push_back(std::move(merged));
                }
            }
            acc = std::move(next);
        }
        return memo.emplace(t, std::move(acc)).first->second;
    };
    std::vector<BForest> out;
    for (const auto& p : forests(full_mask(n))) out.push_back(BForest{p});
    std::sort(out.begin(), out.end());
    return out;
}

Integer generalized_catalan(const BuildingSet& b) {
    std::map<Mask, Integer> memo;
    std::function<Integer(Mask)> count = [&](Mask t) -> Integer {
        if (t == 0) return 1;
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        Integer total = 1;
        for (Mask c : b.components(t)) {
            Integer trees = 0;
            for (int i : elements_of(c)) trees += count(c & ~(Mask(1) << (i - 1)));
            total *= trees;
        }
        memo.emplace(t, total);
        return total;
    };
    return count(full_mask(b.n()));
}

std::vector<Rational> vertex_coordinates(const BuildingSet& b, const SubsetWeights& y, const BForest& f) {
    const int n = b.n();
    require_domain(static_cast<int>(f.parent.size()) == n, "forest size does not match building set");
    for (const auto& [m, w] : y) require_domain(b.contains(m), "weight given for a non-member " + subset_str(m));
    std::vector<Rational> t(n);
    for (int i = 1; i <= n; ++i) {
        Mask d = f.desc(i);
        Mask bit = Mask(1) << (i - 1);
        for (Mask j : b.members()) {
            if (!(j & bit) || (j & ~d)) continue;
            auto it = y.find(j);
            if (it == y.end()) {
                require_domain(popcount(j) == 1, "missing weight for member " + subset_str(j));
                continue;
            }
            t[i - 1] += it->second;
        }
    }
    return t;
}

std::vector<std::vector<long>> local_cone_generators(const BForest& f) {
    const int n = static_cast<int>(f.parent.size());
    std::vector<std::vector<long>> gens;
    for (int i = 1; i <= n; ++i) {
        int p = f.parent[i - 1];
        if (p == 0) continue;
        std::vector<long> g(n, 0);
        g[i - 1] = 1;
        g[p - 1] = -1;
        gens.push_back(g);
    }
    return gens;
}

Integer star_catalan(std::vector<int> arms) {
    static std::map<std::vector<int>, Integer> memo;
    static std::mutex mu;
    arms.erase(std::remove(arms.begin(), arms.end(), 0), arms.end());
    std::sort(arms.begin(), arms.end());
    if (arms.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(arms);
        if (it != memo.end()) return it->second;
    }
    Integer total = 1;
    for (int a : arms) total *= catalan(a);
    for (size_t k = 0; k < arms.size(); ++k) {
        for (int i = 1; i <= arms[k]; ++i) {
            auto shorter = arms;
            shorter[k] -= i;
            total += star_catalan(shorter) * catalan(i - 1);
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(arms, total);
    return total;
}

Graph dynkin_graph(DynkinKind kind, int n, const std::vector<int>& arms) {
    switch (kind) {
        case DynkinKind::A:
            require_domain(n >= 1, "A_n needs n >= 1");
            return Graph::path(n);
        case DynkinKind::AffineA:
            require_domain(n >= 2, "affine A_n needs n >= 2");
            return Graph::cycle(n + 1);
        case DynkinKind::D:
            require_domain(n >= 3, "D_n needs n >= 3");
            return Graph::star({1, 1, n - 3});
        case DynkinKind::E:
            require_domain(n >= 4, "E_n needs n >= 4");
            return Graph::star({1, 2, n - 4});
        case DynkinKind::Star:
            return Graph::star(arms);
    }
    throw DomainError("unknown Dynkin kind");
}

Integer dynkin_catalan(DynkinKind kind, int n, const std::vector<int>& arms) {
    Graph g = dynkin_graph(kind, n, arms);
    Integer closed;
    switch (kind) {
        case DynkinKind::A:
            closed = catalan(n);
            break;
        case DynkinKind::AffineA:
            closed = Integer(n + 1) * catalan(n);
            break;
        case DynkinKind::D:
            closed = 2 * catalan(n) - 2 * catalan(n - 1) - catalan(n - 2);
            require_consistent(closed == star_catalan({1, 1, n - 3}), "D_n closed form disagrees with star recurrence");
            break;
        case DynkinKind::E:
            closed = 3 * catalan(n) - 4 * catalan(n - 1) - 3 * catalan(n - 2) - 2 * catalan(n - 3);
            require_consistent(closed == star_catalan({1, 2, n - 4}), "E_n closed form disagrees with star recurrence");
            break;
        case DynkinKind::Star:
            closed = star_catalan(arms);
            break;
    }
    if (g.n <= 7)
        require_consistent(closed == generalized_catalan(BuildingSet::graphical(g)),
                           "Dynkin Catalan formula disagrees with B-forest count");
    return closed;
}

std::vector<int> PlaneBinaryTree::parent_vector() const {
    std::vector<int> p(size(), 0);
    for (int i = 1; i <= size(); ++i) {
        if (left[i]) p[left[i] - 1] = i;
        if (right[i]) p[right[i] - 1] = i;
    }
    return p;
}

PlaneBinaryTree PlaneBinaryTree::from_forest(const BForest& f) {
    const int n = static_cast<int>(f.parent.size());
    PlaneBinaryTree t;
    t.left.assign(n + 1, 0);
    t.right.assign(n + 1, 0);
    t.lo.assign(n + 1, 0);
    t.hi.assign(n + 1, 0);
    auto roots = f.roots();
    require_domain(roots.size() == 1, "plane binary tree needs a single root");
    t.root = roots[0];
    for (int i = 1; i <= n; ++i) {
        Mask d = f.desc(i);
        int lo = min_element_of(d), hi = max_element_of(d);
        require_domain(popcount(d) == hi - lo + 1, "descendant set is not an interval");
        t.lo[i] = lo;
        t.hi[i] = hi;
        for (int c : f.children(i)) {
            int& slot = c < i ? t.left[i] : t.right[i];
            require_domain(slot == 0, "node has two children on one side");
            slot = c;
        }
    }
    return t;
}

std::vector<PlaneBinaryTree> plane_binary_trees(int n) {
    require_domain(n >= 0, "plane_binary_trees: negative size");
    std::function<std::vector<std::vector<int>>(int, int)> gen = [&](int a, int b) {
        std::vector<std::vector<int>> out;
        if (a > b) {
            out.push_back(std::vector<int>(n, 0));
            return out;
        }
        for (int k = a; k <= b; ++k) {
            auto ls = gen(a, k - 1);
            auto rs = gen(k + 1, b);
            for (const auto& l : ls) {
                for (const auto& r : rs) {
                    std::vector<int> p(n, 0);
                    for (int i = a; i <= b; ++i) {
                        if (i < k) p[i - 1] = l[i - 1] ? l[i - 1] : k;
                        else if (i > k) p[i - 1] = r[i - 1] ? r[i - 1] : k;
                    }
                    out.push_back(std::move(p));
                }
            }
        }
        return out;
    };
    std::vector<PlaneBinaryTree> trees;
    if (n == 0) return trees;
    for (const auto& p : gen(1, n)) trees.push_back(PlaneBinaryTree::from_forest(BForest{p}));
    return trees;
}

std::vector<long> loday_vertex(const PlaneBinaryTree& t) {
    std::vector<long> v(t.size());
    for (int i = 1; i <= t.size(); ++i) v[i - 1] = long(i - t.lo[i] + 1) * long(t.hi[i] - i + 1);
    return v;
}

}  // namespace gperm
