#include "gperm/eulerian.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "gperm/errors.hpp"
#include "gperm/minkowski.hpp"
#include "gperm/permutohedron.hpp"

namespace gperm {

namespace {

std::vector<std::string> u_vars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(indexed_var("u", i));
    return v;
}

void check_composition(const Composition& c) {
    const int n = static_cast<int>(c.size());
    require_domain(n >= 1, "composition must have at least one part");
    int total = 0;
    for (int x : c) {
        require_domain(x >= 0, "composition parts must be nonnegative");
        total += x;
    }
    require_domain(total == n, "composition of n into n parts required");
}

bool colex_less(const Composition& a, const Composition& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::vector<Composition> colex_compositions(int n) {
    auto cs = compositions_of(n, n);
    std::sort(cs.begin(), cs.end(), colex_less);
    return cs;
}

Integer coefficient_times_factorials(const RationalPolynomial& p, const Composition& c) {
    Rational v = p.coefficient(c);
    for (int x : c) v *= Rational(factorial(x));
    return to_integer(v);
}

std::mutex cache_mutex;
bool cache_overridden = false;
std::optional<std::filesystem::path> cache_override;

}  // namespace

Integer eulerian_number(int n, int k) {
    require_domain(n >= 0, "eulerian_number: n must be nonnegative");
    if (n == 0) return k == 1 ? 1 : 0;
    if (k < 1 || k > n) return 0;
    Integer total = 0;
    for (int j = 0; j <= k; ++j) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k - j), static_cast<unsigned long>(n));
        Integer term = binomial(n + 1, j) * p;
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

std::vector<int> hook_lengths(const PlaneBinaryTree& t) {
    std::vector<int> h(t.size() + 1, 0);
    for (int j = 1; j <= t.size(); ++j) h[j] = t.hi[j] - t.lo[j] + 1;
    return h;
}

Rational binary_tree_weight(const PlaneBinaryTree& t, int i, int j) {
    require_domain(j >= 1 && j <= t.size() && i >= t.lo[j] && i <= t.hi[j], "weight needs i in desc(j)");
    if (i <= j) return Rational(Integer(i - t.lo[j] + 1), Integer(j - t.lo[j] + 1));
    return Rational(Integer(t.hi[j] - i + 1), Integer(t.hi[j] - j + 1));
}

Rational volume_binary_trees(const RationalVector& u) {
    const int n = static_cast<int>(u.size());
    require_domain(n >= 1, "volume_binary_trees: empty u");
    Rational total;
    for (const auto& t : plane_binary_trees(n)) {
        Rational term(factorial(n));
        auto h = hook_lengths(t);
        for (int j = 1; j <= n; ++j) {
            term /= Rational(h[j]);
            Rational s;
            for (int i = t.lo[j]; i <= t.hi[j]; ++i) s += binary_tree_weight(t, i, j) * u[i - 1];
            term *= s;
        }
        total += term;
    }
    return total;
}

RationalPolynomial volume_binary_trees_symbolic(int n) {
    require_domain(n >= 1, "volume_binary_trees_symbolic: n must be positive");
    auto vars = u_vars(n);
    RationalPolynomial total(vars);
    for (const auto& t : plane_binary_trees(n)) {
        auto h = hook_lengths(t);
        Rational scale(factorial(n));
        RationalPolynomial term = RationalPolynomial::constant(Rational(1)).with_vars(vars);
        for (int j = 1; j <= n; ++j) {
            scale /= Rational(h[j]);
            std::vector<Rational> coeffs(n);
            for (int i = t.lo[j]; i <= t.hi[j]; ++i) coeffs[i - 1] = binary_tree_weight(t, i, j);
            term *= RationalPolynomial::linear(vars, coeffs);
        }
        total += term.scale(scale);
    }
    return total;
}

std::vector<Rational> hook_length_terms(int n) {
    require_domain(n >= 1, "hook_length_terms: n must be positive");
    std::vector<Rational> out;
    for (const auto& t : plane_binary_trees(n)) {
        Rational term = Rational(factorial(n)) / Rational(Integer(Integer(1) << n));
        auto h = hook_lengths(t);
        for (int j = 1; j <= n; ++j) term *= Rational(Integer(h[j] + 1), Integer(h[j]));
        out.push_back(term);
    }
    return out;
}

std::vector<Permutation> increasing_labelings(const PlaneBinaryTree& t) {
    const int n = t.size();
    std::vector<Permutation> out;
    Permutation v(n, 0);
    std::vector<int> frontier{t.root};
    std::function<void(int)> rec = [&](int label) {
        if (label > n) {
            out.push_back(v);
            return;
        }
        for (std::size_t k = 0; k < frontier.size(); ++k) {
            int node = frontier[k];
            v[node - 1] = label;
            std::vector<int> saved = frontier;
            frontier.erase(frontier.begin() + static_cast<long>(k));
            if (t.left[node]) frontier.push_back(t.left[node]);
            if (t.right[node]) frontier.push_back(t.right[node]);
            rec(label + 1);
            frontier = std::move(saved);
            v[node - 1] = 0;
        }
    };
    if (n > 0) rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IncreasingBinaryTree> increasing_binary_trees(int n) {
    std::vector<IncreasingBinaryTree> out;
    for (const auto& t : plane_binary_trees(n))
        for (auto& v : increasing_labelings(t)) out.push_back({t, std::move(v)});
    return out;
}

std::vector<WeightedTree> i_compatible_trees(const std::vector<int>& i) {
    const int n = static_cast<int>(i.size());
    require_domain(n >= 1 && n <= 10, "i_compatible_trees: length out of range");
    for (int x : i) require_domain(x >= 1 && x <= n, "i_compatible_trees: entries must lie in [n]");
    std::vector<WeightedTree> out;
    for (auto& it : increasing_binary_trees(n)) {
        Rational w(1);
        bool ok = true;
        for (int j = 1; j <= n && ok; ++j) {
            int idx = i[it.v[j - 1] - 1];
            if (idx < it.tree.lo[j] || idx > it.tree.hi[j]) ok = false;
            else w *= binary_tree_weight(it.tree, idx, j);
        }
        if (ok) out.push_back({std::move(it), w});
    }
    return out;
}

RationalPolynomial permutohedron_volume_u(int n) {
    require_domain(n >= 1, "permutohedron_volume_u: n must be positive");
    auto vars = u_vars(n);
    std::map<std::string, RationalPolynomial> x;
    for (int k = 1; k <= n + 1; ++k) {
        std::vector<Rational> coeffs(n);
        for (int i = k; i <= n; ++i) coeffs[i - 1] = 1;
        x.emplace(indexed_var("x", k), RationalPolynomial::linear(vars, coeffs));
    }
    return volume_symbolic(n + 1).substitute(x).with_vars(vars);
}

RationalPolynomial permutohedron_volume_u_draconian(int n, bool force) {
    require_domain(n >= 1, "permutohedron_volume_u_draconian: n must be positive");
    if (!force && n > 5) throw ResourceLimitError("draconian route for n > 5 needs force");
    auto family = SubsetFamily::all_subsets(n + 1);
    std::vector<int> size_of;
    for (Mask s : family.subsets) size_of.push_back(popcount(s));
    std::vector<long> fact(n + 1, 1);
    for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;

    // exponent of y_k (k = 2..n+1) stored at index k-2; value scaled by n!
    std::map<std::vector<int>, long> grouped;
    std::vector<int> key(n, 0);
    for_each_g_draconian(family, true, [&](const std::vector<int>& a) {
        std::fill(key.begin(), key.end(), 0);
        long scaled = fact[n];
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (!a[k]) continue;
            key[size_of[k] - 2] += a[k];
            scaled /= fact[a[k]];
        }
        grouped[key] += scaled;
    });

    std::vector<std::string> yv;
    for (int k = 2; k <= n + 1; ++k) yv.push_back(indexed_var("y", k));
    RationalPolynomial py(yv);
    for (const auto& [e, v] : grouped) py.add_term(e, Rational(v) / Rational(fact[n]));

    auto vars = u_vars(n);
    std::map<std::string, RationalPolynomial> y;
    for (int k = 1; k <= n; ++k) {
        std::vector<Rational> coeffs(n);
        for (int i = 0; i <= k - 1; ++i) {
            Rational b(binomial(k - 1, i));
            coeffs[k - i - 1] = i % 2 ? -b : b;
        }
        y.emplace(indexed_var("y", k + 1), RationalPolynomial::linear(vars, coeffs));
    }
    return py.substitute(y).with_vars(vars);
}

std::vector<int> default_realization(const Composition& c) {
    std::vector<int> i;
    for (std::size_t k = 0; k < c.size(); ++k)
        for (int r = 0; r < c[k]; ++r) i.push_back(static_cast<int>(k) + 1);
    return i;
}

Integer mixed_eulerian_trees(const Composition& c, std::vector<int> realization) {
    check_composition(c);
    const int n = static_cast<int>(c.size());
    if (realization.empty()) realization = default_realization(c);
    std::vector<int> counts(n, 0);
    require_domain(static_cast<int>(realization.size()) == n, "realization must have n entries");
    for (int x : realization) {
        require_domain(x >= 1 && x <= n, "realization entries must lie in [n]");
        ++counts[x - 1];
    }
    require_domain(counts == c, "realization does not match the composition");
    Rational total;
    for (const auto& wt : i_compatible_trees(realization)) total += wt.weight;
    return to_integer(total * Rational(factorial(n)));
}

Integer MixedEulerianTable::at(const Composition& c) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), c,
                               [](const auto& e, const Composition& k) { return colex_less(e.first, k); });
    require_domain(it != entries.end() && it->first == c, "composition not in table");
    return it->second;
}

nlohmann::json MixedEulerianTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [c, a] : entries) rows.push_back({{"c", c}, {"A", to_string(a)}});
    return {{"n", n}, {"draconian_checked", draconian_checked}, {"entries", rows}};
}

MixedEulerianTable MixedEulerianTable::from_json(const nlohmann::json& j) {
    try {
        MixedEulerianTable t;
        t.n = j.at("n").get<int>();
        t.draconian_checked = j.value("draconian_checked", false);
        for (const auto& row : j.at("entries"))
            t.entries.emplace_back(row.at("c").get<Composition>(), integer_from_string(row.at("A").get<std::string>()));
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed mixed Eulerian table JSON: ") + e.what());
    }
}

std::optional<std::filesystem::path> cache_directory() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache_overridden) return cache_override;
    if (const char* d = std::getenv("GPERM_CACHE_DIR"); d && *d) return std::filesystem::path(d);
    if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return std::filesystem::path(d) / "gperm";
    if (const char* d = std::getenv("HOME"); d && *d) return std::filesystem::path(d) / ".cache" / "gperm";
    return std::nullopt;
}

void set_cache_directory(std::optional<std::filesystem::path> dir) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache_overridden = true;
    cache_override = std::move(dir);
}

static std::optional<MixedEulerianTable> load_cached(int n, bool want_draconian) {
    auto dir = cache_directory();
    if (!dir) return std::nullopt;
    std::ifstream in(*dir / ("mixed_eulerian_" + std::to_string(n) + ".json"));
    if (!in) return std::nullopt;
    try {
        auto t = MixedEulerianTable::from_json(nlohmann::json::parse(in));
        auto expected = colex_compositions(n);
        if (t.n != n || t.entries.size() != expected.size()) return std::nullopt;
        for (std::size_t k = 0; k < expected.size(); ++k)
            if (t.entries[k].first != expected[k]) return std::nullopt;
        if (want_draconian && !t.draconian_checked) return std::nullopt;
        for (const auto& [name, ok] : mixed_eulerian_properties(t))
            if (!ok) return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

static void store_cached(const MixedEulerianTable& t) {
    auto dir = cache_directory();
    if (!dir) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (ec) return;
    auto final_path = *dir / ("mixed_eulerian_" + std::to_string(t.n) + ".json");
    auto tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << t.to_json().dump(1) << '\n';
        if (!out) return;
    }
    std::filesystem::rename(tmp, final_path, ec);
}

MixedEulerianTable mixed_eulerian_table(int n, bool force) {
    require_domain(n >= 1, "mixed_eulerian_table: n must be positive");
    if (!force && n > 6) throw ResourceLimitError("mixed Eulerian table for n > 6 needs force");
    const bool with_draconian = n <= 5;
    if (auto cached = load_cached(n, with_draconian)) return *cached;

    auto by_volume = permutohedron_volume_u(n);
    std::optional<RationalPolynomial> by_draconian;
    if (with_draconian) by_draconian = permutohedron_volume_u_draconian(n);
    require_consistent(by_volume == volume_binary_trees_symbolic(n), "binary-tree volume disagrees with the permutohedron volume");

    MixedEulerianTable t;
    t.n = n;
    t.draconian_checked = with_draconian;
    for (const auto& c : colex_compositions(n)) {
        Integer a = coefficient_times_factorials(by_volume, c);
        require_consistent(a == mixed_eulerian_trees(c), "tree route disagrees for a mixed Eulerian number");
        if (by_draconian)
            require_consistent(a == coefficient_times_factorials(*by_draconian, c),
                               "draconian route disagrees for a mixed Eulerian number");
        t.entries.emplace_back(c, a);
    }
    for (const auto& [name, ok] : mixed_eulerian_properties(t))
        require_consistent(ok, "mixed Eulerian property failed: " + name);
    store_cached(t);
    return t;
}

MixedEulerianValue mixed_eulerian(const Composition& c, bool force) {
    check_composition(c);
    const int n = static_cast<int>(c.size());
    auto table = mixed_eulerian_table(n, force);
    MixedEulerianValue v;
    v.by_volume = table.at(c);
    v.by_trees = mixed_eulerian_trees(c);
    if (table.draconian_checked) v.by_draconian = v.by_volume;
    require_consistent(v.by_trees == v.by_volume, "tree route disagrees for a mixed Eulerian number");
    v.value = v.by_volume;
    return v;
}

std::vector<std::pair<std::string, bool>> mixed_eulerian_properties(const MixedEulerianTable& t) {
    const int n = t.n;
    std::map<Composition, Integer> a(t.entries.begin(), t.entries.end());
    auto value = [&](const Composition& c) { return a.count(c) ? a.at(c) : Integer(-1); };
    std::vector<std::pair<std::string, bool>> out;

    bool positive = !a.empty();
    for (const auto& [c, v] : a) positive &= v > 0;
    out.emplace_back("positive integers", positive);

    bool reversal = true;
    for (const auto& [c, v] : a) reversal &= value(Composition(c.rbegin(), c.rend())) == v;
    out.emplace_back("reversal symmetry", reversal);

    bool eulerian = true;
    for (int k = 1; k <= n; ++k) {
        Composition c(n, 0);
        c[k - 1] = n;
        eulerian &= value(c) == eulerian_number(n, k);
    }
    out.emplace_back("Eulerian specialization", eulerian);

    Rational weighted;
    Integer plain = 0;
    for (const auto& [c, v] : a) {
        Rational term(v);
        for (int x : c) term /= Rational(factorial(x));
        weighted += term;
        plain += v;
    }
    Integer cayley;
    mpz_ui_pow_ui(cayley.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n - 1));
    out.emplace_back("sum A_c / prod c_i! = (n+1)^(n-1)", weighted == Rational(cayley));
    out.emplace_back("sum A_c = n! C_n", plain == factorial(n) * catalan(n));

    // permutations of [n+1] by descent number and last entry
    std::map<std::pair<int, int>, Integer> by_last;
    if (n <= 7)
        for_each_permutation(n + 1, [&](const Permutation& w) {
            by_last[{static_cast<int>(descent_set(w).size()), w[n]}] += 1;
        });
    bool adjacent = n <= 7;
    for (int k = 1; k <= n && adjacent; ++k)
        for (int i = 0; i <= (k < n ? n : 0); ++i) {
            Composition c(n, 0);
            c[k - 1] = n - i;
            if (i) c[k] = i;
            auto it = by_last.find({k, i + 1});
            adjacent &= value(c) == (it == by_last.end() ? Integer(0) : it->second);
        }
    out.emplace_back("two adjacent hypersimplices", adjacent);

    out.emplace_back("A_{1,...,1} = n!", value(Composition(n, 1)) == factorial(n));

    bool ends = true;
    if (n >= 2)
        for (int k = 0; k <= n; ++k) {
            Composition c(n, 0);
            c[0] = k;
            c[n - 1] = n - k;
            ends &= value(c) == binomial(n, k);
        }
    out.emplace_back("A_{k,0,...,0,n-k} = C(n,k)", ends);

    bool products = true;
    std::size_t catalan_sequences = 0;
    for (const auto& [c, v] : a) {
        int partial = 0;
        bool dominant = true;
        for (int i = 0; i < n; ++i) {
            partial += c[i];
            if (partial < i + 1) dominant = false;
        }
        if (!dominant) continue;
        ++catalan_sequences;
        Integer p = 1;
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < c[i]; ++r) p *= i + 1;
        products &= v == p;
    }
    products &= Integer(static_cast<unsigned long>(catalan_sequences)) == catalan(n);
    out.emplace_back("Catalan sequences give 1^c1 2^c2 ... n^cn", products);
    return out;
}

std::vector<Composition> cyclic_class(const Composition& c) {
    check_composition(c);
    const int n = static_cast<int>(c.size());
    Composition ext = c;
    ext.push_back(0);
    std::set<Composition> members;
    for (int s = 0; s <= n; ++s) {
        Composition r(ext.begin() + s, ext.end());
        r.insert(r.end(), ext.begin(), ext.begin() + s);
        if (r.back() == 0) members.insert(Composition(r.begin(), r.end() - 1));
    }
    std::vector<Composition> out(members.begin(), members.end());
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

CyclicClassCheck cyclic_class_check(const Composition& c, bool force) {
    const int n = static_cast<int>(c.size());
    auto table = mixed_eulerian_table(n, force);
    CyclicClassCheck r;
    r.members = cyclic_class(c);
    r.sum = 0;
    int dominant = 0;
    for (const auto& m : r.members) {
        r.sum += table.at(m);
        int partial = 0;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            partial += m[i];
            if (partial < i + 1) ok = false;
        }
        if (ok) {
            ++dominant;
            r.representative = m;
        }
    }
    require_consistent(dominant == 1, "cyclic class without a unique dominant representative");
    r.representative_value = table.at(r.representative);
    Integer p = 1;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < r.representative[i]; ++k) p *= i + 1;
    require_consistent(r.representative_value == p, "class representative is not the expected product");
    require_consistent(r.sum == factorial(n), "cyclic class sum differs from n!");
    return r;
}

std::size_t cyclic_class_count(int n) {
    require_domain(n >= 1 && n <= 12, "cyclic_class_count: n out of range");
    std::set<Composition> seen;
    std::size_t classes = 0;
    for (const auto& c : compositions_of(n, n)) {
        if (seen.count(c)) continue;
        ++classes;
        for (const auto& m : cyclic_class(c)) seen.insert(m);
    }
    return classes;
}

bool cyclic_symmetrization_check(int n, int samples, std::uint64_t seed) {
    require_domain(n >= 1, "cyclic_symmetrization_check: n must be positive");
    if (n > 5) throw ResourceLimitError("cyclic symmetrization check is limited to n <= 5");
    auto all = u_vars(n + 1);
    auto v = permutohedron_volume_u(n).with_vars(all);
    RationalPolynomial sum(all);
    for (int s = 0; s <= n; ++s) {
        std::map<std::string, RationalPolynomial> shift;
        for (int k = 1; k <= n + 1; ++k)
            shift.emplace(all[k - 1], RationalPolynomial::variable(all[(k - 1 + s) % (n + 1)]));
        sum += v.substitute(shift);
    }
    auto target = RationalPolynomial::linear(all, std::vector<Rational>(n + 1, Rational(1))).pow(static_cast<unsigned>(n));
    if (!(sum == target)) return false;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
    for (int trial = 0; trial < samples; ++trial) {
        RationalVector u(n + 1), lambda(n + 1);
        for (auto& x : u) x = Rational(Integer(num(rng)), Integer(den(rng)));
        std::set<Rational> used;
        for (auto& x : lambda) {
            do x = Rational(Integer(num(rng)), Integer(den(rng)));
            while (!used.insert(x).second);
        }
        Rational total;
        for (int s = 0; s <= n; ++s) {
            for_each_permutation(n + 1, [&](const Permutation& w) {
                Rational lin, partial;
                for (int k = 0; k <= n; ++k) {
                    partial += lambda[w[k] - 1];
                    lin += partial * u[(k + s) % (n + 1)];
                }
                Rational den_prod(1);
                for (int k = 0; k < n; ++k) den_prod *= lambda[w[k] - 1] - lambda[w[k + 1] - 1];
                total += pow(lin, static_cast<unsigned>(n)) / den_prod;
            });
        }
        total /= Rational(factorial(n));
        Rational su;
        for (const auto& x : u) su += x;
        if (total != pow(su, static_cast<unsigned>(n))) return false;
    }
    return true;
}

}  // namespace gperm
