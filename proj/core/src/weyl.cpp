#include "gperm/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "gperm/errors.hpp"
#include "gperm/eulerian.hpp"

namespace gperm {

namespace {

constexpr std::size_t kOrbitCap = 10000000;

std::vector<std::string> u_vars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(indexed_var("u", i));
    return v;
}

Rational inner(const RationalMatrix& g, const RationalVector& a, const RationalVector& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) s += a[i] * g[i][j] * b[j];
    }
    return s;
}

Weight act(const IntMatrix& m, const Weight& v) {
    Weight out(v.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

Weight simple_root(const RootSystem& phi, int i) {
    Weight a(phi.rank());
    for (int k = 0; k < phi.rank(); ++k) a[k] = phi.cartan[k][i];
    return a;
}

// s_i(λ)_k = λ_k - λ_i a_ki, in weight coordinates
void reflect(const IntMatrix& a, int i, std::vector<long>& v) {
    long c = v[i];
    if (!c) return;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * a[k][i];
}

// Size of the W_I-orbit of the fundamental weight ω_j (j in I), over the coordinates in I.
std::size_t fundamental_orbit_size(const IntMatrix& a, const std::vector<int>& idx, int j) {
    const int k = static_cast<int>(idx.size());
    IntMatrix sub(k, std::vector<int>(k));
    int pos = -1;
    for (int r = 0; r < k; ++r) {
        if (idx[r] == j) pos = r;
        for (int c = 0; c < k; ++c) sub[r][c] = a[idx[r]][idx[c]];
    }
    std::vector<long> start(k, 0);
    start[pos] = 1;
    std::set<std::vector<long>> seen{start};
    std::vector<std::vector<long>> frontier{start};
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& v : frontier)
            for (int i = 0; i < k; ++i) {
                if (!v[i]) continue;
                auto w = v;
                reflect(sub, i, w);
                if (seen.insert(w).second) {
                    if (seen.size() > kOrbitCap) throw DomainError("Weyl group orbit exceeds the cap; not of finite type");
                    next.push_back(std::move(w));
                }
            }
        frontier = std::move(next);
    }
    return seen.size();
}

Integer weyl_order_of(const IntMatrix& a, Mask I) {
    Integer order = 1;
    std::vector<int> idx;
    for (int e : elements_of(I)) idx.push_back(e - 1);
    while (!idx.empty()) {
        order *= static_cast<unsigned long>(fundamental_orbit_size(a, idx, idx.back()));
        idx.pop_back();
    }
    return order;
}

RationalMatrix fundamental_gram(const RationalMatrix& gram, const std::vector<Rational>& d, const std::vector<int>& idx) {
    const int k = static_cast<int>(idx.size());
    RationalMatrix b(k, RationalVector(k));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) b[r][c] = gram[idx[r]][idx[c]];
    auto inv = inverse(b);
    require_domain(inv.has_value(), "Gram matrix of simple roots is singular");
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) (*inv)[r][c] *= d[idx[r]] * d[idx[c]];
    return *inv;
}

std::vector<int> indices_of(Mask I) {
    std::vector<int> idx;
    for (int e : elements_of(I)) idx.push_back(e - 1);
    return idx;
}

std::vector<Mask> components_of(const RootSystem& phi, Mask I) {
    std::vector<Mask> out;
    Mask left = I;
    while (left) {
        Mask comp = left & (~left + 1);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i = 0; i < phi.rank(); ++i) {
                if (!(comp >> i & 1u)) continue;
                for (int j = 0; j < phi.rank(); ++j)
                    if ((left >> j & 1u) && !(comp >> j & 1u) && phi.cartan[i][j] != 0) {
                        comp |= Mask(1) << j;
                        grew = true;
                    }
            }
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

Graph induced_graph(const RootSystem& phi, const std::vector<int>& idx) {
    Graph g;
    g.n = static_cast<int>(idx.size());
    for (int r = 0; r < g.n; ++r)
        for (int c = r + 1; c < g.n; ++c)
            if (phi.cartan[idx[r]][idx[c]] != 0) g.edges.emplace_back(r + 1, c + 1);
    return g;
}

Mask lift(Mask local, const std::vector<int>& idx) {
    Mask out = 0;
    for (std::size_t k = 0; k < idx.size(); ++k)
        if (local >> k & 1u) out |= Mask(1) << idx[k];
    return out;
}

int position(Mask I, int i) { return popcount(I & ((Mask(1) << i) - 1)); }

struct GramCache {
    const RootSystem& phi;
    std::map<Mask, RationalMatrix> grams;
    const RationalMatrix& operator()(Mask I) {
        auto it = grams.find(I);
        if (it == grams.end()) it = grams.emplace(I, parabolic_fundamental_gram(phi, I)).first;
        return it->second;
    }
};

Rational prefactor(const RootSystem& phi, Mask I) {
    Rational p(parabolic_weyl_order(phi, I));
    for (int i : indices_of(I)) p *= Rational(2) / phi.gram_simple[i][i];
    return p;
}

// Tree-sum volume of a connected set of nodes, in the global variables u1..un.
RationalPolynomial component_volume(const RootSystem& phi, Mask C, GramCache& cache) {
    auto vars = u_vars(phi.rank());
    auto idx = indices_of(C);
    RationalPolynomial total(vars);
    for (const auto& t : phi_trees(induced_graph(phi, idx))) {
        RationalPolynomial term = RationalPolynomial::constant(Rational(1)).with_vars(vars);
        for (int j = 1; j <= static_cast<int>(idx.size()); ++j) {
            Mask I = lift(t.desc(j), idx);
            const auto& g = cache(I);
            int gj = idx[j - 1];
            std::vector<Rational> coeffs(phi.rank());
            for (int i : indices_of(I)) coeffs[i] = g[position(I, i)][position(I, gj)] / Rational(popcount(I));
            term *= RationalPolynomial::linear(vars, coeffs);
        }
        total += term;
    }
    return total.scale(prefactor(phi, C));
}

RationalPolynomial parabolic_volume(const RootSystem& phi, Mask I, GramCache& cache) {
    auto vars = u_vars(phi.rank());
    RationalPolynomial v = RationalPolynomial::constant(Rational(1)).with_vars(vars);
    for (Mask C : components_of(phi, I)) v *= component_volume(phi, C, cache);
    return v;
}

void check_dominant(const Weight& lambda, int rank) {
    require_domain(static_cast<int>(lambda.size()) == rank, "weight must have one coordinate per simple root");
    for (long x : lambda) require_domain(x >= 0, "weight must be dominant (nonnegative coordinates)");
}

// Truncated power series in t with exact coefficients.
using Series = std::vector<Rational>;

Series multiply(const Series& a, const Series& b, std::size_t len) {
    Series c(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
    return c;
}

Series invert(const Series& a, std::size_t len) {
    Series b(len);
    b[0] = Rational(1) / a[0];
    for (std::size_t k = 1; k < len; ++k) {
        Rational s;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * b[k - j];
        b[k] = -s / a[0];
    }
    return b;
}

Series exp_series(const Rational& a, std::size_t len) {
    Series e(len);
    Rational term(1);
    for (std::size_t k = 0; k < len; ++k) {
        e[k] = term;
        term *= a / Rational(static_cast<long>(k + 1));
    }
    return e;
}

}  // namespace

RootSystem build_root_system(const IntMatrix& cartan) {
    const int n = static_cast<int>(cartan.size());
    require_domain(n >= 1 && n <= 16, "Cartan matrix rank must be between 1 and 16");
    for (const auto& row : cartan) require_domain(static_cast<int>(row.size()) == n, "Cartan matrix must be square");
    std::vector<Rational> d(n);
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        d[s] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            int i = comp[k];
            for (int j = 0; j < n; ++j)
                if (j != i && cartan[i][j] != 0 && cartan[j][i] != 0 && !seen[j]) {
                    seen[j] = 1;
                    d[j] = d[i] * Rational(cartan[i][j]) / Rational(cartan[j][i]);
                    comp.push_back(j);
                }
        }
        Rational lo = d[s];
        for (int i : comp) lo = std::min(lo, d[i]);
        for (int i : comp) d[i] /= lo;
    }
    return build_root_system(cartan, d);
}

RootSystem build_root_system(const IntMatrix& cartan, const std::vector<Rational>& symmetrizers) {
    const int n = static_cast<int>(cartan.size());
    require_domain(n >= 1 && n <= 16, "Cartan matrix rank must be between 1 and 16");
    require_domain(static_cast<int>(symmetrizers.size()) == n, "one symmetrizer per simple root required");
    for (int i = 0; i < n; ++i) {
        require_domain(static_cast<int>(cartan[i].size()) == n, "Cartan matrix must be square");
        require_domain(cartan[i][i] == 2, "Cartan matrix diagonal entries must be 2");
        require_domain(symmetrizers[i] > 0, "symmetrizers must be positive");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            require_domain(cartan[i][j] <= 0, "off-diagonal Cartan entries must be nonpositive");
            require_domain((cartan[i][j] == 0) == (cartan[j][i] == 0), "a_ij = 0 must imply a_ji = 0");
            require_domain(symmetrizers[i] * Rational(cartan[i][j]) == symmetrizers[j] * Rational(cartan[j][i]),
                           "Cartan matrix is not symmetrized by the given d");
        }
    }
    RootSystem phi;
    phi.cartan = cartan;
    phi.symmetrizers = symmetrizers;
    phi.gram_simple.assign(n, RationalVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) phi.gram_simple[i][j] = symmetrizers[i] * Rational(cartan[i][j]);
    for (int k = 1; k <= n; ++k) {
        RationalMatrix minor(k, RationalVector(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = phi.gram_simple[i][j];
        require_domain(determinant(minor) > 0, "Cartan matrix is not of finite type (Gram matrix not positive definite)");
    }
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    phi.gram_fundamental = fundamental_gram(phi.gram_simple, symmetrizers, all);
    phi.weyl_order = weyl_order_of(cartan, full_mask(n));
    phi.dynkin.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cartan[i][j] != 0) phi.dynkin.edges.emplace_back(i + 1, j + 1);
    return phi;
}

RootSystem RootSystem::from_json(const nlohmann::json& j) {
    IntMatrix a;
    try {
        a = j.at("cartan").get<IntMatrix>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed Cartan matrix JSON: ") + e.what());
    }
    if (j.contains("symmetrizers")) {
        std::vector<Rational> d;
        for (const auto& x : j.at("symmetrizers"))
            d.push_back(x.is_string() ? Rational::parse(x.get<std::string>()) : Rational(x.get<long>()));
        return build_root_system(a, d);
    }
    return build_root_system(a);
}

nlohmann::json RootSystem::to_json() const {
    auto matrix = [](const RationalMatrix& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : m) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& x : row) r.push_back(x.str());
            rows.push_back(r);
        }
        return rows;
    };
    nlohmann::json d = nlohmann::json::array();
    for (const auto& x : symmetrizers) d.push_back(x.str());
    return {{"cartan", cartan},
            {"symmetrizers", d},
            {"gram_simple", matrix(gram_simple)},
            {"gram_fundamental", matrix(gram_fundamental)},
            {"weyl_order", to_string(weyl_order)},
            {"dynkin_edges", dynkin.edges}};
}

IntMatrix cartan_matrix(char type, int n) {
    require_domain(n >= 1, "rank must be positive");
    IntMatrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
    switch (type) {
        case 'A':
            for (int i = 1; i < n; ++i) link(i, i + 1);
            break;
        case 'B':
        case 'C':
            require_domain(n >= 2, "types B and C need rank at least 2");
            for (int i = 1; i < n; ++i) link(i, i + 1);
            // B: α_n short; C: α_n long
            if (type == 'B') a[n - 1][n - 2] = -2;
            else a[n - 2][n - 1] = -2;
            break;
        case 'D':
            require_domain(n >= 4, "type D needs rank at least 4");
            for (int i = 1; i + 2 < n; ++i) link(i, i + 1);
            link(n - 2, n - 1);
            link(n - 2, n);
            break;
        case 'E':
            require_domain(n >= 6 && n <= 8, "type E needs rank 6, 7 or 8");
            link(1, 3);
            link(2, 4);
            for (int i = 3; i < n; ++i) link(i, i + 1);
            break;
        case 'F':
            require_domain(n == 4, "type F has rank 4");
            link(1, 2);
            link(2, 3);
            link(3, 4);
            a[2][1] = -2;
            break;
        case 'G':
            require_domain(n == 2, "type G has rank 2");
            a[0][1] = -3;
            a[1][0] = -1;
            break;
        default:
            throw DomainError(std::string("unknown Cartan type ") + type);
    }
    return a;
}

Integer parabolic_weyl_order(const RootSystem& phi, Mask I) {
    require_domain((I & ~full_mask(phi.rank())) == 0, "parabolic subset outside the rank");
    return weyl_order_of(phi.cartan, I);
}

RationalMatrix parabolic_fundamental_gram(const RootSystem& phi, Mask I) {
    require_domain(I != 0 && (I & ~full_mask(phi.rank())) == 0, "parabolic subset must be nonempty and inside the rank");
    return fundamental_gram(phi.gram_simple, phi.symmetrizers, indices_of(I));
}

std::vector<BForest> phi_trees(const Graph& g) {
    require_domain(g.n >= 1, "phi_trees: graph must have a vertex");
    require_domain(g.connected_subset(full_mask(g.n)), "phi_trees: graph must be connected");
    return b_forests(BuildingSet::graphical(g));
}

std::vector<BForest> phi_trees(const RootSystem& phi) { return phi_trees(phi.dynkin); }

std::vector<Permutation> increasing_labelings(const BForest& t) {
    const int n = static_cast<int>(t.parent.size());
    std::vector<Permutation> out;
    Permutation v(n, 0);
    std::vector<int> frontier = t.roots();
    std::function<void(int)> rec = [&](int label) {
        if (label > n) {
            out.push_back(v);
            return;
        }
        for (std::size_t k = 0; k < frontier.size(); ++k) {
            int node = frontier[k];
            v[node - 1] = label;
            auto saved = frontier;
            frontier.erase(frontier.begin() + static_cast<long>(k));
            for (int c : t.children(node)) frontier.push_back(c);
            rec(label + 1);
            frontier = std::move(saved);
            v[node - 1] = 0;
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

RationalPolynomial weight_polytope_volume_symbolic(const RootSystem& phi) {
    GramCache cache{phi, {}};
    return parabolic_volume(phi, full_mask(phi.rank()), cache);
}

Rational weight_polytope_volume(const RootSystem& phi, const RationalVector& u) {
    require_domain(static_cast<int>(u.size()) == phi.rank(), "one u value per simple root required");
    return weight_polytope_volume_symbolic(phi).evaluate(u);
}

Rational mixed_phi_eulerian_trees(const RootSystem& phi, const std::vector<int>& realization) {
    const int n = phi.rank();
    require_domain(static_cast<int>(realization.size()) == n, "realization must have one entry per node");
    for (int x : realization) require_domain(x >= 1 && x <= n, "realization entries must be nodes");
    require_domain(phi.dynkin.connected_subset(full_mask(n)), "mixed Φ-Eulerian numbers need a connected Dynkin diagram");
    GramCache cache{phi, {}};
    Rational total;
    for (const auto& t : phi_trees(phi)) {
        std::vector<Mask> desc(n + 1);
        for (int j = 1; j <= n; ++j) desc[j] = t.desc(j);
        for (const auto& v : increasing_labelings(t)) {
            Rational w(1);
            for (int j = 1; j <= n && !w.is_zero(); ++j) {
                int i = realization[v[j - 1] - 1];
                Mask I = desc[j];
                if (!(I >> (i - 1) & 1u)) {
                    w = 0;
                    break;
                }
                // desc masks are over local node labels, which coincide with global ones here
                w *= cache(I)[position(I, i - 1)][position(I, j - 1)];
            }
            total += w;
        }
    }
    return total * prefactor(phi, full_mask(n));
}

Rational mixed_phi_eulerian(const RootSystem& phi, const Composition& c, std::vector<int> realization) {
    const int n = phi.rank();
    require_domain(static_cast<int>(c.size()) == n, "composition must have one part per node");
    int total = 0;
    for (int x : c) {
        require_domain(x >= 0, "composition parts must be nonnegative");
        total += x;
    }
    require_domain(total == n, "composition parts must sum to the rank");
    auto base = default_realization(c);
    if (realization.empty()) realization = base;
    {
        auto a = realization, b = base;
        std::sort(a.begin(), a.end());
        require_domain(a == b, "realization does not match the composition");
    }
    Rational value = mixed_phi_eulerian_trees(phi, realization);

    Rational coeff = weight_polytope_volume_symbolic(phi).coefficient(c);
    for (int x : c) coeff *= Rational(factorial(x));
    require_consistent(coeff == value, "tree sum disagrees with the volume coefficient");

    auto r = base;
    int checked = 0;
    do {
        if (r != realization) require_consistent(mixed_phi_eulerian_trees(phi, r) == value, "tree sum depends on the realization");
    } while (++checked < 120 && std::next_permutation(r.begin(), r.end()));
    return value;
}

bool is_type_a(const RootSystem& phi) {
    const int n = phi.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int want = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            if (phi.cartan[i][j] != want) return false;
        }
    return true;
}

bool volume_recurrence_check(const RootSystem& phi) {
    const int n = phi.rank();
    if (n > 4) throw ResourceLimitError("volume recurrence check is limited to rank 4");
    GramCache cache{phi, {}};
    auto vars = u_vars(n);
    auto v = parabolic_volume(phi, full_mask(n), cache);
    std::vector<RationalPolynomial> deleted;
    std::vector<Rational> index_ratio;
    for (int j = 0; j < n; ++j) {
        Mask rest = full_mask(n) & ~(Mask(1) << j);
        deleted.push_back(rest ? parabolic_volume(phi, rest, cache)
                               : RationalPolynomial::constant(Rational(1)).with_vars(vars));
        index_ratio.push_back(Rational(phi.weyl_order) / Rational(parabolic_weyl_order(phi, rest)));
    }
    for (int i = 0; i < n; ++i) {
        RationalPolynomial rhs(vars);
        for (int j = 0; j < n; ++j) {
            // (α_j, ω_j) = d_j
            rhs += deleted[j].scale(index_ratio[j] * phi.gram_fundamental[i][j] / phi.symmetrizers[j]);
        }
        if (!(v.partial_derivative(vars[i]) == rhs)) return false;
    }
    if (!is_type_a(phi)) return true;

    auto shifted = [&](int m, int offset) {
        if (m == 0) return RationalPolynomial::constant(Rational(1)).with_vars(vars);
        std::map<std::string, RationalPolynomial> rename;
        for (int k = 1; k <= m; ++k) rename.emplace(indexed_var("u", k), RationalPolynomial::variable(vars[k + offset - 1]));
        return permutohedron_volume_u(m).substitute(rename).with_vars(vars);
    };
    for (int i = 1; i <= n; ++i) {
        RationalPolynomial rhs(vars);
        for (int j = 1; j <= n; ++j) {
            Rational wt = std::min(Rational(Integer(i), Integer(j)), Rational(Integer(n + 1 - i), Integer(n + 1 - j)));
            Rational factor = Rational(binomial(n + 1, j)) * Rational(Integer(j * (n + 1 - j)), Integer(n + 1)) * wt;
            rhs += (shifted(j - 1, 0) * shifted(n - j, j)).scale(factor);
        }
        if (!(v.partial_derivative(vars[i - 1]) == rhs)) return false;
    }
    return true;
}

Weight dominant_representative(const RootSystem& phi, Weight mu) {
    require_domain(static_cast<int>(mu.size()) == phi.rank(), "weight has the wrong length");
    for (std::size_t steps = 0;; ++steps) {
        require_consistent(steps <= kOrbitCap, "dominant representative did not converge");
        int i = 0;
        while (i < phi.rank() && mu[i] >= 0) ++i;
        if (i == phi.rank()) return mu;
        reflect(phi.cartan, i, mu);
    }
}

RationalVector simple_root_coordinates(const RootSystem& phi, const Weight& mu) {
    require_domain(static_cast<int>(mu.size()) == phi.rank(), "weight has the wrong length");
    // mu = Σ k_i α_i with α_i = Σ_k a_ki ω_k, so mu = A k
    RationalMatrix a(phi.rank(), RationalVector(phi.rank()));
    for (int i = 0; i < phi.rank(); ++i)
        for (int k = 0; k < phi.rank(); ++k) a[i][k] = phi.cartan[i][k];
    return multiply(*inverse(a), to_rational(mu));
}

std::vector<Weight> weight_polytope_lattice_points(const RootSystem& phi, const Weight& lambda, std::size_t limit) {
    check_dominant(lambda, phi.rank());
    auto inside = [&](const Weight& mu) {
        auto plus = dominant_representative(phi, mu);
        Weight diff(mu.size());
        for (std::size_t k = 0; k < mu.size(); ++k) diff[k] = lambda[k] - plus[k];
        for (const auto& x : simple_root_coordinates(phi, diff))
            if (x < 0) return false;
        return true;
    };
    std::set<Weight> seen{lambda};
    std::queue<Weight> todo;
    todo.push(lambda);
    while (!todo.empty()) {
        Weight mu = todo.front();
        todo.pop();
        for (int i = 0; i < phi.rank(); ++i) {
            Weight nu = mu;
            for (int k = 0; k < phi.rank(); ++k) nu[k] -= phi.cartan[k][i];
            if (seen.count(nu) || !inside(nu)) continue;
            seen.insert(nu);
            if (seen.size() > limit) throw ResourceLimitError("weight polytope has too many lattice points");
            todo.push(std::move(nu));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<IntMatrix> weyl_group_elements(const RootSystem& phi, std::size_t limit) {
    const int n = phi.rank();
    if (phi.weyl_order > Integer(static_cast<unsigned long>(limit)))
        throw ResourceLimitError("Weyl group is too large to list");
    std::vector<IntMatrix> gens;
    for (int i = 0; i < n; ++i) {
        IntMatrix s(n, std::vector<int>(n, 0));
        for (int k = 0; k < n; ++k) {
            s[k][k] = 1;
            s[k][i] -= phi.cartan[k][i];
        }
        gens.push_back(std::move(s));
    }
    IntMatrix id(n, std::vector<int>(n, 0));
    for (int k = 0; k < n; ++k) id[k][k] = 1;
    std::set<IntMatrix> seen{id};
    std::vector<IntMatrix> frontier{id};
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                IntMatrix p(n, std::vector<int>(n, 0));
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        for (int k = 0; k < n; ++k) p[r][c] += g[r][k] * m[k][c];
                if (seen.insert(p).second) next.push_back(std::move(p));
            }
        frontier = std::move(next);
    }
    require_consistent(Integer(static_cast<unsigned long>(seen.size())) == phi.weyl_order,
                       "Weyl group closure disagrees with |W|");
    return {seen.begin(), seen.end()};
}

Rational weight_volume_brion(const RootSystem& phi, const RationalVector& x, const RationalVector& xi) {
    const int n = phi.rank();
    require_domain(static_cast<int>(x.size()) == n && static_cast<int>(xi.size()) == n, "vectors need one entry per simple root");
    Rational total;
    for (const auto& w : weyl_group_elements(phi)) {
        auto wx = multiply([&] {
            RationalMatrix m(n, RationalVector(n));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) m[r][c] = w[r][c];
            return m;
        }(), x);
        Rational den(1);
        for (int i = 0; i < n; ++i) {
            Rational p = inner(phi.gram_fundamental, xi, to_rational(act(w, simple_root(phi, i))));
            require_domain(!p.is_zero(), "ξ is orthogonal to a root; choose a regular vector");
            den *= p;
        }
        total += pow(inner(phi.gram_fundamental, xi, wx), static_cast<unsigned>(n)) / den;
    }
    return total / Rational(factorial(n));
}

BrionWeightReport brion_weight_report(const RootSystem& phi, const Weight& lambda, std::uint64_t seed) {
    const int n = phi.rank();
    if (n > 3) throw ResourceLimitError("Brion weight checks are limited to rank 3");
    check_dominant(lambda, n);
    auto elements = weyl_group_elements(phi);
    std::vector<Weight> roots;
    for (int i = 0; i < n; ++i) roots.push_back(simple_root(phi, i));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-60, 60);

    BrionWeightReport report;
    report.max_degree = n + 2;
    RationalVector lam = to_rational(lambda);
    report.volume = weight_polytope_volume(phi, lam);

    bool volume_done = false;
    for (int attempt = 0; attempt < 50 && !volume_done; ++attempt) {
        RationalVector xi(n);
        for (auto& x : xi) x = Rational(coord(rng));
        try {
            report.volume_ok = weight_volume_brion(phi, lam, xi) == report.volume;
            volume_done = true;
        } catch (const DomainError&) {
        }
    }
    require_consistent(volume_done, "no regular vector found for the volume sum");

    auto points = weight_polytope_lattice_points(phi, lambda);
    report.lattice_count = points.size();
    const std::size_t len = static_cast<std::size_t>(2 * n + 3);
    for (int attempt = 0; attempt < 50; ++attempt) {
        Weight h(n);
        for (auto& x : h) x = coord(rng);
        auto form = [&](const Weight& mu) {
            long s = 0;
            for (int k = 0; k < n; ++k) s += h[k] * mu[k];
            return s;
        };
        bool degenerate = false;
        Series rational_side(len);
        for (const auto& w : elements) {
            Series term = exp_series(Rational(form(act(w, lambda))), len);
            Rational scale(1);
            for (const auto& a : roots) {
                long c = form(act(w, a));
                if (c == 0) {
                    degenerate = true;
                    break;
                }
                // 1 - e^{-ct} = c t (1 - ct/2 + (ct)^2/6 - ...)
                Series g(len);
                Rational power(1);
                for (std::size_t m = 0; m < len; ++m) {
                    g[m] = power / Rational(factorial(static_cast<unsigned>(m + 1)));
                    power *= Rational(-c);
                }
                term = multiply(term, invert(g, len), len);
                scale /= Rational(c);
            }
            if (degenerate) break;
            for (std::size_t k = 0; k < len; ++k) rational_side[k] += term[k] * scale;
        }
        if (degenerate) continue;
        // rational_side[k] is the coefficient of t^{k-n}
        bool ok = true;
        for (std::size_t k = 0; k < len; ++k) {
            int degree = static_cast<int>(k) - n;
            Rational finite;
            if (degree >= 0) {
                for (const auto& mu : points) finite += pow(Rational(form(mu)), static_cast<unsigned>(degree));
                finite /= Rational(factorial(static_cast<unsigned>(degree)));
            }
            ok &= finite == rational_side[k];
        }
        report.lattice_ok = ok;
        return report;
    }
    throw ConsistencyError("no generic linear form found for the exponent-sum check");
}

bool brion_weight_checks(const RootSystem& phi, const Weight& lambda) {
    auto r = brion_weight_report(phi, lambda);
    return r.volume_ok && r.lattice_ok;
}

}  // namespace gperm
