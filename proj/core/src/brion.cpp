#include "gperm/brion.hpp"

#include <algorithm>
#include <functional>

#include "gperm/errors.hpp"
#include "gperm/linalg.hpp"

namespace gperm {

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::exp(const Rational& a, int order) {
    TruncatedSeries s(order);
    Rational term(1);
    for (int k = 0; k <= order; ++k) {
        s[k] = term;
        term *= a / Rational(k + 1);
    }
    return s;
}

TruncatedSeries TruncatedSeries::todd_factor(const Rational& a, int order) {
    require_domain(!a.is_zero(), "todd_factor needs a nonzero slope");
    // (1 - e^{at}) / t = -sum_m a^{m+1} t^m / (m+1)!
    TruncatedSeries s(order);
    Rational power = a;
    for (int m = 0; m <= order; ++m) {
        s[m] = -power / Rational(factorial(static_cast<unsigned>(m + 1)));
        power *= a;
    }
    return s.inverse();
}

TruncatedSeries TruncatedSeries::inverse() const {
    require_domain(!c_[0].is_zero(), "series with zero constant term is not invertible");
    TruncatedSeries b(order());
    b[0] = Rational(1) / c_[0];
    for (int k = 1; k <= order(); ++k) {
        Rational s;
        for (int j = 1; j <= k; ++j) s += c_[j] * b[k - j];
        b[k] = -s / c_[0];
    }
    return b;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_domain(o.order() == order(), "series orders differ");
    for (int k = 0; k <= order(); ++k) c_[k] += o[k];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_domain(a.order() == b.order(), "series orders differ");
    TruncatedSeries c(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= a.order(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

SimplePolytopeRep SimplePolytopeRep::from_json(const nlohmann::json& j) {
    try {
        SimplePolytopeRep p;
        for (const auto& v : j.at("vertices")) {
            RationalVector r;
            for (const auto& x : v) r.push_back(x.is_string() ? Rational::parse(x.get<std::string>()) : Rational(x.get<long>()));
            p.vertices.push_back(std::move(r));
        }
        for (const auto& c : j.at("cones")) p.cones.push_back(c.get<std::vector<IntVector>>());
        require_domain(!p.vertices.empty(), "polytope needs at least one vertex");
        require_domain(p.vertices.size() == p.cones.size(), "one cone per vertex required");
        p.dim = static_cast<int>(p.vertices.front().size());
        for (std::size_t k = 0; k < p.vertices.size(); ++k) {
            require_domain(static_cast<int>(p.vertices[k].size()) == p.dim, "vertices must share a dimension");
            require_domain(static_cast<int>(p.cones[k].size()) == p.dim, "each cone needs dim generators");
            for (const auto& g : p.cones[k]) require_domain(static_cast<int>(g.size()) == p.dim, "generator has the wrong length");
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed polytope JSON: ") + e.what());
    }
}

nlohmann::json SimplePolytopeRep::to_json() const {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : vertices) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : v) r.push_back(x.str());
        verts.push_back(r);
    }
    return {{"vertices", verts}, {"cones", cones}};
}

namespace {

RationalMatrix generator_columns(const std::vector<IntVector>& gens, int n) {
    RationalMatrix m(n, RationalVector(gens.size()));
    for (std::size_t c = 0; c < gens.size(); ++c)
        for (int r = 0; r < n; ++r) m[r][c] = Rational(gens[c][r]);
    return m;
}

Rational dot(const IntVector& h, const RationalVector& v) {
    Rational s;
    for (std::size_t k = 0; k < h.size(); ++k) s += Rational(h[k]) * v[k];
    return s;
}

long dot(const IntVector& h, const IntVector& v) {
    long s = 0;
    for (std::size_t k = 0; k < h.size(); ++k) s += h[k] * v[k];
    return s;
}

Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

Integer ceil_of(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

}  // namespace

std::vector<IntVector> parallelepiped_points(const RationalVector& v, const std::vector<IntVector>& gens) {
    const int n = static_cast<int>(v.size());
    const int m = static_cast<int>(gens.size());
    require_domain(m <= n, "more generators than the dimension");
    for (const auto& g : gens) require_domain(static_cast<int>(g.size()) == n, "generator has the wrong length");
    auto cols = generator_columns(gens, n);
    require_domain(rank(cols) == m, "cone generators must be linearly independent");

    // an m x m nonsingular row selection to solve for c
    std::vector<int> rows;
    for (int r = 0; r < n && static_cast<int>(rows.size()) < m; ++r) {
        rows.push_back(r);
        RationalMatrix sub;
        for (int k : rows) sub.push_back(cols[k]);
        if (rank(sub) < static_cast<int>(rows.size())) rows.pop_back();
    }
    RationalMatrix square;
    for (int k : rows) square.push_back(cols[k]);
    auto inv = m ? *inverse(square) : RationalMatrix{};

    std::vector<Integer> lo(n), hi(n);
    for (int r = 0; r < n; ++r) {
        Rational a = v[r], b = v[r];
        for (const auto& g : gens) (g[r] < 0 ? a : b) += Rational(g[r]);
        lo[r] = ceil_of(a);
        hi[r] = floor_of(b);
    }
    std::vector<IntVector> out;
    IntVector p(n);
    std::function<void(int)> rec = [&](int r) {
        if (r == n) {
            RationalVector rhs;
            for (int k : rows) rhs.push_back(Rational(p[k]) - v[k]);
            RationalVector c = m ? multiply(inv, rhs) : RationalVector{};
            for (const auto& x : c)
                if (x < 0 || x >= 1) return;
            for (int k = 0; k < n; ++k) {
                Rational s = v[k];
                for (int i = 0; i < m; ++i) s += c[i] * Rational(gens[i][k]);
                if (s != Rational(p[k])) return;
            }
            out.push_back(p);
            return;
        }
        for (Integer x = lo[r]; x <= hi[r]; ++x) {
            p[r] = x.get_si();
            rec(r + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

ConeSRepresentation cone_S_representation(const RationalVector& v, const std::vector<IntVector>& gens) {
    return {parallelepiped_points(v, gens), gens};
}

std::map<int, Rational> laurent_expansion(const std::vector<ConeSRepresentation>& cones, const IntVector& h,
                                          int max_degree) {
    int pole = 0;
    for (const auto& c : cones) pole = std::max(pole, static_cast<int>(c.denominator.size()));
    const int order = max_degree + pole;
    require_domain(order >= 0, "max_degree too small");
    TruncatedSeries total(order);
    for (const auto& c : cones) {
        const int m = static_cast<int>(c.denominator.size());
        TruncatedSeries num(order);
        for (const auto& a : c.numerator) num += TruncatedSeries::exp(Rational(dot(h, a)), order);
        for (const auto& g : c.denominator) {
            long hg = dot(h, g);
            require_domain(hg != 0, "linear form vanishes on a generator");
            // 1/(1 - e^{q hg}) = q^{-1} * q/(1 - e^{q hg})
            num = num * TruncatedSeries::todd_factor(Rational(hg), order);
        }
        // shift from q^{-m} to the common q^{-pole}
        TruncatedSeries shifted(order);
        for (int k = 0; k + (pole - m) <= order; ++k) shifted[k + pole - m] = num[k];
        total += shifted;
    }
    std::map<int, Rational> out;
    for (int k = 0; k <= order; ++k) out[k - pole] = total[k];
    return out;
}

IntVector generic_form(const SimplePolytopeRep& p) {
    for (long m = 1; m < 1000; ++m) {
        IntVector h(p.dim);
        long power = 1;
        for (auto& x : h) {
            x = power;
            power *= m;
        }
        bool ok = true;
        for (const auto& cone : p.cones)
            for (const auto& g : cone) ok &= dot(h, g) != 0;
        if (ok) return h;
    }
    throw ConsistencyError("no generic linear form found");
}

Integer lattice_count_brion(const SimplePolytopeRep& p, std::optional<IntVector> h) {
    if (!h) h = generic_form(p);
    require_domain(static_cast<int>(h->size()) == p.dim, "linear form has the wrong length");
    std::vector<ConeSRepresentation> cones;
    for (std::size_t k = 0; k < p.vertices.size(); ++k) cones.push_back(cone_S_representation(p.vertices[k], p.cones[k]));
    Rational c = laurent_expansion(cones, *h, 0).at(0);
    require_consistent(c.is_integer(), "Brion count is not an integer; the vertex-cone data is inconsistent");
    return c.num();
}

Rational volume_brion(const SimplePolytopeRep& p, std::optional<IntVector> h) {
    if (!h) h = generic_form(p);
    const int n = p.dim;
    Rational total;
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
        RationalMatrix g;
        Rational den(1);
        for (const auto& row : p.cones[k]) {
            RationalVector r;
            for (long x : row) r.emplace_back(x);
            g.push_back(r);
            long hg = dot(*h, row);
            require_domain(hg != 0, "linear form vanishes on a generator");
            den *= Rational(-hg);
        }
        Rational term = abs(determinant(g)) * pow(dot(*h, p.vertices[k]), static_cast<unsigned>(n));
        total += term / den;
    }
    return total / Rational(factorial(static_cast<unsigned>(n)));
}

SimplePolytopeRep genperm_cone_rep(const BuildingSet& b, const SubsetWeights& y) {
    const int n = b.n();
    require_domain(n >= 2, "genperm_cone_rep needs n >= 2");
    SimplePolytopeRep p;
    p.dim = n - 1;
    for (const auto& f : b_forests(b)) {
        require_domain(f.roots().size() == 1, "building set must be connected");
        auto t = vertex_coordinates(b, y, f);
        t.pop_back();
        std::vector<IntVector> gens;
        for (auto g : local_cone_generators(f)) {
            g.pop_back();
            gens.push_back(std::move(g));
        }
        p.vertices.push_back(std::move(t));
        p.cones.push_back(std::move(gens));
    }
    return p;
}

SimplePolytopeRep permutohedron_cone_rep(const RationalVector& x) {
    const int n = static_cast<int>(x.size());
    require_domain(n >= 2, "permutohedron_cone_rep needs n >= 2");
    // P_B(y) with y_I = y_{|I|} is the mirror image of P_n(x); reflect it back
    auto ysize = coords_x_to_y(x);
    auto b = BuildingSet::all_subsets(n);
    SubsetWeights y;
    for (Mask s : b.members()) y[s] = ysize[popcount(s) - 1];
    auto p = genperm_cone_rep(b, y);
    for (auto& v : p.vertices)
        for (auto& c : v) c = -c;
    for (auto& cone : p.cones)
        for (auto& g : cone)
            for (auto& c : g) c = -c;
    return p;
}

std::vector<Rational> todd_coefficients(int order) {
    // q/(1 - e^{-q}) is the inverse of sum_m (-q)^m/(m+1)!
    TruncatedSeries s(order);
    for (int m = 0; m <= order; ++m) {
        Rational c = Rational(1) / Rational(factorial(static_cast<unsigned>(m + 1)));
        s[m] = m % 2 ? -c : c;
    }
    auto inv = s.inverse();
    std::vector<Rational> out;
    for (int k = 0; k <= order; ++k) out.push_back(inv[k]);
    return out;
}

namespace {

std::string z_name(Mask s) { return subset_var("z", elements_of(s)); }

}  // namespace

RationalPolynomial volume_z_polynomial(int n) {
    require_domain(n >= 2 && n <= 4, "volume_z_polynomial supports n in 2..4");
    auto all = SubsetFamily::all_subsets(n);
    auto vy = volume_polynomial(all);
    std::vector<std::string> zvars;
    for (Mask s = 1; s <= full_mask(n); ++s) zvars.push_back(z_name(s));
    std::map<std::string, RationalPolynomial> sub;
    for (int k = 0; k < all.m(); ++k) {
        Mask I = all.subsets[k];
        std::vector<Rational> coeffs(zvars.size());
        for (Mask J = I; J; J = (J - 1) & I) coeffs[J - 1] = (popcount(I & ~J) % 2) ? Rational(-1) : Rational(1);
        sub.emplace(indexed_var("y", k + 1), RationalPolynomial::linear(zvars, coeffs));
    }
    return vy.substitute(sub).with_vars(zvars);
}

RationalPolynomial todd_lattice_polynomial(int n) {
    auto v = volume_z_polynomial(n);
    const int deg = n - 1;
    auto todd = todd_coefficients(deg);
    for (Mask s = 1; s < full_mask(n); ++s) {
        const auto name = z_name(s);
        RationalPolynomial acc = v;
        RationalPolynomial d = v;
        for (int k = 1; k <= deg; ++k) {
            d = d.partial_derivative(name);
            if (d.is_zero()) break;
            // Todd(-∂): coefficient todd_k (-1)^k
            acc += d.scale(k % 2 ? -todd[k] : todd[k]);
        }
        v = acc;
    }
    return v;
}

Integer todd_count_genperm(const SubsetFamily& f) {
    require_domain(f.n == 3 || f.n == 4, "todd_count_genperm supports n = 3 or 4");
    for (const auto& w : f.weights) require_domain(w.is_integer() && w >= 0, "weights must be nonnegative integers");
    auto poly = todd_lattice_polynomial(f.n);
    auto z = z_from_y(f);
    std::map<std::string, Rational> at;
    for (Mask s = 1; s <= full_mask(f.n); ++s) {
        auto it = z.find(s);
        at[z_name(s)] = it == z.end() ? Rational(0) : it->second;
    }
    Rational value = poly.evaluate(at);
    require_consistent(value.is_integer(), "Todd operator count is not an integer");
    Integer count = value.num();
    require_consistent(count == lattice_points(f, false), "Todd operator count disagrees with the raising-power count");
    return count;
}

}  // namespace gperm
