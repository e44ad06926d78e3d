#include "gperm/permutohedron.hpp"

#include <algorithm>
#include <functional>

#include "gperm/errors.hpp"

namespace gperm {

RationalVector to_rational(const IntVector& v) {
    RationalVector r;
    r.reserve(v.size());
    for (long a : v) r.emplace_back(a);
    return r;
}

RationalVector coords_x_to_y(const RationalVector& x) {
    const int n = static_cast<int>(x.size());
    RationalVector y(n);
    for (int k = 1; k <= n; ++k) {
        Rational s;
        for (int i = 0; i <= k - 1; ++i) {
            Rational term = Rational(binomial(k - 1, i)) * x[k - i - 1];
            if (i % 2 == 0) s -= term;
            else s += term;
        }
        y[k - 1] = s;
    }
    return y;
}

RationalVector coords_y_to_x(const RationalVector& y) {
    // y_k = -x_k + (terms in x_1..x_{k-1}), so solve forward.
    const int n = static_cast<int>(y.size());
    RationalVector x(n);
    for (int k = 1; k <= n; ++k) {
        Rational rest;
        for (int i = 1; i <= k - 1; ++i) {
            Rational term = Rational(binomial(k - 1, i)) * x[k - i - 1];
            if (i % 2 == 0) rest -= term;
            else rest += term;
        }
        x[k - 1] = rest - y[k - 1];
    }
    return x;
}

RationalVector coords_x_to_u(const RationalVector& x) {
    RationalVector u;
    for (size_t i = 0; i + 1 < x.size(); ++i) u.push_back(x[i] - x[i + 1]);
    return u;
}

RationalVector coords_u_to_x(const RationalVector& u) {
    RationalVector x(u.size() + 1);
    for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i) x[i] = x[i + 1] + u[i];
    return x;
}

RationalVector coords_u_to_y(const RationalVector& u) {
    const int n = static_cast<int>(u.size());
    RationalVector y(n);
    for (int k = 1; k <= n; ++k) {
        Rational s;
        for (int i = 0; i <= k - 1; ++i) {
            Rational term = Rational(binomial(k - 1, i)) * u[k - i - 1];
            if (i % 2 == 0) s += term;
            else s -= term;
        }
        y[k - 1] = s;
    }
    return y;
}

bool contains_point(const RationalVector& x, const RationalVector& t) {
    require_domain(x.size() == t.size(), "contains_point: dimension mismatch");
    RationalVector xs = x, ts = t;
    std::sort(xs.begin(), xs.end(), std::greater<>());
    std::sort(ts.begin(), ts.end(), std::greater<>());
    Rational px, pt;
    for (size_t k = 0; k < xs.size(); ++k) {
        px += xs[k];
        pt += ts[k];
        if (pt > px) return false;
    }
    return pt == px;
}

DescentIndexSet descent_index_set(const Composition& c) {
    const int n = static_cast<int>(c.size());
    require_domain(n >= 1, "descent_index_set: empty composition");
    int total = 0;
    for (int v : c) {
        require_domain(v >= 0, "descent_index_set: negative entry");
        total += v;
    }
    require_domain(total == n - 1, "descent_index_set: entries must sum to n-1");
    DescentIndexSet d;
    d.c = c;
    for (int v : c) {
        for (int k = 0; k < v; ++k) d.epsilon.push_back(1);
        d.epsilon.push_back(-1);
    }
    d.epsilon.pop_back();
    int partial = 0;
    for (int j = 1; j <= 2 * n - 2; ++j) {
        partial += d.epsilon[j - 1];
        if (j % 2 == 1 && partial < 0) d.I.push_back((j + 1) / 2);
    }
    return d;
}

RationalPolynomial volume_symbolic(int n) {
    require_domain(n >= 1, "volume_symbolic: n must be positive");
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back(indexed_var("x", i));
    RationalPolynomial v(vars);
    for_each_composition(n - 1, n, [&](const Composition& c) {
        auto d = descent_index_set(c);
        Rational coef(descent_count(n, d.I));
        if (d.I.size() % 2) coef = -coef;
        for (int ci : c) coef /= Rational(factorial(ci));
        v.add_term(c, coef);
    });
    return v;
}

Rational divided_symmetrization(const std::vector<int>& c, const RationalVector& lambda) {
    const int n = static_cast<int>(lambda.size());
    require_domain(static_cast<int>(c.size()) == n, "divided_symmetrization: size mismatch");
    Rational total;
    for_each_permutation(n, [&](const Permutation& w) {
        Rational num(1), den(1);
        for (int i = 0; i < n; ++i) num *= pow(lambda[w[i] - 1], static_cast<unsigned>(c[i]));
        for (int i = 0; i + 1 < n; ++i) den *= lambda[w[i] - 1] - lambda[w[i + 1] - 1];
        require_domain(!den.is_zero(), "divided_symmetrization: lambda must be distinct");
        total += num / den;
    });
    return total;
}

Rational symmetrization_formula(const RationalVector& x) {
    const int n = static_cast<int>(x.size());
    require_domain(n >= 1, "volume: empty x");
    Rational total;
    for_each_permutation(n, [&](const Permutation& w) {
        Rational lin;
        for (int i = 0; i < n; ++i) lin += Rational(w[i]) * x[i];
        Rational den(1);
        for (int i = 0; i + 1 < n; ++i) den *= Rational(w[i] - w[i + 1]);
        total += pow(lin, static_cast<unsigned>(n - 1)) / den;
    });
    return total / Rational(factorial(n - 1));
}

Rational volume_numeric_symmetrization(const RationalVector& x) {
    RationalVector sorted = x;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return symmetrization_formula(sorted);
}

static void scan_box(const IntVector& x, const std::function<void(const IntVector&)>& visit) {
    const int n = static_cast<int>(x.size());
    long lo = *std::min_element(x.begin(), x.end());
    long hi = *std::max_element(x.begin(), x.end());
    long sum = 0;
    for (long v : x) sum += v;
    RationalVector xr = to_rational(x);
    IntVector t(n, lo);
    std::function<void(int, long)> rec = [&](int pos, long partial) {
        if (pos == n - 1) {
            long last = sum - partial;
            if (last < lo || last > hi) return;
            t[pos] = last;
            if (contains_point(xr, to_rational(t))) visit(t);
            return;
        }
        for (long v = lo; v <= hi; ++v) {
            t[pos] = v;
            rec(pos + 1, partial + v);
        }
    };
    rec(0, 0);
}

std::vector<IntVector> lattice_points_brute(const IntVector& x) {
    require_domain(!x.empty(), "lattice_points_brute: empty x");
    std::vector<IntVector> pts;
    scan_box(x, [&](const IntVector& t) { pts.push_back(t); });
    return pts;
}

std::size_t lattice_count_brute(const IntVector& x) {
    require_domain(!x.empty(), "lattice_count_brute: empty x");
    std::size_t count = 0;
    scan_box(x, [&](const IntVector&) { ++count; });
    return count;
}

RationalVector interpolate(const RationalVector& t, const RationalVector& v) {
    const size_t k = t.size();
    require_domain(v.size() == k && k > 0, "interpolate: size mismatch");
    RationalVector coeffs(k);
    for (size_t i = 0; i < k; ++i) {
        // basis polynomial prod_{j != i} (s - t_j)/(t_i - t_j), built coefficientwise
        RationalVector basis{Rational(1)};
        Rational denom(1);
        for (size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            Rational d = t[i] - t[j];
            if (d.is_zero()) throw ConsistencyError("interpolate: repeated node");
            denom *= d;
            RationalVector next(basis.size() + 1);
            for (size_t a = 0; a < basis.size(); ++a) {
                next[a + 1] += basis[a];
                next[a] -= basis[a] * t[j];
            }
            basis = std::move(next);
        }
        Rational scale = v[i] / denom;
        for (size_t a = 0; a < k; ++a) coeffs[a] += basis[a] * scale;
    }
    return coeffs;
}

Rational volume_oracle_ehrhart(const IntVector& x) {
    const int n = static_cast<int>(x.size());
    require_domain(n >= 1, "volume_oracle_ehrhart: empty x");
    if (n == 1) return Rational(1);
    RationalVector ts, counts;
    for (int t = 0; t < n; ++t) {
        IntVector scaled = x;
        for (auto& a : scaled) a *= t;
        ts.emplace_back(t);
        counts.emplace_back(static_cast<unsigned long>(lattice_count_brute(scaled)));
    }
    return interpolate(ts, counts).back();
}

}  // namespace gperm
