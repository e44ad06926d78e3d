#include "gperm/tableaux.hpp"

#include <string>
#include <unordered_map>

#include "gperm/combinatorics.hpp"
#include "gperm/errors.hpp"
#include "gperm/minkowski.hpp"

namespace gperm {

DiagonalVector DiagonalVector::from_gaps(const std::vector<long>& a) {
    DiagonalVector v;
    v.d.push_back(1);
    for (long x : a) {
        require_domain(x >= 0, "gaps must be nonnegative");
        v.d.push_back(v.d.back() + x + 1);
    }
    return v;
}

std::vector<long> DiagonalVector::gaps() const {
    std::vector<long> a;
    for (std::size_t i = 1; i < d.size(); ++i) a.push_back(d[i] - d[i - 1] - 1);
    return a;
}

bool DiagonalVector::valid() const {
    if (d.empty() || d.front() != 1) return false;
    const long n = static_cast<long>(d.size());
    if (d.back() != n * (n + 1) / 2) return false;
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] <= d[i - 1]) return false;
    return true;
}

namespace {

void check_size(int n) {
    require_domain(n >= 1, "n must be positive");
    if (n > 9) throw ResourceLimitError("diagonal expansion is limited to n <= 9");
}

// Exponents packed 8 bits per variable; n <= 9 gives at most 8 variables of degree <= 20.
using Packed = std::uint64_t;

// Number of ways to pick one t_k from each factor t_i + ... + t_{j-1}.
std::unordered_map<Packed, Integer> expansion(int n) {
    std::unordered_map<Packed, Integer> cur{{0, Integer(1)}};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::unordered_map<Packed, Integer> next;
            next.reserve(cur.size() * 2);
            for (const auto& [e, c] : cur)
                for (int k = i; k < j; ++k) next[e + (Packed(1) << (8 * (k - 1)))] += c;
            cur = std::move(next);
        }
    return cur;
}

std::vector<long> unpack(Packed e, int vars) {
    std::vector<long> a(vars);
    for (int k = 0; k < vars; ++k) a[k] = static_cast<long>((e >> (8 * k)) & 0xff);
    return a;
}

Integer superfactorial(int n) {
    Integer s(1);
    for (int k = 1; k < n; ++k) s *= factorial(static_cast<unsigned>(k));
    return s;
}

}  // namespace

RationalPolynomial diagonal_generating_function(int n) {
    check_size(n);
    std::vector<std::string> vars;
    for (int k = 1; k < n; ++k) vars.push_back(indexed_var("t", k));
    RationalPolynomial p(vars);
    const Rational denom(superfactorial(n));
    for (const auto& [e, c] : expansion(n)) {
        auto a = unpack(e, n - 1);
        p.add_term(RationalPolynomial::Exponent(a.begin(), a.end()), Rational(c) / denom);
    }
    return p;
}

DiagonalTable diagonal_table(int n) {
    check_size(n);
    const Integer denom = superfactorial(n);
    DiagonalTable out;
    for (const auto& [e, c] : expansion(n)) {
        auto a = unpack(e, n - 1);
        Integer v = c;
        for (long x : a) v *= factorial(static_cast<unsigned>(x));
        require_consistent(v % denom == 0, "diagonal count is not an integer");
        out.emplace(std::move(a), v / denom);
    }
    return out;
}

Integer count_diagonal_vectors(int n) {
    check_size(n);
    Integer count(static_cast<unsigned long>(expansion(n).size()));
    if (n >= 2 && n <= 6) {
        std::vector<Mask> sets;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Mask s = 0;
                for (int k = i; k < j; ++k) s |= Mask(1) << (k - 1);
                sets.push_back(s);
            }
        SubsetFamily f(n - 1, sets, std::vector<Rational>(sets.size(), Rational(1)));
        require_consistent(lattice_points(f, false) == count,
                           "diagonal count disagrees with the associahedron lattice-point count");
    }
    return count;
}

Integer tableaux_count(const std::vector<long>& a) {
    const int n = static_cast<int>(a.size()) + 1;
    check_size(n);
    long sum = 0;
    for (long x : a) {
        require_domain(x >= 0, "gaps must be nonnegative");
        sum += x;
    }
    require_domain(sum == static_cast<long>(n) * (n - 1) / 2, "gaps must sum to n(n-1)/2");
    auto table = diagonal_table(n);
    auto it = table.find(a);
    return it == table.end() ? Integer(0) : it->second;
}

std::vector<Rectangle> rectangle_subdivision(const PlaneBinaryTree& t) {
    std::vector<Rectangle> out;
    for (int i = 1; i <= t.size(); ++i) out.push_back({i, t.lo[i], i, i, t.hi[i]});
    return out;
}

Integer rectangle_syt_count(int l, int r) {
    require_domain(l >= 1 && r >= 1, "rectangle sides must be positive");
    Integer hooks(1);
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < r; ++b) hooks *= (l - a) + (r - b) - 1;
    return Integer(factorial(static_cast<unsigned>(l * r))) / hooks;
}

std::vector<VertexDiagonal> vertex_diagonals(int n) {
    require_domain(n >= 2, "n must be at least 2");
    if (n > 7) throw ResourceLimitError("vertex diagonal check is limited to n <= 7");
    auto table = diagonal_table(n);
    const Integer denom = superfactorial(n);
    std::vector<VertexDiagonal> out;
    for (const auto& t : plane_binary_trees(n - 1)) {
        VertexDiagonal v{t, loday_vertex(t), 0, 1, 1};
        auto it = table.find(v.gaps);
        v.count = it == table.end() ? Integer(0) : it->second;
        for (const auto& r : rectangle_subdivision(t)) {
            v.by_factorials *= factorial(static_cast<unsigned>(r.area()));
            v.by_rectangles *= rectangle_syt_count(r.rows(), r.cols());
        }
        require_consistent(v.by_factorials % denom == 0, "vertex factorial product is not divisible");
        v.by_factorials /= denom;
        require_consistent(v.count == v.by_factorials && v.count == v.by_rectangles,
                           "vertex diagonal counts disagree");
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace gperm
