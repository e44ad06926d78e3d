#include "gperm/linalg.hpp"

#include "gperm/errors.hpp"

namespace gperm {

Rational determinant(RationalMatrix m) {
    const size_t n = m.size();
    for (const auto& row : m) require_domain(row.size() == n, "determinant: matrix is not square");
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Rational f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

int rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
    const size_t n = a.size();
    RationalMatrix m = a;
    RationalMatrix inv = identity_matrix(static_cast<int>(n));
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        Rational p = m[c][c];
        for (size_t k = 0; k < n; ++k) {
            m[c][k] /= p;
            inv[c][k] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            Rational f = m[r][c];
            for (size_t k = 0; k < n; ++k) {
                m[r][k] -= f * m[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

RationalMatrix transpose(const RationalMatrix& m) {
    if (m.empty()) return {};
    RationalMatrix t(m[0].size(), std::vector<Rational>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.empty()) return {};
    const size_t inner = b.size();
    const size_t cols = inner ? b[0].size() : 0;
    RationalMatrix out(a.size(), std::vector<Rational>(cols));
    for (size_t i = 0; i < a.size(); ++i) {
        require_domain(a[i].size() == inner, "multiply: shape mismatch");
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& v) {
    std::vector<Rational> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        require_domain(a[i].size() == v.size(), "multiply: shape mismatch");
        for (size_t k = 0; k < v.size(); ++k) out[i] += a[i][k] * v[k];
    }
    return out;
}

RationalMatrix identity_matrix(int n) {
    RationalMatrix m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
    return m;
}

}  // namespace gperm
