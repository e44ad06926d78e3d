#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

#include "gperm/rational.hpp"

namespace gperm {

/// "x" + 3 -> "x3".
std::string indexed_var(const std::string& prefix, int index);
/// "y" + {1,3} -> "y{1,3}" (indices sorted ascending).
std::string subset_var(const std::string& prefix, std::vector<int> subset);

/**
 * @brief Sparse multivariate polynomial with exact rational coefficients.
 *
 * Terms are keyed by exponent vectors over an ordered list of variable
 * names and iterate in canonical order: graded-lexicographic, largest first.
 * Binary operations take the union of the variable lists (left operand's
 * order first).
 */
class RationalPolynomial {
public:
    using Exponent = std::vector<int>;
    struct TermOrder {
        bool operator()(const Exponent& a, const Exponent& b) const;
    };
    using TermMap = std::map<Exponent, Rational, TermOrder>;

    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<std::string> vars);

    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial variable(const std::string& name);
    /// sum_i coeffs[i] * vars[i]
    static RationalPolynomial linear(const std::vector<std::string>& vars, const std::vector<Rational>& coeffs);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    int var_index(const std::string& name) const;

    void add_term(const Exponent& e, const Rational& c);
    Rational coefficient(const Exponent& e) const;
    /// Coefficient of a monomial given by variable name -> exponent (absent names have exponent 0).
    Rational coefficient(const std::map<std::string, int>& monomial) const;
    Rational constant_term() const;

    /// Same polynomial re-expressed over `vars`, which must contain every variable in use.
    RationalPolynomial with_vars(const std::vector<std::string>& vars) const;
    /// Drops variables that occur in no term.
    RationalPolynomial trimmed() const;

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const RationalPolynomial& o);
    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    RationalPolynomial operator-() const { return scale(Rational(-1)); }

    RationalPolynomial scale(const Rational& c) const;
    RationalPolynomial pow(unsigned k) const;
    RationalPolynomial partial_derivative(const std::string& var) const;
    RationalPolynomial homogeneous_part(int deg) const;

    /// Simultaneous substitution; names absent from the variable list are ignored.
    RationalPolynomial substitute(const std::map<std::string, RationalPolynomial>& values) const;
    RationalPolynomial substitute(const std::string& var, const RationalPolynomial& value) const;
    /// Missing variables evaluate to zero.
    Rational evaluate(const std::map<std::string, Rational>& values) const;
    /// Values listed in the order of vars().
    Rational evaluate(const std::vector<Rational>& values) const;

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);

    std::string str() const;
    nlohmann::json to_json() const;
    static RationalPolynomial from_json(const nlohmann::json& j);

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

}  // namespace gperm
