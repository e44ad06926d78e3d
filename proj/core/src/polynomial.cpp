#include "gperm/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "gperm/errors.hpp"

namespace gperm {

std::string indexed_var(const std::string& prefix, int index) { return prefix + std::to_string(index); }

std::string subset_var(const std::string& prefix, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    std::string s = prefix + "{";
    for (size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(subset[i]);
    }
    return s + "}";
}

bool RationalPolynomial::TermOrder::operator()(const Exponent& a, const Exponent& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

RationalPolynomial::RationalPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (size_t i = 0; i < vars_.size(); ++i)
        for (size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw DomainError("duplicate variable name " + vars_[i]);
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
    RationalPolynomial p;
    p.add_term({}, c);
    return p;
}

RationalPolynomial RationalPolynomial::variable(const std::string& name) {
    RationalPolynomial p({name});
    p.add_term({1}, Rational(1));
    return p;
}

RationalPolynomial RationalPolynomial::linear(const std::vector<std::string>& vars, const std::vector<Rational>& coeffs) {
    if (vars.size() != coeffs.size()) throw DomainError("linear: size mismatch");
    RationalPolynomial p(vars);
    for (size_t i = 0; i < vars.size(); ++i) {
        Exponent e(vars.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int RationalPolynomial::degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int RationalPolynomial::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

void RationalPolynomial::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != vars_.size()) throw DomainError("exponent length does not match variable list");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational RationalPolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational RationalPolynomial::coefficient(const std::map<std::string, int>& monomial) const {
    Exponent e(vars_.size(), 0);
    for (const auto& [name, k] : monomial) {
        if (k == 0) continue;
        int idx = var_index(name);
        if (idx < 0) return Rational(0);
        e[idx] = k;
    }
    return coefficient(e);
}

Rational RationalPolynomial::constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

RationalPolynomial RationalPolynomial::with_vars(const std::vector<std::string>& vars) const {
    RationalPolynomial out(vars);
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) pos[i] = out.var_index(vars_[i]);
    for (const auto& [e, c] : terms_) {
        Exponent f(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (pos[i] < 0) throw DomainError("with_vars: variable " + vars_[i] + " is in use");
            f[pos[i]] = e[i];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

RationalPolynomial RationalPolynomial::trimmed() const {
    std::vector<std::string> used;
    for (size_t i = 0; i < vars_.size(); ++i) {
        bool in_use = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
        if (in_use) used.push_back(vars_[i]);
    }
    return with_vars(used);
}

static std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> u = a;
    for (const auto& v : b)
        if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
    return u;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (o.vars_ != vars_) {
        auto u = union_vars(vars_, o.vars_);
        if (u != vars_) *this = with_vars(u);
        if (o.vars_ != vars_) {
            auto oo = o.with_vars(vars_);
            for (const auto& [e, c] : oo.terms_) add_term(e, c);
            return *this;
        }
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) { return *this += o.scale(Rational(-1)); }

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    auto u = union_vars(a.vars_, b.vars_);
    RationalPolynomial x = a.vars_ == u ? a : a.with_vars(u);
    RationalPolynomial y = b.vars_ == u ? b : b.with_vars(u);
    RationalPolynomial out(u);
    RationalPolynomial::Exponent e(u.size());
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            for (size_t i = 0; i < u.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) { return *this = *this * o; }

RationalPolynomial RationalPolynomial::scale(const Rational& c) const {
    RationalPolynomial out(vars_);
    if (c.is_zero()) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

RationalPolynomial RationalPolynomial::pow(unsigned k) const {
    RationalPolynomial result = constant(Rational(1)).with_vars(vars_);
    RationalPolynomial base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

RationalPolynomial RationalPolynomial::partial_derivative(const std::string& var) const {
    RationalPolynomial out(vars_);
    int idx = var_index(var);
    if (idx < 0) return out;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponent f = e;
        f[idx] -= 1;
        out.add_term(f, c * Rational(e[idx]));
    }
    return out;
}

RationalPolynomial RationalPolynomial::homogeneous_part(int deg) const {
    RationalPolynomial out(vars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == deg) out.terms_.emplace(e, c);
    return out;
}

RationalPolynomial RationalPolynomial::substitute(const std::map<std::string, RationalPolynomial>& values) const {
    std::vector<int> replaced(vars_.size(), 0);
    std::vector<std::string> kept;
    std::vector<int> kept_pos(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (values.count(vars_[i])) {
            replaced[i] = 1;
        } else {
            kept_pos[i] = static_cast<int>(kept.size());
            kept.push_back(vars_[i]);
        }
    }
    if (std::none_of(replaced.begin(), replaced.end(), [](int r) { return r; })) return *this;

    std::vector<std::vector<RationalPolynomial>> powers(vars_.size());
    RationalPolynomial out(kept);
    for (const auto& [e, c] : terms_) {
        RationalPolynomial mono(kept);
        Exponent f(kept.size(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            if (!replaced[i]) f[kept_pos[i]] = e[i];
        mono.add_term(f, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (!replaced[i] || e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(Rational(1)));
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * values.at(vars_[i]));
            mono *= pw[e[i]];
        }
        out += mono;
    }
    return out;
}

RationalPolynomial RationalPolynomial::substitute(const std::string& var, const RationalPolynomial& value) const {
    return substitute(std::map<std::string, RationalPolynomial>{{var, value}});
}

Rational RationalPolynomial::evaluate(const std::map<std::string, Rational>& values) const {
    std::vector<Rational> v(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = values.find(vars_[i]);
        if (it != values.end()) v[i] = it->second;
    }
    return evaluate(v);
}

Rational RationalPolynomial::evaluate(const std::vector<Rational>& values) const {
    if (values.size() != vars_.size()) throw DomainError("evaluate: expected one value per variable");
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= gperm::pow(values[i], static_cast<unsigned>(e[i]));
        total += t;
    }
    return total;
}

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto u = union_vars(a.vars_, b.vars_);
    return a.with_vars(u).terms_ == b.with_vars(u).terms_;
}

std::string RationalPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool is_const = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        bool need_star = false;
        if (is_const || mag != Rational(1)) {
            os << mag;
            need_star = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

nlohmann::json RationalPolynomial::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        terms.push_back({{"exp", e}, {"num", to_string(c.num())}, {"den", to_string(c.den())}});
    return {{"vars", vars_}, {"terms", terms}};
}

RationalPolynomial RationalPolynomial::from_json(const nlohmann::json& j) {
    try {
        RationalPolynomial p(j.at("vars").get<std::vector<std::string>>());
        for (const auto& t : j.at("terms")) {
            Rational c(integer_from_string(t.at("num").get<std::string>()),
                       integer_from_string(t.at("den").get<std::string>()));
            p.add_term(t.at("exp").get<Exponent>(), c);
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) { return os << p.str(); }

}  // namespace gperm
