#include "gperm/rational.hpp"

#include <ostream>

#include "gperm/errors.hpp"

namespace gperm {

Integer integer_from_string(std::string_view s) {
    std::string t(s);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    bool ok = !t.empty();
    for (size_t i = 0; i < t.size() && ok; ++i) {
        char c = t[i];
        ok = (c >= '0' && c <= '9') || (i == 0 && c == '-' && t.size() > 1);
    }
    if (!ok) throw DomainError("not an integer: '" + std::string(s) + "'");
    return Integer(t, 10);
}

std::string to_string(const Integer& z) { return z.get_str(10); }

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(integer_from_string(s));
    return Rational(integer_from_string(s.substr(0, slash)), integer_from_string(s.substr(slash + 1)));
}

std::string Rational::str() const { return q_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational pow(const Rational& base, unsigned exp) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
    return Rational(n, d);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer to_integer(const Rational& r) {
    if (!r.is_integer()) throw DomainError("expected an integer, got " + r.str());
    return r.num();
}

std::string to_string(const Rational& r) { return r.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gperm
