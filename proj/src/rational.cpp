#include "cigenus/rational.hpp"

#include <cctype>
#include <ostream>

namespace cigenus {

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (den == 0) {
        throw InvalidInput("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational rat_parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw InvalidInput("malformed rational: '" + std::string(text) + "'");
    }
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) {
        throw InvalidInput("zero denominator in rational: '" + std::string(text) + "'");
    }
    if (negative) {
        p = -p;
    }
    return Rational(p, q);
}

std::string rat_format(const Rational& x) {
    if (x.is_integer()) {
        return x.numerator().get_str();
    }
    return x.numerator().get_str() + "/" + x.denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << rat_format(x); }

Rational binom_general(const Rational& a, unsigned k) {
    Rational num(1);
    Integer fact(1);
    for (unsigned i = 0; i < k; ++i) {
        num *= a - Rational(static_cast<std::int64_t>(i));
        fact *= i + 1;
    }
    return num / Rational(fact);
}

Rational pow(const Rational& base, int e) {
    if (e < 0) {
        return pow(base.inverse(), -e);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

} // namespace cigenus
