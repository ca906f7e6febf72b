#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cigenus {

using Integer = mpz_class;

/// Raised for malformed user input: unparsable rationals, bad genus files,
/// operations applied outside their domain (e.g. alpha on a non-spin space).
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// so two equal values always have identical numerator/denominator.
class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t n) : value_(static_cast<long>(n)) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(std::int64_t num, std::int64_t den) : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational inverse() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    const mpq_class& gmp() const { return value_; }

  private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

/// Parses `-?digits(/digits)?`. Throws InvalidInput on malformed text or a
/// zero denominator.
Rational rat_parse(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise.
std::string rat_format(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Generalized binomial coefficient a(a-1)...(a-k+1)/k!, defined for any
/// rational a. binom_general(a, 0) == 1.
Rational binom_general(const Rational& a, unsigned k);

/// Integer power of a rational; negative exponents invert (base must be nonzero).
Rational pow(const Rational& base, int e);

} // namespace cigenus
