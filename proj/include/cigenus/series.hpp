#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "cigenus/rational.hpp"

namespace cigenus {

/// Raised when a coefficient beyond the truncation order is requested.
/// Indicates the caller computed with too small a working order.
class TruncationError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Truncated formal power series c_0 + c_1 z + ... + c_N z^N over the rationals.
///
/// The truncation order N is part of the value: coefficients past N are
/// unknown, not zero. Binary operations truncate to the smaller order.
class Series {
  public:
    /// Zero series of the given order.
    explicit Series(std::size_t order = 0) : coeffs_(order + 1) {}
    Series(std::initializer_list<Rational> coeffs, std::size_t order);
    Series(std::vector<Rational> coeffs, std::size_t order);

    static Series constant(const Rational& c, std::size_t order);
    /// The series z (order >= 1) or 0 at order 0.
    static Series variable(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const Rational> coefficients() const { return coeffs_; }

    /// Coefficient of z^k; throws TruncationError for k > order().
    const Rational& coeff(std::size_t k) const;
    Rational& operator[](std::size_t k) { return coeffs_[k]; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

    Series truncated(std::size_t order) const;

    friend bool operator==(const Series&, const Series&) = default;

  private:
    std::vector<Rational> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Series& a, const Rational& c);
inline Series operator*(const Rational& c, const Series& a) { return a * c; }

inline Series s_add(const Series& a, const Series& b) { return a + b; }
inline Series s_mul(const Series& a, const Series& b) { return a * b; }
inline Series s_neg(const Series& a) { return -a; }
inline Series s_scale(const Series& a, const Rational& c) { return a * c; }

/// Multiplicative inverse. Requires a nonzero constant term.
Series s_recip(const Series& a);

/// z -> c z, i.e. coefficient i is multiplied by c^i.
Series s_subst_scale(const Series& a, const Rational& c);

/// a^e by repeated squaring; e < 0 inverts first.
Series s_powi(const Series& a, int e);

/// exp(a) for a with zero constant term.
Series s_exp(const Series& a);

/// log(a) for a with constant term 1.
Series s_log(const Series& a);

inline const Rational& s_coeff(const Series& a, std::size_t k) { return a.coeff(k); }

} // namespace cigenus
