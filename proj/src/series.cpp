#include "cigenus/series.hpp"

#include <algorithm>
#include <string>

namespace cigenus {

Series::Series(std::initializer_list<Rational> coeffs, std::size_t order)
    : Series(std::vector<Rational>(coeffs), order) {}

Series::Series(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

Series Series::constant(const Rational& c, std::size_t order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::variable(std::size_t order) {
    Series s(order);
    if (order >= 1) {
        s.coeffs_[1] = Rational(1);
    }
    return s;
}

const Rational& Series::coeff(std::size_t k) const {
    if (k > order()) {
        throw TruncationError("coefficient z^" + std::to_string(k) + " requested from series truncated at order " +
                              std::to_string(order()));
    }
    return coeffs_[k];
}

Series Series::truncated(std::size_t order) const {
    Series s(std::min(order, this->order()));
    std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
    return s;
}

Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

Series operator-(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

Series operator-(const Series& a) {
    Series out(a.order());
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out[i] = -a[i];
    }
    return out;
}

Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    const std::size_t n = out.order();
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Series operator*(const Series& a, const Rational& c) {
    Series out(a.order());
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out[i] = a[i] * c;
    }
    return out;
}

Series s_recip(const Series& a) {
    if (a[0].is_zero()) {
        throw std::domain_error("reciprocal of a series with zero constant term");
    }
    const std::size_t n = a.order();
    const Rational inv0 = a[0].inverse();
    Series out(n);
    out[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            acc += a[i] * out[k - i];
        }
        out[k] = -acc * inv0;
    }
    return out;
}

Series s_subst_scale(const Series& a, const Rational& c) {
    Series out(a.order());
    Rational power(1);
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out[i] = a[i] * power;
        power *= c;
    }
    return out;
}

Series s_powi(const Series& a, int e) {
    if (e < 0) {
        return s_powi(s_recip(a), -e);
    }
    Series result = Series::constant(Rational(1), a.order());
    Series base = a;
    auto exp = static_cast<unsigned>(e);
    while (exp != 0) {
        if (exp & 1U) {
            result = result * base;
        }
        exp >>= 1U;
        if (exp != 0) {
            base = base * base;
        }
    }
    return result;
}

// Both recurrences come from differentiating: exp(a)' = a' exp(a) and
// log(a)' = a'/a, compared coefficient-wise.
Series s_exp(const Series& a) {
    if (!a[0].is_zero()) {
        throw std::domain_error("exp of a series with nonzero constant term");
    }
    const std::size_t n = a.order();
    Series out(n);
    out[0] = Rational(1);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc;
        for (std::size_t k = 1; k <= m; ++k) {
            acc += Rational(static_cast<std::int64_t>(k)) * a[k] * out[m - k];
        }
        out[m] = acc / Rational(static_cast<std::int64_t>(m));
    }
    return out;
}

Series s_log(const Series& a) {
    if (a[0] != Rational(1)) {
        throw std::domain_error("log of a series whose constant term is not 1");
    }
    const std::size_t n = a.order();
    Series out(n);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = Rational(static_cast<std::int64_t>(m)) * a[m];
        for (std::size_t k = 1; k < m; ++k) {
            acc -= Rational(static_cast<std::int64_t>(k)) * out[k] * a[m - k];
        }
        out[m] = acc / Rational(static_cast<std::int64_t>(m));
    }
    return out;
}

} // namespace cigenus
