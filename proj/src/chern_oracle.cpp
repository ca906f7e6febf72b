#include "cigenus/chern_oracle.hpp"

namespace cigenus {

Series total_chern_series(const Space& sp) {
    const std::size_t n = sp.dimension();
    Series one_plus_x = Series::constant(Rational(1), n) + Series::variable(n);
    Series c = s_powi(one_plus_x, static_cast<int>(n + sp.codimension() + 1));
    for (unsigned d : sp.degrees()) {
        Series factor = Series::constant(Rational(1), n);
        if (n >= 1) {
            factor[1] = Rational(static_cast<std::int64_t>(d));
        }
        c = c * s_recip(factor);
    }
    return c;
}

std::vector<Rational> power_sums_from_elementary(std::span<const Rational> elementary, std::size_t m) {
    auto e = [&](std::size_t i) { return i < elementary.size() ? elementary[i] : Rational(); };
    std::vector<Rational> p(m + 1);
    for (std::size_t k = 1; k <= m; ++k) {
        // p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k
        Rational acc;
        for (std::size_t i = 1; i < k; ++i) {
            const Rational term = e(i) * p[k - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        const Rational last = Rational(static_cast<std::int64_t>(k)) * e(k);
        acc += (k % 2 == 1) ? last : -last;
        p[k] = acc;
    }
    return p;
}

Rational genus_value_oracle(const Space& sp, const Genus& g) {
    const std::size_t n = sp.dimension();
    const Series chern = total_chern_series(sp);
    const std::vector<Rational> p = power_sums_from_elementary(chern.coefficients(), n);

    const Series log_q = s_log(s_recip(s_series(g, n)));
    Series log_class(n);
    for (std::size_t m = 1; m <= n; ++m) {
        log_class[m] = log_q[m] * p[m];
    }
    return Rational(sp.total_degree()) * s_exp(log_class).coeff(n);
}

} // namespace cigenus
