#include "cigenus/residue.hpp"

namespace cigenus {

Rational genus_value(const Space& sp, const Genus& g) {
    return genus_value_from_series(sp, s_series(g, sp.dimension()));
}

Rational genus_value_from_series(const Space& sp, const Series& s) {
    const std::size_t n = sp.dimension();
    const Series base = s.truncated(n);
    const int power = static_cast<int>(n + sp.codimension() + 1);
    Series integrand = s_powi(base, -power);
    for (unsigned d : sp.degrees()) {
        integrand = integrand * s_subst_scale(base, Rational(static_cast<std::int64_t>(d)));
    }
    return Rational(sp.total_degree()) * integrand.coeff(n);
}

} // namespace cigenus
