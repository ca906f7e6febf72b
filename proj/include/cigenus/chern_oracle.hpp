#pragma once

#include <span>
#include <vector>

#include "cigenus/genus.hpp"
#include "cigenus/rational.hpp"
#include "cigenus/series.hpp"
#include "cigenus/space.hpp"

namespace cigenus {

/// (1+x)^{n+r+1} / prod (1 + d_i x) through x^n. Coefficient j is the integer
/// c_j with c_j(X) = c_j x^j.
Series total_chern_series(const Space& sp);

/// Power sums p_1..p_m of the formal roots from elementary symmetric values
/// e_1..e_m (Newton's identities). `elementary[0]` is ignored (e_0 = 1).
std::vector<Rational> power_sums_from_elementary(std::span<const Rational> elementary, std::size_t m);

/// phi_Q(X_n(d)) = integral of prod Q(x_i) over the Chern roots, computed
/// without roots: sum_i log Q(x_i) = sum_m l_m p_m where log Q = sum l_m x^m,
/// then exponentiate and evaluate x^n as the total degree.
Rational genus_value_oracle(const Space& sp, const Genus& g);

} // namespace cigenus
