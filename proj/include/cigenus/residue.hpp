#pragma once

#include "cigenus/genus.hpp"
#include "cigenus/rational.hpp"
#include "cigenus/series.hpp"
#include "cigenus/space.hpp"

namespace cigenus {

/// phi_Q(X_n(d)) as the residue at 0 of prod R(d_i z) / R(z)^{n+r+1}.
///
/// With R(z) = z S(z) the z^r / z^{n+r+1} factor cancels, leaving
///
///     d * [z^n] prod S(d_i z) / S(z)^{n+r+1},
///
/// which is evaluated with every series truncated at order n.
Rational genus_value(const Space& sp, const Genus& g);

/// Same evaluation for an explicit S-series (constant term 1, order >= n).
Rational genus_value_from_series(const Space& sp, const Series& s);

} // namespace cigenus
