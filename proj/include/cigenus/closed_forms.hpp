#pragma once

#include <cstddef>
#include <variant>

#include "cigenus/rational.hpp"
#include "cigenus/space.hpp"

namespace cigenus {

// Closed binomial-sum formulas for genera of complete intersections. All sums
// over subsets {k_1 < ... < k_j} of the degree indices are enumerated by bit
// masks, so r is limited to what fits in a machine word (r < 32 in practice).

/// Â via sum_j (-1)^{r-j} sum binom(c_1/2 - 1 + d_{k_1} + ... + d_{k_j}, n + r).
/// Returns 0 for odd n.
Rational ahat_closed(const Space& sp);

/// Â(X_{2m}(d)) = 2/(2m+1)! * prod_{j=-m}^{m} (d/2 - j). m = 0 gives d points.
Rational ahat_hypersurface(unsigned n_half, unsigned degree);

/// Â by repeatedly merging the two smallest degrees:
/// Â(..., a, b) = sum_{k=0}^{b-1} Â(..., a + b - 1 - 2k) for a >= b >= 2,
/// down to hypersurfaces. Degree-1 entries are dropped first.
/// Throws InvalidInput for odd n.
Rational ahat_iterated(const Space& sp);

enum class SignClass { Zero, Positive };

/// Vanishing classification of Â for even-dimensional spin complete
/// intersections: Zero iff c_1 > 0. Throws InvalidInput otherwise.
SignClass ahat_sign_class(const Space& sp);

struct AlphaInteger {
    Rational value;
};
struct AlphaMod2 {
    int value;
};
struct AlphaZero {};
using AlphaValue = std::variant<AlphaInteger, AlphaMod2, AlphaZero>;

/// KO-valued alpha invariant by n mod 4. Throws InvalidInput if not spin.
AlphaValue alpha_invariant(const Space& sp);

/// The n = 1 (mod 4) mod-2 sum with degree `excluded` playing the role of the
/// dropped degree (subsets range over the other r - 1 indices). Requires c_1
/// even and r >= 1; an empty degree list gives 0.
int alpha_mod2(const Space& sp, std::size_t excluded);

/// Todd genus, first form: sum_j (-1)^{n+r+j} sum binom(-1 + d_{k_1} + ..., n + r).
Rational todd_t1(const Space& sp);
/// Todd genus, second form: sum_j (-1)^{r-j} sum binom(c_1 - 1 + d_{k_1} + ..., n + r).
Rational todd_t2(const Space& sp);

/// chi = d * h_n(1, 1, 1 - d_1, ..., 1 - d_r).
Rational euler_closed(const Space& sp);

/// A_k = k^n sum_j (-1)^{r-j} sum binom(c_1/k - 1 + d_{k_1} + ..., n + r).
Rational ak_closed(const Space& sp, unsigned k);

} // namespace cigenus
