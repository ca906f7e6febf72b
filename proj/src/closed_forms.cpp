#include "cigenus/closed_forms.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <vector>

#include "cigenus/series.hpp"

namespace cigenus {

namespace {

// sum over subsets S of `degrees` of sign(|S|) * binom(shift + sum(S), top)
Rational subset_binomial_sum(const std::vector<unsigned>& degrees, const Rational& shift, unsigned top,
                             const std::function<bool(std::size_t)>& negative) {
    const std::size_t r = degrees.size();
    if (r >= 32) {
        throw InvalidInput("too many degrees for subset enumeration");
    }
    Rational total;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                sum += degrees[i];
            }
        }
        const Rational term = binom_general(shift + Rational(sum), top);
        const std::size_t j = static_cast<std::size_t>(std::popcount(mask));
        total += negative(j) ? -term : term;
    }
    return total;
}

unsigned binom_top(const Space& sp) { return sp.dimension() + static_cast<unsigned>(sp.codimension()); }

Rational sign_r_minus_j_sum(const Space& sp, const Rational& shift) {
    const std::size_t r = sp.codimension();
    return subset_binomial_sum(sp.degrees(), shift, binom_top(sp), [r](std::size_t j) { return (r - j) % 2 == 1; });
}

Rational ahat_hypersurface_or_cp(unsigned n_half, const std::vector<unsigned>& degrees) {
    if (degrees.empty()) {
        return ahat_hypersurface(n_half, 1);
    }
    return ahat_hypersurface(n_half, degrees.front());
}

Rational ahat_iterated_impl(unsigned n_half, std::vector<unsigned> degrees) {
    std::erase(degrees, 1U);
    if (degrees.size() <= 1) {
        return ahat_hypersurface_or_cp(n_half, degrees);
    }
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    const unsigned b = degrees.back();
    degrees.pop_back();
    const unsigned a = degrees.back();
    degrees.pop_back();
    Rational total;
    for (unsigned k = 0; k < b; ++k) {
        std::vector<unsigned> merged = degrees;
        merged.push_back(a + b - 1 - 2 * k);
        total += ahat_iterated_impl(n_half, std::move(merged));
    }
    return total;
}

} // namespace

Rational ahat_closed(const Space& sp) {
    if (sp.dimension() % 2 == 1) {
        return Rational();
    }
    const Rational half_c1(c1_of(sp), 2);
    return sign_r_minus_j_sum(sp, half_c1 - Rational(1));
}

Rational ahat_hypersurface(unsigned n_half, unsigned degree) {
    const Rational half_d(static_cast<std::int64_t>(degree), 2);
    Rational prod(1);
    Integer fact(1);
    const auto m = static_cast<std::int64_t>(n_half);
    for (std::int64_t j = -m; j <= m; ++j) {
        prod *= half_d - Rational(j);
    }
    for (std::int64_t i = 2; i <= 2 * m + 1; ++i) {
        fact *= static_cast<unsigned long>(i);
    }
    return Rational(2) * prod / Rational(fact);
}

Rational ahat_iterated(const Space& sp) {
    if (sp.dimension() % 2 == 1) {
        throw InvalidInput("iterated Â formula needs even complex dimension, got " + sp.to_string());
    }
    return ahat_iterated_impl(sp.dimension() / 2, sp.degrees());
}

SignClass ahat_sign_class(const Space& sp) {
    if (sp.dimension() % 2 == 1) {
        throw InvalidInput("Â sign classification needs even complex dimension, got " + sp.to_string());
    }
    if (!is_spin(sp)) {
        throw InvalidInput(sp.to_string() + " is not spin (c1 = " + std::to_string(c1_of(sp)) + ")");
    }
    return c1_of(sp) > 0 ? SignClass::Zero : SignClass::Positive;
}

int alpha_mod2(const Space& sp, std::size_t excluded) {
    if (!is_spin(sp)) {
        throw InvalidInput(sp.to_string() + " is not spin (c1 = " + std::to_string(c1_of(sp)) + ")");
    }
    if (sp.degrees().empty()) {
        return 0;
    }
    if (excluded >= sp.codimension()) {
        throw InvalidInput("excluded degree index out of range");
    }
    std::vector<unsigned> kept = sp.degrees();
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(excluded));
    const Rational shift = Rational(c1_of(sp) / 2 - 1);
    const Rational sum = subset_binomial_sum(kept, shift, binom_top(sp), [](std::size_t) { return false; });
    // Integer arguments give integer binomials.
    const Integer v = sum.numerator();
    return mpz_odd_p(v.get_mpz_t()) ? 1 : 0;
}

AlphaValue alpha_invariant(const Space& sp) {
    if (!is_spin(sp)) {
        throw InvalidInput(sp.to_string() + " is not spin (c1 = " + std::to_string(c1_of(sp)) + ")");
    }
    switch (sp.dimension() % 4) {
    case 0:
        return AlphaInteger{ahat_closed(sp)};
    case 1:
        return AlphaMod2{alpha_mod2(sp, sp.codimension() == 0 ? 0 : sp.codimension() - 1)};
    case 2:
        return AlphaInteger{ahat_closed(sp) / Rational(2)};
    default:
        return AlphaZero{};
    }
}

Rational todd_t1(const Space& sp) {
    const std::size_t nr = sp.dimension() + sp.codimension();
    return subset_binomial_sum(sp.degrees(), Rational(-1), binom_top(sp),
                               [nr](std::size_t j) { return (nr + j) % 2 == 1; });
}

Rational todd_t2(const Space& sp) { return sign_r_minus_j_sum(sp, Rational(c1_of(sp) - 1)); }

Rational euler_closed(const Space& sp) {
    const std::size_t n = sp.dimension();
    // h_n(a) = [z^n] prod 1/(1 - a_j z)
    std::vector<std::int64_t> roots{1, 1};
    for (unsigned d : sp.degrees()) {
        roots.push_back(1 - static_cast<std::int64_t>(d));
    }
    Series gen = Series::constant(Rational(1), n);
    for (std::int64_t a : roots) {
        Series geometric(n);
        Rational power(1);
        for (std::size_t i = 0; i <= n; ++i) {
            geometric[i] = power;
            power *= Rational(a);
        }
        gen = gen * geometric;
    }
    return Rational(sp.total_degree()) * gen.coeff(n);
}

Rational ak_closed(const Space& sp, unsigned k) {
    if (k == 0) {
        throw InvalidInput("A_k genus requires k >= 1");
    }
    const Rational kr(static_cast<std::int64_t>(k));
    const Rational shift = Rational(c1_of(sp), static_cast<std::int64_t>(k)) - Rational(1);
    return pow(kr, static_cast<int>(sp.dimension())) * sign_r_minus_j_sum(sp, shift);
}

} // namespace cigenus
