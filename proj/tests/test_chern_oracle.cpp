#include <doctest.h>

#include <random>

#include "cigenus/chern_oracle.hpp"
#include "cigenus/residue.hpp"
#include "cigenus/verify.hpp"

using namespace cigenus;

TEST_CASE("total Chern class examples") {
    CHECK(total_chern_series(Space(2, {})) == Series({1, 3, 3}, 2));
    CHECK(total_chern_series(Space(1, {3})) == Series({1, 0}, 1));
    // K3: c = 1 + 0 x + 6 x^2, and 4 * 6 = 24 = chi
    CHECK(total_chern_series(Space(2, {4})) == Series({1, 0, 6}, 2));
    CHECK(total_chern_series(Space(0, {7})).order() == 0);
}

TEST_CASE("c_1 coefficient equals c1_of and all coefficients are integers") {
    for (const Space& sp : enumerate_spaces({1, 8, 5, 3})) {
        const Series c = total_chern_series(sp);
        CHECK(c[1] == Rational(c1_of(sp)));
        for (const Rational& ci : c.coefficients()) {
            CHECK(ci.is_integer());
        }
    }
}

TEST_CASE("Newton recurrence matches directly summed powers") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> root(-6, 6);
    for (int t = 0; t < 50; ++t) {
        const std::size_t count = 1 + rng() % 7;
        std::vector<Rational> roots;
        for (std::size_t i = 0; i < count; ++i) {
            roots.emplace_back(root(rng));
        }
        // e_j from prod (1 + r_i x)
        Series e = Series::constant(Rational(1), count);
        for (const Rational& r : roots) {
            e = e * Series({Rational(1), r}, count);
        }
        const std::size_t m = count + 3; // past the number of roots e_j = 0
        const std::vector<Rational> p = power_sums_from_elementary(e.coefficients(), m);
        for (std::size_t k = 1; k <= m; ++k) {
            Rational direct;
            for (const Rational& r : roots) {
                direct += pow(r, static_cast<int>(k));
            }
            CHECK(p[k] == direct);
        }
    }
}

TEST_CASE("oracle examples") {
    CHECK(genus_value_oracle(Space(3, {}), Genus::todd()) == Rational(1));
    CHECK(genus_value_oracle(Space(2, {4}), Genus::ahat()) == Rational(2));
    CHECK(genus_value_oracle(Space(1, {3}), Genus::euler()) == Rational(0));
    CHECK(genus_value_oracle(Space(2, {4}), Genus::signature()) == Rational(-16));
}

TEST_CASE("oracle agrees with the residue engine") {
    std::vector<Genus> genera = sweep_genera();
    genera.push_back(Genus::ty(Rational(-2, 3)));
    genera.push_back(Genus::ak(2));
    for (const Space& sp : enumerate_spaces({0, 8, 5, 3})) {
        CAPTURE(sp.to_string());
        for (const Genus& g : genera) {
            CAPTURE(g.label());
            CHECK(genus_value_oracle(sp, g) == genus_value(sp, g));
        }
    }
}
