#include <doctest.h>

#include <random>

#include "cigenus/genus.hpp"
#include "cigenus/residue.hpp"
#include "cigenus/verify.hpp"

using namespace cigenus;

namespace {

const std::string kData = CIGENUS_TEST_DATA;

std::vector<Genus> builtins() {
    return {Genus::todd(),          Genus::ahat(),          Genus::signature(), Genus::euler(),
            Genus::ty(Rational(1, 2)), Genus::ty(Rational(-3, 4)), Genus::ak(1),       Genus::ak(3)};
}

bool odd_coefficients_vanish(const Series& s) {
    for (std::size_t i = 1; i <= s.order(); i += 2) {
        if (!s[i].is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("catalog examples") {
    CHECK(s_series(Genus::todd(), 3) == Series({1, Rational(-1, 2), Rational(1, 6), Rational(-1, 24)}, 3));
    CHECK(s_recip(s_series(Genus::ahat(), 4)) == Series({1, 0, Rational(-1, 24), 0, Rational(7, 5760)}, 4));
    CHECK(s_series(Genus::euler(), 2) == Series({1, -1, 1}, 2));
    CHECK(s_series(Genus::ty(Rational(0)), 12) == s_series(Genus::todd(), 12));
}

TEST_CASE("every S-series has constant term 1 and is order-coherent") {
    for (const Genus& g : builtins()) {
        CAPTURE(g.label());
        const Series big = s_series(g, 12);
        CHECK(big.order() == 12);
        CHECK(big[0] == Rational(1));
        for (std::size_t m = 0; m < 12; ++m) {
            CHECK(big.truncated(m) == s_series(g, m));
        }
    }
}

TEST_CASE("genus relations between catalog entries") {
    constexpr std::size_t order = 14;
    CHECK(odd_coefficients_vanish(s_series(Genus::signature(), order)));
    CHECK(odd_coefficients_vanish(s_series(Genus::ahat(), order)));
    CHECK(s_series(Genus::ty(Rational(1)), order) == s_series(Genus::signature(), order));
    CHECK(s_series(Genus::ak(1), order) == s_series(Genus::todd(), order));
    // R_{A_2}(x) = sinh x = R_Ahat(2x) / 2, i.e. S_{A_2}(z) = S_Ahat(2z)
    CHECK(s_series(Genus::ak(2), order) == s_subst_scale(s_series(Genus::ahat(), order), Rational(2)));
}

TEST_CASE("T_y series solves z S(z) (e^{(y+1)z} + y) = e^{(y+1)z} - 1") {
    constexpr std::size_t order = 10;
    std::mt19937 rng(31);
    for (int t = 0; t < 10; ++t) {
        const Rational y(static_cast<int>(rng() % 19) - 9, static_cast<int>(rng() % 5) + 1);
        if (y == Rational(-1)) {
            continue;
        }
        CAPTURE(rat_format(y));
        const Rational a = y + Rational(1);
        const Series e = s_exp(Series::variable(order + 1) * a);
        Series denom = e;
        denom[0] += y;
        const Series s = s_series(Genus::ty(y), order);
        // lift to order + 1 so that z S(z) is known through z^{order}
        const Series lifted(std::vector<Rational>(s.coefficients().begin(), s.coefficients().end()), order + 1);
        const Series z_times_s = Series::variable(order + 1) * lifted;
        Series numer = e;
        numer[0] -= Rational(1);
        CHECK((z_times_s * denom).truncated(order) == numer.truncated(order));
    }
}

TEST_CASE("T_{-1} is normalized to the Euler genus") {
    const Genus g = Genus::ty(Rational(-1));
    CHECK(std::holds_alternative<Euler>(g.kind()));
    CHECK(g.label() == "euler");
}

TEST_CASE("A_k needs k >= 1") { CHECK_THROWS_AS(Genus::ak(0), InvalidInput); }

TEST_CASE("labels") {
    CHECK(Genus::ty(Rational(1, 2)).label() == "ty(1/2)");
    CHECK(Genus::ak(3).label() == "ak(3)");
    CHECK(Genus::ak(3).name() == "ak");
    CHECK(Genus::custom("w", {}).label() == "custom(w)");
}

TEST_CASE("custom genus from file reproduces Todd up to its order") {
    const Genus g = genus_from_file(kData + "/todd.genus");
    CHECK(g.label() == "custom(todd-custom)");
    CHECK(s_series(g, 8) == s_series(Genus::todd(), 8));
    for (const Space& sp : enumerate_spaces({0, 8, 4, 2})) {
        CHECK(genus_value(sp, g) == genus_value(sp, Genus::todd()));
    }
    CHECK_THROWS_AS(s_series(g, 9), InvalidInput);
}

TEST_CASE("empty custom genus is Q = 1") {
    const Genus g = genus_from_file(kData + "/empty.genus");
    CHECK(s_series(g, 6) == Series::constant(Rational(1), 6));
    CHECK(genus_value(Space(0, {5}), g) == Rational(5));
    CHECK(genus_value(Space(3, {2, 3}), g) == Rational(0));
}

TEST_CASE("custom genus parse errors") {
    CHECK_THROWS_AS(genus_from_file(kData + "/bad_rational.genus"), InvalidInput);
    CHECK_THROWS_AS(genus_from_file(kData + "/does-not-exist.genus"), InvalidInput);
    CHECK_THROWS_AS(genus_from_text("# only a comment\n"), InvalidInput);
    CHECK_THROWS_AS(genus_from_text("1/2\nname: late\n"), InvalidInput);
    CHECK_THROWS_AS(genus_from_text("name:   \n"), InvalidInput);
    CHECK_THROWS_AS(genus_from_text("name: x\n0.5\n"), InvalidInput);

    const Genus ok = genus_from_text("\n  name: spaced  # trailing\n\n -1/24 # q1\n\n0\n");
    const auto& c = std::get<Custom>(ok.kind());
    CHECK(c.name == "spaced");
    REQUIRE(c.q.size() == 2);
    CHECK(c.q[0] == Rational(-1, 24));
}
