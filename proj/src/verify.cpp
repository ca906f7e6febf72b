#include "cigenus/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

#include "cigenus/chern_oracle.hpp"
#include "cigenus/closed_forms.hpp"
#include "cigenus/residue.hpp"

namespace cigenus {

namespace {

struct Alias {
    std::string_view alias;
    std::string_view canonical;
};

// Alternate spellings accepted by --only.
constexpr Alias kAliases[] = {
    {"engine≡oracle", "engine-oracle"},
    {"thm1.1", "ahat-closed"},
    {"eq1.2", "ahat-hypersurface"},
    {"thm1.3", "ahat-iterated"},
    {"thm4.7", "ahat-sign"},
    {"thm1.2", "alpha-consistency"},
    {"T1≡T2", "todd-forms"},
    {"A1≡Todd", "A1-todd"},
    {"A2≡2^n·Ahat", "A2-ahat"},
    {"prop4.4-specialization", "sinh-identity"},
};

constexpr std::size_t kSinhOrder = 40;
constexpr std::size_t kSinhTriples = 20;

class Checker {
  public:
    explicit Checker(const VerifyOptions& opts) : opts_(opts) {}

    bool selected(std::string_view id) const {
        return opts_.identities.empty() ||
               std::find(opts_.identities.begin(), opts_.identities.end(), id) != opts_.identities.end();
    }

    Rational engine(const Space& sp, const Genus& g) const {
        if (opts_.inject_fault && std::holds_alternative<Todd>(g.kind()) && sp.dimension() >= 1) {
            Series s = s_series(g, sp.dimension());
            s[1] += Rational(1);
            return genus_value_from_series(sp, s);
        }
        return genus_value(sp, g);
    }

    std::vector<VerifyReport> run_space(const Space& sp) const {
        std::vector<VerifyReport> out;
        const std::string inst = sp.to_string();
        auto equal = [&](std::string_view id, const std::string& genus, std::string detail, const Rational& lhs,
                         const Rational& rhs) {
            out.push_back({std::string(id), inst, genus, std::move(detail), rat_format(lhs), rat_format(rhs),
                           lhs == rhs});
        };
        const bool even = sp.dimension() % 2 == 0;
        const std::size_t r = sp.codimension();

        if (selected("engine-oracle")) {
            for (const Genus& g : sweep_genera()) {
                equal("engine-oracle", g.label(), "residue = chern-roots", engine(sp, g), genus_value_oracle(sp, g));
            }
        }
        if (selected("ahat-closed") && even) {
            equal("ahat-closed", "ahat", "binomial sum = residue", ahat_closed(sp), engine(sp, Genus::ahat()));
        }
        if (selected("ahat-hypersurface") && even && r == 1) {
            equal("ahat-hypersurface", "ahat", "hypersurface product = binomial sum",
                  ahat_hypersurface(sp.dimension() / 2, sp.degrees().front()), ahat_closed(sp));
        }
        if (selected("ahat-iterated") && even && r >= 2) {
            equal("ahat-iterated", "ahat", "iterated = binomial sum", ahat_iterated(sp), ahat_closed(sp));
        }
        if (selected("ahat-sign") && even && is_spin(sp)) {
            const Rational a = ahat_closed(sp);
            const SignClass cls = ahat_sign_class(sp);
            const bool match = cls == SignClass::Zero ? a.is_zero() : a.sign() > 0;
            out.push_back({"ahat-sign", inst, "ahat", "c1 = " + std::to_string(c1_of(sp)), rat_format(a),
                           cls == SignClass::Zero ? "zero" : "positive", match});
        }
        if (selected("alpha-consistency") && is_spin(sp)) {
            check_alpha(sp, inst, out);
        }
        if (selected("todd-forms")) {
            equal("todd-forms", "todd", "T1 = T2", todd_t1(sp), todd_t2(sp));
            equal("todd-forms", "todd", "T2 = residue", todd_t2(sp), engine(sp, Genus::todd()));
        }
        if (selected("chi_y-interp")) {
            equal("chi_y-interp", "ty(0)", "T_0 = todd", engine(sp, Genus::ty(Rational(0))),
                  engine(sp, Genus::todd()));
            equal("chi_y-interp", "ty(1)", "T_1 = signature", engine(sp, Genus::ty(Rational(1))),
                  engine(sp, Genus::signature()));
            equal("chi_y-interp", "ty(-1)", "T_-1 = euler", engine(sp, Genus::ty(Rational(-1))),
                  engine(sp, Genus::euler()));
        }
        if (selected("euler-closed")) {
            equal("euler-closed", "euler", "d h_n = residue", euler_closed(sp), engine(sp, Genus::euler()));
        }
        if (selected("ak-closed")) {
            for (unsigned k = 1; k <= 4; ++k) {
                const Genus g = Genus::ak(k);
                equal("ak-closed", g.label(), "binomial sum = residue", ak_closed(sp, k), engine(sp, g));
            }
        }
        if (selected("A1-todd")) {
            equal("A1-todd", "ak(1)", "A_1 = todd", ak_closed(sp, 1), engine(sp, Genus::todd()));
        }
        if (selected("A2-ahat")) {
            const Rational scale = pow(Rational(2), static_cast<int>(sp.dimension()));
            equal("A2-ahat", "ak(2)", "A_2 = 2^n ahat", ak_closed(sp, 2), scale * engine(sp, Genus::ahat()));
        }
        if (selected("permutation-invariance") && r >= 2) {
            std::vector<unsigned> perm = sp.degrees();
            std::sort(perm.begin(), perm.end());
            while (std::next_permutation(perm.begin(), perm.end())) {
                const Space permuted(sp.dimension(), perm);
                for (const Genus& g : sweep_genera()) {
                    equal("permutation-invariance", g.label(), permuted.to_string(), engine(permuted, g),
                          engine(sp, g));
                }
            }
        }
        if (selected("degree-one-absorption")) {
            std::vector<unsigned> extended = sp.degrees();
            extended.push_back(1);
            const Space bigger(sp.dimension(), extended);
            for (const Genus& g : sweep_genera()) {
                equal("degree-one-absorption", g.label(), bigger.to_string(), engine(bigger, g), engine(sp, g));
            }
        }
        if (selected("ahat-odd-vanishing") && !even) {
            equal("ahat-odd-vanishing", "ahat", "odd n", engine(sp, Genus::ahat()), Rational(0));
        }
        return out;
    }

    std::vector<VerifyReport> run_sinh_identity() const {
        std::vector<VerifyReport> out;
        if (!selected("sinh-identity")) {
            return out;
        }
        // R(x) = 2 sinh(x/2): only odd powers, z^{2m+1} -> (1/2)^{2m} / (2m+1)!
        Series rs(kSinhOrder);
        Integer fact(1);
        Rational quarter_pow(1);
        for (std::size_t i = 1; i <= kSinhOrder; ++i) {
            fact *= static_cast<unsigned long>(i);
            if (i % 2 == 1) {
                rs[i] = quarter_pow / Rational(fact);
                quarter_pow *= Rational(1, 4);
            }
        }
        auto at = [&](const Rational& c) { return s_subst_scale(rs, c); };

        std::mt19937 rng(44);
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 9);
        auto draw = [&] {
            const int p = num(rng);
            const int q = den(rng);
            return Rational(p, q);
        };
        for (std::size_t t = 0; t < kSinhTriples; ++t) {
            const Rational a = draw();
            const Rational b = draw();
            const Rational c = draw();
            const Series lhs = at(a + c) * at(b + c);
            const Series rhs = at(a) * at(b) + at(a + b + c) * at(c);
            std::size_t first_bad = kSinhOrder + 1;
            for (std::size_t i = 0; i <= kSinhOrder; ++i) {
                if (lhs[i] != rhs[i]) {
                    first_bad = i;
                    break;
                }
            }
            const bool ok = first_bad > kSinhOrder;
            const std::size_t shown = ok ? kSinhOrder : first_bad;
            out.push_back({"sinh-identity", "(" + rat_format(a) + "," + rat_format(b) + "," + rat_format(c) + ")",
                           "R=2sinh(x/2)", "coefficient z^" + std::to_string(shown), rat_format(lhs[shown]),
                           rat_format(rhs[shown]), ok});
        }
        return out;
    }

  private:
    void check_alpha(const Space& sp, const std::string& inst, std::vector<VerifyReport>& out) const {
        const AlphaValue alpha = alpha_invariant(sp);
        const unsigned n = sp.dimension();
        if (n % 4 == 0 || n % 4 == 2) {
            const Rational a = ahat_closed(sp);
            const bool integral = std::get<AlphaInteger>(alpha).value.is_integer();
            out.push_back({"alpha-consistency", inst, "ahat", n % 4 == 0 ? "Â integral" : "Â even integral",
                           rat_format(a), integral ? "integer" : "non-integer", integral});
        } else if (n % 4 == 1) {
            const int reference = std::get<AlphaMod2>(alpha).value;
            for (std::size_t i = 0; i < sp.codimension(); ++i) {
                const int v = alpha_mod2(sp, i);
                out.push_back({"alpha-consistency", inst, "alpha", "excluded degree index " + std::to_string(i),
                               std::to_string(v), std::to_string(reference), v == reference});
            }
        } else {
            const bool zero = std::holds_alternative<AlphaZero>(alpha);
            out.push_back({"alpha-consistency", inst, "alpha", "n = 3 mod 4", zero ? "0" : "nonzero", "0", zero});
        }
    }

    const VerifyOptions& opts_;
};

void enumerate_tuples(unsigned dmax, std::size_t length, std::vector<unsigned>& current,
                      const std::function<void(const std::vector<unsigned>&)>& emit) {
    if (current.size() == length) {
        emit(current);
        return;
    }
    const unsigned start = current.empty() ? 1 : current.back();
    for (unsigned d = start; d <= dmax; ++d) {
        current.push_back(d);
        enumerate_tuples(dmax, length, current, emit);
        current.pop_back();
    }
}

} // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "engine-oracle",     "ahat-closed",  "ahat-hypersurface", "ahat-iterated",
        "ahat-sign",         "alpha-consistency", "todd-forms",  "chi_y-interp",
        "euler-closed",      "ak-closed",    "A1-todd",           "A2-ahat",
        "permutation-invariance", "degree-one-absorption", "ahat-odd-vanishing", "sinh-identity",
    };
    return names;
}

std::string canonical_identity(std::string_view name) {
    for (const std::string& n : identity_names()) {
        if (n == name) {
            return n;
        }
    }
    for (const Alias& a : kAliases) {
        if (a.alias == name) {
            return std::string(a.canonical);
        }
    }
    throw InvalidInput("unknown identity '" + std::string(name) + "'");
}

std::vector<Space> enumerate_spaces(const SweepBounds& bounds) {
    std::vector<Space> spaces;
    for (unsigned n = bounds.nmin; n <= bounds.nmax; ++n) {
        std::vector<std::vector<unsigned>> tuples;
        for (std::size_t r = 0; r <= bounds.rmax; ++r) {
            std::vector<unsigned> current;
            enumerate_tuples(bounds.dmax, r, current, [&](const std::vector<unsigned>& t) { tuples.push_back(t); });
        }
        std::sort(tuples.begin(), tuples.end());
        for (auto& t : tuples) {
            spaces.emplace_back(n, std::move(t));
        }
    }
    return spaces;
}

std::vector<Genus> sweep_genera() {
    return {Genus::todd(), Genus::ahat(),           Genus::signature(),
            Genus::euler(), Genus::ty(Rational(1, 2)), Genus::ak(3)};
}

std::vector<VerifyReport> run_verify(const VerifyOptions& options) {
    const Checker checker(options);
    const std::vector<Space> spaces = enumerate_spaces(options.bounds);
    std::vector<std::vector<VerifyReport>> per_space(spaces.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < spaces.size(); i = next++) {
            per_space[i] = checker.run_space(spaces[i]);
        }
    };
    const unsigned jobs = std::max(1U, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }

    // Group by identity in canonical order, spaces in sweep order within each.
    std::vector<VerifyReport> all;
    std::vector<VerifyReport> sinh = checker.run_sinh_identity();
    for (const std::string& id : identity_names()) {
        if (id == "sinh-identity") {
            std::move(sinh.begin(), sinh.end(), std::back_inserter(all));
            continue;
        }
        for (const auto& batch : per_space) {
            for (const VerifyReport& rep : batch) {
                if (rep.identity == id) {
                    all.push_back(rep);
                }
            }
        }
    }
    return all;
}

VerifySummary summarize(const std::vector<VerifyReport>& reports) {
    VerifySummary s;
    for (const VerifyReport& r : reports) {
        ++s.total;
        auto& [checks, failures] = s.per_identity[r.identity];
        ++checks;
        if (!r.pass) {
            ++s.failed;
            ++failures;
        }
    }
    return s;
}

} // namespace cigenus
