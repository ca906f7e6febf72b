#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cigenus/rational.hpp"
#include "cigenus/series.hpp"

namespace cigenus {

struct Todd {};
struct Ahat {};
struct Signature {};
struct Euler {};
/// Generalized Todd genus T_y evaluated at a rational point y != -1.
struct Ty {
    Rational y;
};
/// Krichever's A_k genus, k >= 1.
struct Ak {
    unsigned k;
};
/// Genus given by Q(x) = 1 + q_1 x + q_2 x^2 + ... with user-supplied q_i.
/// An empty coefficient list means Q = 1 exactly.
struct Custom {
    std::string name;
    std::vector<Rational> q;
};

/// A Hirzebruch genus, identified by the power series Q(x) = x / R(x).
///
/// Construct through the factory functions; they enforce the invariants
/// (T_{-1} becomes Euler, A_k needs k >= 1).
class Genus {
  public:
    using Kind = std::variant<Todd, Ahat, Signature, Euler, Ty, Ak, Custom>;

    static Genus todd() { return Genus(Todd{}); }
    static Genus ahat() { return Genus(Ahat{}); }
    static Genus signature() { return Genus(Signature{}); }
    static Genus euler() { return Genus(Euler{}); }
    static Genus ty(const Rational& y);
    static Genus ak(unsigned k);
    static Genus custom(std::string name, std::vector<Rational> q);

    const Kind& kind() const { return kind_; }

    /// Short identifier: "todd", "ahat", "signature", "euler", "ty", "ak", "custom".
    std::string name() const;
    /// Identifier with parameters, e.g. "ty(1/2)", "ak(3)", "custom(witten)".
    std::string label() const;

  private:
    explicit Genus(Kind k) : kind_(std::move(k)) {}

    Kind kind_;
};

/// S(z) = R(z)/z expanded exactly through z^order. The constant term is 1.
///
/// Throws InvalidInput if a custom genus does not supply enough coefficients.
Series s_series(const Genus& g, std::size_t order);

/// Parses the custom genus text format:
///
///     # comment
///     name: witten-truncated
///     -1/24      <- q_1
///     0          <- q_2
///
/// Blank lines and anything after '#' are ignored.
Genus genus_from_text(std::string_view text);

Genus genus_from_file(const std::filesystem::path& path);

} // namespace cigenus
