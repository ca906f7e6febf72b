#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cigenus/rational.hpp"

namespace cigenus {

/// Complete intersection X_n(d_1, ..., d_r) in CP^{n+r}.
///
/// Degrees keep their input order. An empty degree list is CP^n.
class Space {
  public:
    Space(unsigned n, std::vector<unsigned> degrees);

    unsigned dimension() const { return n_; }
    const std::vector<unsigned>& degrees() const { return degrees_; }
    std::size_t codimension() const { return degrees_.size(); }

    /// d_1 * ... * d_r, i.e. the evaluation of x^n on the fundamental class.
    Integer total_degree() const;
    std::int64_t degree_sum() const;

    /// String form used in reports, e.g. "X_2(4)" or "CP^3".
    std::string to_string() const;

    friend bool operator==(const Space&, const Space&) = default;
    /// Lexicographic in n, then degree tuple.
    friend auto operator<=>(const Space&, const Space&) = default;

  private:
    unsigned n_;
    std::vector<unsigned> degrees_;
};

/// c_1 = n + r + 1 - sum d_i; the first Chern class is c_1 * x.
std::int64_t c1_of(const Space& sp);

/// Spin iff c_1 is even.
bool is_spin(const Space& sp);

} // namespace cigenus
