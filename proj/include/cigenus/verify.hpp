#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cigenus/genus.hpp"
#include "cigenus/space.hpp"

namespace cigenus {

/// One identity check. `pass` holds iff lhs and rhs agree as exact rationals,
/// or, for classification checks, iff the two classifications match.
struct VerifyReport {
    std::string identity;
    std::string instance;
    std::string genus;
    std::string detail;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct SweepBounds {
    unsigned nmin = 0;
    unsigned nmax = 8;
    unsigned dmax = 5;
    unsigned rmax = 3;
};

struct VerifyOptions {
    SweepBounds bounds;
    /// Canonical identity names; empty selects all.
    std::vector<std::string> identities;
    unsigned jobs = 1;
    /// Test hook: perturbs one coefficient of the Todd S-series on the
    /// residue-engine side so that the harness must report failures.
    bool inject_fault = false;
};

struct VerifySummary {
    std::size_t total = 0;
    std::size_t failed = 0;
    std::map<std::string, std::pair<std::size_t, std::size_t>> per_identity; // name -> (checks, failures)
};

/// Canonical identity names in run order.
const std::vector<std::string>& identity_names();

/// Maps a canonical name or a documented alias to the canonical name.
/// Throws InvalidInput for unknown names.
std::string canonical_identity(std::string_view name);

/// All X_n(d) with nmin <= n <= nmax, r <= rmax and non-decreasing degree
/// tuples with entries in 1..dmax, in lexicographic (n, degrees) order.
std::vector<Space> enumerate_spaces(const SweepBounds& bounds);

/// Todd, Â, signature, Euler, T_{1/2}, A_3.
std::vector<Genus> sweep_genera();

/// Runs the selected identity suites. Output order is deterministic and
/// independent of `jobs`.
std::vector<VerifyReport> run_verify(const VerifyOptions& options);

VerifySummary summarize(const std::vector<VerifyReport>& reports);

} // namespace cigenus
