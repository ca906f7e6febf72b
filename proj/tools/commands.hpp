#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cigenus/genus.hpp"
#include "cigenus/space.hpp"

namespace cigenus::cli {

enum class Method { Residue, Closed, Oracle };

Method parse_method(const std::string& text);
std::string method_name(Method m);

/// Genus selected by --genus/--y/--k/--custom. "alpha" is not a genus and is
/// handled by the compute command directly.
Genus make_genus(const std::string& name, const std::optional<std::string>& y, const std::optional<unsigned>& k,
                 const std::optional<std::string>& custom_file);

/// Value of `g` on `sp` by the chosen route. Throws InvalidInput when the
/// route has no formula for this genus.
Rational evaluate(const Space& sp, const Genus& g, Method m);

struct TableRow {
    Space space;
    std::string genus;
    std::string value;
};

std::vector<TableRow> build_table(unsigned nmin, unsigned nmax, unsigned dmax, unsigned rmax,
                                  const std::vector<Genus>& genera, Method method, unsigned jobs);

std::string format_csv(const std::vector<TableRow>& rows);
std::string format_jsonl(const std::vector<TableRow>& rows);

} // namespace cigenus::cli
