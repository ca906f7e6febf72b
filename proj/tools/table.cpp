#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <tuple>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cigenus/chern_oracle.hpp"
#include "cigenus/closed_forms.hpp"
#include "cigenus/residue.hpp"
#include "cigenus/verify.hpp"

namespace cigenus::cli {

Method parse_method(const std::string& text) {
    if (text == "residue") {
        return Method::Residue;
    }
    if (text == "closed") {
        return Method::Closed;
    }
    if (text == "oracle") {
        return Method::Oracle;
    }
    throw InvalidInput("unknown method '" + text + "' (expected residue, closed or oracle)");
}

std::string method_name(Method m) {
    switch (m) {
    case Method::Residue:
        return "residue";
    case Method::Closed:
        return "closed";
    case Method::Oracle:
        return "oracle";
    }
    return "residue";
}

Genus make_genus(const std::string& name, const std::optional<std::string>& y, const std::optional<unsigned>& k,
                 const std::optional<std::string>& custom_file) {
    if (name == "todd") {
        return Genus::todd();
    }
    if (name == "ahat") {
        return Genus::ahat();
    }
    if (name == "signature") {
        return Genus::signature();
    }
    if (name == "euler") {
        return Genus::euler();
    }
    if (name == "ty") {
        if (!y) {
            throw InvalidInput("genus ty requires --y <rational>");
        }
        return Genus::ty(rat_parse(*y));
    }
    if (name == "ak") {
        if (!k) {
            throw InvalidInput("genus ak requires --k <positive integer>");
        }
        return Genus::ak(*k);
    }
    if (name == "custom") {
        if (!custom_file) {
            throw InvalidInput("genus custom requires --custom <file>");
        }
        return genus_from_file(*custom_file);
    }
    throw InvalidInput("unknown genus '" + name + "'");
}

Rational evaluate(const Space& sp, const Genus& g, Method m) {
    switch (m) {
    case Method::Residue:
        return genus_value(sp, g);
    case Method::Oracle:
        return genus_value_oracle(sp, g);
    case Method::Closed:
        break;
    }
    if (std::holds_alternative<Todd>(g.kind())) {
        return todd_t2(sp);
    }
    if (std::holds_alternative<Ahat>(g.kind())) {
        return ahat_closed(sp);
    }
    if (std::holds_alternative<Euler>(g.kind())) {
        return euler_closed(sp);
    }
    if (const auto* a = std::get_if<Ak>(&g.kind())) {
        return ak_closed(sp, a->k);
    }
    if (const auto* t = std::get_if<Ty>(&g.kind()); t && t->y.is_zero()) {
        return todd_t2(sp);
    }
    throw InvalidInput("no closed form for genus " + g.label() + "; use --method residue or oracle");
}

std::vector<TableRow> build_table(unsigned nmin, unsigned nmax, unsigned dmax, unsigned rmax,
                                  const std::vector<Genus>& genera, Method method, unsigned jobs) {
    const std::vector<Space> spaces = enumerate_spaces({nmin, nmax, dmax, rmax});
    std::vector<std::pair<TableRow, std::size_t>> keyed;
    keyed.reserve(spaces.size() * genera.size());
    for (const Space& sp : spaces) {
        for (std::size_t gi = 0; gi < genera.size(); ++gi) {
            keyed.push_back({{sp, genera[gi].label(), {}}, gi});
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first.space, a.first.genus) < std::tie(b.first.space, b.first.genus);
    });
    std::vector<TableRow> rows;
    std::vector<std::size_t> genus_index;
    for (auto& [row, gi] : keyed) {
        rows.push_back(std::move(row));
        genus_index.push_back(gi);
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            try {
                rows[i].value = rat_format(evaluate(rows[i].space, genera[genus_index[i]], method));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

namespace {

std::string degrees_text(const Space& sp) {
    std::string s = "[";
    for (std::size_t i = 0; i < sp.degrees().size(); ++i) {
        if (i != 0) {
            s += ",";
        }
        s += std::to_string(sp.degrees()[i]);
    }
    return s + "]";
}

} // namespace

std::string format_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "n,degrees,c1,spin,genus,value\n";
    for (const TableRow& row : rows) {
        out << row.space.dimension() << ",\"" << degrees_text(row.space) << "\"," << c1_of(row.space) << ","
            << (is_spin(row.space) ? "true" : "false") << "," << row.genus << "," << row.value << "\n";
    }
    return out.str();
}

std::string format_jsonl(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    for (const TableRow& row : rows) {
        nlohmann::ordered_json j;
        j["n"] = row.space.dimension();
        j["degrees"] = row.space.degrees();
        j["c1"] = c1_of(row.space);
        j["spin"] = is_spin(row.space);
        j["genus"] = row.genus;
        j["value"] = row.value;
        out << j.dump() << "\n";
    }
    return out.str();
}

} // namespace cigenus::cli
