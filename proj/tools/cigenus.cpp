// cigenus: Hirzebruch genera of complete intersections X_n(d_1, ..., d_r).
//
// Exit codes: 0 success, 1 verification failure or internal error,
// 2 usage / invalid input.

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cigenus/closed_forms.hpp"
#include "cigenus/series.hpp"
#include "cigenus/verify.hpp"
#include "commands.hpp"

using namespace cigenus;
using namespace cigenus::cli;

namespace {

constexpr const char* kFooter = R"(Genera: todd, ahat, signature, euler, ty (needs --y), ak (needs --k),
custom (needs --custom FILE), alpha (compute only; spin spaces).

Custom genus file: one 'name: <string>' line, then one rational per line
giving q_1, q_2, ... of Q(x) = 1 + q_1 x + q_2 x^2 + ...  '#' starts a
comment. Rationals are written -?p(/q)?. An empty list means Q = 1;
otherwise at least n coefficients are needed for dimension n.)";

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

unsigned parse_unsigned(const std::string& text, const char* what) {
    unsigned v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw InvalidInput(std::string("invalid ") + what + ": '" + text + "'");
    }
    return v;
}

std::vector<unsigned> parse_degrees(const std::string& text) {
    std::vector<unsigned> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const unsigned d = parse_unsigned(text.substr(start, comma - start), "degree");
        if (d == 0) {
            throw InvalidInput("degrees must be positive");
        }
        out.push_back(d);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned v = parse_unsigned(text, "dimension");
        return {v, v};
    }
    const unsigned a = parse_unsigned(text.substr(0, dots), "dimension range start");
    const unsigned b = parse_unsigned(text.substr(dots + 2), "dimension range end");
    if (a > b) {
        throw InvalidInput("empty dimension range '" + text + "'");
    }
    return {a, b};
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const std::string& item : items) {
        std::size_t start = 0;
        while (start <= item.size()) {
            const auto comma = item.find(',', start);
            std::string part = item.substr(start, comma - start);
            if (!part.empty()) {
                out.push_back(std::move(part));
            }
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    return out;
}

struct GenusFlags {
    std::optional<std::string> y;
    std::optional<unsigned> k;
    std::optional<std::string> custom;
    std::string method = "residue";

    void attach(CLI::App* cmd) {
        cmd->add_option("--y", y, "Rational evaluation point for the ty genus");
        cmd->add_option("--k", k, "Positive integer index for the ak genus");
        cmd->add_option("--custom", custom, "Custom genus file");
        cmd->add_option("--method", method, "residue, closed or oracle")->capture_default_str();
    }
};

nlohmann::ordered_json genus_params(const Genus& g) {
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    if (const auto* t = std::get_if<Ty>(&g.kind())) {
        p["y"] = rat_format(t->y);
    } else if (const auto* a = std::get_if<Ak>(&g.kind())) {
        p["k"] = a->k;
    } else if (const auto* c = std::get_if<Custom>(&g.kind())) {
        p["name"] = c->name;
        p["coefficients"] = c->q.size();
    }
    return p;
}

int run_compute(const std::string& dimension, const std::string& degrees, const std::string& genus_name,
                const GenusFlags& flags) {
    const Space sp(parse_unsigned(dimension, "dimension"), parse_degrees(degrees));
    const Method method = parse_method(flags.method);

    nlohmann::ordered_json out;
    out["dimension"] = sp.dimension();
    out["degrees"] = sp.degrees();

    if (genus_name == "alpha") {
        if (!is_spin(sp)) {
            throw InvalidInput(sp.to_string() + " is not spin (c1 = " + std::to_string(c1_of(sp)) + ")");
        }
        const AlphaValue alpha = alpha_invariant(sp);
        std::string kind;
        std::string value;
        if (std::holds_alternative<AlphaInteger>(alpha)) {
            Rational a = evaluate(sp, Genus::ahat(), method);
            if (sp.dimension() % 4 == 2) {
                a /= Rational(2);
            }
            kind = "integer";
            value = rat_format(a);
        } else if (const auto* m = std::get_if<AlphaMod2>(&alpha)) {
            kind = "mod2";
            value = std::to_string(m->value);
        } else {
            kind = "zero";
            value = "0";
        }
        out["genus"] = "alpha";
        out["params"] = nlohmann::ordered_json::object();
        out["c1"] = c1_of(sp);
        out["spin"] = true;
        out["value"] = value;
        out["alpha_kind"] = kind;
        out["method"] = kind == "integer" ? method_name(method) : "closed";
    } else {
        const Genus g = make_genus(genus_name, flags.y, flags.k, flags.custom);
        const Rational v = evaluate(sp, g, method);
        out["genus"] = g.name();
        out["params"] = genus_params(g);
        out["c1"] = c1_of(sp);
        out["spin"] = is_spin(sp);
        out["value"] = rat_format(v);
        out["method"] = method_name(method);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_table(const std::string& dimension, unsigned dmax, unsigned rmax, const std::vector<std::string>& genus_list,
              const std::string& format, unsigned jobs, const GenusFlags& flags) {
    const auto [nmin, nmax] = parse_range(dimension);
    if (dmax == 0) {
        throw InvalidInput("--dmax must be positive");
    }
    const std::vector<std::string> names = split_list(genus_list);
    if (names.empty()) {
        throw InvalidInput("--genus needs at least one genus");
    }
    if (format != "csv" && format != "jsonl") {
        throw InvalidInput("table --format must be csv or jsonl");
    }
    std::vector<Genus> genera;
    for (const std::string& name : names) {
        if (name == "alpha") {
            throw InvalidInput("alpha is only available through 'compute'");
        }
        genera.push_back(make_genus(name, flags.y, flags.k, flags.custom));
    }
    const auto rows = build_table(nmin, nmax, dmax, rmax, genera, parse_method(flags.method), jobs);
    std::cout << (format == "csv" ? format_csv(rows) : format_jsonl(rows));
    return 0;
}

int run_verify_cmd(const SweepBounds& bounds, const std::vector<std::string>& only, bool all, unsigned jobs,
                   bool verbose, bool inject_fault) {
    if (bounds.dmax == 0) {
        throw InvalidInput("--dmax must be positive");
    }
    VerifyOptions opts;
    opts.bounds = bounds;
    opts.jobs = jobs;
    opts.inject_fault = inject_fault;
    if (!all) {
        for (const std::string& name : split_list(only)) {
            opts.identities.push_back(canonical_identity(name));
        }
    }
    const auto reports = run_verify(opts);
    for (const VerifyReport& r : reports) {
        if (!r.pass || verbose) {
            nlohmann::ordered_json j;
            j["identity"] = r.identity;
            j["instance"] = r.instance;
            j["genus"] = r.genus;
            j["detail"] = r.detail;
            j["lhs"] = r.lhs;
            j["rhs"] = r.rhs;
            j["pass"] = r.pass;
            std::cout << j.dump() << "\n";
        }
    }
    const VerifySummary s = summarize(reports);
    for (const auto& [name, counts] : s.per_identity) {
        std::cout << "# " << name << ": " << counts.first << " checks, " << counts.second << " failed\n";
    }
    std::cout << "verify: " << s.total << " checks, " << (s.total - s.failed) << " passed, " << s.failed
              << " failed\n";
    return s.failed == 0 ? 0 : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hirzebruch genera of complete intersections in exact arithmetic"};
    app.footer(kFooter);
    app.require_subcommand(1);

    GenusFlags compute_flags;
    std::string c_dim;
    std::string c_degrees;
    std::string c_genus;
    auto* compute = app.add_subcommand("compute", "Evaluate one genus on one complete intersection (JSON)");
    compute->add_option("-n,--dimension", c_dim, "Complex dimension n")->required();
    compute->add_option("-d,--degrees", c_degrees, "Comma-separated degrees (omit for CP^n)");
    compute->add_option("--genus", c_genus, "Genus name")->required();
    compute_flags.attach(compute);

    GenusFlags table_flags;
    std::string t_dim;
    unsigned t_dmax = 1;
    unsigned t_rmax = 0;
    std::vector<std::string> t_genus;
    std::string t_format = "csv";
    unsigned t_jobs = 1;
    auto* table = app.add_subcommand("table", "Tabulate genera over a sweep of complete intersections");
    table->add_option("-n,--dimension", t_dim, "Dimension or range a..b")->required();
    table->add_option("--dmax", t_dmax, "Largest degree")->capture_default_str();
    table->add_option("--rmax", t_rmax, "Largest number of degrees")->capture_default_str();
    table->add_option("--genus", t_genus, "Comma-separated genus names")->required();
    table->add_option("--format", t_format, "csv or jsonl")->capture_default_str();
    table->add_option("--jobs", t_jobs, "Worker threads")->capture_default_str();
    table_flags.attach(table);

    SweepBounds v_bounds;
    std::vector<std::string> v_only;
    bool v_all = false;
    unsigned v_jobs = 1;
    bool v_verbose = false;
    bool v_fault = false;
    auto* verify = app.add_subcommand("verify", "Check every identity over a sweep; exit 0 iff all pass");
    verify->add_option("--nmax", v_bounds.nmax, "Largest dimension")->capture_default_str();
    verify->add_option("--dmax", v_bounds.dmax, "Largest degree")->capture_default_str();
    verify->add_option("--rmax", v_bounds.rmax, "Largest number of degrees")->capture_default_str();
    auto* only_opt = verify->add_option("--only", v_only, "Run only these identities (comma list)");
    verify->add_flag("--all", v_all, "Run every identity (default)")->excludes(only_opt);
    verify->add_option("--jobs", v_jobs, "Worker threads")->capture_default_str();
    verify->add_flag("-v,--verbose", v_verbose, "Print passing checks too");
    verify->add_flag("--inject-fault", v_fault, "Perturb the Todd series on the engine side")->group("");
    std::string identity_help = "Identities:";
    for (const std::string& name : identity_names()) {
        identity_help += " " + name;
    }
    verify->footer(identity_help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*compute) {
            return run_compute(c_dim, c_degrees, c_genus, compute_flags);
        }
        if (*table) {
            return run_table(t_dim, t_dmax, t_rmax, t_genus, t_format, t_jobs, table_flags);
        }
        return run_verify_cmd(v_bounds, v_only, v_all, v_jobs, v_verbose, v_fault);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TruncationError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
}
