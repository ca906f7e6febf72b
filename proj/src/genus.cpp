#include "cigenus/genus.hpp"

#include <fstream>
#include <sstream>

namespace cigenus {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

Rational factorial(std::size_t n) {
    Integer f(1);
    for (std::size_t i = 2; i <= n; ++i) {
        f *= static_cast<unsigned long>(i);
    }
    return Rational(f);
}

// exp(a z) through z^order.
Series exp_scaled(const Rational& a, std::size_t order) {
    Series s(order);
    Rational power(1);
    for (std::size_t i = 0; i <= order; ++i) {
        s[i] = power / factorial(i);
        power *= a;
    }
    return s;
}

// (exp(a z) - 1) / z through z^order; coefficient i is a^(i+1)/(i+1)!.
Series expm1_over_z(const Rational& a, std::size_t order) {
    Series s(order);
    Rational power = a;
    for (std::size_t i = 0; i <= order; ++i) {
        s[i] = power / factorial(i + 1);
        power *= a;
    }
    return s;
}

Series todd_series(std::size_t order) {
    // (1 - e^{-z})/z
    Series s(order);
    for (std::size_t i = 0; i <= order; ++i) {
        const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        s[i] = sign / factorial(i + 1);
    }
    return s;
}

Series ahat_series(std::size_t order) {
    // 2 sinh(z/2) / z: even powers only, z^{2m} -> (1/2)^{2m} / (2m+1)!
    Series s(order);
    const Rational quarter(1, 4);
    Rational power(1);
    for (std::size_t i = 0; i <= order; i += 2) {
        s[i] = power / factorial(i + 1);
        power *= quarter;
    }
    return s;
}

Series signature_series(std::size_t order) {
    // tanh(z)/z = (sinh(z)/z) / cosh(z)
    Series sinh_over_z(order);
    Series cosh(order);
    for (std::size_t i = 0; i <= order; i += 2) {
        sinh_over_z[i] = factorial(i + 1).inverse();
        cosh[i] = factorial(i).inverse();
    }
    return sinh_over_z * s_recip(cosh);
}

Series euler_series(std::size_t order) {
    Series s(order);
    for (std::size_t i = 0; i <= order; ++i) {
        s[i] = (i % 2 == 0) ? Rational(1) : Rational(-1);
    }
    return s;
}

Series ty_series(const Rational& y, std::size_t order) {
    // (e^{az} - 1) / (z (e^{az} + y)) with a = y + 1
    const Rational a = y + Rational(1);
    Series denom = exp_scaled(a, order);
    denom[0] += y;
    return expm1_over_z(a, order) * s_recip(denom);
}

Series ak_series(unsigned k, std::size_t order) {
    // (e^{kz} - 1) / (k z e^z)
    const Rational kr(static_cast<std::int64_t>(k));
    return expm1_over_z(kr, order) * exp_scaled(Rational(-1), order) * kr.inverse();
}

Series custom_series(const Custom& c, std::size_t order) {
    Series q = Series::constant(Rational(1), order);
    if (!c.q.empty()) {
        if (c.q.size() < order) {
            throw InvalidInput("custom genus '" + c.name + "' supplies " + std::to_string(c.q.size()) +
                               " coefficients but order " + std::to_string(order) + " is required");
        }
        for (std::size_t i = 1; i <= order; ++i) {
            q[i] = c.q[i - 1];
        }
    }
    return s_recip(q);
}

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace

Genus Genus::ty(const Rational& y) {
    if (y == Rational(-1)) {
        return euler();
    }
    return Genus(Ty{y});
}

Genus Genus::ak(unsigned k) {
    if (k == 0) {
        throw InvalidInput("A_k genus requires k >= 1");
    }
    return Genus(Ak{k});
}

Genus Genus::custom(std::string name, std::vector<Rational> q) {
    if (name.empty()) {
        throw InvalidInput("custom genus requires a name");
    }
    return Genus(Custom{std::move(name), std::move(q)});
}

std::string Genus::name() const {
    return std::visit(overloaded{
                          [](const Todd&) -> std::string { return "todd"; },
                          [](const Ahat&) -> std::string { return "ahat"; },
                          [](const Signature&) -> std::string { return "signature"; },
                          [](const Euler&) -> std::string { return "euler"; },
                          [](const Ty&) -> std::string { return "ty"; },
                          [](const Ak&) -> std::string { return "ak"; },
                          [](const Custom&) -> std::string { return "custom"; },
                      },
                      kind_);
}

std::string Genus::label() const {
    return std::visit(overloaded{
                          [](const Ty& t) { return "ty(" + rat_format(t.y) + ")"; },
                          [](const Ak& a) { return "ak(" + std::to_string(a.k) + ")"; },
                          [](const Custom& c) { return "custom(" + c.name + ")"; },
                          [this](const auto&) { return name(); },
                      },
                      kind_);
}

Series s_series(const Genus& g, std::size_t order) {
    return std::visit(overloaded{
                          [&](const Todd&) { return todd_series(order); },
                          [&](const Ahat&) { return ahat_series(order); },
                          [&](const Signature&) { return signature_series(order); },
                          [&](const Euler&) { return euler_series(order); },
                          [&](const Ty& t) { return ty_series(t.y, order); },
                          [&](const Ak& a) { return ak_series(a.k, order); },
                          [&](const Custom& c) { return custom_series(c, order); },
                      },
                      g.kind());
}

Genus genus_from_text(std::string_view text) {
    std::string name;
    bool have_name = false;
    std::vector<Rational> q;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (!have_name) {
            constexpr std::string_view key = "name:";
            if (!line.starts_with(key)) {
                throw InvalidInput("line " + std::to_string(lineno) + ": expected 'name: <string>'");
            }
            name = std::string(trim(line.substr(key.size())));
            if (name.empty()) {
                throw InvalidInput("line " + std::to_string(lineno) + ": empty genus name");
            }
            have_name = true;
            continue;
        }
        try {
            q.push_back(rat_parse(line));
        } catch (const InvalidInput& e) {
            throw InvalidInput("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_name) {
        throw InvalidInput("custom genus file has no 'name:' line");
    }
    return Genus::custom(std::move(name), std::move(q));
}

Genus genus_from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open genus file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return genus_from_text(buf.str());
}

} // namespace cigenus
