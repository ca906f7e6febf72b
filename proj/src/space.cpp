#include "cigenus/space.hpp"

#include <numeric>

namespace cigenus {

Space::Space(unsigned n, std::vector<unsigned> degrees) : n_(n), degrees_(std::move(degrees)) {
    for (unsigned d : degrees_) {
        if (d == 0) {
            throw InvalidInput("degrees of a complete intersection must be positive");
        }
    }
}

Integer Space::total_degree() const {
    Integer d(1);
    for (unsigned di : degrees_) {
        d *= di;
    }
    return d;
}

std::int64_t Space::degree_sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

std::string Space::to_string() const {
    if (degrees_.empty()) {
        return "CP^" + std::to_string(n_);
    }
    std::string s = "X_" + std::to_string(n_) + "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i != 0) {
            s += ",";
        }
        s += std::to_string(degrees_[i]);
    }
    return s + ")";
}

std::int64_t c1_of(const Space& sp) {
    return static_cast<std::int64_t>(sp.dimension()) + static_cast<std::int64_t>(sp.codimension()) + 1 -
           sp.degree_sum();
}

bool is_spin(const Space& sp) { return c1_of(sp) % 2 == 0; }

} // namespace cigenus
