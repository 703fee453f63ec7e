// Polynomial ring contexts: an ordered list of variable names.
#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cspace {

struct Ring {
    std::vector<std::string> vars;

    std::size_t size() const { return vars.size(); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const Ring& other) const { return vars == other.vars; }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("duplicate ring variable " + vars[i]);
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    return r;
}

// Ring t1..tn (the joint-variable ring used throughout the linkage pipeline).
inline RingPtr make_t_ring(std::size_t n) {
    std::vector<std::string> vars;
    vars.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("t" + std::to_string(i));
    return make_ring(vars);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Appends fresh auxiliary variables (u for Rabinowitsch, w for intersections, ...).
// Names are made unique against the existing ring by suffixing digits.
inline RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = ring->vars;
    for (const auto& base : extra) {
        std::string name = base;
        int k = 0;
        while (std::find(vars.begin(), vars.end(), name) != vars.end())
            name = base + std::to_string(++k);
        vars.push_back(name);
    }
    return make_ring(std::move(vars));
}

}  // namespace cspace
