#include "setdist/core.hpp"

#include <cmath>

namespace setdist {

std::size_t intersection_size(const FiniteSet& a, const FiniteSet& b) {
    const FiniteSet& small = a.size() <= b.size() ? a : b;
    const FiniteSet& large = a.size() <= b.size() ? b : a;
    std::size_t n = 0;
    for (const auto& e : small.elements())
        if (large.contains(e)) ++n;
    return n;
}

std::size_t difference_size(const FiniteSet& b, const FiniteSet& a) {
    return b.size() - intersection_size(a, b);
}

bool is_subset(const FiniteSet& inner, const FiniteSet& outer) {
    if (inner.size() > outer.size()) return false;
    for (const auto& e : inner.elements())
        if (!outer.contains(e)) return false;
    return true;
}

bool is_strict_subset(const FiniteSet& inner, const FiniteSet& outer) {
    return inner.size() < outer.size() && is_subset(inner, outer);
}

double t_clamp(double x) { return x >= 1.0 ? x : 1.0; }

double delta(const FiniteSet& a, const FiniteSet& b) {
    const auto novel = static_cast<double>(difference_size(b, a));
    const auto card = static_cast<double>(a.size());
    return std::log2(t_clamp(novel * card));
}

double dist(const FiniteSet& a, const FiniteSet& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("dist: sets must be non-empty");
    return std::max(delta(a, b), delta(b, a));
}

double entropy(const FiniteSet& a) {
    if (a.empty())
        throw std::invalid_argument("entropy undefined on empty set");
    return std::log2(static_cast<double>(a.size()));
}

double info(const FiniteSet& yx, const FiniteSet& y) {
    if (yx.empty() || y.empty())
        throw std::invalid_argument("info: sets must be non-empty");
    if (!is_subset(yx, y))
        throw std::invalid_argument("info: restriction must be a subset");
    return std::log2(static_cast<double>(y.size())) -
           std::log2(static_cast<double>(yx.size()));
}

}  // namespace setdist
