#pragma once

// Finite-set representation and the combinatorial information set-distance
// d(A,B) = max{delta(A,B), delta(B,A)} with
// delta(A,B) = log2(t(|B \ A| * |A|)), t(x) = max(x, 1).
//
// Distances are measured in bits. Elements are finite bit strings; two
// elements are equal iff they agree in both length and content, so the
// 4-bit word 0001 is distinct from the 3-bit word 001.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace setdist {

class Element {
public:
    explicit Element(std::string bits) : bits_(std::move(bits)) {
        if (bits_.empty())
            throw std::invalid_argument("Element: empty bit string");
        for (char c : bits_)
            if (c != '0' && c != '1')
                throw std::invalid_argument("Element: non-binary symbol");
    }

    const std::string& bits() const noexcept { return bits_; }
    std::size_t length() const noexcept { return bits_.size(); }

    bool operator==(const Element& other) const noexcept = default;

private:
    std::string bits_;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const noexcept {
        return std::hash<std::string>{}(e.bits());
    }
};

// Deduplicated set of Elements. Iteration follows insertion order, which
// keeps every downstream output deterministic. Immutable once built up;
// all query operations are const and thread-safe.
class FiniteSet {
public:
    FiniteSet() = default;

    FiniteSet(std::initializer_list<std::string> bits) {
        for (const auto& b : bits) insert(Element(b));
    }

    // Returns false if the element was already present.
    bool insert(Element e) {
        auto [it, fresh] = index_.insert(e);
        if (fresh) order_.push_back(std::move(e));
        return fresh;
    }

    bool contains(const Element& e) const { return index_.contains(e); }
    std::size_t size() const noexcept { return order_.size(); }
    bool empty() const noexcept { return order_.empty(); }

    // Membership in P_F+: cardinality at least 2.
    bool in_pf_plus() const noexcept { return size() >= 2; }

    // Elements in insertion order.
    const std::vector<Element>& elements() const noexcept { return order_; }

    bool operator==(const FiniteSet& other) const {
        if (size() != other.size()) return false;
        for (const auto& e : order_)
            if (!other.contains(e)) return false;
        return true;
    }

private:
    std::vector<Element> order_;
    std::unordered_set<Element, ElementHash> index_;
};

// |A intersect B|, iterating the smaller set.
std::size_t intersection_size(const FiniteSet& a, const FiniteSet& b);

// |B \ A| = |B| - |A intersect B|; never materializes a complement.
std::size_t difference_size(const FiniteSet& b, const FiniteSet& a);

bool is_subset(const FiniteSet& inner, const FiniteSet& outer);
bool is_strict_subset(const FiniteSet& inner, const FiniteSet& outer);

// t(x) = x for x >= 1, else 1.
double t_clamp(double x);

// delta(A,B) = log2(t(|B \ A| * |A|)). Defined for all finite sets,
// including empty ones (the clamp yields 0). Non-symmetric; zero whenever
// B is a subset of A or either set is empty.
double delta(const FiniteSet& a, const FiniteSet& b);

// d(A,B) = max{delta(A,B), delta(B,A)}. Both sets must be non-empty.
double dist(const FiniteSet& a, const FiniteSet& b);

// H(A) = log2|A|. Undefined on the empty set.
double entropy(const FiniteSet& a);

// I(Yx : Y) = log2|Y| - log2|Yx| for Yx a subset of Y, both non-empty.
double info(const FiniteSet& yx, const FiniteSet& y);

}  // namespace setdist
