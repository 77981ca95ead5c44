#pragma once

// Independent brute-force oracles and property suites for the set-distance
// library: subset annihilation of delta, the semi-metric axioms, the
// triangle inequality on containment-free triples, the key counting
// inequality behind it, the max-combination lemma, the entropy/information
// identities, and cross-validation of the LZ76 decomposition.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "setdist/core.hpp"

namespace setdist::verify {

struct PropertyReport {
    std::string suite;
    std::uint64_t trials = 0;      // attempted
    std::uint64_t applicable = 0;  // precondition/condition met
    std::vector<std::string> violations;
    std::vector<std::string> notes;  // informational findings, not failures
    bool passed() const noexcept { return violations.empty(); }
};

// Strict-containment flags for a triple (A, B, C).
struct TripleCondition {
    bool a_in_b = false, b_in_a = false;
    bool a_in_c = false, c_in_a = false;
    bool b_in_c = false, c_in_b = false;

    // The triangle inequality is guaranteed only when no set of the triple
    // is strictly contained in another.
    bool containment_free() const noexcept {
        return !(a_in_b || b_in_a || a_in_c || c_in_a || b_in_c || c_in_b);
    }
};

TripleCondition containment_flags(const FiniteSet& a, const FiniteSet& b,
                                  const FiniteSet& c);

struct TriangleCheck {
    TripleCondition condition;
    bool holds = false;   // dist(A,C) <= dist(A,B) + dist(B,C) + 1e-9
    double slack = 0.0;   // RHS - LHS
};

// Requires all three sets in P_F+ (cardinality >= 2).
TriangleCheck check_triangle(const FiniteSet& a, const FiniteSet& b,
                             const FiniteSet& c);

// |C\A| <= 2 * |B\A| * |C\B|, exact integer arithmetic. Applicable only
// when all three counts are >= 1; returns nullopt otherwise.
std::optional<bool> check_key_inequality(const FiniteSet& a,
                                         const FiniteSet& b,
                                         const FiniteSet& c);

// max{a1,b1} <= max{a2,b2} + max{a3,b3}, given a1 <= a2+a3 and
// b1 <= b2+b3. Returns nullopt when the premises do not hold.
std::optional<bool> check_max_combination(double a1, double a2, double a3,
                                          double b1, double b2, double b3);

// Independent re-derivation of the exhaustive history: each candidate
// endpoint is tested for reproducibility by scanning every copy start
// position explicitly, overlapping copies included. Test oracle only.
std::vector<std::string> lz76_oracle(std::string_view bits);

// The i-th element of a universe of the given size: the index written as a
// fixed-width bit word.
Element universe_element(std::size_t index, std::size_t universe_size);

// Uniform random subset of the universe with cardinality >= min_card,
// drawn by rejection. Deterministic given the RNG state.
FiniteSet random_set(std::size_t universe_size, std::size_t min_card,
                     std::mt19937_64& rng);

struct VerifyOptions {
    std::uint64_t trials = 100000;
    std::size_t universe_size = 12;
    std::uint64_t seed = 1;
};

// -- Suites ---------------------------------------------------------------

// Exhaustive over all ordered subset pairs of a 5-element universe:
// delta(A,B) = 0 exactly when |B\A| * |A| <= 1, and delta vanishes for
// every B subset of A. Also cross-checks delta against a materialized
// set-difference evaluation.
PropertyReport subset_annihilation_suite();

// Exhaustive over all triples of cardinality >= 2 subsets of a 5-element
// universe: containment-free triples satisfy the triangle inequality.
// Violations found among triples WITH containment are recorded as notes.
PropertyReport triangle_exhaustive_suite();

// Randomized containment-free triples over a larger universe.
PropertyReport triangle_randomized_suite(const VerifyOptions& opts);

// Exhaustive over subset triples of a 4-element universe with all three
// counts >= 1: the key counting inequality holds exactly.
PropertyReport key_inequality_suite();

// Exhaustive over cardinality >= 2 subsets of a 5-element universe:
// symmetry (exact), d(A,A) = 0 (exact), d(A,B) > 0 for A != B.
PropertyReport semimetric_suite();

// Randomized premise-satisfying six-tuples for the max-combination lemma.
PropertyReport max_combination_suite(const VerifyOptions& opts);

// lz76_decompose vs lz76_oracle on all strings up to max_len bits, plus
// the concatenation property.
PropertyReport lz76_exhaustive_suite(std::size_t max_len = 14);

// Same cross-check on random strings of length up to max_len.
PropertyReport lz76_randomized_suite(std::uint64_t trials, std::size_t max_len,
                                     std::uint64_t seed);

// info(Yx, Y) equals both the entropy-difference form and the two-term
// log form within 1e-12, on random nested pairs.
PropertyReport info_identity_suite(std::uint64_t trials, std::uint64_t seed);

// Every suite, with randomized suites driven by opts. The fixed-universe
// exhaustive suites ignore opts by design.
std::vector<PropertyReport> run_all_suites(const VerifyOptions& opts);

}  // namespace setdist::verify
