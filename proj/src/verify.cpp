#include "setdist/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <sstream>

#include "setdist/mappers.hpp"

namespace setdist::verify {

namespace {

constexpr double kTol = 1e-9;
constexpr unsigned kWorkers = 4;
constexpr std::size_t kMaxRecorded = 8;  // violation messages kept per suite

std::string to_string(const FiniteSet& s) {
    std::string out = "{";
    for (const auto& e : s.elements()) {
        if (out.size() > 1) out += ',';
        out += e.bits();
    }
    return out + "}";
}

void record(PropertyReport& r, std::string msg) {
    if (r.violations.size() < kMaxRecorded)
        r.violations.push_back(std::move(msg));
    else
        r.violations.back() = "... further violations suppressed";
}

FiniteSet subset_from_mask(unsigned mask, std::size_t universe_size) {
    FiniteSet s;
    for (std::size_t i = 0; i < universe_size; ++i)
        if (mask & (1u << i)) s.insert(universe_element(i, universe_size));
    return s;
}

// All subsets of the universe, indexed by bitmask.
std::vector<FiniteSet> all_subsets(std::size_t universe_size) {
    std::vector<FiniteSet> sets;
    sets.reserve(1u << universe_size);
    for (unsigned mask = 0; mask < (1u << universe_size); ++mask)
        sets.push_back(subset_from_mask(mask, universe_size));
    return sets;
}

// Splits `trials` across kWorkers, each with an RNG stream derived from
// (seed, worker index); merges per-worker reports in worker order.
template <typename Body>
PropertyReport run_partitioned(std::string suite, std::uint64_t trials,
                               std::uint64_t seed, Body body) {
    std::vector<std::future<PropertyReport>> parts;
    const std::uint64_t chunk = trials / kWorkers;
    for (unsigned w = 0; w < kWorkers; ++w) {
        const std::uint64_t n = (w + 1 == kWorkers) ? trials - chunk * w : chunk;
        parts.push_back(std::async(std::launch::async, [=] {
            PropertyReport local;
            std::seed_seq sq{seed, static_cast<std::uint64_t>(w)};
            std::mt19937_64 rng(sq);
            for (std::uint64_t t = 0; t < n; ++t) body(rng, local);
            return local;
        }));
    }
    PropertyReport merged;
    merged.suite = std::move(suite);
    merged.trials = trials;
    for (auto& part : parts) {
        PropertyReport local = part.get();
        merged.applicable += local.applicable;
        for (auto& v : local.violations) record(merged, std::move(v));
        for (auto& n : local.notes) merged.notes.push_back(std::move(n));
    }
    return merged;
}

// delta evaluated through a materialized set difference, as an independent
// route against the counting implementation.
double delta_by_difference(const FiniteSet& a, const FiniteSet& b) {
    FiniteSet diff;
    for (const auto& e : b.elements())
        if (!a.contains(e)) diff.insert(e);
    return std::log2(t_clamp(static_cast<double>(diff.size()) *
                             static_cast<double>(a.size())));
}

}  // namespace

TripleCondition containment_flags(const FiniteSet& a, const FiniteSet& b,
                                  const FiniteSet& c) {
    TripleCondition f;
    f.a_in_b = is_strict_subset(a, b);
    f.b_in_a = is_strict_subset(b, a);
    f.a_in_c = is_strict_subset(a, c);
    f.c_in_a = is_strict_subset(c, a);
    f.b_in_c = is_strict_subset(b, c);
    f.c_in_b = is_strict_subset(c, b);
    return f;
}

TriangleCheck check_triangle(const FiniteSet& a, const FiniteSet& b,
                             const FiniteSet& c) {
    if (!a.in_pf_plus() || !b.in_pf_plus() || !c.in_pf_plus())
        throw std::invalid_argument("check_triangle: sets must have cardinality >= 2");
    TriangleCheck result;
    result.condition = containment_flags(a, b, c);
    const double lhs = dist(a, c);
    const double rhs = dist(a, b) + dist(b, c);
    result.slack = rhs - lhs;
    result.holds = lhs <= rhs + kTol;
    return result;
}

std::optional<bool> check_key_inequality(const FiniteSet& a,
                                         const FiniteSet& b,
                                         const FiniteSet& c) {
    const std::size_t c_not_a = difference_size(c, a);
    const std::size_t b_not_a = difference_size(b, a);
    const std::size_t c_not_b = difference_size(c, b);
    if (c_not_a < 1 || b_not_a < 1 || c_not_b < 1) return std::nullopt;
    return c_not_a <= 2 * b_not_a * c_not_b;
}

std::optional<bool> check_max_combination(double a1, double a2, double a3,
                                          double b1, double b2, double b3) {
    if (a1 > a2 + a3 + kTol || b1 > b2 + b3 + kTol) return std::nullopt;
    return std::max(a1, b1) <= std::max(a2, b2) + std::max(a3, b3) + kTol;
}

std::vector<std::string> lz76_oracle(std::string_view bits) {
    if (bits.empty())
        throw std::invalid_argument("lz76_oracle: empty string");

    // Reproducibility test by explicit copy scan: a component starting at
    // `pos` with endpoint `end` is copyable iff some start position p < pos
    // reproduces it character by character, the copy source being allowed
    // to run into the component itself.
    auto copyable = [&](std::size_t pos, std::size_t end) {
        const std::size_t len = end - pos;
        for (std::size_t p = 0; p < pos; ++p) {
            bool match = true;
            for (std::size_t j = 0; j < len; ++j)
                if (bits[p + j] != bits[pos + j]) {
                    match = false;
                    break;
                }
            if (match) return true;
        }
        return false;
    };

    std::vector<std::string> components;
    std::size_t pos = 0;
    while (pos < bits.size()) {
        std::size_t end = pos + 1;
        while (end < bits.size() && copyable(pos, end)) ++end;
        components.emplace_back(bits.substr(pos, end - pos));
        pos = end;
    }
    return components;
}

Element universe_element(std::size_t index, std::size_t universe_size) {
    if (universe_size == 0 || index >= universe_size)
        throw std::invalid_argument("universe_element: index out of range");
    const int width = std::max(1, static_cast<int>(std::bit_width(universe_size - 1)));
    std::string bits(static_cast<std::size_t>(width), '0');
    for (int b = 0; b < width; ++b)
        if (index & (std::size_t{1} << b)) bits[width - 1 - b] = '1';
    return Element(std::move(bits));
}

FiniteSet random_set(std::size_t universe_size, std::size_t min_card,
                     std::mt19937_64& rng) {
    if (min_card > universe_size)
        throw std::invalid_argument("random_set: min_card > universe_size");
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        FiniteSet s;
        for (std::size_t i = 0; i < universe_size; ++i)
            if (coin(rng)) s.insert(universe_element(i, universe_size));
        if (s.size() >= min_card) return s;
    }
}

PropertyReport subset_annihilation_suite() {
    PropertyReport r;
    r.suite = "subset-annihilation";
    const auto sets = all_subsets(5);
    for (unsigned ma = 0; ma < 32; ++ma) {
        for (unsigned mb = 0; mb < 32; ++mb) {
            ++r.trials;
            ++r.applicable;
            const FiniteSet& a = sets[ma];
            const FiniteSet& b = sets[mb];
            const double d = delta(a, b);
            const std::size_t product = difference_size(b, a) * a.size();
            if ((d == 0.0) != (product <= 1))
                record(r, "delta zero-set mismatch: A=" + to_string(a) +
                              " B=" + to_string(b) + " delta=" + std::to_string(d));
            if ((mb & ~ma) == 0 && d != 0.0)
                record(r, "delta nonzero for B subset of A: A=" + to_string(a) +
                              " B=" + to_string(b));
            if (std::abs(d - delta_by_difference(a, b)) > 1e-12)
                record(r, "counting vs materialized-difference mismatch: A=" +
                              to_string(a) + " B=" + to_string(b));
        }
    }
    return r;
}

PropertyReport triangle_exhaustive_suite() {
    PropertyReport r;
    r.suite = "triangle-exhaustive";
    const auto sets = all_subsets(5);
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < 32; ++m)
        if (std::popcount(m) >= 2) masks.push_back(m);
    for (unsigned ma : masks)
        for (unsigned mb : masks)
            for (unsigned mc : masks) {
                ++r.trials;
                const auto check = check_triangle(sets[ma], sets[mb], sets[mc]);
                if (check.condition.containment_free()) {
                    ++r.applicable;
                    if (!check.holds)
                        record(r, "triangle violated on containment-free triple: A=" +
                                      to_string(sets[ma]) + " B=" + to_string(sets[mb]) +
                                      " C=" + to_string(sets[mc]) +
                                      " slack=" + std::to_string(check.slack));
                } else if (!check.holds && r.notes.size() < kMaxRecorded) {
                    r.notes.push_back(
                        "triangle fails outside the containment-free condition "
                        "(informational): A=" + to_string(sets[ma]) +
                        " B=" + to_string(sets[mb]) + " C=" + to_string(sets[mc]));
                }
            }
    return r;
}

PropertyReport triangle_randomized_suite(const VerifyOptions& opts) {
    return run_partitioned(
        "triangle-randomized", opts.trials, opts.seed,
        [universe = opts.universe_size](std::mt19937_64& rng, PropertyReport& r) {
            const FiniteSet a = random_set(universe, 2, rng);
            const FiniteSet b = random_set(universe, 2, rng);
            const FiniteSet c = random_set(universe, 2, rng);
            const auto check = check_triangle(a, b, c);
            if (!check.condition.containment_free()) return;
            ++r.applicable;
            if (!check.holds)
                record(r, "triangle violated: A=" + to_string(a) + " B=" +
                              to_string(b) + " C=" + to_string(c) +
                              " slack=" + std::to_string(check.slack));
        });
}

PropertyReport key_inequality_suite() {
    PropertyReport r;
    r.suite = "key-inequality";
    const auto sets = all_subsets(4);
    for (unsigned ma = 0; ma < 16; ++ma)
        for (unsigned mb = 0; mb < 16; ++mb)
            for (unsigned mc = 0; mc < 16; ++mc) {
                ++r.trials;
                const auto verdict =
                    check_key_inequality(sets[ma], sets[mb], sets[mc]);
                if (!verdict) continue;
                ++r.applicable;
                if (!*verdict)
                    record(r, "key inequality violated: A=" + to_string(sets[ma]) +
                                  " B=" + to_string(sets[mb]) +
                                  " C=" + to_string(sets[mc]));
            }
    return r;
}

PropertyReport semimetric_suite() {
    PropertyReport r;
    r.suite = "semimetric-axioms";
    const auto sets = all_subsets(5);
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < 32; ++m)
        if (std::popcount(m) >= 2) masks.push_back(m);
    for (unsigned ma : masks)
        for (unsigned mb : masks) {
            ++r.trials;
            ++r.applicable;
            const FiniteSet& a = sets[ma];
            const FiniteSet& b = sets[mb];
            const double dab = dist(a, b);
            if (dab != dist(b, a))
                record(r, "symmetry violated: A=" + to_string(a) +
                              " B=" + to_string(b));
            if (ma == mb && dab != 0.0)
                record(r, "identity violated: A=" + to_string(a));
            if (ma != mb && !(dab > 0.0))
                record(r, "positivity violated: A=" + to_string(a) +
                              " B=" + to_string(b));
        }
    return r;
}

PropertyReport max_combination_suite(const VerifyOptions& opts) {
    return run_partitioned(
        "max-combination", opts.trials, opts.seed,
        [](std::mt19937_64& rng, PropertyReport& r) {
            std::uniform_real_distribution<double> mag(0.0, 10.0);
            std::uniform_real_distribution<double> frac(0.0, 1.0);
            const double a2 = mag(rng), a3 = mag(rng);
            const double b2 = mag(rng), b3 = mag(rng);
            const double a1 = (a2 + a3) * frac(rng);
            const double b1 = (b2 + b3) * frac(rng);
            const auto verdict = check_max_combination(a1, a2, a3, b1, b2, b3);
            if (!verdict) return;
            ++r.applicable;
            if (!*verdict) {
                std::ostringstream msg;
                msg << "max-combination violated: a=(" << a1 << "," << a2 << ","
                    << a3 << ") b=(" << b1 << "," << b2 << "," << b3 << ")";
                record(r, msg.str());
            }
        });
}

namespace {

void crosscheck_lz76(const std::string& bits, PropertyReport& r) {
    ++r.applicable;
    const auto parse = lz76_decompose(bits);
    const auto oracle = lz76_oracle(bits);
    if (parse.components != oracle)
        record(r, "component mismatch on " + bits);
    std::string joined;
    for (const auto& c : parse.components) joined += c;
    if (joined != bits)
        record(r, "components do not concatenate to input: " + bits);
}

}  // namespace

PropertyReport lz76_exhaustive_suite(std::size_t max_len) {
    PropertyReport r;
    r.suite = "lz76-exhaustive";
    for (std::size_t len = 1; len <= max_len; ++len) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            ++r.trials;
            std::string bits(len, '0');
            for (std::size_t i = 0; i < len; ++i)
                if (mask & (std::uint64_t{1} << i)) bits[i] = '1';
            crosscheck_lz76(bits, r);
        }
    }
    return r;
}

PropertyReport lz76_randomized_suite(std::uint64_t trials, std::size_t max_len,
                                     std::uint64_t seed) {
    return run_partitioned(
        "lz76-randomized", trials, seed,
        [max_len](std::mt19937_64& rng, PropertyReport& r) {
            std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
            std::bernoulli_distribution coin(0.5);
            std::string bits(len_dist(rng), '0');
            for (auto& c : bits)
                if (coin(rng)) c = '1';
            crosscheck_lz76(bits, r);
        });
}

PropertyReport info_identity_suite(std::uint64_t trials, std::uint64_t seed) {
    return run_partitioned(
        "info-identities", trials, seed,
        [](std::mt19937_64& rng, PropertyReport& r) {
            constexpr std::size_t universe = 2048;
            std::uniform_int_distribution<std::size_t> card(1, universe);
            const std::size_t ny = card(rng);
            const std::size_t nyx =
                std::uniform_int_distribution<std::size_t>(1, ny)(rng);

            // Y = a random ny-subset of the universe, Yx nested inside it.
            std::vector<std::size_t> indices(universe);
            for (std::size_t i = 0; i < universe; ++i) indices[i] = i;
            std::shuffle(indices.begin(), indices.end(), rng);
            FiniteSet y, yx;
            for (std::size_t i = 0; i < ny; ++i) {
                Element e = universe_element(indices[i], universe);
                if (i < nyx) yx.insert(e);
                y.insert(std::move(e));
            }

            ++r.applicable;
            const double direct = info(yx, y);
            const double entropy_form = entropy(y) - entropy(yx);
            const double two_term =
                std::log2(static_cast<double>(ny) * static_cast<double>(ny)) -
                std::log2(static_cast<double>(ny) * static_cast<double>(nyx));
            if (std::abs(direct - entropy_form) > 1e-12 ||
                std::abs(direct - two_term) > 1e-12)
                record(r, "info identity mismatch: |Y|=" + std::to_string(ny) +
                              " |Yx|=" + std::to_string(nyx));
        });
}

std::vector<PropertyReport> run_all_suites(const VerifyOptions& opts) {
    std::vector<PropertyReport> reports;
    reports.push_back(subset_annihilation_suite());
    reports.push_back(triangle_exhaustive_suite());
    reports.push_back(triangle_randomized_suite(opts));
    reports.push_back(key_inequality_suite());
    reports.push_back(semimetric_suite());
    reports.push_back(max_combination_suite(opts));
    reports.push_back(lz76_exhaustive_suite());
    reports.push_back(lz76_randomized_suite(10000, 256, opts.seed));
    reports.push_back(info_identity_suite(1000, opts.seed));
    return reports;
}

}  // namespace setdist::verify
