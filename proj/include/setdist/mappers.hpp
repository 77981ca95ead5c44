#pragma once

// String-to-set mappings M: {0,1}* -> P_F+. Each mapper turns a binary
// string into a FiniteSet of substrings so that two strings can be compared
// via d_M(x, y) = d(M(x), M(y)).

#include <string>
#include <string_view>

#include "setdist/core.hpp"

namespace setdist {

// Mapped set fell outside P_F+ (fewer than 2 distinct elements).
struct DegenerateSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BinaryString {
    std::string bits;
    std::string source_label;  // optional display name
};

enum class MapperKind { Chunk, Window, Lz76 };

struct MapperConfig {
    MapperKind kind = MapperKind::Lz76;
    std::size_t chunk_bits = 4;      // k, chunk mode word length in bits
    std::size_t symbol_width = 7;    // window mode, bits per symbol
    std::size_t window_symbols = 2;  // window mode, symbols per word
    std::size_t stride_symbols = 1;  // window mode, symbols advanced per step

    void validate() const;
};

// Non-overlapping k-bit words, left to right; a trailing partial word is
// right-padded with zeros. Throws DegenerateSetError if fewer than 2
// distinct words result.
FiniteSet chunk_map(std::string_view bits, std::size_t k);

// Fixed window of window_symbols*symbol_width bits, advanced by
// stride_symbols*symbol_width bits until it no longer fits. Throws
// std::invalid_argument if no window fits, DegenerateSetError on
// cardinality < 2.
FiniteSet window_map(std::string_view bits, const MapperConfig& cfg);

// Exhaustive-history decomposition: each component runs from the current
// position to the smallest endpoint such that it does not occur as a
// substring of the prefix ending one bit before that endpoint. Copies may
// overlap themselves. The final component is allowed to be non-innovative
// when the string runs out first.
struct Lz76Parse {
    std::vector<std::string> components;  // concatenate exactly to the input
    FiniteSet phrases;                    // distinct components

    // Production complexity: total component count, duplicates included.
    std::size_t component_count() const noexcept { return components.size(); }
};

Lz76Parse lz76_decompose(std::string_view bits);

// Distinct components of the exhaustive history. Throws DegenerateSetError
// when fewer than 2 distinct phrases exist (e.g. "0", "1", "00", "11").
FiniteSet lz76_map(std::string_view bits);

// Dispatches to the mapper selected by cfg.kind.
FiniteSet map_string(const BinaryString& x, const MapperConfig& cfg);

// d_M(x, y) = d(M(x), M(y)).
double dist_strings(const BinaryString& x, const BinaryString& y,
                    const MapperConfig& cfg);

}  // namespace setdist
