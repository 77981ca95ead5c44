#pragma once

// File ingestion, byte-to-bit encodings, pairwise distance matrices and
// their serialization formats.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "setdist/mappers.hpp"

namespace setdist {

struct EncodingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Encoding {
    Bits,           // every byte expands to 8 bits, MSB first
    BitstringText,  // ASCII '0'/'1' characters, whitespace skipped
    Ascii7          // low 7 bits of each byte, MSB of the 7 first
};

std::string encode(const std::vector<std::uint8_t>& raw, Encoding mode);

struct Document {
    std::string label;
    BinaryString payload;
    std::size_t byte_length = 0;
};

struct DistanceMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;  // symmetric, zero diagonal
};

// Pairwise d_M over a corpus. Mapped sets are computed once per document;
// pair distances may be evaluated concurrently but the result layout is
// fixed by input order. Degenerate documents abort the run with a
// DegenerateSetError listing every offending label, unless skip_degenerate
// is set, in which case they are dropped with a warning on `diag`.
DistanceMatrix pairwise_matrix(const std::vector<Document>& docs,
                               const MapperConfig& cfg,
                               bool skip_degenerate = false,
                               std::ostream* diag = nullptr);

enum class MatrixFormat { Tsv, Json, Phylip };

// Tab-separated: header row of labels, then one row per document with
// values printed to 6 decimal places.
std::string emit_tsv(const DistanceMatrix& m);

// {"labels": [...], "matrix": [[...], ...]}
std::string emit_json(const DistanceMatrix& m);

// PHYLIP square matrix; labels longer than 10 characters are truncated
// with a warning on `diag`.
std::string emit_phylip(const DistanceMatrix& m, std::ostream* diag = nullptr);

std::string emit(const DistanceMatrix& m, MatrixFormat format,
                 std::ostream* diag = nullptr);

// Inverses used by tests and downstream tooling.
DistanceMatrix parse_tsv(const std::string& text);
DistanceMatrix parse_json(const std::string& text);

}  // namespace setdist
