#include "setdist/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace setdist {

std::string encode(const std::vector<std::uint8_t>& raw, Encoding mode) {
    if (raw.empty())
        throw EncodingError("encode: empty input");

    std::string bits;
    switch (mode) {
        case Encoding::Bits:
            bits.reserve(raw.size() * 8);
            for (std::uint8_t byte : raw)
                for (int i = 7; i >= 0; --i)
                    bits.push_back((byte >> i) & 1 ? '1' : '0');
            break;
        case Encoding::BitstringText:
            bits.reserve(raw.size());
            for (std::size_t i = 0; i < raw.size(); ++i) {
                const char c = static_cast<char>(raw[i]);
                if (c == '0' || c == '1')
                    bits.push_back(c);
                else if (!std::isspace(static_cast<unsigned char>(c)))
                    throw EncodingError("encode: non-0/1 character at byte offset " +
                                        std::to_string(i));
            }
            if (bits.empty())
                throw EncodingError("encode: no 0/1 characters in input");
            break;
        case Encoding::Ascii7:
            bits.reserve(raw.size() * 7);
            for (std::size_t i = 0; i < raw.size(); ++i) {
                if (raw[i] >= 128)
                    throw EncodingError("encode: byte >= 128 at offset " +
                                        std::to_string(i) + " in ascii7 mode");
                for (int b = 6; b >= 0; --b)
                    bits.push_back((raw[i] >> b) & 1 ? '1' : '0');
            }
            break;
    }
    return bits;
}

DistanceMatrix pairwise_matrix(const std::vector<Document>& docs,
                               const MapperConfig& cfg,
                               bool skip_degenerate,
                               std::ostream* diag) {
    if (docs.size() < 2)
        throw std::invalid_argument("pairwise_matrix: need at least 2 documents");

    // Map every document once; collect degenerate ones.
    std::vector<const Document*> kept;
    std::vector<FiniteSet> sets;
    std::vector<std::string> degenerate;
    for (const auto& doc : docs) {
        try {
            sets.push_back(map_string(doc.payload, cfg));
            kept.push_back(&doc);
        } catch (const DegenerateSetError&) {
            degenerate.push_back(doc.label);
        }
    }
    if (!degenerate.empty()) {
        std::string joined;
        for (const auto& l : degenerate)
            joined += (joined.empty() ? "" : ", ") + l;
        if (!skip_degenerate)
            throw DegenerateSetError("degenerate documents: " + joined);
        if (diag)
            *diag << "warning: skipping degenerate documents: " << joined << "\n";
    }
    if (kept.size() < 2)
        throw std::invalid_argument(
            "pairwise_matrix: fewer than 2 usable documents");

    const std::size_t n = kept.size();
    DistanceMatrix m;
    m.labels.reserve(n);
    for (const auto* doc : kept) m.labels.push_back(doc->label);
    m.values.assign(n, std::vector<double>(n, 0.0));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);

    // Each pair slot is written exactly once, so the result is independent
    // of worker scheduling.
    const unsigned workers = std::min<std::size_t>(
        std::max(1u, std::thread::hardware_concurrency()), pairs.size());
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t p = next.fetch_add(1); p < pairs.size();
             p = next.fetch_add(1)) {
            auto [i, j] = pairs[p];
            const double d = dist(sets[i], sets[j]);
            m.values[i][j] = d;
            m.values[j][i] = d;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    return m;
}

namespace {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::string emit_tsv(const DistanceMatrix& m) {
    std::string out;
    for (const auto& l : m.labels) {
        out += '\t';
        out += l;
    }
    out += '\n';
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        out += m.labels[i];
        for (double v : m.values[i]) {
            out += '\t';
            out += format_value(v);
        }
        out += '\n';
    }
    return out;
}

std::string emit_json(const DistanceMatrix& m) {
    nlohmann::json j;
    j["labels"] = m.labels;
    j["matrix"] = m.values;
    return j.dump() + "\n";
}

std::string emit_phylip(const DistanceMatrix& m, std::ostream* diag) {
    std::string out = std::to_string(m.labels.size()) + "\n";
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        std::string label = m.labels[i];
        if (label.size() > 10) {
            if (diag)
                *diag << "warning: phylip label truncated: " << label << "\n";
            label.resize(10);
        }
        label.resize(10, ' ');
        out += label;
        for (double v : m.values[i]) {
            out += ' ';
            out += format_value(v);
        }
        out += '\n';
    }
    return out;
}

std::string emit(const DistanceMatrix& m, MatrixFormat format,
                 std::ostream* diag) {
    switch (format) {
        case MatrixFormat::Tsv: return emit_tsv(m);
        case MatrixFormat::Json: return emit_json(m);
        case MatrixFormat::Phylip: return emit_phylip(m, diag);
    }
    throw std::logic_error("emit: unknown format");
}

DistanceMatrix parse_tsv(const std::string& text) {
    DistanceMatrix m;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("parse_tsv: empty input");
    {
        std::istringstream header(line);
        std::string cell;
        while (std::getline(header, cell, '\t'))
            if (!cell.empty()) m.labels.push_back(cell);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::getline(row, cell, '\t');  // row label
        std::vector<double> values;
        while (std::getline(row, cell, '\t'))
            values.push_back(std::stod(cell));
        if (values.size() != m.labels.size())
            throw std::invalid_argument("parse_tsv: ragged row");
        m.values.push_back(std::move(values));
    }
    if (m.values.size() != m.labels.size())
        throw std::invalid_argument("parse_tsv: row count mismatch");
    return m;
}

DistanceMatrix parse_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    DistanceMatrix m;
    m.labels = j.at("labels").get<std::vector<std::string>>();
    m.values = j.at("matrix").get<std::vector<std::vector<double>>>();
    return m;
}

}  // namespace setdist
