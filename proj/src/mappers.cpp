#include "setdist/mappers.hpp"

namespace setdist {

namespace {

void require_pf_plus(const FiniteSet& s, std::string_view mapper) {
    if (!s.in_pf_plus())
        throw DegenerateSetError(std::string("mapped set outside P_F+ (") +
                                 std::string(mapper) + " produced " +
                                 std::to_string(s.size()) + " element(s))");
}

// Does bits[pos, end) occur as a substring of bits[0, end-1)?
bool occurs_in_prefix(std::string_view bits, std::size_t pos, std::size_t end) {
    const std::string_view component = bits.substr(pos, end - pos);
    const std::string_view prefix = bits.substr(0, end - 1);
    return prefix.find(component) != std::string_view::npos;
}

}  // namespace

void MapperConfig::validate() const {
    switch (kind) {
        case MapperKind::Chunk:
            if (chunk_bits < 1)
                throw std::invalid_argument("chunk mode requires k >= 1");
            break;
        case MapperKind::Window:
            if (symbol_width < 1 || window_symbols < 1 || stride_symbols < 1)
                throw std::invalid_argument(
                    "window mode requires positive symbol width, window and stride");
            break;
        case MapperKind::Lz76:
            break;
    }
}

FiniteSet chunk_map(std::string_view bits, std::size_t k) {
    if (bits.empty())
        throw std::invalid_argument("chunk_map: empty string");
    if (k < 1)
        throw std::invalid_argument("chunk_map: k must be >= 1");

    FiniteSet out;
    for (std::size_t pos = 0; pos < bits.size(); pos += k) {
        std::string word(bits.substr(pos, k));
        word.resize(k, '0');  // zero-pad a trailing partial word
        out.insert(Element(std::move(word)));
    }
    require_pf_plus(out, "chunk_map");
    return out;
}

FiniteSet window_map(std::string_view bits, const MapperConfig& cfg) {
    const std::size_t window_bits = cfg.window_symbols * cfg.symbol_width;
    const std::size_t stride_bits = cfg.stride_symbols * cfg.symbol_width;
    if (window_bits == 0 || stride_bits == 0)
        throw std::invalid_argument("window_map: zero-sized window or stride");
    if (bits.size() < window_bits)
        throw std::invalid_argument("string shorter than window");

    FiniteSet out;
    for (std::size_t pos = 0; pos + window_bits <= bits.size(); pos += stride_bits)
        out.insert(Element(std::string(bits.substr(pos, window_bits))));
    require_pf_plus(out, "window_map");
    return out;
}

Lz76Parse lz76_decompose(std::string_view bits) {
    if (bits.empty())
        throw std::invalid_argument("lz76_decompose: empty string");

    Lz76Parse parse;
    const std::size_t n = bits.size();
    std::size_t pos = 0;
    while (pos < n) {
        std::size_t end = pos + 1;
        while (end < n && occurs_in_prefix(bits, pos, end)) ++end;
        std::string component(bits.substr(pos, end - pos));
        parse.phrases.insert(Element(component));
        parse.components.push_back(std::move(component));
        pos = end;
    }
    return parse;
}

FiniteSet lz76_map(std::string_view bits) {
    FiniteSet out = lz76_decompose(bits).phrases;
    require_pf_plus(out, "lz76_map");
    return out;
}

FiniteSet map_string(const BinaryString& x, const MapperConfig& cfg) {
    cfg.validate();
    switch (cfg.kind) {
        case MapperKind::Chunk:
            return chunk_map(x.bits, cfg.chunk_bits);
        case MapperKind::Window:
            return window_map(x.bits, cfg);
        case MapperKind::Lz76:
            return lz76_map(x.bits);
    }
    throw std::logic_error("map_string: unknown mapper kind");
}

double dist_strings(const BinaryString& x, const BinaryString& y,
                    const MapperConfig& cfg) {
    return dist(map_string(x, cfg), map_string(y, cfg));
}

}  // namespace setdist
