#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "setdist/corpus.hpp"

using namespace setdist;

namespace {

std::vector<std::uint8_t> bytes(std::string_view s) {
    return {s.begin(), s.end()};
}

Document make_doc(std::string label, std::string bits) {
    return Document{label, BinaryString{std::move(bits), label}, 0};
}

MapperConfig chunk4() {
    MapperConfig cfg;
    cfg.kind = MapperKind::Chunk;
    cfg.chunk_bits = 4;
    return cfg;
}

}  // namespace

TEST_CASE("encode: bits mode expands MSB first") {
    CHECK(encode({0xA5}, Encoding::Bits) == "10100101");
    SUBCASE("round trip on random byte sequences") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::uint8_t> raw(1 + rng() % 64);
            for (auto& b : raw) b = static_cast<std::uint8_t>(rng());
            const std::string bits = encode(raw, Encoding::Bits);
            REQUIRE(bits.size() == raw.size() * 8);
            std::vector<std::uint8_t> packed(raw.size(), 0);
            for (std::size_t i = 0; i < bits.size(); ++i)
                if (bits[i] == '1') packed[i / 8] |= 0x80 >> (i % 8);
            CHECK(packed == raw);
        }
    }
}

TEST_CASE("encode: bitstring-text mode") {
    CHECK(encode(bytes("10 01\n"), Encoding::BitstringText) == "1001");
    CHECK_THROWS_WITH_AS(encode(bytes("10x1"), Encoding::BitstringText),
                         "encode: non-0/1 character at byte offset 2",
                         EncodingError);
    CHECK_THROWS_AS(encode({}, Encoding::BitstringText), EncodingError);
}

TEST_CASE("encode: ascii7 mode") {
    CHECK(encode(bytes("A"), Encoding::Ascii7) == "1000001");
    CHECK_THROWS_AS(encode({0x80}, Encoding::Ascii7), EncodingError);
}

TEST_CASE("pairwise_matrix") {
    SUBCASE("identical documents give a zero matrix") {
        const auto m = pairwise_matrix(
            {make_doc("a", "10010110"), make_doc("b", "10010110")}, chunk4());
        CHECK(m.labels == std::vector<std::string>{"a", "b"});
        CHECK(m.values == std::vector<std::vector<double>>{{0, 0}, {0, 0}});
    }

    SUBCASE("disjoint two-element sets give off-diagonal 2") {
        const auto m = pairwise_matrix(
            {make_doc("a", "10010110"), make_doc("b", "11110000")}, chunk4());
        CHECK(m.values[0][1] == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(m.values[1][0] == m.values[0][1]);
        CHECK(m.values[0][0] == 0.0);
    }

    SUBCASE("entries equal independent dist_strings calls") {
        const std::vector<Document> docs = {make_doc("a", "100101101100"),
                                            make_doc("b", "111100001010"),
                                            make_doc("c", "001100111000")};
        const auto m = pairwise_matrix(docs, chunk4());
        REQUIRE(m.values.size() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(m.values[i][j] == m.values[j][i]);
                const double expected =
                    i == j ? 0.0
                           : dist_strings(docs[i].payload, docs[j].payload,
                                          chunk4());
                CHECK(m.values[i][j] == expected);
            }
    }

    SUBCASE("degenerate documents fail the run by default") {
        const std::vector<Document> docs = {make_doc("ok1", "10010110"),
                                            make_doc("bad", "10011001"),
                                            make_doc("ok2", "11110000")};
        CHECK_THROWS_WITH_AS(pairwise_matrix(docs, chunk4()),
                             "degenerate documents: bad", DegenerateSetError);

        std::ostringstream warnings;
        const auto m = pairwise_matrix(docs, chunk4(), true, &warnings);
        CHECK(m.labels == std::vector<std::string>{"ok1", "ok2"});
        CHECK(warnings.str().find("bad") != std::string::npos);
    }

    SUBCASE("fewer than two documents is an error") {
        CHECK_THROWS_AS(pairwise_matrix({make_doc("a", "10010110")}, chunk4()),
                        std::invalid_argument);
    }
}

TEST_CASE("emit formats") {
    DistanceMatrix m;
    m.labels = {"alpha", "beta"};
    m.values = {{0.0, 2.0}, {2.0, 0.0}};

    SUBCASE("tsv") {
        const std::string tsv = emit_tsv(m);
        CHECK(tsv == "\talpha\tbeta\n"
                     "alpha\t0.000000\t2.000000\n"
                     "beta\t2.000000\t0.000000\n");
    }

    SUBCASE("json structure") {
        const auto parsed = parse_json(emit_json(m));
        CHECK(parsed.labels == m.labels);
        CHECK(parsed.values == m.values);
    }

    SUBCASE("phylip: count line, padded labels, truncation warning") {
        DistanceMatrix wide = m;
        wide.labels[0] = "a_very_long_label";
        std::ostringstream diag;
        const std::string ph = emit_phylip(wide, &diag);
        CHECK(ph.substr(0, 2) == "2\n");
        CHECK(ph.find("a_very_lon 0.000000") != std::string::npos);
        CHECK(diag.str().find("truncated") != std::string::npos);

        const std::string zero = emit_phylip(m);
        CHECK(zero.find("alpha      0.000000") != std::string::npos);
    }

    SUBCASE("tsv and json round-trip within formatting precision") {
        std::mt19937_64 rng(37);
        std::uniform_real_distribution<double> val(0.0, 12.0);
        DistanceMatrix r;
        r.labels = {"a", "b", "c", "d"};
        r.values.assign(4, std::vector<double>(4, 0.0));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                r.values[i][j] = r.values[j][i] = val(rng);

        const auto from_tsv = parse_tsv(emit_tsv(r));
        const auto from_json = parse_json(emit_json(r));
        CHECK(from_tsv.labels == r.labels);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                CHECK(std::abs(from_tsv.values[i][j] - r.values[i][j]) <= 1e-6);
                CHECK(std::abs(from_json.values[i][j] - r.values[i][j]) <= 1e-6);
            }
    }
}

TEST_CASE("matrix output is deterministic") {
    std::vector<Document> docs;
    std::mt19937_64 rng(41);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 6; ++i) {
        std::string bits(64, '0');
        for (auto& c : bits)
            if (coin(rng)) c = '1';
        docs.push_back(make_doc("doc" + std::to_string(i), bits));
    }
    const auto a = emit_tsv(pairwise_matrix(docs, chunk4()));
    const auto b = emit_tsv(pairwise_matrix(docs, chunk4()));
    CHECK(a == b);
}
