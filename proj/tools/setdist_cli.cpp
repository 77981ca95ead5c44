// Corpus front end for the information set-distance: map files to finite
// sets, compute pairwise distances and distance matrices, and run the
// property verifier.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "setdist/corpus.hpp"
#include "setdist/verify.hpp"

namespace fs = std::filesystem;
using namespace setdist;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitPropertyViolation = 4;

struct CommonFlags {
    std::string mapper = "lz76";
    std::string encoding = "bits";
    std::size_t k = 4;
    std::size_t symbol_width = 7;
    std::size_t window = 2;
    std::size_t stride = 1;

    void attach(CLI::App& cmd) {
        cmd.add_option("--mapper", mapper, "Mapping: chunk, window or lz76")
            ->check(CLI::IsMember({"chunk", "window", "lz76"}));
        cmd.add_option("--encoding", encoding,
                       "File encoding: bits, bitstring-text or ascii7")
            ->check(CLI::IsMember({"bits", "bitstring-text", "ascii7"}));
        cmd.add_option("--k", k, "Chunk word length in bits");
        cmd.add_option("--symbol-width", symbol_width,
                       "Window mode: bits per symbol");
        cmd.add_option("--window", window, "Window mode: symbols per word");
        cmd.add_option("--stride", stride, "Window mode: symbols per step");
    }

    MapperConfig config() const {
        MapperConfig cfg;
        if (mapper == "chunk") cfg.kind = MapperKind::Chunk;
        else if (mapper == "window") cfg.kind = MapperKind::Window;
        else cfg.kind = MapperKind::Lz76;
        cfg.chunk_bits = k;
        cfg.symbol_width = symbol_width;
        cfg.window_symbols = window;
        cfg.stride_symbols = stride;
        return cfg;
    }

    Encoding encoding_mode() const {
        if (encoding == "bits") return Encoding::Bits;
        if (encoding == "bitstring-text") return Encoding::BitstringText;
        return Encoding::Ascii7;
    }
};

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw EncodingError("cannot open file: " + path.string());
    std::vector<std::uint8_t> raw((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
    if (raw.empty()) throw EncodingError("empty file: " + path.string());
    return raw;
}

Document load_document(const fs::path& path, Encoding mode) {
    const auto raw = read_file(path);
    Document doc;
    doc.label = path.filename().string();
    doc.byte_length = raw.size();
    doc.payload = BinaryString{encode(raw, mode), doc.label};
    return doc;
}

// Directories expand to their regular files in sorted order.
std::vector<fs::path> expand_paths(const std::vector<std::string>& inputs) {
    std::vector<fs::path> out;
    for (const auto& input : inputs) {
        fs::path p(input);
        if (fs::is_directory(p)) {
            std::vector<fs::path> entries;
            for (const auto& entry : fs::directory_iterator(p))
                if (entry.is_regular_file()) entries.push_back(entry.path());
            std::sort(entries.begin(), entries.end());
            out.insert(out.end(), entries.begin(), entries.end());
        } else {
            out.push_back(p);
        }
    }
    return out;
}

int run_map(const std::string& file, const CommonFlags& flags) {
    const Document doc = load_document(file, flags.encoding_mode());
    const MapperConfig cfg = flags.config();
    const FiniteSet mapped = map_string(doc.payload, cfg);
    for (const auto& e : mapped.elements())
        std::cout << e.bits() << "\n";
    std::cout << "cardinality: " << mapped.size() << "\n";
    if (cfg.kind == MapperKind::Lz76)
        std::cout << "components: "
                  << lz76_decompose(doc.payload.bits).component_count() << "\n";
    return kExitOk;
}

int run_dist(const std::string& file_a, const std::string& file_b,
             const CommonFlags& flags) {
    const Encoding mode = flags.encoding_mode();
    const double d = dist_strings(load_document(file_a, mode).payload,
                                  load_document(file_b, mode).payload,
                                  flags.config());
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", d);
    std::cout << buf << "\n";
    return kExitOk;
}

int run_matrix(const std::vector<std::string>& inputs, const CommonFlags& flags,
               const std::string& format, bool skip_degenerate,
               const std::string& out_path) {
    const Encoding mode = flags.encoding_mode();
    std::vector<Document> docs;
    for (const auto& path : expand_paths(inputs)) {
        Document doc = load_document(path, mode);
        for (const auto& existing : docs)
            if (existing.label == doc.label) {
                doc.label = path.string();  // disambiguate duplicate basenames
                break;
            }
        docs.push_back(std::move(doc));
    }

    const DistanceMatrix m =
        pairwise_matrix(docs, flags.config(), skip_degenerate, &std::cerr);

    MatrixFormat f = MatrixFormat::Tsv;
    if (format == "json") f = MatrixFormat::Json;
    else if (format == "phylip") f = MatrixFormat::Phylip;
    const std::string rendered = emit(m, f, &std::cerr);

    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw EncodingError("cannot write: " + out_path);
        out << rendered;
    }
    return kExitOk;
}

int run_verify(const verify::VerifyOptions& opts, bool as_json) {
    const auto reports = verify::run_all_suites(opts);
    bool all_passed = true;
    if (as_json) {
        nlohmann::json j;
        j["seed"] = opts.seed;
        j["universe"] = opts.universe_size;
        j["premises"] = "a1 <= a2+a3, b1 <= b2+b3";
        auto& suites = j["suites"];
        for (const auto& r : reports) {
            suites.push_back({{"suite", r.suite},
                              {"trials", r.trials},
                              {"applicable", r.applicable},
                              {"violations", r.violations},
                              {"notes", r.notes},
                              {"passed", r.passed()}});
            all_passed = all_passed && r.passed();
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "property verification (seed=" << opts.seed
                  << ", universe=" << opts.universe_size
                  << ", trials=" << opts.trials << ")\n";
        std::cout << "max-combination premises tested: a1 <= a2+a3, b1 <= b2+b3\n";
        for (const auto& r : reports) {
            std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.suite
                      << "  trials=" << r.trials
                      << " applicable=" << r.applicable
                      << " violations=" << r.violations.size() << "\n";
            for (const auto& v : r.violations) std::cout << "      " << v << "\n";
            for (const auto& n : r.notes) std::cout << "      note: " << n << "\n";
            all_passed = all_passed && r.passed();
        }
    }
    return all_passed ? kExitOk : kExitPropertyViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial information set-distance over files"};
    app.require_subcommand(1);

    auto* map_cmd = app.add_subcommand("map", "Map a file to its finite set");
    std::string map_file;
    map_cmd->add_option("file", map_file, "Input file")->required();
    CommonFlags map_flags;
    map_flags.attach(*map_cmd);

    auto* dist_cmd =
        app.add_subcommand("dist", "Distance between two files");
    std::string dist_a, dist_b;
    dist_cmd->add_option("fileA", dist_a)->required();
    dist_cmd->add_option("fileB", dist_b)->required();
    CommonFlags dist_flags;
    dist_flags.attach(*dist_cmd);

    auto* matrix_cmd =
        app.add_subcommand("matrix", "Pairwise distance matrix over a corpus");
    std::vector<std::string> matrix_inputs;
    matrix_cmd->add_option("paths", matrix_inputs, "Files or directories")
        ->required();
    CommonFlags matrix_flags;
    matrix_flags.attach(*matrix_cmd);
    std::string matrix_format = "tsv";
    matrix_cmd->add_option("--format", matrix_format)
        ->check(CLI::IsMember({"tsv", "json", "phylip"}));
    bool skip_degenerate = false;
    matrix_cmd->add_flag("--skip-degenerate", skip_degenerate,
                         "Skip documents whose mapped set has fewer than 2 "
                         "elements instead of failing");
    std::string matrix_out;
    matrix_cmd->add_option("-o,--output", matrix_out, "Output file");

    auto* verify_cmd =
        app.add_subcommand("verify", "Run the property suites");
    verify::VerifyOptions verify_opts;
    verify_cmd->add_option("--trials", verify_opts.trials);
    verify_cmd->add_option("--universe", verify_opts.universe_size);
    verify_cmd->add_option("--seed", verify_opts.seed);
    bool verify_json = false;
    verify_cmd->add_flag("--json", verify_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (map_cmd->parsed()) return run_map(map_file, map_flags);
        if (dist_cmd->parsed()) return run_dist(dist_a, dist_b, dist_flags);
        if (matrix_cmd->parsed())
            return run_matrix(matrix_inputs, matrix_flags, matrix_format,
                              skip_degenerate, matrix_out);
        if (verify_cmd->parsed()) return run_verify(verify_opts, verify_json);
    } catch (const DegenerateSetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const EncodingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
