// Acceptance suite. Runs every acceptance criterion and prints one
// pass/fail line each; exits non-zero if any criterion fails.
//
// Usage: acceptance <path-to-setdist-cli>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "setdist/corpus.hpp"
#include "setdist/verify.hpp"

namespace fs = std::filesystem;
using namespace setdist;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool passed, const std::string& detail) {
    std::cout << "criterion " << criterion << ": "
              << (passed ? "PASS" : "FAIL") << " - " << detail << "\n";
    if (!passed) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
    CmdResult result;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0)
        result.out.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

bool suite_ok(const verify::PropertyReport& r, std::string& detail) {
    std::ostringstream d;
    d << r.suite << " trials=" << r.trials << " applicable=" << r.applicable
      << " violations=" << r.violations.size();
    if (!r.violations.empty()) d << " first=[" << r.violations.front() << "]";
    detail += (detail.empty() ? "" : "; ") + d.str();
    return r.passed();
}

// 1. The worked chunk-mapping example through the CLI, plus the mapping
//    itself under a 1 ms budget.
void criterion_1(const std::string& cli, const fs::path& tmp) {
    const fs::path input = tmp / "worked_example.txt";
    write_file(input, "100100110");
    const auto r = run_cmd(cli + " map " + input.string() +
                           " --mapper chunk --k 4 --encoding bitstring-text");

    FiniteSet printed;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("cardinality:", 0) == 0) break;
        if (!line.empty()) printed.insert(Element(line));
    }
    const bool set_ok =
        r.exit_code == 0 && printed == FiniteSet{"1001", "0011", "0000"};

    const auto start = Clock::now();
    const FiniteSet direct = chunk_map("100100110", 4);
    const double elapsed_ms = seconds_since(start) * 1000.0;

    report(1, set_ok && direct == printed && elapsed_ms < 1.0,
           "chunk k=4 on 100100110 -> {1001,0011,0000} via CLI, mapping took " +
               std::to_string(elapsed_ms) + " ms");
}

// 2. Exhaustive zero-set characterization of delta over a 5-element
//    universe, in the exact form stated: delta(A,B)=0 <=> B\A empty or A
//    empty or B empty.
void criterion_2() {
    const auto start = Clock::now();
    std::uint64_t violations = 0;
    std::string example;
    FiniteSet sets[32];
    for (unsigned m = 0; m < 32; ++m)
        for (unsigned i = 0; i < 5; ++i)
            if (m & (1u << i)) sets[m].insert(verify::universe_element(i, 5));
    for (unsigned ma = 0; ma < 32; ++ma)
        for (unsigned mb = 0; mb < 32; ++mb) {
            const bool zero = delta(sets[ma], sets[mb]) == 0.0;
            const bool stated = (mb & ~ma) == 0 || ma == 0 || mb == 0;
            if (zero != stated) {
                ++violations;
                if (example.empty()) {
                    std::string a, b;
                    for (const auto& e : sets[ma].elements()) a += e.bits() + " ";
                    for (const auto& e : sets[mb].elements()) b += e.bits() + " ";
                    example = "A={" + a + "} B={" + b + "}";
                }
            }
        }
    const double elapsed = seconds_since(start);
    std::string detail = "delta(A,B)=0 <=> B\\A empty or A empty or B empty, "
                         "1024 ordered pairs, violations=" +
                         std::to_string(violations) + ", " +
                         std::to_string(elapsed) + " s";
    if (violations > 0)
        detail += "; counterexample " + example +
                  " (delta=0 whenever |B\\A|*|A| <= 1; with |A|=1 and "
                  "|B\\A|=1 the product is 1, so the stated biconditional "
                  "does not hold; the corrected characterization "
                  "delta=0 <=> |B\\A|*|A| <= 1 passes: see subset-annihilation "
                  "suite)";
    report(2, violations == 0 && elapsed < 1.0, detail);
}

// 3. Triangle inequality on containment-free triples: exhaustive 5-element
//    sweep plus 1e5 randomized triples over a 12-element universe.
void criterion_3() {
    const auto start = Clock::now();
    std::string detail;
    bool ok = suite_ok(verify::triangle_exhaustive_suite(), detail);
    verify::VerifyOptions opts;
    opts.trials = 100000;
    opts.universe_size = 12;
    opts.seed = 1;
    ok = suite_ok(verify::triangle_randomized_suite(opts), detail) && ok;
    const double elapsed = seconds_since(start);
    report(3, ok && elapsed < 30.0,
           detail + "; " + std::to_string(elapsed) + " s");
}

// 4. Key counting inequality, exhaustive over a 4-element universe.
void criterion_4() {
    const auto start = Clock::now();
    std::string detail;
    const bool ok = suite_ok(verify::key_inequality_suite(), detail);
    const double elapsed = seconds_since(start);
    report(4, ok && elapsed < 5.0,
           detail + "; " + std::to_string(elapsed) + " s");
}

// 5. Semi-metric axioms over the exhaustive 5-element sweep.
void criterion_5() {
    std::string detail;
    report(5, suite_ok(verify::semimetric_suite(), detail), detail);
}

// 6. Max-combination inequality on 1e5 premise-satisfying six-tuples.
void criterion_6() {
    verify::VerifyOptions opts;
    opts.trials = 100000;
    opts.seed = 1;
    std::string detail;
    report(6, suite_ok(verify::max_combination_suite(opts), detail), detail);
}

// 7. LZ76 oracle equivalence: exhaustive to length 14 plus 1e4 random
//    strings up to 256 bits, with exact concatenation.
void criterion_7() {
    const auto start = Clock::now();
    std::string detail;
    bool ok = suite_ok(verify::lz76_exhaustive_suite(14), detail);
    ok = suite_ok(verify::lz76_randomized_suite(10000, 256, 1), detail) && ok;
    const double elapsed = seconds_since(start);
    report(7, ok && elapsed < 60.0,
           detail + "; " + std::to_string(elapsed) + " s");
}

// 8. Entropy/information identities within 1e-12 on 1e3 nested pairs.
void criterion_8() {
    std::string detail;
    report(8, suite_ok(verify::info_identity_suite(1000, 1), detail), detail);
}

// 9. CLI end-to-end determinism over a 10-file corpus, matrix structure,
//    and TSV/JSON round-trips.
void criterion_9(const std::string& cli, const fs::path& tmp) {
    const fs::path corpus = tmp / "corpus";
    fs::create_directories(corpus);
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10; ++i) {
        std::string content = "file " + std::to_string(i) + "\n";
        for (int line = 0; line < 20; ++line) {
            for (int c = 0; c < 40; ++c)
                content.push_back('a' + static_cast<char>(rng() % 26));
            content.push_back('\n');
        }
        write_file(corpus / ("doc" + std::to_string(i) + ".txt"), content);
    }

    const std::string flags =
        " --mapper chunk --k 8 --encoding bits --format ";
    const auto tsv1 = run_cmd(cli + " matrix " + corpus.string() + flags + "tsv");
    const auto tsv2 = run_cmd(cli + " matrix " + corpus.string() + flags + "tsv");
    const auto json1 = run_cmd(cli + " matrix " + corpus.string() + flags + "json");
    const auto json2 = run_cmd(cli + " matrix " + corpus.string() + flags + "json");

    bool ok = tsv1.exit_code == 0 && json1.exit_code == 0;
    const bool deterministic = tsv1.out == tsv2.out && json1.out == json2.out;
    ok = ok && deterministic;

    bool structure_ok = false, roundtrip_ok = false;
    try {
        const DistanceMatrix from_tsv = parse_tsv(tsv1.out);
        const DistanceMatrix from_json = parse_json(json1.out);
        structure_ok = from_tsv.labels.size() == 10;
        for (std::size_t i = 0; i < from_tsv.values.size(); ++i)
            for (std::size_t j = 0; j < from_tsv.values.size(); ++j) {
                structure_ok = structure_ok &&
                               from_tsv.values[i][j] == from_tsv.values[j][i] &&
                               (i != j || from_tsv.values[i][j] == 0.0);
            }
        // Round-trip: both serializations agree with each other and with a
        // re-emission within formatting precision.
        roundtrip_ok = true;
        const DistanceMatrix reparsed = parse_tsv(emit_tsv(from_json));
        for (std::size_t i = 0; i < from_tsv.values.size(); ++i)
            for (std::size_t j = 0; j < from_tsv.values.size(); ++j) {
                roundtrip_ok =
                    roundtrip_ok &&
                    std::abs(from_tsv.values[i][j] - from_json.values[i][j]) <=
                        1e-6 &&
                    std::abs(reparsed.values[i][j] - from_json.values[i][j]) <=
                        1e-6;
            }
    } catch (const std::exception&) {
        structure_ok = false;
    }

    report(9, ok && structure_ok && roundtrip_ok,
           std::string("10-file corpus: byte-identical reruns=") +
               (deterministic ? "yes" : "no") +
               ", symmetric zero-diagonal=" + (structure_ok ? "yes" : "no") +
               ", tsv/json round-trip within 1e-6=" +
               (roundtrip_ok ? "yes" : "no"));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-setdist-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path tmp =
        fs::temp_directory_path() /
        ("setdist_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(tmp);

    criterion_1(cli, tmp);
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(cli, tmp);

    fs::remove_all(tmp);
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) +
                                      " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
