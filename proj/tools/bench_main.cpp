// bench — rotation-count and validation harness for the rbt library.
//
//   bench run      --variant all --n 100000 --reps 20 --seed 42
//                  --log-base 10 --format csv
//   bench validate --variant rb23 --n 100000 --seed 7
//   bench trace    --variant llrb --script ops.txt --dot-dir out/
//
// Exit codes: 0 clean, 1 invariant violation, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rbt.h"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { rbt_string_free(ptr); }
    const char* get() const { return ptr ? ptr : ""; }
};

std::vector<rbt_variant> parse_variants(const std::string& name) {
    if (name == "all") return {RBT_RB, RBT_LLRB, RBT_RB23, RBT_RB234};
    if (name == "rb") return {RBT_RB};
    if (name == "llrb") return {RBT_LLRB};
    if (name == "rb23") return {RBT_RB23};
    if (name == "rb234") return {RBT_RB234};
    return {};
}

int cmd_run(const std::string& variant, std::size_t n, std::size_t reps,
            std::uint64_t seed, const std::string& log_base,
            const std::string& format, unsigned threads, bool exclusive) {
    auto variants = parse_variants(variant);
    if (variants.empty()) {
        std::cerr << "unknown variant: " << variant << "\n";
        return kExitUsage;
    }

    rbt_experiment_config cfg{};
    cfg.n = n;
    cfg.reps = reps;
    cfg.seed = seed;
    cfg.log_base = log_base == "2" ? 2 : log_base == "e" ? 0 : 10;
    cfg.threads = exclusive ? 1 : threads;

    std::size_t count = 0;
    rbt_status probe = rbt_experiment_run(&cfg, variants.data(),
                                          variants.size(), nullptr, 0, &count);
    if (probe != RBT_OK) {
        std::cerr << "experiment failed: " << rbt_status_name(probe) << "\n";
        return probe == RBT_INVALID ? kExitUsage : kExitViolation;
    }
    std::vector<rbt_experiment_row> rows(count);
    rbt_status st = rbt_experiment_run(&cfg, variants.data(), variants.size(),
                                       rows.data(), rows.size(), &count);
    if (st != RBT_OK) {
        std::cerr << "experiment failed: " << rbt_status_name(st) << "\n";
        return st == RBT_INVALID ? kExitUsage : kExitViolation;
    }
    OwnedString text{rbt_experiment_report(rows.data(), count,
                                           format == "md" ? 1 : 0)};
    std::cout << text.get();
    return kExitClean;
}

int cmd_validate(const std::string& variant, std::size_t n,
                 std::uint64_t seed, std::int64_t key_range) {
    auto variants = parse_variants(variant);
    if (variants.empty()) {
        std::cerr << "unknown variant: " << variant << "\n";
        return kExitUsage;
    }
    rbt_script* script = rbt_script_random(seed, n, key_range);
    if (!script) {
        std::cerr << "could not build a script (key range must be >= 1)\n";
        return kExitUsage;
    }
    OwnedString report;
    rbt_status st = rbt_differential_run(script, variants.data(),
                                         variants.size(), &report.ptr);
    rbt_script_free(script);
    std::cout << "differential run over " << n << " ops, seed " << seed
              << ": " << report.get() << "\n";
    return st == RBT_OK ? kExitClean : kExitViolation;
}

int cmd_trace(const std::string& variant, const std::string& script_path,
              const std::string& dot_dir) {
    auto variants = parse_variants(variant);
    if (variants.size() != 1) {
        std::cerr << "trace needs a single variant\n";
        return kExitUsage;
    }

    std::ifstream in(script_path);
    if (!in) {
        std::cerr << "cannot read " << script_path << "\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    OwnedString parse_error;
    rbt_script* script = rbt_script_parse(buffer.str().c_str(),
                                          &parse_error.ptr);
    if (!script) {
        std::cerr << "bad script: " << parse_error.get() << "\n";
        return kExitUsage;
    }

    std::error_code ec;
    std::filesystem::create_directories(dot_dir, ec);
    if (ec) {
        std::cerr << "cannot create " << dot_dir << ": " << ec.message()
                  << "\n";
        rbt_script_free(script);
        return kExitUsage;
    }

    rbt_tree* tree = rbt_tree_new(variants[0]);
    int exit_code = kExitClean;
    std::size_t len = rbt_script_len(script);
    for (std::size_t i = 0; i < len; i++) {
        char kind = 0;
        std::int64_t key = 0;
        rbt_script_op(script, i, &kind, &key);
        switch (kind) {
            case 'I': rbt_insert(tree, key); break;
            case 'D': rbt_remove(tree, key); break;
            case 'S': rbt_contains(tree, key); break;
        }

        char name[64];
        std::snprintf(name, sizeof(name), "op_%05zu_%c_%lld.dot", i, kind,
                      static_cast<long long>(key));
        std::ofstream out(std::filesystem::path(dot_dir) / name);
        OwnedString dot{rbt_to_dot(tree)};
        out << dot.get();

        if (rbt_validate(tree) != RBT_OK) {
            OwnedString why{rbt_validate_report(tree)};
            std::cerr << "invariant violation after op " << i << " (" << kind
                      << " " << key << "):\n" << why.get();
            exit_code = kExitViolation;
            break;
        }
    }
    rbt_tree_free(tree);
    rbt_script_free(script);
    if (exit_code == kExitClean)
        std::cout << "traced " << len << " ops into " << dot_dir << "\n";
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"red-black tree variant benchmark and validation harness"};
    app.require_subcommand(1);

    std::string variant = "all";
    std::size_t n = 1000;
    std::size_t reps = 1;
    std::uint64_t seed = 0;
    std::string log_base = "10";
    std::string format = "csv";
    unsigned threads = 1;
    bool exclusive = false;
    std::int64_t key_range = 1 << 20;
    std::string script_path;
    std::string dot_dir = ".";

    CLI::App* run = app.add_subcommand("run", "measure rotations and time");
    run->add_option("--variant", variant, "rb|llrb|rb23|rb234|all");
    run->add_option("--n", n, "keys per trial")->check(CLI::PositiveNumber);
    run->add_option("--reps", reps, "trials")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "base seed");
    run->add_option("--log-base", log_base, "normalization log base")
        ->check(CLI::IsMember({"2", "e", "10"}));
    run->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "md"}));
    run->add_option("--threads", threads, "parallel trial workers");
    run->add_flag("--exclusive", exclusive,
                  "one trial at a time, one per core");

    CLI::App* validate =
        app.add_subcommand("validate", "differential fuzz against an oracle");
    validate->add_option("--variant", variant, "rb|llrb|rb23|rb234|all");
    validate->add_option("--n", n, "ops to run")->check(CLI::PositiveNumber);
    validate->add_option("--seed", seed, "script seed");
    validate->add_option("--key-range", key_range, "keys drawn from [0, R)")
        ->check(CLI::PositiveNumber);

    CLI::App* trace =
        app.add_subcommand("trace", "replay a script, dumping DOT per op");
    trace->add_option("--variant", variant, "rb|llrb|rb23|rb234");
    trace->add_option("--script", script_path, "script file")->required();
    trace->add_option("--dot-dir", dot_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitClean : kExitUsage;
    }

    if (run->parsed())
        return cmd_run(variant, n, reps, seed, log_base, format, threads,
                       exclusive);
    if (validate->parsed()) return cmd_validate(variant, n, seed, key_range);
    if (trace->parsed()) return cmd_trace(variant, script_path, dot_dir);
    return kExitUsage;
}
