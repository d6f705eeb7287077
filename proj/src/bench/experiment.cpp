#include "bench/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "verify/rng.hpp"
#include "verify/script.hpp"

namespace rbt {

double log_with_base(LogBase base, double x) {
    switch (base) {
        case LogBase::Two: return std::log2(x);
        case LogBase::E: return std::log(x);
        case LogBase::Ten: return std::log10(x);
    }
    return std::log(x);
}

const char* log_base_name(LogBase base) {
    switch (base) {
        case LogBase::Two: return "2";
        case LogBase::E: return "e";
        case LogBase::Ten: return "10";
    }
    return "?";
}

const char* phase_name(Phase p) {
    return p == Phase::Insert ? "insert" : "delete";
}

namespace {

struct TrialResult {
    std::uint64_t rotations[2];  // indexed by Phase
    double nanos[2];
};

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) {
    SplitMix64 mix(base_seed ^ (0x51ed270b0a1ULL + trial));
    return mix.next();
}

TrialResult run_trial(Variant variant, std::size_t n, std::uint64_t seed) {
    auto [ins, del] = random_key_orders(seed, n);
    Tree tree(variant);
    using clock = std::chrono::steady_clock;

    auto t0 = clock::now();
    for (std::int64_t k : ins) tree.insert(k);
    auto t1 = clock::now();
    std::uint64_t rot_ins = tree.stats().rotations;

    tree.reset_stats();
    auto t2 = clock::now();
    for (std::int64_t k : del) tree.erase(k);
    auto t3 = clock::now();
    std::uint64_t rot_del = tree.stats().rotations;

    auto ns = [](clock::time_point a, clock::time_point b) {
        auto d = std::chrono::duration_cast<std::chrono::nanoseconds>(b - a);
        if (d.count() < 0)
            throw std::runtime_error("monotonic clock ran backwards");
        return static_cast<double>(d.count());
    };

    TrialResult r;
    r.rotations[0] = rot_ins;
    r.rotations[1] = rot_del;
    r.nanos[0] = ns(t0, t1);
    r.nanos[1] = ns(t2, t3);
    return r;
}

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

MeanSd mean_sd(const std::vector<double>& xs) {
    MeanSd out;
    if (xs.empty()) return out;
    for (double x : xs) out.mean += x;
    out.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double acc = 0.0;
        for (double x : xs) acc += (x - out.mean) * (x - out.mean);
        out.sd = std::sqrt(acc / static_cast<double>(xs.size() - 1));
    }
    return out;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be at least 1");
    if (cfg.reps < 1) throw std::invalid_argument("reps must be at least 1");
    if (cfg.variants.empty())
        throw std::invalid_argument("no variants selected");

    // n=1 degenerates the n*log(n) normalizer to zero; report such runs
    // unnormalized rather than dividing by it.
    double denom = static_cast<double>(cfg.n) *
                   log_with_base(cfg.log_base, static_cast<double>(cfg.n));
    if (denom <= 0.0) denom = 1.0;

    const std::size_t trials = cfg.reps * cfg.variants.size();
    std::vector<TrialResult> results(trials);

    auto work = [&](std::size_t t) {
        std::size_t rep = t / cfg.variants.size();
        Variant variant = cfg.variants[t % cfg.variants.size()];
        results[t] = run_trial(variant, cfg.n, trial_seed(cfg.seed, rep));
    };

    unsigned workers = cfg.threads ? cfg.threads : 1;
    if (workers == 1) {
        for (std::size_t t = 0; t < trials; t++) work(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; w++)
            pool.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < trials;
                     t = next.fetch_add(1))
                    work(t);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<ExperimentRow> rows;
    for (std::size_t vi = 0; vi < cfg.variants.size(); vi++) {
        for (Phase phase : {Phase::Insert, Phase::Delete}) {
            std::vector<double> rot, ns;
            rot.reserve(cfg.reps);
            ns.reserve(cfg.reps);
            for (std::size_t rep = 0; rep < cfg.reps; rep++) {
                const TrialResult& r = results[rep * cfg.variants.size() + vi];
                int p = phase == Phase::Insert ? 0 : 1;
                rot.push_back(static_cast<double>(r.rotations[p]) / denom *
                              1000.0);
                ns.push_back(r.nanos[p] / denom);
            }
            MeanSd rs = mean_sd(rot);
            MeanSd ts = mean_sd(ns);
            rows.push_back({cfg.n, cfg.reps, cfg.variants[vi], phase, rs.mean,
                            rs.sd, ts.mean, ts.sd});
        }
    }
    return rows;
}

}  // namespace rbt
