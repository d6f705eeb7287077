#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/tree.hpp"

namespace rbt {

enum class LogBase : std::uint8_t { Two, E, Ten };
enum class Phase : std::uint8_t { Insert, Delete };

double log_with_base(LogBase base, double x);
const char* log_base_name(LogBase base);
const char* phase_name(Phase p);

struct ExperimentConfig {
    std::size_t n = 1000;   // distinct keys per trial
    std::size_t reps = 1;   // independent trials
    std::vector<Variant> variants{Variant::RB, Variant::LLRB, Variant::RB23,
                                  Variant::RB234};
    std::uint64_t seed = 0;
    LogBase log_base = LogBase::Ten;
    unsigned threads = 1;   // workers running whole trials in parallel
};

// One output line: rotations and wall time for one variant and phase,
// normalized by n*log(n); rotations additionally x1000. Mean and sample
// standard deviation over the trials.
struct ExperimentRow {
    std::size_t n = 0;
    std::size_t reps = 0;
    Variant variant = Variant::RB;
    Phase phase = Phase::Insert;
    double rot_mean = 0.0;
    double rot_sd = 0.0;
    double time_mean = 0.0;  // nanoseconds per n*log(n)
    double time_sd = 0.0;
};

// Per trial: build the key sequence from the trial seed (independent of the
// variant, so paired comparisons see identical inputs), insert all keys,
// then delete all keys in a second shuffled order, timing each phase.
// Rotation columns are deterministic for a given (config, seed) regardless
// of thread count. Throws std::invalid_argument on a bad config and
// std::runtime_error if the monotonic clock misbehaves.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

}  // namespace rbt
