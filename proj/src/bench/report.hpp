#pragma once

#include <string>
#include <vector>

#include "bench/experiment.hpp"

namespace rbt {

enum class ReportFormat : std::uint8_t { Csv, Markdown };

// CSV: one data line per row under the fixed header
//   n,reps,variant,phase,rot_mean,rot_sd,time_mean,time_sd
// Markdown: two aligned tables (rotations, then time), one column per
// variant and phase, cells as mean±sd.
std::string emit_report(const std::vector<ExperimentRow>& rows,
                        ReportFormat format);

}  // namespace rbt
