#include "bench/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace rbt {

namespace {

std::string cell(double mean, double sd) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.0f±%.0f", mean, sd);
    return buf;
}

std::string csv_report(const std::vector<ExperimentRow>& rows) {
    std::ostringstream os;
    os << "n,reps,variant,phase,rot_mean,rot_sd,time_mean,time_sd\n";
    char buf[160];
    for (const ExperimentRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%zu,%zu,%s,%s,%.6f,%.6f,%.6f,%.6f\n",
                      r.n, r.reps, variant_name(r.variant),
                      phase_name(r.phase), r.rot_mean, r.rot_sd, r.time_mean,
                      r.time_sd);
        os << buf;
    }
    return os.str();
}

std::string markdown_report(const std::vector<ExperimentRow>& rows) {
    // Preserve first-appearance order of variants and (n, reps) groups.
    std::vector<Variant> variants;
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (const ExperimentRow& r : rows) {
        if (std::find(variants.begin(), variants.end(), r.variant) ==
            variants.end())
            variants.push_back(r.variant);
        std::pair<std::size_t, std::size_t> g{r.n, r.reps};
        if (std::find(groups.begin(), groups.end(), g) == groups.end())
            groups.push_back(g);
    }

    auto find_row = [&](std::size_t n, std::size_t reps, Variant v,
                        Phase p) -> const ExperimentRow* {
        for (const ExperimentRow& r : rows)
            if (r.n == n && r.reps == reps && r.variant == v && r.phase == p)
                return &r;
        return nullptr;
    };

    auto table = [&](const char* title, bool rotations) {
        std::ostringstream os;
        os << title << "\n\n";
        os << "| n | reps |";
        for (Phase p : {Phase::Insert, Phase::Delete})
            for (Variant v : variants)
                os << " " << phase_name(p) << " " << variant_name(v) << " |";
        os << "\n|---|---|";
        for (std::size_t i = 0; i < 2 * variants.size(); i++) os << "---|";
        os << "\n";
        for (auto [n, reps] : groups) {
            os << "| " << n << " | " << reps << " |";
            for (Phase p : {Phase::Insert, Phase::Delete})
                for (Variant v : variants) {
                    const ExperimentRow* r = find_row(n, reps, v, p);
                    if (!r)
                        os << " - |";
                    else if (rotations)
                        os << " " << cell(r->rot_mean, r->rot_sd) << " |";
                    else
                        os << " " << cell(r->time_mean, r->time_sd) << " |";
                }
            os << "\n";
        }
        return os.str();
    };

    std::string out =
        table("Rotations, normalized by n*log(n), x1000:", true);
    out += "\n";
    out += table("Time in ns, normalized by n*log(n):", false);
    return out;
}

}  // namespace

std::string emit_report(const std::vector<ExperimentRow>& rows,
                        ReportFormat format) {
    return format == ReportFormat::Csv ? csv_report(rows)
                                       : markdown_report(rows);
}

}  // namespace rbt
