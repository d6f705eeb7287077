#include <doctest.h>

#include <stdexcept>

#include "bench/experiment.hpp"
#include "bench/report.hpp"

using namespace rbt;

namespace {

const ExperimentRow* find_row(const std::vector<ExperimentRow>& rows,
                              Variant v, Phase p) {
    for (const ExperimentRow& r : rows)
        if (r.variant == v && r.phase == p) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("a single key needs no rotations") {
    ExperimentConfig cfg;
    cfg.n = 1;
    cfg.reps = 1;
    cfg.variants = {Variant::RB};
    auto rows = run_experiment(cfg);
    REQUIRE(rows.size() == 2);
    const ExperimentRow* ins = find_row(rows, Variant::RB, Phase::Insert);
    REQUIRE(ins);
    CHECK(ins->rot_mean == 0.0);
    CHECK(ins->rot_sd == 0.0);
}

TEST_CASE("bad configs are rejected") {
    ExperimentConfig cfg;
    cfg.n = 0;
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
    cfg.n = 10;
    cfg.reps = 0;
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
    cfg.reps = 1;
    cfg.variants.clear();
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("rotation columns are reproducible and thread-independent") {
    ExperimentConfig cfg;
    cfg.n = 500;
    cfg.reps = 6;
    cfg.seed = 77;
    cfg.variants = {Variant::RB, Variant::LLRB, Variant::RB23,
                    Variant::RB234};

    auto a = run_experiment(cfg);
    auto b = run_experiment(cfg);
    cfg.threads = 4;
    auto c = run_experiment(cfg);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        CHECK(a[i].rot_mean == b[i].rot_mean);
        CHECK(a[i].rot_sd == b[i].rot_sd);
        CHECK(a[i].rot_mean == c[i].rot_mean);
        CHECK(a[i].rot_sd == c[i].rot_sd);
    }
}

TEST_CASE("classic and amended variants share rotation columns") {
    ExperimentConfig cfg;
    cfg.n = 2000;
    cfg.reps = 3;
    cfg.seed = 4;
    cfg.variants = {Variant::RB, Variant::RB234};
    auto rows = run_experiment(cfg);
    for (Phase p : {Phase::Insert, Phase::Delete}) {
        const ExperimentRow* rb = find_row(rows, Variant::RB, p);
        const ExperimentRow* rb234 = find_row(rows, Variant::RB234, p);
        REQUIRE(rb);
        REQUIRE(rb234);
        CHECK(rb->rot_mean == rb234->rot_mean);
        CHECK(rb->rot_sd == rb234->rot_sd);
    }
}

TEST_CASE("csv output: header only when empty, fields in order") {
    CHECK(emit_report({}, ReportFormat::Csv) ==
          "n,reps,variant,phase,rot_mean,rot_sd,time_mean,time_sd\n");

    ExperimentRow row{1000, 5,   Variant::LLRB, Phase::Delete,
                      12.5, 0.25, 100.0,         2.0};
    std::string csv = emit_report({row}, ReportFormat::Csv);
    CHECK(csv ==
          "n,reps,variant,phase,rot_mean,rot_sd,time_mean,time_sd\n"
          "1000,5,llrb,delete,12.500000,0.250000,100.000000,2.000000\n");
}

TEST_CASE("markdown output matches the frozen snapshot") {
    std::vector<ExperimentRow> rows;
    for (Variant v :
         {Variant::RB, Variant::LLRB, Variant::RB23, Variant::RB234})
        for (Phase p : {Phase::Insert, Phase::Delete})
            rows.push_back({1000, 2, v, p,
                            100.0 + 10.0 * static_cast<int>(v),
                            1.0, 50.0, 5.0});

    const char* expected =
        "Rotations, normalized by n*log(n), x1000:\n"
        "\n"
        "| n | reps | insert rb | insert llrb | insert rb23 | insert rb234 |"
        " delete rb | delete llrb | delete rb23 | delete rb234 |\n"
        "|---|---|---|---|---|---|---|---|---|---|\n"
        "| 1000 | 2 | 100±1 | 110±1 | 120±1 | 130±1 | 100±1 | 110±1 |"
        " 120±1 | 130±1 |\n"
        "\n"
        "Time in ns, normalized by n*log(n):\n"
        "\n"
        "| n | reps | insert rb | insert llrb | insert rb23 | insert rb234 |"
        " delete rb | delete llrb | delete rb23 | delete rb234 |\n"
        "|---|---|---|---|---|---|---|---|---|---|\n"
        "| 1000 | 2 | 50±5 | 50±5 | 50±5 | 50±5 | 50±5 | 50±5 | 50±5 |"
        " 50±5 |\n";
    CHECK(emit_report(rows, ReportFormat::Markdown) == expected);
}

TEST_CASE("normalized rotations shrink with n, except the llrb delete") {
    std::vector<std::vector<ExperimentRow>> grids;
    for (std::size_t n : {1000ul, 8000ul, 64000ul}) {
        ExperimentConfig cfg;
        cfg.n = n;
        cfg.reps = 3;
        cfg.seed = 1234;
        auto rows = run_experiment(cfg);
        grids.push_back(rows);
    }
    for (Variant v :
         {Variant::RB, Variant::LLRB, Variant::RB23, Variant::RB234})
        for (Phase p : {Phase::Insert, Phase::Delete}) {
            double prev = find_row(grids[0], v, p)->rot_mean;
            for (std::size_t g = 1; g < grids.size(); g++) {
                double cur = find_row(grids[g], v, p)->rot_mean;
                if (v == Variant::LLRB && p == Phase::Delete)
                    CHECK(cur > prev);  // the one that grows with n
                else
                    CHECK(cur <= prev);
                prev = cur;
            }
        }
}

TEST_CASE("log base changes only the scale of the columns") {
    ExperimentConfig cfg;
    cfg.n = 256;
    cfg.reps = 2;
    cfg.seed = 9;
    cfg.variants = {Variant::RB};

    cfg.log_base = LogBase::Two;
    auto two = run_experiment(cfg);
    cfg.log_base = LogBase::Ten;
    auto ten = run_experiment(cfg);
    const double scale = log_with_base(LogBase::Two, 256.0) /
                         log_with_base(LogBase::Ten, 256.0);
    CHECK(ten[0].rot_mean ==
          doctest::Approx(two[0].rot_mean * scale).epsilon(1e-9));
}
