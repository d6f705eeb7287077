#include "rbt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bench/experiment.hpp"
#include "bench/report.hpp"
#include "core/tree.hpp"
#include "verify/differential.hpp"
#include "verify/parity.hpp"
#include "verify/script.hpp"

// Thin extern-C shell over the C++ core. Opaque pointers wrap the C++
// objects directly; all allocation failures surface as null returns.

namespace {

rbt::Tree* unwrap(rbt_tree* t) { return reinterpret_cast<rbt::Tree*>(t); }
const rbt::Tree* unwrap(const rbt_tree* t) {
    return reinterpret_cast<const rbt::Tree*>(t);
}
rbt_tree* wrap(rbt::Tree* t) { return reinterpret_cast<rbt_tree*>(t); }

const rbt::OpScript* unwrap(const rbt_script* s) {
    return reinterpret_cast<const rbt::OpScript*>(s);
}
rbt_script* wrap(rbt::OpScript* s) { return reinterpret_cast<rbt_script*>(s); }

rbt::Variant to_variant(rbt_variant v) {
    switch (v) {
        case RBT_RB: return rbt::Variant::RB;
        case RBT_LLRB: return rbt::Variant::LLRB;
        case RBT_RB23: return rbt::Variant::RB23;
        case RBT_RB234: return rbt::Variant::RB234;
    }
    return rbt::Variant::RB;
}

rbt_variant from_variant(rbt::Variant v) {
    switch (v) {
        case rbt::Variant::RB: return RBT_RB;
        case rbt::Variant::LLRB: return RBT_LLRB;
        case rbt::Variant::RB23: return RBT_RB23;
        case rbt::Variant::RB234: return RBT_RB234;
    }
    return RBT_RB;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* rbt_status_name(rbt_status s) {
    switch (s) {
        case RBT_OK: return "ok";
        case RBT_NOT_FOUND: return "not-found";
        case RBT_DUPLICATE: return "duplicate";
        case RBT_INVALID: return "invalid";
        case RBT_VIOLATION: return "violation";
        case RBT_NOMEM: return "no-memory";
    }
    return "?";
}

const char* rbt_variant_name(rbt_variant v) {
    return rbt::variant_name(to_variant(v));
}

rbt_tree* rbt_tree_new(rbt_variant v) {
    return wrap(new (std::nothrow) rbt::Tree(to_variant(v)));
}

rbt_tree* rbt_tree_clone(const rbt_tree* t) {
    if (!t) return nullptr;
    return wrap(new (std::nothrow) rbt::Tree(unwrap(t)->clone()));
}

rbt_tree* rbt_tree_clone_as(const rbt_tree* t, rbt_variant v) {
    if (!t) return nullptr;
    return wrap(new (std::nothrow)
                    rbt::Tree(unwrap(t)->clone_as(to_variant(v))));
}

void rbt_tree_free(rbt_tree* t) { delete unwrap(t); }

rbt_variant rbt_tree_variant(const rbt_tree* t) {
    return from_variant(unwrap(t)->variant());
}

rbt_status rbt_insert(rbt_tree* t, int64_t key) {
    if (!t) return RBT_INVALID;
    return unwrap(t)->insert(key) ? RBT_OK : RBT_DUPLICATE;
}

rbt_status rbt_remove(rbt_tree* t, int64_t key) {
    if (!t) return RBT_INVALID;
    return unwrap(t)->erase(key) ? RBT_OK : RBT_NOT_FOUND;
}

int rbt_contains(const rbt_tree* t, int64_t key) {
    return t && unwrap(t)->contains(key) ? 1 : 0;
}

size_t rbt_size(const rbt_tree* t) { return t ? unwrap(t)->size() : 0; }

int rbt_height(const rbt_tree* t) { return t ? unwrap(t)->height() : 0; }

void rbt_stats_get(const rbt_tree* t, rbt_stats* out) {
    if (!t || !out) return;
    const rbt::OpStats& s = unwrap(t)->stats();
    out->rotations = s.rotations;
    out->recolors = s.recolors;
    out->fixup_steps = s.fixup_steps;
}

void rbt_stats_reset(rbt_tree* t) {
    if (t) unwrap(t)->reset_stats();
}

rbt_status rbt_validate(const rbt_tree* t) {
    if (!t) return RBT_INVALID;
    return unwrap(t)->validate().empty() ? RBT_OK : RBT_VIOLATION;
}

char* rbt_validate_report(const rbt_tree* t) {
    if (!t) return nullptr;
    auto violations = unwrap(t)->validate();
    if (violations.empty()) return nullptr;
    std::ostringstream os;
    for (const rbt::Violation& v : violations)
        os << v.rule << " @node" << v.node.index << ": " << v.detail << "\n";
    return dup_string(os.str());
}

char* rbt_to_dot(const rbt_tree* t) {
    if (!t) return nullptr;
    return dup_string(unwrap(t)->to_dot());
}

size_t rbt_keys(const rbt_tree* t, int64_t* out, size_t cap) {
    if (!t) return 0;
    auto keys = unwrap(t)->inorder_keys();
    if (out)
        for (size_t i = 0; i < keys.size() && i < cap; i++) out[i] = keys[i];
    return keys.size();
}

int rbt_shape_equal(const rbt_tree* a, const rbt_tree* b) {
    if (!a || !b) return 0;
    return unwrap(a)->same_shape(*unwrap(b)) ? 1 : 0;
}

void rbt_string_free(char* s) { std::free(s); }

rbt_script* rbt_script_parse(const char* text, char** error_out) {
    if (error_out) *error_out = nullptr;
    if (!text) return nullptr;
    std::string error;
    auto parsed = rbt::OpScript::parse(text, &error);
    if (!parsed) {
        if (error_out) *error_out = dup_string(error);
        return nullptr;
    }
    return wrap(new (std::nothrow) rbt::OpScript(std::move(*parsed)));
}

rbt_script* rbt_script_random(uint64_t seed, size_t ops, int64_t key_range) {
    if (key_range < 1) return nullptr;
    return wrap(new (std::nothrow)
                    rbt::OpScript(rbt::random_script(seed, ops, key_range)));
}

size_t rbt_script_len(const rbt_script* s) {
    return s ? unwrap(s)->ops.size() : 0;
}

rbt_status rbt_script_op(const rbt_script* s, size_t i, char* kind_out,
                         int64_t* key_out) {
    if (!s || i >= unwrap(s)->ops.size()) return RBT_INVALID;
    const rbt::Op& op = unwrap(s)->ops[i];
    if (kind_out) *kind_out = static_cast<char>(op.kind);
    if (key_out) *key_out = op.key;
    return RBT_OK;
}

char* rbt_script_text(const rbt_script* s) {
    if (!s) return nullptr;
    return dup_string(unwrap(s)->to_text());
}

void rbt_script_free(rbt_script* s) {
    delete reinterpret_cast<rbt::OpScript*>(s);
}

rbt_status rbt_differential_run(const rbt_script* s,
                                const rbt_variant* variants,
                                size_t n_variants, char** report_out) {
    if (report_out) *report_out = nullptr;
    if (!s || !variants || n_variants == 0) return RBT_INVALID;
    std::vector<rbt::Variant> vs;
    vs.reserve(n_variants);
    for (size_t i = 0; i < n_variants; i++) vs.push_back(to_variant(variants[i]));
    rbt::DiffReport report = rbt::differential_run(*unwrap(s), vs);
    if (report_out) *report_out = dup_string(report.summary());
    return report.clean ? RBT_OK : RBT_VIOLATION;
}

rbt_status rbt_rotation_parity_check(size_t n, uint64_t seed,
                                     char** report_out) {
    if (report_out) *report_out = nullptr;
    if (n == 0) return RBT_INVALID;
    rbt::ParityReport paired = rbt::paired_rotation_check(n, seed);
    // also cross-check the two delete fix-ups on identical trees
    rbt::ParityReport shared = rbt::shared_tree_delete_check(
        n < 1000 ? n : 1000, 25, seed ^ 0x9e3779b97f4a7c15ULL);
    bool ok = paired.ok && shared.ok;
    if (report_out)
        *report_out = dup_string(
            ok ? "paired runs and shared-tree deletes agree"
               : paired.message + shared.message);
    return ok ? RBT_OK : RBT_VIOLATION;
}

rbt_status rbt_experiment_run(const rbt_experiment_config* cfg,
                              const rbt_variant* variants, size_t n_variants,
                              rbt_experiment_row* rows, size_t cap,
                              size_t* count) {
    if (count) *count = 0;
    if (!cfg || !variants || n_variants == 0) return RBT_INVALID;
    rbt::ExperimentConfig c;
    c.n = cfg->n;
    c.reps = cfg->reps;
    c.seed = cfg->seed;
    c.threads = cfg->threads ? cfg->threads : 1;
    c.log_base = cfg->log_base == 2    ? rbt::LogBase::Two
                 : cfg->log_base == 10 ? rbt::LogBase::Ten
                                       : rbt::LogBase::E;
    c.variants.clear();
    for (size_t i = 0; i < n_variants; i++)
        c.variants.push_back(to_variant(variants[i]));

    std::vector<rbt::ExperimentRow> out;
    try {
        out = rbt::run_experiment(c);
    } catch (const std::invalid_argument&) {
        return RBT_INVALID;
    } catch (const std::exception&) {
        return RBT_VIOLATION;
    }
    if (count) *count = out.size();
    if (rows)
        for (size_t i = 0; i < out.size() && i < cap; i++) {
            const rbt::ExperimentRow& r = out[i];
            rows[i] = {r.n,
                       r.reps,
                       from_variant(r.variant),
                       r.phase == rbt::Phase::Insert ? 0 : 1,
                       r.rot_mean,
                       r.rot_sd,
                       r.time_mean,
                       r.time_sd};
        }
    return RBT_OK;
}

char* rbt_experiment_report(const rbt_experiment_row* rows, size_t count,
                            int format) {
    std::vector<rbt::ExperimentRow> rs;
    rs.reserve(count);
    for (size_t i = 0; i < count; i++) {
        const rbt_experiment_row& r = rows[i];
        rs.push_back({r.n, r.reps, to_variant(r.variant),
                      r.phase == 0 ? rbt::Phase::Insert : rbt::Phase::Delete,
                      r.rot_mean, r.rot_sd, r.time_mean, r.time_sd});
    }
    return dup_string(rbt::emit_report(
        rs, format == 1 ? rbt::ReportFormat::Markdown
                        : rbt::ReportFormat::Csv));
}

}  // extern "C"
