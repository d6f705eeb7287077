/*
 * rbt — ordered 64-bit integer sets backed by four red-black tree variants:
 *
 *   RBT_RB     classic red-black tree (bottom-up fix-ups over parent links)
 *   RBT_LLRB   left-leaning red-black tree (recursive, top-down delete)
 *   RBT_RB23   2-3 red-black tree (no two red children) with the
 *              parity-seeking delete
 *   RBT_RB234  classic tree whose delete is the amended parity-seeking
 *              algorithm; rotation-for-rotation equal to RBT_RB
 *
 * Every tree carries rotation/recolor/fix-up counters, a structural
 * validator, and a Graphviz exporter. The library also ships the test
 * machinery: replayable op scripts, a differential runner that checks each
 * variant against a reference ordered set, rotation-parity cross-checks,
 * and the rotation-count benchmark.
 *
 * Handles are opaque; functions return rbt_status where failure is
 * meaningful. Strings returned as char* are heap-allocated; release them
 * with rbt_string_free. A tree accepts one writer at a time; distinct trees
 * are fully independent.
 */

#ifndef RBT_H
#define RBT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rbt_tree rbt_tree;
typedef struct rbt_script rbt_script;

typedef enum rbt_variant {
    RBT_RB = 0,
    RBT_LLRB = 1,
    RBT_RB23 = 2,
    RBT_RB234 = 3
} rbt_variant;

typedef enum rbt_status {
    RBT_OK = 0,
    RBT_NOT_FOUND = 1,  /* delete/search miss */
    RBT_DUPLICATE = 2,  /* insert of a present key; tree untouched */
    RBT_INVALID = 3,    /* bad argument or unparsable input */
    RBT_VIOLATION = 4,  /* a structural invariant or cross-check failed */
    RBT_NOMEM = 5
} rbt_status;

typedef struct rbt_stats {
    uint64_t rotations;
    uint64_t recolors;
    uint64_t fixup_steps;
} rbt_stats;

const char* rbt_status_name(rbt_status s);
const char* rbt_variant_name(rbt_variant v);

/* ---- tree lifecycle ---------------------------------------------------- */

rbt_tree* rbt_tree_new(rbt_variant v);
rbt_tree* rbt_tree_clone(const rbt_tree* t);              /* stats reset */
rbt_tree* rbt_tree_clone_as(const rbt_tree* t, rbt_variant v);
void rbt_tree_free(rbt_tree* t);
rbt_variant rbt_tree_variant(const rbt_tree* t);

/* ---- operations --------------------------------------------------------- */

rbt_status rbt_insert(rbt_tree* t, int64_t key);  /* OK | DUPLICATE */
rbt_status rbt_remove(rbt_tree* t, int64_t key);  /* OK | NOT_FOUND */
int rbt_contains(const rbt_tree* t, int64_t key);
size_t rbt_size(const rbt_tree* t);
int rbt_height(const rbt_tree* t);

void rbt_stats_get(const rbt_tree* t, rbt_stats* out);
void rbt_stats_reset(rbt_tree* t);

/* ---- inspection ---------------------------------------------------------- */

/* RBT_OK when every structural rule holds. */
rbt_status rbt_validate(const rbt_tree* t);
/* NULL when clean, else one line per broken rule. */
char* rbt_validate_report(const rbt_tree* t);
/* Graphviz text; red nodes annotated, external nodes omitted. */
char* rbt_to_dot(const rbt_tree* t);
/* Copies up to cap keys in ascending order; returns the tree's key count. */
size_t rbt_keys(const rbt_tree* t, int64_t* out, size_t cap);
/* 1 when both trees have identical structure, keys and colors. */
int rbt_shape_equal(const rbt_tree* a, const rbt_tree* b);

void rbt_string_free(char* s);

/* ---- op scripts ----------------------------------------------------------
 * Text form, line oriented: a "SEED <u64>" header, then one op per line:
 * "I <key>" insert, "D <key>" delete, "S <key>" search. */

rbt_script* rbt_script_parse(const char* text, char** error_out);
/* Mixed insert/delete/search workload over keys in [0, key_range). */
rbt_script* rbt_script_random(uint64_t seed, size_t ops, int64_t key_range);
size_t rbt_script_len(const rbt_script* s);
/* kind_out gets 'I', 'D' or 'S'. */
rbt_status rbt_script_op(const rbt_script* s, size_t i, char* kind_out,
                         int64_t* key_out);
char* rbt_script_text(const rbt_script* s);
void rbt_script_free(rbt_script* s);

/* ---- verification ---------------------------------------------------------
 * Replays the script against the given variants and a reference ordered
 * set, checking results, contents, size and every invariant after each op.
 * Returns RBT_OK and a short summary, or RBT_VIOLATION and a report holding
 * the first divergence plus a minimized reproduction script. */
rbt_status rbt_differential_run(const rbt_script* s,
                                const rbt_variant* variants,
                                size_t n_variants, char** report_out);

/* Paired classic vs parity-seeking run over n random keys: per-op and
 * cumulative rotation counts and final shapes must agree. */
rbt_status rbt_rotation_parity_check(size_t n, uint64_t seed,
                                     char** report_out);

/* ---- benchmark ------------------------------------------------------------
 * Per trial: insert n distinct random keys, then delete all of them in an
 * independent random order. Metrics are normalized by n*log(n); rotations
 * are additionally multiplied by 1000. Rotation columns depend only on
 * (n, reps, seed), never on timing or thread count. */

typedef struct rbt_experiment_config {
    size_t n;
    size_t reps;
    uint64_t seed;
    int log_base;     /* 2 or 10; any other value means natural log */
    unsigned threads; /* 0 or 1 serializes the trials */
} rbt_experiment_config;

typedef struct rbt_experiment_row {
    size_t n;
    size_t reps;
    rbt_variant variant;
    int phase; /* 0 insert, 1 delete */
    double rot_mean, rot_sd;
    double time_mean, time_sd;
} rbt_experiment_row;

/* Writes up to cap rows (two per variant); *count gets the total needed.
 * Returns RBT_INVALID on a bad config. */
rbt_status rbt_experiment_run(const rbt_experiment_config* cfg,
                              const rbt_variant* variants, size_t n_variants,
                              rbt_experiment_row* rows, size_t cap,
                              size_t* count);

/* format: 0 CSV, 1 markdown. */
char* rbt_experiment_report(const rbt_experiment_row* rows, size_t count,
                            int format);

#ifdef __cplusplus
}
#endif

#endif /* RBT_H */
