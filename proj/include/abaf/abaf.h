#ifndef ABAF_ABAF_H
#define ABAF_ABAF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ABAF_BUILDING)
#define ABAF_API __declspec(dllexport)
#else
#define ABAF_API __declspec(dllimport)
#endif
#else
#define ABAF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Atom ids at this interface are 1-based, as in the ICCMA format. */

typedef enum {
    ABAF_OK = 0,
    ABAF_ERR_USAGE = 1,
    ABAF_ERR_PARSE = 2,
    ABAF_ERR_RESOURCE = 3,
    ABAF_ERR_INTERNAL = 4
} abaf_status;

typedef enum { ABAF_SEM_ADM, ABAF_SEM_COM, ABAF_SEM_PRF, ABAF_SEM_GRD, ABAF_SEM_STB } abaf_semantics;

typedef enum { ABAF_ENGINE_DEFAULT, ABAF_ENGINE_BAF, ABAF_ENGINE_DIRECT, ABAF_ENGINE_ORACLE } abaf_engine;

typedef struct abaf_framework abaf_framework;
typedef struct abaf_core abaf_core;
typedef struct abaf_result abaf_result;
typedef struct abaf_extensions abaf_extensions;

/* Message for the last failed call on this thread ("" if none). */
ABAF_API const char* abaf_last_error(void);
ABAF_API const char* abaf_version(void);
/* Frees strings returned through char** out-parameters. */
ABAF_API void abaf_string_free(char* s);

ABAF_API abaf_status abaf_parse_semantics(const char* name, abaf_semantics* out);
ABAF_API abaf_status abaf_parse_engine(const char* name, abaf_engine* out);
ABAF_API const char* abaf_semantics_name(abaf_semantics sem);
ABAF_API const char* abaf_engine_name(abaf_engine engine);

/* ---- frameworks ---- */

ABAF_API abaf_status abaf_framework_parse(const char* text, size_t len, abaf_framework** out);
ABAF_API abaf_status abaf_framework_load(const char* path, abaf_framework** out);
ABAF_API void abaf_framework_free(abaf_framework* fw);
ABAF_API abaf_status abaf_framework_serialize(const abaf_framework* fw, char** out);

ABAF_API size_t abaf_framework_num_atoms(const abaf_framework* fw);
ABAF_API size_t abaf_framework_num_assumptions(const abaf_framework* fw);
ABAF_API size_t abaf_framework_num_rules(const abaf_framework* fw);
/* Returns 1 and stores the atom if the input named a default query. */
ABAF_API int abaf_framework_default_query(const abaf_framework* fw, uint32_t* atom);
ABAF_API abaf_status abaf_framework_classify(const abaf_framework* fw, int* flat, int* atomic, int* additive);

/* ---- credulous acceptance ---- */

typedef struct {
    abaf_engine engine;
    /* Direct engine: nonzero enables candidate pruning. */
    int prune;
    /* BAF engine: write the solved CNF here when non-NULL. */
    const char* dump_cnf_path;
} abaf_solve_options;

typedef struct {
    size_t n_args;
    size_t n_att;
    size_t n_sup;
    double t_inst_ms;
    double t_encode_ms;
    double t_solve_ms;
} abaf_stats;

ABAF_API void abaf_solve_options_init(abaf_solve_options* opt);
/* opt may be NULL for defaults. */
ABAF_API abaf_status abaf_solve(const abaf_framework* fw, abaf_semantics sem, uint32_t query,
                                const abaf_solve_options* opt, abaf_result** out);
ABAF_API int abaf_result_accepted(const abaf_result* r);
ABAF_API int abaf_result_has_witness(const abaf_result* r);
/* Copies up to cap witness assumptions (ascending) and returns the total. */
ABAF_API size_t abaf_result_witness(const abaf_result* r, uint32_t* buf, size_t cap);
ABAF_API abaf_engine abaf_result_engine(const abaf_result* r);
ABAF_API void abaf_result_stats(const abaf_result* r, abaf_stats* out);
ABAF_API void abaf_result_free(abaf_result* r);

/* ---- instantiation ---- */

/* Core over assumptions, contraries and the given extra query atoms. */
ABAF_API abaf_status abaf_instantiate(const abaf_framework* fw, const uint32_t* queries, size_t n_queries,
                                      abaf_core** out);
ABAF_API size_t abaf_core_num_args(const abaf_core* core);
ABAF_API size_t abaf_core_num_attacks(const abaf_core* core);
ABAF_API size_t abaf_core_num_supports(const abaf_core* core);
ABAF_API abaf_status abaf_core_to_text(const abaf_core* core, char** out);
ABAF_API void abaf_core_free(abaf_core* core);

/* ---- reference semantics ---- */

ABAF_API abaf_status abaf_oracle_extensions(const abaf_framework* fw, abaf_semantics sem, abaf_extensions** out);
ABAF_API size_t abaf_extensions_count(const abaf_extensions* ext);
/* Copies up to cap assumptions of extension i (ascending); returns its size. */
ABAF_API size_t abaf_extensions_get(const abaf_extensions* ext, size_t i, uint32_t* buf, size_t cap);
ABAF_API void abaf_extensions_free(abaf_extensions* ext);

/* ---- benchmark generation ---- */

typedef struct {
    int set; /* 1 or 2 */
    size_t n_atoms;
    double asm_ratio;
    double head_ratio;
    size_t max_rules_per_atom;
    size_t max_rule_size;
    size_t slack; /* set 2 only */
    uint64_t seed;
} abaf_gen_params;

ABAF_API void abaf_gen_params_init(abaf_gen_params* p, int set);
ABAF_API abaf_status abaf_generate(const abaf_gen_params* p, abaf_framework** out);
ABAF_API abaf_status abaf_instance_name(const abaf_gen_params* p, char** out);
ABAF_API const char* abaf_manifest_header(void);
ABAF_API abaf_status abaf_manifest_row(const abaf_gen_params* p, char** out);
/* Full parameter grid of a set; free the array with abaf_grid_free. */
ABAF_API abaf_status abaf_grid(int set, const size_t* n_atoms, size_t n_sizes, size_t per_cell, uint64_t base_seed,
                               abaf_gen_params** out, size_t* count);
ABAF_API void abaf_grid_free(abaf_gen_params* grid);

#ifdef __cplusplus
}
#endif

#endif
