/*
 * C interface to the temporal k-plex library.
 *
 * Every fallible call returns a tkp_status; on failure tkp_last_error()
 * describes the problem for the calling thread until its next library call.
 * Handles are opaque and owned by the caller once returned.
 */
#ifndef TKPLEX_TKPLEX_H
#define TKPLEX_TKPLEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TKPLEX_BUILDING_LIBRARY)
#define TKP_API __declspec(dllexport)
#else
#define TKP_API __declspec(dllimport)
#endif
#else
#define TKP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tkp_status {
    TKP_OK = 0,
    TKP_ERR_INVALID_ARGUMENT = 2,
    TKP_ERR_PARSE = 3,
    TKP_ERR_TIMEOUT = 4,
    TKP_ERR_IO = 6,
    TKP_ERR_SIZE_GUARD = 7,
    TKP_ERR_INTERNAL = 9
} tkp_status;

typedef struct tkp_graph tkp_graph;

typedef struct tkp_edge {
    uint32_t u;
    uint32_t v;
    int64_t t;
} tkp_edge;

typedef struct tkp_parse_options {
    uint32_t time_column;   /* 0-based, default 0 */
    uint32_t first_column;  /* default 1 */
    uint32_t second_column; /* default 2 */
    int dedupe;             /* default 1; 0 rejects duplicate lines */
    int skip_self_loops;    /* default 0; self-loops are an error */
    int64_t resolution;     /* default 1 */
} tkp_parse_options;

typedef struct tkp_search_config {
    int64_t delta;
    uint32_t k;
    int pivoting;
    int connected;
    double time_limit_seconds; /* <= 0 disables the limit */
} tkp_search_config;

typedef struct tkp_run_stats {
    uint64_t plex_count;
    uint64_t max_plex_order;
    int64_t max_lifetime_length;
    uint64_t recursive_calls;
    double wall_time_seconds;
    int timed_out;
} tkp_run_stats;

/* One plex: sorted vertex indices and its inclusive frame interval. */
typedef void (*tkp_plex_callback)(const uint32_t* vertices, size_t vertex_count, int64_t first_frame,
                                  int64_t last_frame, void* user_data);

TKP_API const char* tkp_last_error(void);
TKP_API const char* tkp_status_name(tkp_status status);

TKP_API void tkp_parse_options_init(tkp_parse_options* options);
TKP_API void tkp_search_config_init(tkp_search_config* config);

/* options may be NULL for defaults. */
TKP_API tkp_status tkp_graph_parse(const char* text, size_t length, const tkp_parse_options* options,
                                   tkp_graph** out);
TKP_API tkp_status tkp_graph_load(const char* path, const tkp_parse_options* options, tkp_graph** out);
/* Unlabeled graph with labels "0".."n-1"; timestamps must lie in [1, lifetime]. */
TKP_API tkp_status tkp_graph_create(size_t vertex_count, const tkp_edge* edges, size_t edge_count,
                                    int64_t lifetime, tkp_graph** out);
TKP_API void tkp_graph_free(tkp_graph* graph);

TKP_API size_t tkp_graph_vertex_count(const tkp_graph* graph);
TKP_API size_t tkp_graph_edge_count(const tkp_graph* graph);
TKP_API int64_t tkp_graph_lifetime(const tkp_graph* graph);
/* NULL when v is out of range. Valid while the graph lives. */
TKP_API const char* tkp_graph_vertex_label(const tkp_graph* graph, uint32_t v);
/* "t u v" lines; release with tkp_string_free. */
TKP_API tkp_status tkp_graph_render(const tkp_graph* graph, char** out, size_t* length);
TKP_API void tkp_string_free(char* text);

TKP_API tkp_status tkp_scaled_delta(int64_t lifetime, size_t edge_count, double exponent, int64_t* out);
TKP_API tkp_status tkp_delta_slice_degeneracy(const tkp_graph* graph, int64_t delta, uint32_t* out);
TKP_API tkp_status tkp_static_degeneracy(const tkp_graph* graph, uint32_t* out);
/* Writes n*C(n,k)*2^(d+k)*min(m,lifetime) in decimal. *required receives the
 * buffer size needed including the terminator; TKP_ERR_INVALID_ARGUMENT if
 * capacity is too small. */
TKP_API tkp_status tkp_plex_count_bound(uint64_t n, uint64_t k, uint64_t d, uint64_t m, uint64_t lifetime,
                                        char* buffer, size_t capacity, size_t* required);

/* Returns TKP_ERR_TIMEOUT (with stats filled and stats->timed_out set) when the
 * time limit cut the search short. callback may be NULL to only count. */
TKP_API tkp_status tkp_enumerate(const tkp_graph* graph, const tkp_search_config* config,
                                 tkp_plex_callback callback, void* user_data, tkp_run_stats* stats);

/* Exhaustive reference enumeration for small graphs (TKP_ERR_SIZE_GUARD
 * beyond 12 vertices or lifetime 64). Records arrive in canonical order. */
TKP_API tkp_status tkp_oracle_enumerate(const tkp_graph* graph, int64_t delta, uint32_t k,
                                        tkp_plex_callback callback, void* user_data, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* TKPLEX_TKPLEX_H */
