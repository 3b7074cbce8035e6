/* hgpart — multilevel hypergraph partitioning library, C interface.
 *
 * All functions returning hgp_status report failure details through
 * hgp_last_error(). Handles are opaque; every successful create/read call
 * must be paired with the matching free.
 */
#ifndef HGPART_H
#define HGPART_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hgp_hypergraph hgp_hypergraph;
typedef struct hgp_result hgp_result;

typedef enum hgp_status {
  HGP_OK = 0,
  HGP_ERR_INVALID_ARGUMENT = 1,
  HGP_ERR_PARSE = 2,
  HGP_ERR_IO = 3,
  HGP_ERR_INTERNAL = 4
} hgp_status;

typedef struct hgp_config {
  uint64_t seed;
  int32_t k;
  double epsilon;
  int64_t coarsest_size;       /* stop coarsening at this many vertices */
  double max_weight_scale;     /* scale for the heaviest contractible vertex */
  int32_t move_limit;          /* refinement moves without improvement */
  int32_t sclap_tau;           /* label propagation seed neighborhood */
  int32_t ip_runs;             /* runs per initial partitioning algorithm */
  int32_t lazy_rating;         /* 1 = lazy re-rating, 0 = full */
} hgp_config;

/* Fills cfg with the tuned defaults (k = 2, epsilon = 0.03, seed = 0). */
void hgp_config_defaults(hgp_config* cfg);

/* Message for the most recent failing call on this thread. */
const char* hgp_last_error(void);

hgp_status hgp_hypergraph_read_hgr(const char* path, hgp_hypergraph** out);
hgp_status hgp_hypergraph_parse_hgr(const char* text, hgp_hypergraph** out);

/* Builds a hypergraph from arrays. net_offsets has num_nets + 1 entries
 * delimiting each net's pins (0-based vertex ids). Null weight arrays mean
 * unit weights. */
hgp_status hgp_hypergraph_create(uint64_t num_vertices, uint64_t num_nets,
                                 const uint64_t* net_offsets, const uint32_t* pins,
                                 const int64_t* net_weights, const int64_t* vertex_weights,
                                 hgp_hypergraph** out);
void hgp_hypergraph_free(hgp_hypergraph* hg);

uint64_t hgp_hypergraph_num_vertices(const hgp_hypergraph* hg);
uint64_t hgp_hypergraph_num_nets(const hgp_hypergraph* hg);
uint64_t hgp_hypergraph_num_pins(const hgp_hypergraph* hg);

hgp_status hgp_partition(const hgp_hypergraph* hg, const hgp_config* cfg, hgp_result** out);
void hgp_result_free(hgp_result* result);

int64_t hgp_result_cut(const hgp_result* result);
double hgp_result_imbalance(const hgp_result* result);
int hgp_result_feasible(const hgp_result* result);
int32_t hgp_result_block_of(const hgp_result* result, uint64_t vertex);
hgp_status hgp_result_copy_blocks(const hgp_result* result, int32_t* out, size_t out_len);
hgp_status hgp_result_write_partition(const hgp_result* result, const char* path);

/* Recomputes the cut from scratch and compares it with the stored value. */
hgp_status hgp_result_verify(const hgp_hypergraph* hg, const hgp_result* result);

/* JSON run record; pass include_timings = 0 for byte-stable output. The
 * string is owned by the caller and released with hgp_string_free. */
hgp_status hgp_result_stats_json(const hgp_result* result, const char* instance_name,
                                 int include_timings, char** out_json);
void hgp_string_free(char* s);

/* Converters to the hgr format: matrix rows / CNF clauses become nets. */
hgp_status hgp_convert_mtx_to_hgr(const char* mtx_path, const char* hgr_path);
hgp_status hgp_convert_cnf_to_hgr(const char* cnf_path, const char* hgr_path);

#ifdef __cplusplus
}
#endif

#endif /* HGPART_H */
