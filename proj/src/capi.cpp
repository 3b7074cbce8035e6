#include "hgpart.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "io/hgr_io.hpp"
#include "oracle.hpp"
#include "partitioner.hpp"
#include "stats.hpp"
#include "types.hpp"

struct hgp_hypergraph {
  hgpart::Hypergraph hg;
  hgpart::io::LoadInfo load;
};

struct hgp_result {
  hgpart::RunStats stats;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
hgp_status guarded(F&& body) {
  try {
    return body();
  } catch (const hgpart::ParseError& e) {
    g_last_error = e.what();
    return HGP_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return HGP_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HGP_ERR_INTERNAL;
  }
}

hgp_status fail(hgp_status status, const char* message) {
  g_last_error = message;
  return status;
}

}  // namespace

extern "C" {

void hgp_config_defaults(hgp_config* cfg) {
  cfg->seed = 0;
  cfg->k = 2;
  cfg->epsilon = 0.03;
  cfg->coarsest_size = 320;
  cfg->max_weight_scale = 3.25;
  cfg->move_limit = 350;
  cfg->sclap_tau = 5;
  cfg->ip_runs = 20;
  cfg->lazy_rating = 1;
}

const char* hgp_last_error(void) { return g_last_error.c_str(); }

hgp_status hgp_hypergraph_read_hgr(const char* path, hgp_hypergraph** out) {
  if (path == nullptr || out == nullptr) return fail(HGP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(HGP_ERR_IO, ("cannot open " + std::string(path)).c_str());
    std::ostringstream buf;
    buf << in.rdbuf();
    hgpart::io::LoadInfo info;
    auto hg = hgpart::io::parse_hgr(buf.str(), &info);
    *out = new hgp_hypergraph{std::move(hg), info};
    return HGP_OK;
  });
}

hgp_status hgp_hypergraph_parse_hgr(const char* text, hgp_hypergraph** out) {
  if (text == nullptr || out == nullptr) return fail(HGP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    hgpart::io::LoadInfo info;
    auto hg = hgpart::io::parse_hgr(text, &info);
    *out = new hgp_hypergraph{std::move(hg), info};
    return HGP_OK;
  });
}

hgp_status hgp_hypergraph_create(uint64_t num_vertices, uint64_t num_nets,
                                 const uint64_t* net_offsets, const uint32_t* pins,
                                 const int64_t* net_weights, const int64_t* vertex_weights,
                                 hgp_hypergraph** out) {
  if (out == nullptr || (num_nets > 0 && (net_offsets == nullptr || pins == nullptr))) {
    return fail(HGP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<std::vector<hgpart::VertexId>> nets(num_nets);
    for (uint64_t e = 0; e < num_nets; ++e) {
      if (net_offsets[e + 1] < net_offsets[e]) {
        return fail(HGP_ERR_INVALID_ARGUMENT, "net offsets must be non-decreasing");
      }
      nets[e].assign(pins + net_offsets[e], pins + net_offsets[e + 1]);
    }
    std::vector<hgpart::Weight> nw;
    if (net_weights != nullptr) nw.assign(net_weights, net_weights + num_nets);
    std::vector<hgpart::Weight> vw;
    if (vertex_weights != nullptr) vw.assign(vertex_weights, vertex_weights + num_vertices);
    auto hg = hgpart::Hypergraph(num_vertices, nets, nw, vw);
    *out = new hgp_hypergraph{std::move(hg), {}};
    return HGP_OK;
  });
}

void hgp_hypergraph_free(hgp_hypergraph* hg) { delete hg; }

uint64_t hgp_hypergraph_num_vertices(const hgp_hypergraph* hg) {
  return static_cast<uint64_t>(hg->hg.num_vertices());
}
uint64_t hgp_hypergraph_num_nets(const hgp_hypergraph* hg) {
  return static_cast<uint64_t>(hg->hg.num_nets());
}
uint64_t hgp_hypergraph_num_pins(const hgp_hypergraph* hg) {
  return static_cast<uint64_t>(hg->hg.num_pins());
}

hgp_status hgp_partition(const hgp_hypergraph* hg, const hgp_config* cfg, hgp_result** out) {
  if (hg == nullptr || cfg == nullptr || out == nullptr) {
    return fail(HGP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    hgpart::AlgoConfig config;
    config.coarsening.coarsest_size = cfg->coarsest_size;
    config.coarsening.weight_scale = cfg->max_weight_scale;
    config.coarsening.lazy = cfg->lazy_rating != 0;
    config.refinement.move_limit = cfg->move_limit;
    config.sclap_tau = cfg->sclap_tau;
    config.ip_runs_per_algorithm = cfg->ip_runs;

    auto result = new hgp_result;
    result->stats.k = cfg->k;
    result->stats.epsilon = cfg->epsilon;
    result->stats.seed = cfg->seed;
    result->stats.config = config;
    result->stats.load = hg->load;
    try {
      result->stats.result = hgpart::partition(hg->hg, cfg->k, cfg->epsilon, config, cfg->seed);
    } catch (...) {
      delete result;
      throw;
    }
    *out = result;
    return HGP_OK;
  });
}

void hgp_result_free(hgp_result* result) { delete result; }

int64_t hgp_result_cut(const hgp_result* result) { return result->stats.result.total_cut; }
double hgp_result_imbalance(const hgp_result* result) { return result->stats.result.imbalance; }
int hgp_result_feasible(const hgp_result* result) { return result->stats.result.feasible ? 1 : 0; }

int32_t hgp_result_block_of(const hgp_result* result, uint64_t vertex) {
  const auto& blocks = result->stats.result.blocks;
  if (vertex >= blocks.size()) return -1;
  return blocks[vertex];
}

hgp_status hgp_result_copy_blocks(const hgp_result* result, int32_t* out, size_t out_len) {
  if (result == nullptr || out == nullptr) return fail(HGP_ERR_INVALID_ARGUMENT, "null argument");
  const auto& blocks = result->stats.result.blocks;
  if (out_len < blocks.size()) return fail(HGP_ERR_INVALID_ARGUMENT, "output buffer too small");
  std::memcpy(out, blocks.data(), blocks.size() * sizeof(int32_t));
  return HGP_OK;
}

hgp_status hgp_result_write_partition(const hgp_result* result, const char* path) {
  if (result == nullptr || path == nullptr) return fail(HGP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    hgpart::io::write_partition_file(result->stats.result.blocks, path);
    return HGP_OK;
  });
}

hgp_status hgp_result_verify(const hgp_hypergraph* hg, const hgp_result* result) {
  if (hg == nullptr || result == nullptr) return fail(HGP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& blocks = result->stats.result.blocks;
    if (blocks.size() != hg->hg.vertex_capacity()) {
      return fail(HGP_ERR_INVALID_ARGUMENT, "result does not match this hypergraph");
    }
    hgpart::Weight cut = 0;
    for (hgpart::NetId e = 0; e < hg->hg.net_capacity(); ++e) {
      if (!hg->hg.net_enabled(e)) continue;
      int first = -1;
      for (hgpart::VertexId p : hg->hg.pins(e)) {
        if (first == -1) {
          first = blocks[p];
        } else if (blocks[p] != first) {
          cut += hg->hg.net_weight(e);
          break;
        }
      }
    }
    if (cut != result->stats.result.total_cut) {
      return fail(HGP_ERR_INTERNAL, "stored cut does not match recomputation");
    }
    return HGP_OK;
  });
}

hgp_status hgp_result_stats_json(const hgp_result* result, const char* instance_name,
                                 int include_timings, char** out_json) {
  if (result == nullptr || out_json == nullptr) {
    return fail(HGP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    hgpart::RunStats stats = result->stats;
    stats.instance = instance_name != nullptr ? instance_name : "";
    const std::string json = hgpart::stats_to_json(stats, include_timings != 0);
    char* buf = static_cast<char*>(std::malloc(json.size() + 1));
    if (buf == nullptr) return fail(HGP_ERR_INTERNAL, "out of memory");
    std::memcpy(buf, json.c_str(), json.size() + 1);
    *out_json = buf;
    return HGP_OK;
  });
}

void hgp_string_free(char* s) { std::free(s); }

hgp_status hgp_convert_mtx_to_hgr(const char* mtx_path, const char* hgr_path) {
  if (mtx_path == nullptr || hgr_path == nullptr) {
    return fail(HGP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::ifstream in(mtx_path, std::ios::binary);
    if (!in) return fail(HGP_ERR_IO, ("cannot open " + std::string(mtx_path)).c_str());
    std::ofstream out(hgr_path, std::ios::binary);
    if (!out) return fail(HGP_ERR_IO, ("cannot open " + std::string(hgr_path)).c_str());
    hgpart::io::convert_mtx_to_hgr(in, out);
    return HGP_OK;
  });
}

hgp_status hgp_convert_cnf_to_hgr(const char* cnf_path, const char* hgr_path) {
  if (cnf_path == nullptr || hgr_path == nullptr) {
    return fail(HGP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::ifstream in(cnf_path, std::ios::binary);
    if (!in) return fail(HGP_ERR_IO, ("cannot open " + std::string(cnf_path)).c_str());
    std::ofstream out(hgr_path, std::ios::binary);
    if (!out) return fail(HGP_ERR_IO, ("cannot open " + std::string(hgr_path)).c_str());
    hgpart::io::convert_cnf_to_hgr(in, out);
    return HGP_OK;
  });
}

}  // extern "C"
