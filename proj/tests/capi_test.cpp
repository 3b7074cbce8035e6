#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hgpart.h"

namespace {

std::filesystem::path temp_file(const char* name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("config defaults carry the tuned parameter values") {
  hgp_config cfg;
  hgp_config_defaults(&cfg);
  CHECK(cfg.coarsest_size == 320);
  CHECK(cfg.max_weight_scale == 3.25);
  CHECK(cfg.move_limit == 350);
  CHECK(cfg.sclap_tau == 5);
  CHECK(cfg.ip_runs == 20);
  CHECK(cfg.epsilon == 0.03);
  CHECK(cfg.k == 2);
  CHECK(cfg.lazy_rating == 1);
}

TEST_CASE("build, partition, inspect, write and verify through the C surface") {
  // two 4-cliques joined by nothing
  const std::vector<uint64_t> offsets{0, 4, 6, 10, 12};
  const std::vector<uint32_t> pins{0, 1, 2, 3, 0, 2, 4, 5, 6, 7, 5, 7};
  hgp_hypergraph* hg = nullptr;
  REQUIRE(hgp_hypergraph_create(8, 4, offsets.data(), pins.data(), nullptr, nullptr, &hg) ==
          HGP_OK);
  CHECK(hgp_hypergraph_num_vertices(hg) == 8);
  CHECK(hgp_hypergraph_num_nets(hg) == 4);
  CHECK(hgp_hypergraph_num_pins(hg) == 12);

  hgp_config cfg;
  hgp_config_defaults(&cfg);
  cfg.seed = 5;
  hgp_result* result = nullptr;
  REQUIRE(hgp_partition(hg, &cfg, &result) == HGP_OK);
  CHECK(hgp_result_cut(result) == 0);
  CHECK(hgp_result_feasible(result) == 1);
  CHECK(hgp_result_block_of(result, 0) == hgp_result_block_of(result, 1));
  CHECK(hgp_result_block_of(result, 0) != hgp_result_block_of(result, 4));

  std::vector<int32_t> blocks(8);
  REQUIRE(hgp_result_copy_blocks(result, blocks.data(), blocks.size()) == HGP_OK);
  CHECK(blocks[0] == hgp_result_block_of(result, 0));

  CHECK(hgp_result_verify(hg, result) == HGP_OK);

  const auto part_path = std::filesystem::temp_directory_path() / "capi_part.txt";
  REQUIRE(hgp_result_write_partition(result, part_path.string().c_str()) == HGP_OK);
  std::ifstream in(part_path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 8);

  hgp_result_free(result);
  hgp_hypergraph_free(hg);
  std::filesystem::remove(part_path);
}

TEST_CASE("parse errors surface a message and a parse status") {
  hgp_hypergraph* hg = nullptr;
  CHECK(hgp_hypergraph_parse_hgr("1 2\n0 2\n", &hg) == HGP_ERR_PARSE);
  CHECK(std::strstr(hgp_last_error(), "line 2") != nullptr);
  CHECK(hgp_hypergraph_read_hgr("/nonexistent/file.hgr", &hg) == HGP_ERR_IO);
}

TEST_CASE("invalid partition arguments report invalid-argument") {
  hgp_hypergraph* hg = nullptr;
  REQUIRE(hgp_hypergraph_parse_hgr("1 2\n1 2\n", &hg) == HGP_OK);
  hgp_config cfg;
  hgp_config_defaults(&cfg);
  cfg.k = 12;  // more blocks than vertices
  hgp_result* result = nullptr;
  CHECK(hgp_partition(hg, &cfg, &result) == HGP_ERR_INVALID_ARGUMENT);
  hgp_hypergraph_free(hg);
}

TEST_CASE("stats json is well formed and stable without timings") {
  hgp_hypergraph* hg = nullptr;
  REQUIRE(hgp_hypergraph_parse_hgr("3 4\n1 2\n2 3 4\n1 4\n", &hg) == HGP_OK);
  hgp_config cfg;
  hgp_config_defaults(&cfg);
  cfg.seed = 7;

  std::string first;
  for (int round = 0; round < 2; ++round) {
    hgp_result* result = nullptr;
    REQUIRE(hgp_partition(hg, &cfg, &result) == HGP_OK);
    char* json = nullptr;
    REQUIRE(hgp_result_stats_json(result, "tiny.hgr", 0, &json) == HGP_OK);
    const std::string text = json;
    hgp_string_free(json);
    hgp_result_free(result);
    CHECK(text.find("\"schema\"") != std::string::npos);
    CHECK(text.find("\"cut\"") != std::string::npos);
    CHECK(text.find("timings") == std::string::npos);
    if (round == 0) {
      first = text;
    } else {
      CHECK(text == first);
    }
  }

  // timings are opt-in
  hgp_result* result = nullptr;
  REQUIRE(hgp_partition(hg, &cfg, &result) == HGP_OK);
  char* json = nullptr;
  REQUIRE(hgp_result_stats_json(result, "tiny.hgr", 1, &json) == HGP_OK);
  CHECK(std::string(json).find("timings_ms") != std::string::npos);
  hgp_string_free(json);
  hgp_result_free(result);
  hgp_hypergraph_free(hg);
}

TEST_CASE("converters run end to end over files") {
  const auto mtx = temp_file("capi_in.mtx",
                             "%%MatrixMarket matrix coordinate real general\n"
                             "2 3 4\n1 1 1.0\n1 2 1.0\n2 3 1.0\n2 1 2.5\n");
  const auto cnf = temp_file("capi_in.cnf", "p cnf 3 2\n1 -2 0\n2 3 0\n");
  const auto out1 = std::filesystem::temp_directory_path() / "capi_out1.hgr";
  const auto out2 = std::filesystem::temp_directory_path() / "capi_out2.hgr";

  REQUIRE(hgp_convert_mtx_to_hgr(mtx.string().c_str(), out1.string().c_str()) == HGP_OK);
  REQUIRE(hgp_convert_cnf_to_hgr(cnf.string().c_str(), out2.string().c_str()) == HGP_OK);

  hgp_hypergraph* hg = nullptr;
  REQUIRE(hgp_hypergraph_read_hgr(out1.string().c_str(), &hg) == HGP_OK);
  CHECK(hgp_hypergraph_num_nets(hg) == 2);
  hgp_hypergraph_free(hg);

  for (const auto& p : {mtx, cnf, out1, out2}) std::filesystem::remove(p);
}
