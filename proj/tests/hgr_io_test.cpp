#include <doctest.h>

#include <sstream>

#include "io/hgr_io.hpp"
#include "test_util.hpp"

using namespace hgpart;
using namespace hgpart::io;

TEST_CASE("plain header with unit weights") {
  const auto hg = parse_hgr("3 4\n1 2\n2 3 4\n1 4\n");
  CHECK(hg.vertex_capacity() == 4);
  CHECK(hg.num_nets() == 3);
  CHECK(hg.net_weight(0) == 1);
  CHECK(hg.vertex_weight(0) == 1);
  CHECK(hg.net_size(1) == 3);
  // pins are 1-based in the file, 0-based in memory
  CHECK(hg.pins(0)[0] == 0);
  CHECK(hg.pins(0)[1] == 1);
}

TEST_CASE("fmt 11 carries both weight blocks") {
  const auto hg = parse_hgr("2 4 11\n5 1 2\n1 3 4\n1\n2\n3\n4\n");
  CHECK(hg.net_weight(0) == 5);
  CHECK(hg.net_weight(1) == 1);
  CHECK(hg.vertex_weight(0) == 1);
  CHECK(hg.vertex_weight(3) == 4);
}

TEST_CASE("fmt 1 and fmt 10 parse their single weight block") {
  const auto a = parse_hgr("1 2 1\n7 1 2\n");
  CHECK(a.net_weight(0) == 7);
  const auto b = parse_hgr("1 2 10\n1 2\n3\n4\n");
  CHECK(b.vertex_weight(0) == 3);
  CHECK(b.vertex_weight(1) == 4);
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("pin id zero") {
    CHECK_THROWS_WITH_AS(parse_hgr("3 4\n1 2\n2 3 4\n0 4\n"),
                         "line 4: pin id 0 out of range [1, 4]", ParseError);
  }
  SUBCASE("pin id past the vertex count") {
    CHECK_THROWS_WITH_AS(parse_hgr("3 4\n1 2\n2 3 5\n1 4\n"),
                         "line 3: pin id 5 out of range [1, 4]", ParseError);
  }
  SUBCASE("missing net lines") {
    CHECK_THROWS_AS(parse_hgr("3 4\n1 2\n"), ParseError);
  }
  SUBCASE("trailing garbage") {
    CHECK_THROWS_AS(parse_hgr("1 2\n1 2\n1 2\n"), ParseError);
  }
  SUBCASE("empty net") {
    CHECK_THROWS_AS(parse_hgr("1 2 1\n7\n"), ParseError);
  }
  SUBCASE("bad fmt code") {
    CHECK_THROWS_AS(parse_hgr("1 2 7\n1 2\n"), ParseError);
  }
  SUBCASE("non-numeric token") {
    CHECK_THROWS_AS(parse_hgr("1 2\n1 x\n"), ParseError);
  }
}

TEST_CASE("comments and blank tails are ignored") {
  const auto hg = parse_hgr("% a comment\n2 3\n% another\n1 2\n2 3\n\n");
  CHECK(hg.num_nets() == 2);
}

TEST_CASE("duplicate pins are dropped with a count") {
  LoadInfo info;
  const auto hg = parse_hgr("1 3\n1 2 2 1 3\n", &info);
  CHECK(info.duplicate_pins_removed == 2);
  CHECK(hg.net_size(0) == 3);
}

TEST_CASE("input single-node nets are removed and counted") {
  LoadInfo info;
  const auto hg = parse_hgr("3 3\n1\n2 3\n2\n", &info);
  CHECK(info.single_node_nets_removed == 2);
  CHECK(hg.num_nets() == 1);
  CHECK(hg.net_enabled(1));
  CHECK(!hg.net_enabled(0));
}

TEST_CASE("write_partition emits one block per line") {
  SUBCASE("two vertices in different blocks") {
    std::ostringstream out;
    const std::vector<std::int32_t> blocks{0, 1};
    write_partition(blocks, out);
    CHECK(out.str() == "0\n1\n");
  }
  SUBCASE("k=1 gives all-zero lines") {
    std::ostringstream out;
    const std::vector<std::int32_t> blocks{0, 0, 0};
    write_partition(blocks, out);
    CHECK(out.str() == "0\n0\n0\n");
  }
}

TEST_CASE("hgr writing round-trips structurally") {
  Rng rng(3);
  test::RandomInstanceOptions opt;
  opt.max_net_weight = 5;
  opt.max_vertex_weight = 4;
  Hypergraph hg = test::random_hypergraph(rng, opt);
  std::ostringstream first;
  write_hgr(hg, first);
  const auto reparsed = parse_hgr(first.str());
  std::ostringstream second;
  write_hgr(reparsed, second);
  CHECK(first.str() == second.str());
  CHECK(test::snapshot(hg) == test::snapshot(reparsed));
}

TEST_CASE("matrix market row-net conversion") {
  SUBCASE("general matrix with an empty row") {
    const std::string mtx =
        "%%MatrixMarket matrix coordinate real general\n"
        "3 4 4\n"
        "1 1 0.5\n"
        "1 3 2.0\n"
        "3 2 1.0\n"
        "3 4 -1\n";
    std::istringstream in(mtx);
    std::ostringstream out;
    const auto discarded = convert_mtx_to_hgr(in, out);
    CHECK(discarded == 1);  // row 2 is empty
    CHECK(out.str() == "2 4\n1 3\n2 4\n");
  }
  SUBCASE("symmetric entries mirror across the diagonal") {
    const std::string mtx =
        "%%MatrixMarket matrix coordinate pattern symmetric\n"
        "3 3 2\n"
        "2 1\n"
        "3 1\n";
    std::istringstream in(mtx);
    std::ostringstream out;
    convert_mtx_to_hgr(in, out);
    // row 1 = {2,3} via mirroring, row 2 = {1}, row 3 = {1}
    CHECK(out.str() == "3 3\n2 3\n1\n1\n");
  }
}

TEST_CASE("cnf conversion collapses complements and drops empty clauses") {
  const std::string cnf =
      "c a comment\n"
      "p cnf 4 3\n"
      "1 -2 0\n"
      "-1 1 3 0\n"
      "0\n";
  std::istringstream in(cnf);
  std::ostringstream out;
  const auto discarded = convert_cnf_to_hgr(in, out);
  CHECK(discarded == 1);
  CHECK(out.str() == "2 4\n1 2\n1 3\n");
}

TEST_CASE("converted files parse back as hypergraphs") {
  const std::string mtx =
      "%%MatrixMarket matrix coordinate integer general\n"
      "2 5 4\n"
      "1 1 3\n1 2 1\n2 4 2\n2 5 9\n";
  std::istringstream in(mtx);
  std::ostringstream out;
  convert_mtx_to_hgr(in, out);
  const auto hg = parse_hgr(out.str());
  CHECK(hg.vertex_capacity() == 5);
  CHECK(hg.num_nets() == 2);
}
