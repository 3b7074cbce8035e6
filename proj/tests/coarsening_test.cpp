#include <doctest.h>

#include <vector>

#include "coarsening.hpp"
#include "test_util.hpp"

using namespace hgpart;

namespace {

Hypergraph unit_chain(std::uint64_t n) {
  std::vector<std::vector<VertexId>> nets;
  for (VertexId v = 0; v + 1 < n; ++v) nets.push_back({v, v + 1});
  return Hypergraph(n, nets);
}

}  // namespace

TEST_CASE("rating evaluates the weight-scaled heavy-edge score") {
  Rng rng(1);
  SUBCASE("one shared unit net of size two scores 1.0") {
    Hypergraph hg(2, {{0, 1}});
    const auto r = rate(hg, 0, 100.0, rng);
    REQUIRE(r.has_value());
    CHECK(r->score == doctest::Approx(1.0));
    CHECK(r->partner == 1);
  }
  SUBCASE("weighted example evaluates to 1.0") {
    // shared nets: size 3 with weight 2, size 2 with weight 1; c(u)=1, c(v)=2
    Hypergraph hg(4, {{0, 1, 2}, {0, 1}}, {2, 1}, {1, 2, 1, 1});
    const auto r = rate(hg, 0, 100.0, rng);
    REQUIRE(r.has_value());
    CHECK(r->partner == 1);
    CHECK(r->score == doctest::Approx(1.0));
  }
  SUBCASE("isolated vertex rates none") {
    Hypergraph hg(2, {{1}});
    CHECK(!rate(hg, 0, 100.0, rng).has_value());
  }
  SUBCASE("overweight partners are skipped") {
    Hypergraph hg(3, {{0, 1}, {0, 2}}, {}, {1, 50, 1});
    const auto r = rate(hg, 0, 10.0, rng);
    REQUIRE(r.has_value());
    CHECK(r->partner == 2);
  }
  SUBCASE("merged weight past c_max is a fallback only") {
    // both partners fit individually; merging with 1 stays under c_max
    Hypergraph hg(3, {{0, 1}, {0, 1}, {0, 2}}, {}, {5, 5, 1});
    const auto r = rate(hg, 0, 8.0, rng);
    REQUIRE(r.has_value());
    CHECK(r->partner == 2);  // 0+1 would weigh 10 > 8 despite the higher score
  }
}

TEST_CASE("a unit chain coarsens to exactly the threshold") {
  Hypergraph hg = unit_chain(1000);
  Rng rng(3);
  CoarseningConfig cfg;
  cfg.coarsest_size = 320;
  const auto result = coarsen(hg, cfg, rng);
  CHECK(result.levels.size() == 680);
  CHECK(hg.num_vertices() == 320);
}

TEST_CASE("no contraction happens at or below the threshold") {
  Hypergraph hg = unit_chain(100);
  Rng rng(3);
  CoarseningConfig cfg;
  cfg.coarsest_size = 320;
  const auto result = coarsen(hg, cfg, rng);
  CHECK(result.levels.empty());
  CHECK(hg.num_vertices() == 100);
}

TEST_CASE("c_max follows the scaled ceiling formula") {
  // c(V) = 1000, t = 320, s = 3.25: c_max = 3.25 * ceil(1000/320) = 13
  Hypergraph hg = unit_chain(1000);
  Rng rng(9);
  CoarseningConfig cfg;
  cfg.coarsest_size = 320;
  cfg.weight_scale = 3.25;
  Coarsener coarsener(hg, cfg, rng);
  CHECK(coarsener.c_max() == doctest::Approx(13.0));
}

TEST_CASE("vertices heavier than c_max never participate") {
  // c(V) = 16, t = 4, s = 1.0 -> c_max = 4
  Hypergraph hg(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}},
                {}, {5, 1, 1, 1, 1, 2, 2, 3});
  Rng rng(11);
  CoarseningConfig cfg;
  cfg.coarsest_size = 4;
  cfg.weight_scale = 1.0;
  const auto result = coarsen(hg, cfg, rng);
  for (const auto& level : result.levels) {
    CHECK(level.memento.u != 0);
    CHECK(level.memento.v != 0);  // weight 5 > c_max
  }
  for (VertexId v = 0; v < hg.vertex_capacity(); ++v) {
    if (hg.vertex_enabled(v)) CHECK(hg.vertex_weight(v) <= 2 * 4);
  }
}

TEST_CASE("full strategy extracts fresh scores") {
  Rng rng(21);
  Hypergraph hg = test::random_hypergraph(rng);
  CoarseningConfig cfg;
  cfg.coarsest_size = 2;
  cfg.lazy = false;
  Rng run_rng(5);
  Coarsener coarsener(hg, cfg, run_rng);
  coarsener.on_extract = [&](VertexId u, VertexId, double score) {
    Rng probe(0);  // the score does not depend on tie-break randomness
    const auto fresh = rate(hg, u, coarsener.c_max(), probe);
    REQUIRE(fresh.has_value());
    CHECK(fresh->score == doctest::Approx(score));
  };
  while (coarsener.step()) {
  }
}

TEST_CASE("both strategies reduce the vertex count by one per level") {
  for (const bool lazy : {false, true}) {
    Rng rng(31);
    Hypergraph hg = test::random_hypergraph(rng);
    const auto before = hg.num_vertices();
    const auto weight_before = hg.total_vertex_weight();
    CoarseningConfig cfg;
    cfg.coarsest_size = 2;
    cfg.lazy = lazy;
    Rng run_rng(8);
    const auto result = coarsen(hg, cfg, run_rng);
    CHECK(before - hg.num_vertices() == static_cast<std::int64_t>(result.levels.size()));
    CHECK(hg.total_vertex_weight() == weight_before);
    CHECK((hg.num_vertices() == 2 || hg.num_vertices() > 2));  // stop rule or empty queue
    hg.check_integrity();
  }
}

TEST_CASE("lazy strategy does not rate more often than full") {
  Rng instance_rng(17);
  int lazy_wins = 0;
  for (int trial = 0; trial < 10; ++trial) {
    test::RandomInstanceOptions opt;
    opt.min_vertices = 40;
    opt.max_vertices = 120;
    opt.min_nets = 60;
    opt.max_nets = 200;
    Hypergraph base = test::random_hypergraph(instance_rng, opt);
    CoarseningConfig cfg;
    cfg.coarsest_size = 8;

    Hypergraph full_hg = base;
    cfg.lazy = false;
    Rng full_rng(4);
    const auto full = coarsen(full_hg, cfg, full_rng);

    Hypergraph lazy_hg = base;
    cfg.lazy = true;
    Rng lazy_rng(4);
    const auto lazy = coarsen(lazy_hg, cfg, lazy_rng);

    if (lazy.rating_calls <= full.rating_calls) ++lazy_wins;
  }
  CHECK(lazy_wins >= 9);
}

TEST_CASE("coarsening journals replay to the original hypergraph") {
  Rng rng(55);
  for (const bool lazy : {false, true}) {
    Hypergraph hg = test::random_hypergraph(rng);
    const auto original = test::snapshot(hg);
    CoarseningConfig cfg;
    cfg.coarsest_size = 2;
    cfg.lazy = lazy;
    Rng run_rng(6);
    const auto result = coarsen(hg, cfg, run_rng);
    for (auto it = result.levels.rbegin(); it != result.levels.rend(); ++it) {
      hg.restore_removed_nets(it->removals);
      hg.uncontract(it->memento);
    }
    CHECK(test::snapshot(hg) == original);
  }
}
