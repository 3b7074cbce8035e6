#include <doctest.h>

#include <set>

#include "initial_partitioning.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace hgpart;

namespace {

Hypergraph unit_chain(std::uint64_t n) {
  std::vector<std::vector<VertexId>> nets;
  for (VertexId v = 0; v + 1 < n; ++v) nets.push_back({v, v + 1});
  return Hypergraph(n, nets);
}

PortfolioConfig config_for(const Hypergraph& hg, double epsilon = 0.03) {
  PortfolioConfig cfg;
  const Weight target = static_cast<Weight>(
      std::floor((1.0 + epsilon) * static_cast<double>(ceil_div(hg.total_vertex_weight(), 2))));
  cfg.target_weights = {target, target};
  return cfg;
}

}  // namespace

TEST_CASE("random bipartition respects the weight caps") {
  SUBCASE("two unit vertices land one per block") {
    Hypergraph hg(2, {{0, 1}});
    auto cfg = config_for(hg, 0.0);
    Rng rng(1);
    const auto c = random_bipartition(hg, cfg, rng);
    CHECK(c.assignment[0] != c.assignment[1]);
    CHECK(c.feasible);
  }
  SUBCASE("a fixed seed reproduces the assignment") {
    Rng instance_rng(3);
    Hypergraph hg = test::random_hypergraph(instance_rng);
    auto cfg = config_for(hg);
    Rng rng_a(42), rng_b(42);
    CHECK(random_bipartition(hg, cfg, rng_a).assignment ==
          random_bipartition(hg, cfg, rng_b).assignment);
  }
  SUBCASE("100 unit vertices against targets 52/52") {
    std::vector<std::vector<VertexId>> nets{{0, 1}};
    Hypergraph hg(100, nets);
    PortfolioConfig cfg;
    cfg.target_weights = {52, 52};
    Rng rng(7);
    const auto c = random_bipartition(hg, cfg, rng);
    std::array<Weight, 2> w{0, 0};
    for (VertexId v = 0; v < 100; ++v) w[c.assignment[v]] += 1;
    CHECK(w[0] <= 52);
    CHECK(w[1] <= 52);
  }
}

TEST_CASE("bfs bipartition grows a contiguous prefix on a chain") {
  Hypergraph hg = unit_chain(20);
  auto cfg = config_for(hg, 0.0);
  Rng rng(5);
  const auto c = bfs_bipartition(hg, cfg, rng);
  // block 0 must be a contiguous run of chain positions
  std::vector<VertexId> zero;
  for (VertexId v = 0; v < 20; ++v) {
    if (c.assignment[v] == 0) zero.push_back(v);
  }
  REQUIRE(!zero.empty());
  for (std::size_t i = 1; i < zero.size(); ++i) CHECK(zero[i] == zero[i - 1] + 1);
}

TEST_CASE("bfs bipartition restarts on disconnected inputs") {
  // two components: 0-1-2 and 3-4-5; generous target so BFS must restart
  Hypergraph hg(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  PortfolioConfig cfg;
  cfg.target_weights = {5, 5};
  Rng rng(11);
  const auto c = bfs_bipartition(hg, cfg, rng);
  Weight w0 = 0;
  for (VertexId v = 0; v < 6; ++v) w0 += c.assignment[v] == 0 ? 1 : 0;
  CHECK(w0 == 5);  // fills block 0 to its target across components
}

TEST_CASE("bfs bipartition of two vertices and one net") {
  Hypergraph hg(2, {{0, 1}});
  auto cfg = config_for(hg, 0.0);
  Rng rng(2);
  const auto c = bfs_bipartition(hg, cfg, rng);
  CHECK(c.assignment[0] != c.assignment[1]);
}

TEST_CASE("pseudo peripheral pair") {
  SUBCASE("path endpoints are found") {
    Hypergraph hg = unit_chain(9);
    Rng rng(13);
    const auto [a, b] = pseudo_peripheral_pair(hg, rng);
    CHECK(((a == 0 && b == 8) || (a == 8 && b == 0)));
  }
  SUBCASE("complete hypergraph yields any distinct pair") {
    Hypergraph hg(5, {{0, 1, 2, 3, 4}});
    Rng rng(17);
    const auto [a, b] = pseudo_peripheral_pair(hg, rng);
    CHECK(a != b);
  }
  SUBCASE("two components are still covered") {
    Hypergraph hg(4, {{0, 1}, {2, 3}});
    Rng rng(19);
    const auto [a, b] = pseudo_peripheral_pair(hg, rng);
    CHECK(a != b);
  }
}

TEST_CASE("growth scores match their definitions") {
  // v = 0 with nets {0,1} and {0,2}; 1 and 2 already assigned to block 0
  Hypergraph hg(3, {{0, 1}, {0, 2}});
  std::vector<std::array<std::int32_t, 2>> counts(hg.net_capacity(), {0, 0});
  counts[0][0] = 1;
  counts[1][0] = 1;
  CHECK(max_pin_score(hg, counts, 0, 0) == 2);
  CHECK(max_net_score(hg, counts, 0, 0) == 2);
  // both nets become internal on assignment
  CHECK(fm_growth_score(hg, counts, 0, 0) == 2);

  // fm score for a single net that would become internal
  Hypergraph hg2(2, {{0, 1}});
  std::vector<std::array<std::int32_t, 2>> counts2(1, {0, 0});
  counts2[0][0] = 1;
  CHECK(fm_growth_score(hg2, counts2, 0, 0) == 1);
  // and for an untouched net: assigning would cut it off its future block
  counts2[0][0] = 0;
  CHECK(fm_growth_score(hg2, counts2, 0, 0) == -1);
}

TEST_CASE("ghg sequential fills block 0 first when targets allow everything") {
  Hypergraph hg = unit_chain(12);
  PortfolioConfig cfg;
  cfg.target_weights = {1'000, 1'000};  // effectively unlimited
  Rng rng(23);
  const auto c =
      greedy_hypergraph_growing(hg, cfg, GhgScore::kFm, GhgGrowth::kSequential, rng);
  // seed 1 takes one vertex; everything reachable first went to block 0
  std::int64_t n0 = 0;
  for (VertexId v = 0; v < 12; ++v) n0 += c.assignment[v] == 0 ? 1 : 0;
  CHECK(n0 == 11);
}

TEST_CASE("ghg respects targets and assigns every vertex") {
  Rng instance_rng(29);
  for (const auto growth : {GhgGrowth::kGlobal, GhgGrowth::kSequential, GhgGrowth::kRoundRobin}) {
    for (const auto score : {GhgScore::kFm, GhgScore::kMaxNet, GhgScore::kMaxPin}) {
      Hypergraph hg = test::random_hypergraph(instance_rng);
      auto cfg = config_for(hg, 0.1);
      Rng rng(31);
      const auto c = greedy_hypergraph_growing(hg, cfg, score, growth, rng);
      std::array<Weight, 2> w{0, 0};
      for (VertexId v = 0; v < hg.vertex_capacity(); ++v) {
        REQUIRE(c.assignment[v] >= 0);
        w[c.assignment[v]] += hg.vertex_weight(v);
      }
      CHECK(c.cut == oracle::recompute_cut(hg, c.assignment));
      if (c.feasible) {
        CHECK(w[0] <= cfg.target_weights[0]);
        CHECK(w[1] <= cfg.target_weights[1]);
      }
    }
  }
}

TEST_CASE("sclap floods two cliques and cuts the bridge") {
  // cliques {0..3} and {4..7} joined by one bridge net
  Hypergraph hg(8, {{0, 1, 2, 3}, {0, 1}, {2, 3}, {4, 5, 6, 7}, {4, 5}, {6, 7}, {3, 4}});
  auto cfg = config_for(hg, 0.1);
  Rng rng(37);
  const auto c = sclap_bipartition(hg, cfg, rng);
  CHECK(c.assignment[0] == c.assignment[1]);
  CHECK(c.assignment[0] == c.assignment[2]);
  CHECK(c.assignment[0] == c.assignment[3]);
  CHECK(c.assignment[4] == c.assignment[5]);
  CHECK(c.assignment[4] == c.assignment[6]);
  CHECK(c.assignment[4] == c.assignment[7]);
  CHECK(c.assignment[0] != c.assignment[4]);
  CHECK(c.cut == 1);
}

TEST_CASE("sclap clamps tau to the available neighborhood") {
  Hypergraph hg(3, {{0, 1, 2}});
  PortfolioConfig cfg;
  cfg.tau = 50;
  cfg.target_weights = {2, 2};
  Rng rng(41);
  const auto c = sclap_bipartition(hg, cfg, rng);
  for (VertexId v = 0; v < 3; ++v) CHECK(c.assignment[v] >= 0);
}

TEST_CASE("sclap is deterministic for a fixed seed") {
  Rng instance_rng(43);
  Hypergraph hg = test::random_hypergraph(instance_rng);
  auto cfg = config_for(hg);
  Rng rng_a(4), rng_b(4);
  CHECK(sclap_bipartition(hg, cfg, rng_a).assignment ==
        sclap_bipartition(hg, cfg, rng_b).assignment);
}

TEST_CASE("portfolio evaluates 12 algorithms x runs and selects by rule") {
  Rng instance_rng(47);
  Hypergraph hg = test::random_hypergraph(instance_rng);
  auto cfg = config_for(hg, 0.1);
  cfg.runs_per_algorithm = 20;
  Rng rng(6);
  const auto result = run_portfolio(hg, cfg, rng);
  CHECK(result.candidates_evaluated == 240);
  CHECK(result.winner.feasible);
  CHECK(result.winner.cut == oracle::recompute_cut(hg, result.winner.assignment));

  // selection is reproducible
  Rng rng2(6);
  const auto again = run_portfolio(hg, cfg, rng2);
  CHECK(again.winner.assignment == result.winner.assignment);
  CHECK(again.winner.algorithm == result.winner.algorithm);
}

TEST_CASE("portfolio returns a zero-cut split when one exists") {
  // two disjoint cliques of equal size
  Hypergraph hg(8, {{0, 1, 2, 3}, {0, 2}, {1, 3}, {4, 5, 6, 7}, {4, 6}, {5, 7}});
  auto cfg = config_for(hg, 0.0);
  cfg.runs_per_algorithm = 5;
  Rng rng(8);
  const auto result = run_portfolio(hg, cfg, rng);
  CHECK(result.winner.cut == 0);
  CHECK(result.winner.feasible);
}

TEST_CASE("portfolio falls back to the least imbalanced candidate") {
  // one vertex of weight 10 forces imbalance against tiny targets
  Hypergraph hg(3, {{0, 1}, {1, 2}}, {}, {10, 1, 1});
  PortfolioConfig cfg;
  cfg.runs_per_algorithm = 3;
  cfg.target_weights = {6, 6};  // 10 never fits
  Rng rng(10);
  const auto result = run_portfolio(hg, cfg, rng);
  CHECK(!result.winner.feasible);
  // least achievable load: heavy vertex alone in one block
  CHECK(result.winner.load == doctest::Approx(10.0 / 6.0));
}

TEST_CASE("algorithm names cover the portfolio") {
  std::set<std::string> names;
  for (int i = 0; i < kPortfolioSize; ++i) names.insert(portfolio_algorithm_name(i));
  CHECK(names.size() == 12);
}
