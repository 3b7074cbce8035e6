#ifndef HGPART_INITIAL_PARTITIONING_HPP
#define HGPART_INITIAL_PARTITIONING_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "hypergraph.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace hgpart {

struct PortfolioConfig {
  int runs_per_algorithm = 20;
  int tau = 5;  // SCLaP seed neighborhood size
  std::array<Weight, 2> target_weights{0, 0};
};

struct Candidate {
  std::vector<std::int8_t> assignment;  // per-capacity; -1 for disabled vertices
  Weight cut = 0;
  double load = 0.0;  // max_i c(V_i)/T_i; feasible iff <= 1 and no block empty
  bool feasible = false;
  int algorithm = -1;
  int run = -1;
};

inline constexpr int kPortfolioSize = 12;
const char* portfolio_algorithm_name(int index);

enum class GhgScore { kFm, kMaxNet, kMaxPin };
enum class GhgGrowth { kGlobal, kSequential, kRoundRobin };

Candidate random_bipartition(const Hypergraph& hg, const PortfolioConfig& cfg, Rng& rng);
Candidate bfs_bipartition(const Hypergraph& hg, const PortfolioConfig& cfg, Rng& rng);
Candidate greedy_hypergraph_growing(const Hypergraph& hg, const PortfolioConfig& cfg,
                                    GhgScore score, GhgGrowth growth, Rng& rng);
Candidate sclap_bipartition(const Hypergraph& hg, const PortfolioConfig& cfg, Rng& rng);

// Double-BFS: the last vertex of a BFS from a random start, then the last
// vertex of a BFS from there. Restarts cover disconnected inputs.
std::pair<VertexId, VertexId> pseudo_peripheral_pair(const Hypergraph& hg, Rng& rng);

// Growth scores of an unassigned vertex for block i, given the number of
// already assigned pins per net and block.
Weight fm_growth_score(const Hypergraph& hg, const std::vector<std::array<std::int32_t, 2>>& counts,
                       VertexId v, int i);
Weight max_net_score(const Hypergraph& hg, const std::vector<std::array<std::int32_t, 2>>& counts,
                     VertexId v, int i);
Weight max_pin_score(const Hypergraph& hg, const std::vector<std::array<std::int32_t, 2>>& counts,
                     VertexId v, int i);

struct PortfolioResult {
  Candidate winner;
  std::uint64_t candidates_evaluated = 0;
};

// Runs every algorithm runs_per_algorithm times. Among balanced candidates
// the lowest cut wins (ties: lower load, then earlier algorithm and run);
// with no balanced candidate the lowest load wins.
PortfolioResult run_portfolio(const Hypergraph& hg, const PortfolioConfig& cfg, Rng& rng);

}  // namespace hgpart

#endif
