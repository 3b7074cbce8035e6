#ifndef HGPART_PARTITIONER_HPP
#define HGPART_PARTITIONER_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coarsening.hpp"
#include "hypergraph.hpp"
#include "initial_partitioning.hpp"
#include "refinement.hpp"
#include "types.hpp"

namespace hgpart {

struct AlgoConfig {
  CoarseningConfig coarsening;
  int ip_runs_per_algorithm = 20;
  int sclap_tau = 5;
  RefinementConfig refinement;
};

struct BisectionContext {
  int k_l = 0;
  int k_h = 1;
  double epsilon_prime = 0.0;
  std::array<Weight, 2> target_weights{0, 0};
};

// Per-bisection imbalance budget: distributes the user epsilon over the
// remaining bisection levels so the assembled k-way partition stays
// epsilon-balanced. Negative results are clamped to zero and counted.
double adapt_epsilon(double epsilon, int k, int k_prime, Weight total_weight, Weight part_weight,
                     bool is_first, int* clamp_count = nullptr);

struct BisectionStats {
  int k_l = 0;
  int k_h = 0;
  double epsilon_prime = 0.0;
  std::array<Weight, 2> target_weights{0, 0};
  std::array<Weight, 2> block_weights{0, 0};
  Weight cut = 0;
  bool met_targets = false;
  std::int64_t input_vertices = 0;
  std::int64_t coarse_vertices = 0;
  std::int64_t contractions = 0;
  std::uint64_t rating_calls = 0;
  std::uint64_t ip_candidates = 0;
  std::string ip_winner;
  std::uint64_t fm_passes = 0;
  std::uint64_t fm_moves = 0;
  std::uint64_t fm_gain_computations = 0;
  std::uint64_t fm_monotonicity_violations = 0;
  double coarsening_ms = 0.0;
  double initial_ms = 0.0;
  double refinement_ms = 0.0;
  std::int64_t forced_moves = 0;  // vertex-count repairs for the recursion
};

struct PartitionResult {
  std::vector<std::int32_t> blocks;  // per input vertex
  Weight total_cut = 0;
  double imbalance = 0.0;
  bool feasible = false;
  int k = 1;
  std::vector<BisectionStats> bisections;
  int epsilon_clamps = 0;
  double total_ms = 0.0;
};

// Recursive bisection per the n-level pipeline: coarsen one pair at a time,
// pick the best portfolio bipartition of the coarsest hypergraph, then
// uncontract level by level with gain-cache repair and localized FM.
PartitionResult partition(const Hypergraph& hg, int k, double epsilon, const AlgoConfig& config,
                          std::uint64_t seed);

}  // namespace hgpart

#endif
