#include "partitioner.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>

#include "oracle.hpp"
#include "partition_state.hpp"
#include "rng.hpp"

namespace hgpart {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

int ceil_log2(int k) {
  int bits = 0;
  int value = 1;
  while (value < k) {
    value *= 2;
    ++bits;
  }
  return bits;
}

struct GlobalContext {
  double epsilon;
  int k;
  Weight total_weight;
  Weight final_block_bound;  // (1+eps) * ceil(c(V)/k), floored
  const AlgoConfig* config;
  std::uint64_t seed;
  std::uint64_t node_counter = 0;
  int epsilon_clamps = 0;
};

// One side gets floor(k/2) blocks, the other ceil(k/2). A side that ends up
// as a single final block is additionally capped by the k-way bound; the
// rounded-up share alone can exceed it on small weights.
std::array<Weight, 2> bisection_targets(double epsilon_prime, int k, Weight part_weight,
                                        Weight final_block_bound) {
  const Weight low = static_cast<Weight>(k / 2);
  const Weight high = static_cast<Weight>(k - k / 2);
  const auto scale = [&](Weight share) {
    const Weight ideal = ceil_div(share * part_weight, static_cast<Weight>(k));
    Weight target =
        static_cast<Weight>(std::floor((1.0 + epsilon_prime) * static_cast<double>(ideal)));
    if (share == 1) target = std::min(target, final_block_bound);
    return target;
  };
  return {scale(low), scale(high)};
}

struct BisectionOutcome {
  std::vector<std::int8_t> assignment;
  Weight cut = 0;
};

BisectionOutcome bisect(Hypergraph& hg, const BisectionContext& ctx, const AlgoConfig& config,
                        Rng& rng, BisectionStats& stats) {
  stats.input_vertices = hg.num_vertices();
  stats.epsilon_prime = ctx.epsilon_prime;
  stats.target_weights = ctx.target_weights;

  auto t0 = std::chrono::steady_clock::now();
  CoarseningResult journal = coarsen(hg, config.coarsening, rng);
  stats.coarsening_ms = elapsed_ms(t0);
  stats.contractions = static_cast<std::int64_t>(journal.levels.size());
  stats.coarse_vertices = hg.num_vertices();
  stats.rating_calls = journal.rating_calls;

  t0 = std::chrono::steady_clock::now();
  PortfolioConfig pcfg;
  pcfg.runs_per_algorithm = config.ip_runs_per_algorithm;
  pcfg.tau = config.sclap_tau;
  pcfg.target_weights = ctx.target_weights;
  PortfolioResult portfolio = run_portfolio(hg, pcfg, rng);
  stats.initial_ms = elapsed_ms(t0);
  stats.ip_candidates = portfolio.candidates_evaluated;
  stats.ip_winner = portfolio_algorithm_name(portfolio.winner.algorithm);

  t0 = std::chrono::steady_clock::now();
  PartitionState state(hg, portfolio.winner.assignment, ctx.target_weights);
  GainCache cache(hg.vertex_capacity());
  TwoWayFm fm(hg, state, cache, config.refinement, rng);

  for (auto level = journal.levels.rbegin(); level != journal.levels.rend(); ++level) {
    hg.restore_removed_nets(level->removals);
    for (auto rec = level->removals.rbegin(); rec != level->removals.rend(); ++rec) {
      state.on_net_restored(rec->net);
    }
    const auto [u, v] = hg.uncontract(level->memento);
    state.on_uncontract(u, v);
    cache.repair_after_uncontraction(hg, state, u, v);
    fm.refine(u, v);
  }
  stats.refinement_ms = elapsed_ms(t0);
  stats.fm_passes = fm.passes();
  stats.fm_moves = fm.moves();
  stats.fm_gain_computations = cache.gain_computations();
  stats.fm_monotonicity_violations = fm.monotonicity_violations();

  BisectionOutcome out;
  out.cut = state.cut();
  out.assignment.assign(hg.vertex_capacity(), -1);
  for (VertexId v : hg.enabled_vertices()) {
    out.assignment[v] = static_cast<std::int8_t>(state.block_of(v));
  }
  stats.block_weights = {state.block_weight(0), state.block_weight(1)};
  stats.met_targets = state.feasible();
  return out;
}

// Moves the lightest vertices over until each side can host its share of
// blocks. Only fires on degenerate inputs; keeps cut bookkeeping exact.
void ensure_vertex_counts(const Hypergraph& hg, std::vector<std::int8_t>& assignment, Weight& cut,
                          int need0, int need1, BisectionStats& stats) {
  std::array<std::vector<VertexId>, 2> members;
  for (VertexId v : hg.enabled_vertices()) {
    members[static_cast<std::size_t>(assignment[v])].push_back(v);
  }
  const auto need = std::array<int, 2>{need0, need1};
  for (int side = 0; side < 2; ++side) {
    auto& have = members[static_cast<std::size_t>(side)];
    auto& donor = members[static_cast<std::size_t>(1 - side)];
    while (static_cast<int>(have.size()) < need[static_cast<std::size_t>(side)]) {
      auto lightest = std::min_element(donor.begin(), donor.end(), [&](VertexId a, VertexId b) {
        return hg.vertex_weight(a) < hg.vertex_weight(b) ||
               (hg.vertex_weight(a) == hg.vertex_weight(b) && a < b);
      });
      const VertexId moved = *lightest;
      donor.erase(lightest);
      assignment[moved] = static_cast<std::int8_t>(side);
      have.push_back(moved);
      ++stats.forced_moves;
    }
  }
  if (stats.forced_moves > 0) cut = oracle::recompute_cut(hg, assignment);
}

Weight partition_recurse(const Hypergraph& hg, const std::vector<VertexId>& to_original, int k_l,
                         int k_h, bool is_first, GlobalContext& g,
                         std::vector<std::int32_t>& blocks,
                         std::vector<BisectionStats>& all_stats) {
  const int k = k_h - k_l + 1;
  if (k == 1) {
    for (VertexId v : hg.enabled_vertices()) {
      blocks[to_original[v]] = k_l;
    }
    return 0;
  }

  const std::uint64_t node_id = g.node_counter++;
  Rng rng(splitmix64(g.seed) ^ splitmix64(node_id * 0x9e3779b97f4a7c15ULL + 1));

  BisectionContext ctx;
  ctx.k_l = k_l;
  ctx.k_h = k_h;
  ctx.epsilon_prime = adapt_epsilon(g.epsilon, g.k, k, g.total_weight, hg.total_vertex_weight(),
                                    is_first, &g.epsilon_clamps);
  ctx.target_weights =
      bisection_targets(ctx.epsilon_prime, k, hg.total_vertex_weight(), g.final_block_bound);

  BisectionStats stats;
  stats.k_l = k_l;
  stats.k_h = k_h;
  Hypergraph working = hg;
  BisectionOutcome outcome = bisect(working, ctx, *g.config, rng, stats);
  ensure_vertex_counts(working, outcome.assignment, outcome.cut, k / 2, k - k / 2, stats);
  stats.cut = outcome.cut;

  PartitionState final_state(working, outcome.assignment, ctx.target_weights);
  auto [left, right] = section_hypergraphs(working, final_state);
  all_stats.push_back(std::move(stats));

  // map section ids back to the original hypergraph
  for (auto* section : {&left, &right}) {
    for (VertexId& parent : section->to_parent) parent = to_original[parent];
  }

  Weight cut = outcome.cut;
  cut += partition_recurse(left.hg, left.to_parent, k_l, k_l + k / 2 - 1, false, g, blocks,
                           all_stats);
  cut += partition_recurse(right.hg, right.to_parent, k_l + k / 2, k_h, false, g, blocks,
                           all_stats);
  return cut;
}

}  // namespace

double adapt_epsilon(double epsilon, int k, int k_prime, Weight total_weight, Weight part_weight,
                     bool is_first, int* clamp_count) {
  double eps_prime;
  if (is_first) {
    eps_prime = std::pow(1.0 + epsilon, 1.0 / ceil_log2(k)) - 1.0;
  } else {
    const double ratio = (1.0 + epsilon) * (static_cast<double>(k_prime) *
                                            static_cast<double>(total_weight)) /
                         (static_cast<double>(k) * static_cast<double>(part_weight));
    eps_prime = std::pow(ratio, 1.0 / ceil_log2(k_prime)) - 1.0;
  }
  if (eps_prime < 0.0) {
    if (clamp_count != nullptr) ++*clamp_count;
    eps_prime = 0.0;
  }
  return eps_prime;
}

PartitionResult partition(const Hypergraph& hg, int k, double epsilon, const AlgoConfig& config,
                          std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("partition: k must be at least 1");
  if (static_cast<std::int64_t>(k) > hg.num_vertices()) {
    throw std::invalid_argument("partition: k exceeds the number of vertices");
  }
  if (static_cast<std::uint64_t>(hg.num_vertices()) != hg.vertex_capacity()) {
    throw std::invalid_argument("partition: expects a fully enabled hypergraph");
  }

  const auto t0 = std::chrono::steady_clock::now();
  PartitionResult result;
  result.k = k;
  result.blocks.assign(hg.vertex_capacity(), -1);

  const Weight final_bound = static_cast<Weight>(std::floor(
      (1.0 + epsilon) * static_cast<double>(ceil_div(hg.total_vertex_weight(), k)) + 1e-9));
  GlobalContext g{epsilon, k, hg.total_vertex_weight(), final_bound, &config, seed};
  std::vector<VertexId> identity(hg.vertex_capacity());
  for (VertexId v = 0; v < identity.size(); ++v) identity[v] = v;

  result.total_cut =
      partition_recurse(hg, identity, 0, k - 1, true, g, result.blocks, result.bisections);
  result.epsilon_clamps = g.epsilon_clamps;

  // cut additivity is an invariant, not a hope
  Weight check = 0;
  {
    for (NetId e = 0; e < hg.net_capacity(); ++e) {
      if (!hg.net_enabled(e)) continue;
      int first_block = -1;
      bool cut_net = false;
      for (VertexId p : hg.pins(e)) {
        const int b = result.blocks[p];
        if (first_block == -1) {
          first_block = b;
        } else if (b != first_block) {
          cut_net = true;
          break;
        }
      }
      if (cut_net) check += hg.net_weight(e);
    }
  }
  if (check != result.total_cut) {
    throw std::logic_error("partition: bisection cuts do not add up to the final cut");
  }

  std::vector<Weight> block_weight(static_cast<std::size_t>(k), 0);
  for (VertexId v = 0; v < hg.vertex_capacity(); ++v) {
    block_weight[static_cast<std::size_t>(result.blocks[v])] += hg.vertex_weight(v);
  }
  const Weight ideal = ceil_div(hg.total_vertex_weight(), static_cast<Weight>(k));
  const Weight heaviest = *std::max_element(block_weight.begin(), block_weight.end());
  result.imbalance = ideal > 0 ? static_cast<double>(heaviest) / static_cast<double>(ideal) - 1.0
                               : 0.0;
  result.feasible = static_cast<double>(heaviest) <=
                    (1.0 + epsilon) * static_cast<double>(ideal) + 1e-9;
  result.total_ms = elapsed_ms(t0);
  return result;
}

}  // namespace hgpart
