#ifndef HGPART_PARTITION_STATE_HPP
#define HGPART_PARTITION_STATE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hypergraph.hpp"
#include "types.hpp"

namespace hgpart {

// Bipartition over a hypergraph with incrementally maintained per-net pin
// counts, block weights, border-vertex counts and cut value. Blocks are
// always {0, 1}; the k-way result is assembled from bisections.
class PartitionState {
 public:
  // assignment[v] in {0,1} for every enabled vertex; -1 entries are rejected.
  PartitionState(const Hypergraph& hg, std::span<const std::int8_t> assignment,
                 std::array<Weight, 2> target_weights);

  int block_of(VertexId v) const { return block_[v]; }
  Weight cut() const { return cut_; }
  Weight block_weight(int i) const { return block_weight_[static_cast<std::size_t>(i)]; }
  std::array<Weight, 2> target_weights() const { return target_; }

  std::array<std::int32_t, 2> phi(NetId e) const { return phi_[e]; }
  bool net_is_cut(NetId e) const { return phi_[e][0] > 0 && phi_[e][1] > 0; }

  bool is_border(VertexId v) const { return cut_nets_of_[v] > 0; }
  // R(v): blocks other than b[v] adjacent to v. Empty for internal vertices.
  std::vector<int> connected_blocks(VertexId v) const;

  // max_i c(V_i) / ceil(c(V)/2) - 1
  double imbalance() const;
  bool feasible() const { return block_weight_[0] <= target_[0] && block_weight_[1] <= target_[1]; }
  Weight overload() const;

  // Moves v to the other block; balance is the caller's concern.
  void move(VertexId v, int to);

  // Bookkeeping hooks for uncoarsening. Both assume the hypergraph mutation
  // already happened; neither changes the cut value.
  void on_uncontract(VertexId u, VertexId v);
  void on_net_restored(NetId e);

  const Hypergraph& hypergraph() const { return *hg_; }

 private:
  void recount_border(VertexId v);

  const Hypergraph* hg_;
  std::vector<std::int8_t> block_;
  std::vector<std::array<std::int32_t, 2>> phi_;
  std::vector<std::int32_t> cut_nets_of_;
  std::array<Weight, 2> block_weight_{0, 0};
  std::array<Weight, 2> target_{0, 0};
  Weight cut_ = 0;
};

struct Section {
  Hypergraph hg;
  std::vector<VertexId> to_parent;  // section vertex id -> parent vertex id
};

// Splits the hypergraph along the bipartition. Each section keeps exactly the
// nets fully internal to its block; cut nets appear in neither.
std::pair<Section, Section> section_hypergraphs(const Hypergraph& hg, const PartitionState& state);

}  // namespace hgpart

#endif
