#ifndef HGPART_HYPERGRAPH_HPP
#define HGPART_HYPERGRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "types.hpp"

namespace hgpart {

// Undo record for one contraction: the pair (u, v) plus u's incidence slice
// (first, size) as it was before the contraction.
struct ContractionMemento {
  VertexId u = kInvalidVertex;
  VertexId v = kInvalidVertex;
  std::uint64_t first = 0;
  std::uint32_t size = 0;
  std::uint64_t level = 0;
};

struct NetRemovalRecord {
  enum class Kind : std::uint8_t { kSingleNode, kParallel };
  Kind kind = Kind::kSingleNode;
  NetId net = kInvalidNet;
  NetId representative = kInvalidNet;  // surviving net (parallel only)
  Weight saved_weight = 0;             // weight folded into the survivor (parallel only)
  std::uint64_t level = 0;
};

// Dynamic hypergraph over a bipartite adjacency array. Vertices and nets
// share one incidence array: each vertex slice lists its incident nets, each
// net slice lists its pins. Contraction disables the partner and rewrites its
// pin slots in place; relinks copy the representative's slice to the end of
// the array at most once per contraction. All mutations are exactly
// reversible in LIFO order.
class Hypergraph {
 public:
  Hypergraph(std::uint64_t num_vertices, const std::vector<std::vector<VertexId>>& net_pins,
             const std::vector<Weight>& net_weights = {},
             const std::vector<Weight>& vertex_weights = {});

  std::uint64_t vertex_capacity() const { return vertices_.size(); }
  std::uint64_t net_capacity() const { return nets_.size(); }
  std::int64_t num_vertices() const { return num_vertices_; }
  std::int64_t num_nets() const { return num_nets_; }
  std::int64_t num_pins() const { return num_pins_; }

  bool vertex_enabled(VertexId v) const { return vertices_[v].enabled; }
  bool net_enabled(NetId e) const { return nets_[e].enabled; }

  Weight vertex_weight(VertexId v) const { return vertices_[v].weight; }
  Weight net_weight(NetId e) const { return nets_[e].weight; }
  std::uint32_t degree(VertexId v) const { return vertices_[v].size; }
  std::uint32_t net_size(NetId e) const { return nets_[e].size; }

  std::span<const NetId> incident_nets(VertexId v) const {
    const Endpoint& r = vertices_[v];
    return {incidence_.data() + r.first, r.size};
  }
  std::span<const VertexId> pins(NetId e) const {
    const Endpoint& r = nets_[e];
    return {incidence_.data() + r.first, r.size};
  }

  // Neighbors across all incident nets, deduplicated, in first-seen order.
  std::vector<VertexId> neighbors(VertexId v) const;

  Weight total_vertex_weight() const { return total_vertex_weight_; }
  Weight total_weight(std::span<const VertexId> set) const;

  std::vector<VertexId> enabled_vertices() const;
  std::vector<NetId> enabled_nets() const;

  // Merges v into u (Algorithm: relink nets that contained only v, shrink
  // nets that contained both). Returns the memento needed to reverse it.
  ContractionMemento contract(VertexId u, VertexId v);

  // Reverses the most recent unreversed contraction. Returns (u, v).
  std::pair<VertexId, VertexId> uncontract(const ContractionMemento& memento);

  std::vector<NetRemovalRecord> remove_single_node_nets(VertexId u);

  // Fingerprint-based parallel net detection restricted to I(u). One net of
  // each parallel group survives with the summed weight.
  std::vector<NetRemovalRecord> remove_parallel_nets(VertexId u, std::uint64_t seed);

  // Re-enables nets in reverse removal order; must run at the level the
  // removal happened (i.e. before the matching uncontraction).
  void restore_removed_nets(std::span<const NetRemovalRecord> records);

  // Permanently disables every size-1 net; input cleanup before any
  // contraction. Returns how many nets were dropped.
  std::int64_t drop_single_node_nets();

  std::uint64_t contraction_level() const { return level_; }

  // Full-scan consistency check (tests and debugging). Throws on violation.
  void check_integrity() const;

 private:
  struct Endpoint {
    std::uint64_t first = 0;
    std::uint32_t size = 0;
    Weight weight = 0;
    bool enabled = true;
  };

  void require_enabled_vertex(VertexId v, const char* what) const;
  void relocate_vertex_slice(VertexId u);
  void disable_net(NetId e);
  void enable_net(NetId e);

  std::vector<Endpoint> vertices_;
  std::vector<Endpoint> nets_;
  std::vector<std::uint32_t> incidence_;
  std::int64_t num_vertices_ = 0;
  std::int64_t num_nets_ = 0;
  std::int64_t num_pins_ = 0;
  Weight total_vertex_weight_ = 0;
  std::uint64_t level_ = 0;
  mutable std::vector<std::uint8_t> net_mark_;  // scratch for uncontract
};

}  // namespace hgpart

#endif
