#include "partition_state.hpp"

#include <cassert>
#include <cmath>

namespace hgpart {

PartitionState::PartitionState(const Hypergraph& hg, std::span<const std::int8_t> assignment,
                               std::array<Weight, 2> target_weights)
    : hg_(&hg),
      block_(hg.vertex_capacity(), -1),
      phi_(hg.net_capacity(), {0, 0}),
      cut_nets_of_(hg.vertex_capacity(), 0),
      target_(target_weights) {
  for (VertexId v = 0; v < hg.vertex_capacity(); ++v) {
    if (!hg.vertex_enabled(v)) continue;
    if (v >= assignment.size() || (assignment[v] != 0 && assignment[v] != 1)) {
      throw std::invalid_argument("initialize: vertex " + std::to_string(v) +
                                  " has no block assignment");
    }
    block_[v] = assignment[v];
    block_weight_[static_cast<std::size_t>(assignment[v])] += hg.vertex_weight(v);
  }
  for (NetId e = 0; e < hg.net_capacity(); ++e) {
    if (!hg.net_enabled(e)) continue;
    for (VertexId p : hg.pins(e)) ++phi_[e][static_cast<std::size_t>(block_[p])];
    if (net_is_cut(e)) {
      cut_ += hg.net_weight(e);
      for (VertexId p : hg.pins(e)) ++cut_nets_of_[p];
    }
  }
}

std::vector<int> PartitionState::connected_blocks(VertexId v) const {
  const int other = 1 - block_[v];
  for (NetId e : hg_->incident_nets(v)) {
    if (phi_[e][static_cast<std::size_t>(other)] > 0) return {other};
  }
  return {};
}

double PartitionState::imbalance() const {
  const Weight total = block_weight_[0] + block_weight_[1];
  if (total == 0) return 0.0;
  const double ideal = static_cast<double>(ceil_div(total, 2));
  const double heavier = static_cast<double>(std::max(block_weight_[0], block_weight_[1]));
  return heavier / ideal - 1.0;
}

Weight PartitionState::overload() const {
  return std::max({Weight{0}, block_weight_[0] - target_[0], block_weight_[1] - target_[1]});
}

void PartitionState::move(VertexId v, int to) {
  const int from = block_[v];
  assert(from != to && (to == 0 || to == 1));
  block_[v] = static_cast<std::int8_t>(to);
  block_weight_[static_cast<std::size_t>(from)] -= hg_->vertex_weight(v);
  block_weight_[static_cast<std::size_t>(to)] += hg_->vertex_weight(v);

  for (NetId e : hg_->incident_nets(v)) {
    const bool was_cut = net_is_cut(e);
    --phi_[e][static_cast<std::size_t>(from)];
    ++phi_[e][static_cast<std::size_t>(to)];
    const bool now_cut = net_is_cut(e);
    if (was_cut != now_cut) {
      const int delta = now_cut ? 1 : -1;
      cut_ += now_cut ? hg_->net_weight(e) : -hg_->net_weight(e);
      for (VertexId p : hg_->pins(e)) cut_nets_of_[p] += delta;
    }
  }
}

void PartitionState::recount_border(VertexId v) {
  std::int32_t n = 0;
  for (NetId e : hg_->incident_nets(v)) n += net_is_cut(e) ? 1 : 0;
  cut_nets_of_[v] = n;
}

void PartitionState::on_uncontract(VertexId u, VertexId v) {
  block_[v] = block_[u];
  // Relinked nets swapped a pin of the same block; reverted deletes added v
  // to its own block. Recounting the touched rows covers both; the cut-status
  // of every net is unchanged, so only u's and v's border counts can move.
  for (NetId e : hg_->incident_nets(v)) {
    std::array<std::int32_t, 2> row{0, 0};
    for (VertexId p : hg_->pins(e)) ++row[static_cast<std::size_t>(block_[p])];
    assert((row[0] > 0 && row[1] > 0) == net_is_cut(e));
    phi_[e] = row;
  }
  recount_border(u);
  recount_border(v);
}

void PartitionState::on_net_restored(NetId e) {
  std::array<std::int32_t, 2> row{0, 0};
  for (VertexId p : hg_->pins(e)) ++row[static_cast<std::size_t>(block_[p])];
  phi_[e] = row;
  // A restored net never changes the cut: single-node nets are internal, and
  // a parallel net's weight was carried by its survivor until now.
  if (row[0] > 0 && row[1] > 0) {
    for (VertexId p : hg_->pins(e)) ++cut_nets_of_[p];
  }
}

std::pair<Section, Section> section_hypergraphs(const Hypergraph& hg,
                                                const PartitionState& state) {
  std::array<std::vector<VertexId>, 2> to_parent;
  std::vector<VertexId> local_id(hg.vertex_capacity(), kInvalidVertex);
  for (VertexId v = 0; v < hg.vertex_capacity(); ++v) {
    if (!hg.vertex_enabled(v)) continue;
    const auto side = static_cast<std::size_t>(state.block_of(v));
    local_id[v] = static_cast<VertexId>(to_parent[side].size());
    to_parent[side].push_back(v);
  }

  std::array<std::vector<std::vector<VertexId>>, 2> net_pins;
  std::array<std::vector<Weight>, 2> net_weights;
  for (NetId e = 0; e < hg.net_capacity(); ++e) {
    if (!hg.net_enabled(e)) continue;
    const auto row = state.phi(e);
    const int side = row[1] == 0 ? 0 : (row[0] == 0 ? 1 : -1);
    if (side < 0) continue;  // cut net: dropped, it stays cut in the final partition
    std::vector<VertexId> mapped;
    mapped.reserve(hg.net_size(e));
    for (VertexId p : hg.pins(e)) mapped.push_back(local_id[p]);
    net_pins[static_cast<std::size_t>(side)].push_back(std::move(mapped));
    net_weights[static_cast<std::size_t>(side)].push_back(hg.net_weight(e));
  }

  auto build = [&](std::size_t side) {
    std::vector<Weight> vw;
    vw.reserve(to_parent[side].size());
    for (VertexId v : to_parent[side]) vw.push_back(hg.vertex_weight(v));
    return Section{Hypergraph(to_parent[side].size(), net_pins[side], net_weights[side], vw),
                   to_parent[side]};
  };
  return {build(0), build(1)};
}

}  // namespace hgpart
