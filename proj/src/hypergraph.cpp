#include "hypergraph.hpp"

#include <algorithm>
#include <cassert>

#include "rng.hpp"

namespace hgpart {

Hypergraph::Hypergraph(std::uint64_t num_vertices,
                       const std::vector<std::vector<VertexId>>& net_pins,
                       const std::vector<Weight>& net_weights,
                       const std::vector<Weight>& vertex_weights) {
  const std::uint64_t m = net_pins.size();
  if (!net_weights.empty() && net_weights.size() != m) {
    throw std::invalid_argument("net weight count does not match net count");
  }
  if (!vertex_weights.empty() && vertex_weights.size() != num_vertices) {
    throw std::invalid_argument("vertex weight count does not match vertex count");
  }

  vertices_.resize(num_vertices);
  nets_.resize(m);
  net_mark_.assign(m, 0);

  std::uint64_t pin_count = 0;
  for (std::uint64_t e = 0; e < m; ++e) {
    if (net_pins[e].empty()) throw std::invalid_argument("net with no pins");
    for (VertexId p : net_pins[e]) {
      if (p >= num_vertices) throw std::invalid_argument("pin id out of range");
      ++vertices_[p].size;
    }
    pin_count += net_pins[e].size();
  }

  incidence_.resize(2 * pin_count);
  std::uint64_t offset = 0;
  for (std::uint64_t v = 0; v < num_vertices; ++v) {
    vertices_[v].first = offset;
    offset += vertices_[v].size;
    vertices_[v].size = 0;  // reused as fill cursor below
    vertices_[v].weight = vertex_weights.empty() ? 1 : vertex_weights[v];
    if (vertices_[v].weight < 0) throw std::invalid_argument("negative vertex weight");
    total_vertex_weight_ += vertices_[v].weight;
  }
  for (std::uint64_t e = 0; e < m; ++e) {
    nets_[e].first = offset;
    nets_[e].size = static_cast<std::uint32_t>(net_pins[e].size());
    nets_[e].weight = net_weights.empty() ? 1 : net_weights[e];
    if (nets_[e].weight <= 0) throw std::invalid_argument("non-positive net weight");
    for (VertexId p : net_pins[e]) {
      incidence_[offset++] = p;
      Endpoint& vp = vertices_[p];
      incidence_[vp.first + vp.size] = static_cast<std::uint32_t>(e);
      ++vp.size;
    }
  }

  num_vertices_ = static_cast<std::int64_t>(num_vertices);
  num_nets_ = static_cast<std::int64_t>(m);
  num_pins_ = static_cast<std::int64_t>(pin_count);
}

void Hypergraph::require_enabled_vertex(VertexId v, const char* what) const {
  if (v >= vertices_.size() || !vertices_[v].enabled) {
    throw std::invalid_argument(std::string(what) + ": unknown or disabled vertex " +
                                std::to_string(v));
  }
}

std::vector<VertexId> Hypergraph::neighbors(VertexId v) const {
  require_enabled_vertex(v, "neighbors");
  std::vector<VertexId> out;
  std::vector<std::uint8_t> seen(vertices_.size(), 0);
  for (NetId e : incident_nets(v)) {
    for (VertexId p : pins(e)) {
      if (p != v && !seen[p]) {
        seen[p] = 1;
        out.push_back(p);
      }
    }
  }
  return out;
}

Weight Hypergraph::total_weight(std::span<const VertexId> set) const {
  Weight sum = 0;
  for (VertexId v : set) sum += vertices_[v].weight;
  return sum;
}

std::vector<VertexId> Hypergraph::enabled_vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(num_vertices_));
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].enabled) out.push_back(v);
  }
  return out;
}

std::vector<NetId> Hypergraph::enabled_nets() const {
  std::vector<NetId> out;
  out.reserve(static_cast<std::size_t>(num_nets_));
  for (NetId e = 0; e < nets_.size(); ++e) {
    if (nets_[e].enabled) out.push_back(e);
  }
  return out;
}

void Hypergraph::relocate_vertex_slice(VertexId u) {
  const std::uint64_t old_first = vertices_[u].first;
  const std::uint32_t size = vertices_[u].size;
  const std::uint64_t new_first = incidence_.size();
  incidence_.resize(new_first + size);
  for (std::uint32_t i = 0; i < size; ++i) {
    incidence_[new_first + i] = incidence_[old_first + i];
  }
  vertices_[u].first = new_first;
}

ContractionMemento Hypergraph::contract(VertexId u, VertexId v) {
  require_enabled_vertex(u, "contract");
  require_enabled_vertex(v, "contract");
  if (u == v) throw std::invalid_argument("contract: u == v");

  ContractionMemento m{u, v, vertices_[u].first, vertices_[u].size, level_};
  ++level_;
  vertices_[u].weight += vertices_[v].weight;

  bool copied = false;
  const Endpoint& vr = vertices_[v];
  for (std::uint64_t i = vr.first; i < vr.first + vr.size; ++i) {
    const NetId e = incidence_[i];
    Endpoint& er = nets_[e];
    const std::uint64_t last = er.first + er.size - 1;
    std::uint64_t pos_v = last;
    bool has_u = false;
    for (std::uint64_t j = er.first; j <= last; ++j) {
      if (incidence_[j] == v) {
        pos_v = j;
      } else if (incidence_[j] == u) {
        has_u = true;
      }
    }
    std::swap(incidence_[pos_v], incidence_[last]);
    if (has_u) {
      // delete operation: v's pin slot stays right past the shrunk slice so
      // the matching uncontraction can re-extend the net
      --er.size;
      --num_pins_;
    } else {
      // relink operation: reuse v's pin slot for u, then append e to u's slice
      incidence_[last] = u;
      if (!copied) {
        relocate_vertex_slice(u);
        copied = true;
      }
      incidence_.push_back(static_cast<std::uint32_t>(e));
      ++vertices_[u].size;
    }
  }

  vertices_[v].enabled = false;
  --num_vertices_;
  return m;
}

std::pair<VertexId, VertexId> Hypergraph::uncontract(const ContractionMemento& m) {
  if (m.level != level_ - 1) {
    throw ContractViolation("uncontract: memento is not the most recent contraction");
  }
  if (m.u >= vertices_.size() || m.v >= vertices_.size() || !vertices_[m.u].enabled ||
      vertices_[m.v].enabled) {
    throw ContractViolation("uncontract: memento does not match hypergraph state");
  }
  --level_;

  vertices_[m.v].enabled = true;
  ++num_vertices_;

  // Mark nets of I(v); unmark the ones u was already incident to before the
  // contraction. What stays marked was relinked.
  const Endpoint& vr = vertices_[m.v];
  for (std::uint64_t i = vr.first; i < vr.first + vr.size; ++i) net_mark_[incidence_[i]] = 1;
  for (std::uint64_t i = m.first; i < m.first + m.size; ++i) net_mark_[incidence_[i]] = 0;

  if (vertices_[m.u].size > m.size) {
    // reverse relinks: put v back into the pin slot that now holds u
    const Endpoint& ur = vertices_[m.u];
    for (std::uint64_t i = ur.first; i < ur.first + ur.size; ++i) {
      const NetId e = incidence_[i];
      if (!net_mark_[e]) continue;
      const Endpoint& er = nets_[e];
      for (std::uint64_t j = er.first; j < er.first + er.size; ++j) {
        if (incidence_[j] == m.u) {
          incidence_[j] = m.v;
          break;
        }
      }
    }
  }

  vertices_[m.u].first = m.first;
  vertices_[m.u].size = m.size;
  vertices_[m.u].weight -= vertices_[m.v].weight;

  // reverse deletes and clear marks
  for (std::uint64_t i = vr.first; i < vr.first + vr.size; ++i) {
    const NetId e = incidence_[i];
    if (net_mark_[e]) {
      net_mark_[e] = 0;
    } else {
      assert(incidence_[nets_[e].first + nets_[e].size] == m.v);
      ++nets_[e].size;
      ++num_pins_;
    }
  }
  return {m.u, m.v};
}

void Hypergraph::disable_net(NetId e) {
  Endpoint& er = nets_[e];
  assert(er.enabled);
  // Swap e to the end of every pin's slice so restoration is a size bump.
  for (std::uint64_t j = er.first; j < er.first + er.size; ++j) {
    const VertexId p = incidence_[j];
    Endpoint& pr = vertices_[p];
    const std::uint64_t last = pr.first + pr.size - 1;
    for (std::uint64_t i = pr.first; i <= last; ++i) {
      if (incidence_[i] == e) {
        std::swap(incidence_[i], incidence_[last]);
        break;
      }
    }
    --pr.size;
  }
  er.enabled = false;
  --num_nets_;
  num_pins_ -= er.size;
}

void Hypergraph::enable_net(NetId e) {
  Endpoint& er = nets_[e];
  assert(!er.enabled);
  for (std::uint64_t j = er.first; j < er.first + er.size; ++j) {
    Endpoint& pr = vertices_[incidence_[j]];
    assert(incidence_[pr.first + pr.size] == e);
    ++pr.size;
  }
  er.enabled = true;
  ++num_nets_;
  num_pins_ += er.size;
}

std::vector<NetRemovalRecord> Hypergraph::remove_single_node_nets(VertexId u) {
  require_enabled_vertex(u, "remove_single_node_nets");
  std::vector<NetRemovalRecord> out;
  const auto nets = std::vector<NetId>(incident_nets(u).begin(), incident_nets(u).end());
  for (NetId e : nets) {
    if (nets_[e].size == 1) {
      disable_net(e);
      out.push_back({NetRemovalRecord::Kind::kSingleNode, e, kInvalidNet, 0, level_});
    }
  }
  return out;
}

std::vector<NetRemovalRecord> Hypergraph::remove_parallel_nets(VertexId u, std::uint64_t seed) {
  require_enabled_vertex(u, "remove_parallel_nets");

  struct Fingerprint {
    std::uint32_t size;
    std::uint64_t hash;
    NetId net;
    bool operator<(const Fingerprint& o) const {
      if (size != o.size) return size < o.size;
      if (hash != o.hash) return hash < o.hash;
      return net < o.net;
    }
  };

  std::vector<Fingerprint> fps;
  for (NetId e : incident_nets(u)) {
    std::uint64_t h = 0;
    for (VertexId p : pins(e)) h ^= (static_cast<std::uint64_t>(p) ^ seed);
    fps.push_back({nets_[e].size, h, e});
  }
  std::sort(fps.begin(), fps.end());

  std::vector<NetRemovalRecord> out;
  auto sorted_pins = [&](NetId e) {
    std::vector<VertexId> p(pins(e).begin(), pins(e).end());
    std::sort(p.begin(), p.end());
    return p;
  };

  std::size_t i = 0;
  while (i < fps.size()) {
    std::size_t j = i + 1;
    while (j < fps.size() && fps[j].size == fps[i].size && fps[j].hash == fps[i].hash) ++j;
    if (j - i >= 2) {
      // Fingerprints collide; compare pin sets exactly. Lowest net id of each
      // group survives and absorbs the weights.
      std::vector<NetId> reps;
      std::vector<std::vector<VertexId>> rep_pins;
      for (std::size_t k = i; k < j; ++k) {
        const NetId e = fps[k].net;
        auto p = sorted_pins(e);
        bool matched = false;
        for (std::size_t r = 0; r < reps.size(); ++r) {
          if (rep_pins[r] == p) {
            nets_[reps[r]].weight += nets_[e].weight;
            out.push_back({NetRemovalRecord::Kind::kParallel, e, reps[r], nets_[e].weight, level_});
            disable_net(e);
            matched = true;
            break;
          }
        }
        if (!matched) {
          reps.push_back(e);
          rep_pins.push_back(std::move(p));
        }
      }
    }
    i = j;
  }
  return out;
}

std::int64_t Hypergraph::drop_single_node_nets() {
  std::int64_t dropped = 0;
  for (NetId e = 0; e < nets_.size(); ++e) {
    if (nets_[e].enabled && nets_[e].size == 1) {
      disable_net(e);
      ++dropped;
    }
  }
  return dropped;
}

void Hypergraph::restore_removed_nets(std::span<const NetRemovalRecord> records) {
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    const NetRemovalRecord& rec = *it;
    if (rec.level != level_) {
      throw ContractViolation("restore_removed_nets: record does not match current level");
    }
    if (rec.net >= nets_.size() || nets_[rec.net].enabled) {
      throw ContractViolation("restore_removed_nets: net is not disabled");
    }
    if (rec.kind == NetRemovalRecord::Kind::kParallel) {
      nets_[rec.representative].weight -= rec.saved_weight;
    }
    enable_net(rec.net);
  }
}

void Hypergraph::check_integrity() const {
  std::int64_t vertex_count = 0;
  std::int64_t net_count = 0;
  std::int64_t pin_count_nets = 0;
  std::int64_t pin_count_vertices = 0;
  Weight weight_sum = 0;

  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (!vertices_[v].enabled) continue;
    ++vertex_count;
    weight_sum += vertices_[v].weight;
    if (vertices_[v].weight < 0) throw std::logic_error("negative vertex weight");
    pin_count_vertices += vertices_[v].size;
    for (NetId e : incident_nets(v)) {
      if (e >= nets_.size() || !nets_[e].enabled) {
        throw std::logic_error("vertex lists a disabled net");
      }
      const auto p = pins(e);
      if (std::count(p.begin(), p.end(), v) != 1) {
        throw std::logic_error("incidence symmetry violated (vertex side)");
      }
    }
  }
  for (NetId e = 0; e < nets_.size(); ++e) {
    if (!nets_[e].enabled) continue;
    ++net_count;
    pin_count_nets += nets_[e].size;
    if (nets_[e].weight <= 0) throw std::logic_error("non-positive net weight");
    for (VertexId p : pins(e)) {
      if (p >= vertices_.size() || !vertices_[p].enabled) {
        throw std::logic_error("net lists a disabled vertex");
      }
      const auto ie = incident_nets(p);
      if (std::count(ie.begin(), ie.end(), e) != 1) {
        throw std::logic_error("incidence symmetry violated (net side)");
      }
    }
    std::vector<VertexId> sorted(pins(e).begin(), pins(e).end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::logic_error("duplicate pin in net");
    }
  }

  if (vertex_count != num_vertices_) throw std::logic_error("vertex count mismatch");
  if (net_count != num_nets_) throw std::logic_error("net count mismatch");
  if (pin_count_nets != num_pins_ || pin_count_vertices != num_pins_) {
    throw std::logic_error("pin count mismatch");
  }
  if (weight_sum != total_vertex_weight_) throw std::logic_error("total weight mismatch");
}

}  // namespace hgpart
