#include "oracle.hpp"

#include <cmath>

namespace hgpart {
namespace oracle {

Weight recompute_cut(const Hypergraph& hg, std::span<const std::int8_t> assignment) {
  Weight cut = 0;
  for (NetId e = 0; e < hg.net_capacity(); ++e) {
    if (!hg.net_enabled(e)) continue;
    bool in0 = false;
    bool in1 = false;
    for (VertexId p : hg.pins(e)) {
      (assignment[p] == 0 ? in0 : in1) = true;
    }
    if (in0 && in1) cut += hg.net_weight(e);
  }
  return cut;
}

Weight recompute_gain(const Hypergraph& hg, std::span<const std::int8_t> assignment, VertexId v) {
  const int b = assignment[v];
  const int other = 1 - b;
  Weight g = 0;
  for (NetId e : hg.incident_nets(v)) {
    std::int64_t in_other = 0;
    std::int64_t in_own = 0;
    for (VertexId p : hg.pins(e)) {
      if (assignment[p] == other) {
        ++in_other;
      } else {
        ++in_own;
      }
    }
    const std::int64_t size = hg.net_size(e);
    if (in_other == size - 1) g += hg.net_weight(e);
    if (in_own == size) g -= hg.net_weight(e);
  }
  return g;
}

std::vector<std::array<std::int32_t, 2>> recompute_phi(const Hypergraph& hg,
                                                       std::span<const std::int8_t> assignment) {
  std::vector<std::array<std::int32_t, 2>> phi(hg.net_capacity(), {0, 0});
  for (NetId e = 0; e < hg.net_capacity(); ++e) {
    if (!hg.net_enabled(e)) continue;
    for (VertexId p : hg.pins(e)) ++phi[e][static_cast<std::size_t>(assignment[p])];
  }
  return phi;
}

OracleResult exact_bisection(const Hypergraph& hg, double epsilon) {
  const auto ids = hg.enabled_vertices();
  const std::size_t n = ids.size();
  if (n > 16) throw std::invalid_argument("exact_bisection: more than 16 enabled vertices");

  const Weight total = hg.total_vertex_weight();
  const double l_max = (1.0 + epsilon) * static_cast<double>(ceil_div(total, 2)) + 1e-9;

  OracleResult result;
  result.best_assignment.assign(hg.vertex_capacity(), -1);
  std::vector<std::int8_t> assignment(hg.vertex_capacity(), -1);

  if (n == 0) return result;
  const std::uint64_t count = n == 1 ? 1 : (std::uint64_t{1} << (n - 1));
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (n >= 2 && mask == 0) continue;  // blocks of a bipartition are nonempty
    assignment[ids[0]] = 0;
    Weight w[2] = {hg.vertex_weight(ids[0]), 0};
    for (std::size_t i = 1; i < n; ++i) {
      const int b = static_cast<int>((mask >> (i - 1)) & 1u);
      assignment[ids[i]] = static_cast<std::int8_t>(b);
      w[b] += hg.vertex_weight(ids[i]);
    }
    if (static_cast<double>(w[0]) > l_max || static_cast<double>(w[1]) > l_max) continue;
    const Weight cut = recompute_cut(hg, assignment);
    if (!result.feasible || cut < result.best_cut) {
      result.feasible = true;
      result.best_cut = cut;
      result.best_assignment = assignment;
    }
  }
  return result;
}

}  // namespace oracle
}  // namespace hgpart
