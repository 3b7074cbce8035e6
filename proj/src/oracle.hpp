#ifndef HGPART_ORACLE_HPP
#define HGPART_ORACLE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hypergraph.hpp"
#include "types.hpp"

namespace hgpart {
namespace oracle {

struct OracleResult {
  Weight best_cut = 0;
  std::vector<std::int8_t> best_assignment;  // per-capacity; -1 for disabled vertices
  bool feasible = false;
};

// Exhaustive minimum-cut epsilon-balanced bisection over all 2^(n-1)
// assignments (vertex 0's block is fixed). Enabled vertex count must be <= 16.
OracleResult exact_bisection(const Hypergraph& hg, double epsilon);

// Direct-definition evaluations with no incremental state.
Weight recompute_cut(const Hypergraph& hg, std::span<const std::int8_t> assignment);
Weight recompute_gain(const Hypergraph& hg, std::span<const std::int8_t> assignment, VertexId v);
std::vector<std::array<std::int32_t, 2>> recompute_phi(const Hypergraph& hg,
                                                       std::span<const std::int8_t> assignment);

}  // namespace oracle
}  // namespace hgpart

#endif
