#ifndef HGPART_COARSENING_HPP
#define HGPART_COARSENING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "addressable_pq.hpp"
#include "hypergraph.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace hgpart {

struct CoarseningConfig {
  std::int64_t coarsest_size = 320;  // t
  double weight_scale = 3.25;        // s
  bool lazy = false;
};

struct Rating {
  double score = 0.0;
  VertexId partner = kInvalidVertex;
};

struct CoarseningLevel {
  ContractionMemento memento;
  std::vector<NetRemovalRecord> removals;
};

struct CoarseningResult {
  std::vector<CoarseningLevel> levels;
  std::uint64_t rating_calls = 0;  // work counter: one call scans one neighborhood
  std::uint64_t fingerprint_seed = 0;
};

// Heavy-edge rating of u against its neighbors, scaled inversely by the
// product of the endpoint weights. Partners whose own weight exceeds c_max
// are skipped; partners whose merged weight would exceed c_max are used only
// if no alternative exists. Ties are broken uniformly at random.
std::optional<Rating> rate(const Hypergraph& hg, VertexId u, double c_max, Rng& rng);

class Coarsener {
 public:
  Coarsener(Hypergraph& hg, const CoarseningConfig& config, Rng& rng);

  // Contracts one pair (plus net removals); false when the stop rule hit.
  bool step();

  CoarseningResult take_result() { return std::move(result_); }

  double c_max() const { return c_max_; }

  // Test observer, invoked with (u, v, score) right before each contraction.
  std::function<void(VertexId, VertexId, double)> on_extract;

 private:
  std::optional<Rating> rate_tracked(VertexId u);
  void refresh(VertexId w);

  Hypergraph& hg_;
  CoarseningConfig config_;
  Rng& rng_;
  double c_max_;
  AddressablePq<double> pq_;
  std::vector<VertexId> partner_;
  std::vector<std::uint8_t> valid_;
  CoarseningResult result_;
};

// Runs coarsening to the stop rule and returns the undo journal.
CoarseningResult coarsen(Hypergraph& hg, const CoarseningConfig& config, Rng& rng);

}  // namespace hgpart

#endif
