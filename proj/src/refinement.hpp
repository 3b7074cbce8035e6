#ifndef HGPART_REFINEMENT_HPP
#define HGPART_REFINEMENT_HPP

#include <cstdint>
#include <vector>

#include "addressable_pq.hpp"
#include "hypergraph.hpp"
#include "partition_state.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace hgpart {

struct RefinementConfig {
  int move_limit = 350;          // moves without improvement before a pass stops
  bool use_net_locking = true;   // diagnostic knob; locking never changes results
};

// Gain of moving v to the other block under the current state: the summed
// weight of nets only v keeps in the cut, minus the weight of nets the move
// would newly cut.
Weight gain(const Hypergraph& hg, const PartitionState& state, VertexId v);

// Persistent per-vertex gain memo. Entries survive across local searches and
// levels; a pass-local delta log makes partial rollbacks exact.
class GainCache {
 public:
  explicit GainCache(std::size_t capacity);

  bool contains(VertexId v) const { return present_[v] != 0; }
  Weight value(VertexId v) const { return value_[v]; }

  // Computes and stores the gain if absent. Counts toward gain_computations.
  void warm(const Hypergraph& hg, const PartitionState& state, VertexId v);

  void insert_fresh(VertexId v, Weight g);
  void apply_delta(VertexId v, Weight d);
  void set_from_move(VertexId v, Weight negated_gain);
  void invalidate(VertexId v);
  void clear();

  // Rollback protocol: begin() opens a delta segment, commit() declares the
  // current cache state final (best prefix advanced), rollback() restores the
  // state of the last commit point.
  void segment_begin();
  void segment_commit();
  void segment_rollback();

  // Transfers c[u] to the uncontracted v and adjusts both entries net by net.
  // Falls back to fresh evaluation when c[u] is not cached.
  void repair_after_uncontraction(const Hypergraph& hg, const PartitionState& state, VertexId u,
                                  VertexId v);

  std::uint64_t gain_computations() const { return gain_computations_; }

 private:
  void touch(VertexId v);

  std::vector<Weight> value_;
  std::vector<std::uint8_t> present_;
  std::uint64_t gain_computations_ = 0;

  bool in_segment_ = false;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> touch_epoch_;
  std::vector<Weight> neg_delta_;
  std::vector<std::uint8_t> was_present_;
  std::vector<VertexId> touched_;

  std::vector<std::uint8_t> in_iv_, in_iu_;  // scratch for repair
};

struct MoveRecord {
  VertexId vertex;
  int from;
  int to;
  Weight cut_after;
  Weight overload_after;
};

// Localized 2-way FM: starts from an uncontracted pair, expands over border
// neighbors through two gain PQs, applies delta-gain updates with net
// locking, stops after move_limit fruitless moves, and rolls back to the best
// balanced prefix.
class TwoWayFm {
 public:
  TwoWayFm(Hypergraph& hg, PartitionState& state, GainCache& cache, RefinementConfig config,
           Rng& rng);

  // Repeats passes seeded at (u, v) until a pass yields no improvement.
  // Returns whether anything improved.
  bool refine(VertexId u, VertexId v);

  // Stepwise interface (used by refine and by the test harnesses).
  bool start_pass(VertexId u, VertexId v);
  bool step();
  void finish_pass();

  std::uint64_t passes() const { return passes_; }
  std::uint64_t moves() const { return moves_; }
  std::uint64_t monotonicity_violations() const { return monotonicity_violations_; }
  const std::vector<MoveRecord>& move_log() const { return log_; }
  std::size_t best_prefix() const { return best_prefix_; }

  // Debug: every active vertex sits in the right queue under its cache value.
  bool queue_keys_consistent() const;

 private:
  enum NetLabel : std::uint8_t { kFree = 0, kLoose = 1, kLocked = 2 };

  void activate(VertexId v);
  void apply_move(VertexId v, int to, Weight gain_used);
  void delta_update(NetId e, VertexId mover, int to);
  void touch_pin(VertexId p, Weight d, bool locked);
  bool marked(VertexId v) const { return vertex_epoch_[v] == epoch_ && marked_[v]; }
  bool active(VertexId v) const { return vertex_epoch_[v] == epoch_ && active_[v]; }
  NetLabel label(NetId e) const {
    return net_epoch_[e] == epoch_ ? static_cast<NetLabel>(net_label_[e]) : kFree;
  }

  Hypergraph& hg_;
  PartitionState& state_;
  GainCache& cache_;
  RefinementConfig config_;
  Rng& rng_;

  AddressablePq<Weight> pq_[2];
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> vertex_epoch_;
  std::vector<std::uint8_t> marked_;
  std::vector<std::uint8_t> active_;
  std::vector<std::uint32_t> net_epoch_;
  std::vector<std::uint8_t> net_label_;
  std::vector<std::uint8_t> net_moved_to_[2];
  std::vector<std::uint32_t> seen_epoch_;  // per-move neighbor dedup
  std::uint32_t seen_stamp_ = 0;

  std::vector<MoveRecord> log_;
  std::size_t best_prefix_ = 0;
  bool best_feasible_ = false;
  Weight best_cut_ = 0;
  Weight best_overload_ = 0;
  Weight cut_start_ = 0;
  Weight lowest_cut_seen_ = 0;
  Weight lowest_overload_seen_ = 0;
  int fruitless_moves_ = 0;
  bool pass_open_ = false;

  std::uint64_t passes_ = 0;
  std::uint64_t moves_ = 0;
  std::uint64_t monotonicity_violations_ = 0;
};

}  // namespace hgpart

#endif
