#include "refinement.hpp"

#include <cassert>

namespace hgpart {

Weight gain(const Hypergraph& hg, const PartitionState& state, VertexId v) {
  const int b = state.block_of(v);
  const int other = 1 - b;
  Weight g = 0;
  for (NetId e : hg.incident_nets(v)) {
    const auto phi = state.phi(e);
    const auto size = static_cast<std::int32_t>(hg.net_size(e));
    if (phi[static_cast<std::size_t>(other)] == size - 1) g += hg.net_weight(e);
    if (phi[static_cast<std::size_t>(b)] == size) g -= hg.net_weight(e);
  }
  return g;
}

GainCache::GainCache(std::size_t capacity)
    : value_(capacity, 0),
      present_(capacity, 0),
      touch_epoch_(capacity, 0),
      neg_delta_(capacity, 0),
      was_present_(capacity, 0),
      in_iv_(0),
      in_iu_(0) {}

void GainCache::touch(VertexId v) {
  if (!in_segment_ || touch_epoch_[v] == epoch_) return;
  touch_epoch_[v] = epoch_;
  neg_delta_[v] = 0;
  was_present_[v] = present_[v];
  touched_.push_back(v);
}

void GainCache::warm(const Hypergraph& hg, const PartitionState& state, VertexId v) {
  if (present_[v]) return;
  ++gain_computations_;
  insert_fresh(v, gain(hg, state, v));
}

void GainCache::insert_fresh(VertexId v, Weight g) {
  assert(!present_[v]);
  touch(v);
  if (in_segment_) neg_delta_[v] += value_[v] - g;
  present_[v] = 1;
  value_[v] = g;
}

void GainCache::apply_delta(VertexId v, Weight d) {
  if (!present_[v]) return;
  touch(v);
  value_[v] += d;
  neg_delta_[v] -= d;
}

void GainCache::set_from_move(VertexId v, Weight negated_gain) {
  assert(present_[v]);
  touch(v);
  neg_delta_[v] += value_[v] - negated_gain;
  value_[v] = negated_gain;
}

void GainCache::invalidate(VertexId v) {
  touch(v);
  present_[v] = 0;
}

void GainCache::clear() {
  std::fill(present_.begin(), present_.end(), std::uint8_t{0});
  in_segment_ = false;
  touched_.clear();
}

void GainCache::segment_begin() {
  in_segment_ = true;
  ++epoch_;
  touched_.clear();
}

void GainCache::segment_commit() {
  ++epoch_;
  touched_.clear();
}

void GainCache::segment_rollback() {
  for (VertexId v : touched_) {
    if (!was_present_[v]) {
      present_[v] = 0;
    } else {
      present_[v] = 1;
      value_[v] += neg_delta_[v];
    }
  }
  touched_.clear();
  in_segment_ = false;
}

void GainCache::repair_after_uncontraction(const Hypergraph& hg, const PartitionState& state,
                                           VertexId u, VertexId v) {
  if (!present_[u]) {
    // simple variant: both gains from scratch
    present_[u] = 1;
    present_[v] = 1;
    ++gain_computations_;
    value_[u] = gain(hg, state, u);
    ++gain_computations_;
    value_[v] = gain(hg, state, v);
    return;
  }

  if (in_iv_.size() < hg.net_capacity()) {
    in_iv_.resize(hg.net_capacity(), 0);
    in_iu_.resize(hg.net_capacity(), 0);
  }
  for (NetId e : hg.incident_nets(v)) in_iv_[e] = 1;
  for (NetId e : hg.incident_nets(u)) in_iu_[e] = 1;

  const std::size_t b = static_cast<std::size_t>(state.block_of(u));
  Weight cu = value_[u];
  Weight cv = value_[u];  // v starts as a copy of u

  // Case 1: nets that left I(u) (relinked back to v). Their old contribution
  // to c[u] is removed; v inherited it correctly since v now sits in u's old
  // pin slot.
  for (NetId e : hg.incident_nets(v)) {
    if (in_iu_[e]) continue;
    const auto phi = state.phi(e);
    const Weight w = hg.net_weight(e);
    if (phi[b] == 1) cu -= w;
    if (phi[b] == static_cast<std::int32_t>(hg.net_size(e))) cu += w;
  }
  for (NetId e : hg.incident_nets(u)) {
    const Weight w = hg.net_weight(e);
    if (in_iv_[e]) {
      // Case 2: net contains both u and v. With exactly the pair in their
      // block it can no longer be freed by moving either one.
      if (state.phi(e)[b] == 2) {
        cu -= w;
        cv -= w;
      }
    } else {
      // Case 3: v is not a pin; cancel e's contribution inherited from c[u].
      const auto phi = state.phi(e);
      if (phi[b] == 1) cv -= w;
      if (phi[b] == static_cast<std::int32_t>(hg.net_size(e))) cv += w;
    }
  }

  for (NetId e : hg.incident_nets(v)) in_iv_[e] = 0;
  for (NetId e : hg.incident_nets(u)) in_iu_[e] = 0;

  touch(u);
  touch(v);
  value_[u] = cu;
  value_[v] = cv;
  present_[v] = 1;
}

TwoWayFm::TwoWayFm(Hypergraph& hg, PartitionState& state, GainCache& cache,
                   RefinementConfig config, Rng& rng)
    : hg_(hg),
      state_(state),
      cache_(cache),
      config_(config),
      rng_(rng),
      pq_{AddressablePq<Weight>(hg.vertex_capacity()), AddressablePq<Weight>(hg.vertex_capacity())},
      vertex_epoch_(hg.vertex_capacity(), 0),
      marked_(hg.vertex_capacity(), 0),
      active_(hg.vertex_capacity(), 0),
      net_epoch_(hg.net_capacity(), 0),
      net_label_(hg.net_capacity(), 0),
      net_moved_to_{std::vector<std::uint8_t>(hg.net_capacity(), 0),
                    std::vector<std::uint8_t>(hg.net_capacity(), 0)},
      seen_epoch_(hg.vertex_capacity(), 0) {}

bool TwoWayFm::refine(VertexId u, VertexId v) {
  bool any = false;
  for (;;) {
    const Weight cut_before = state_.cut();
    const bool feasible_before = state_.feasible();
    if (!start_pass(u, v)) break;
    while (step()) {
    }
    finish_pass();
    const bool improved =
        state_.cut() < cut_before || (!feasible_before && state_.feasible());
    any |= improved;
    if (!improved) break;
  }
  return any;
}

void TwoWayFm::activate(VertexId v) {
  assert(!marked(v));
  assert(cache_.contains(v));  // callers warm the cache first
  pq_[1 - state_.block_of(v)].insert(v, cache_.value(v));
  vertex_epoch_[v] = epoch_;
  active_[v] = 1;
  marked_[v] = 0;
}

bool TwoWayFm::start_pass(VertexId u, VertexId v) {
  const bool u_border = hg_.vertex_enabled(u) && state_.is_border(u);
  const bool v_border = hg_.vertex_enabled(v) && state_.is_border(v);
  if (!u_border && !v_border) return false;

  ++epoch_;
  log_.clear();
  best_prefix_ = 0;
  cut_start_ = state_.cut();
  best_feasible_ = state_.feasible();
  best_cut_ = cut_start_;
  best_overload_ = state_.overload();
  lowest_cut_seen_ = cut_start_;
  lowest_overload_seen_ = best_overload_;
  fruitless_moves_ = 0;

  // Warm the seeds before the delta segment opens: their values describe the
  // rollback target state, so a full rollback must not drop them.
  if (u_border) cache_.warm(hg_, state_, u);
  if (v_border) cache_.warm(hg_, state_, v);

  cache_.segment_begin();
  pass_open_ = true;
  ++passes_;

  if (u_border) activate(u);
  if (v_border && v != u) activate(v);
  return true;
}

bool TwoWayFm::step() {
  assert(pass_open_);
  // A queue is consulted only while its block is underloaded.
  int chosen = -1;
  for (int i = 0; i < 2; ++i) {
    if (pq_[i].empty()) continue;
    if (state_.block_weight(i) >= state_.target_weights()[static_cast<std::size_t>(i)]) continue;
    if (chosen < 0 || pq_[i].top_key() > pq_[chosen].top_key() ||
        (pq_[i].top_key() == pq_[chosen].top_key() && rng_.coin())) {
      chosen = i;
    }
  }
  if (chosen < 0) return false;

  const auto [v, g] = pq_[chosen].extract_top();
  assert(cache_.contains(v) && cache_.value(v) == g);
  apply_move(v, chosen, g);
  ++moves_;

  const Weight cut = state_.cut();
  const Weight overload = state_.overload();
  log_.push_back({v, 1 - chosen, chosen, cut, overload});

  bool improvement = false;
  if (cut < lowest_cut_seen_) {
    lowest_cut_seen_ = cut;
    improvement = true;
  }
  if (overload < lowest_overload_seen_) {
    lowest_overload_seen_ = overload;
    improvement = true;
  }
  fruitless_moves_ = improvement ? 0 : fruitless_moves_ + 1;

  // Track the rollback target: the lowest-cut prefix that satisfies the
  // balance constraint, never worse than the starting cut.
  if (cut <= cut_start_) {
    const bool feasible = state_.feasible();
    const bool better =
        (feasible && !best_feasible_) ||
        (feasible == best_feasible_ &&
         (feasible ? cut < best_cut_
                   : (overload < best_overload_ || (overload == best_overload_ && cut < best_cut_))));
    if (better) {
      best_feasible_ = feasible;
      best_cut_ = cut;
      best_overload_ = overload;
      best_prefix_ = log_.size();
      cache_.segment_commit();
    }
  }

  return fruitless_moves_ < config_.move_limit;
}

void TwoWayFm::touch_pin(VertexId p, Weight d, bool locked) {
  cache_.apply_delta(p, d);
  if (!locked && active(p)) {
    pq_[1 - state_.block_of(p)].adjust(p, d);
  }
}

void TwoWayFm::delta_update(NetId e, VertexId mover, int to) {
  // Standard two-way delta-gain rules evaluated on post-move pin counts.
  // Locked nets only feed the cache: the pins they still affect are marked,
  // so no queue entry depends on them.
  const bool locked = config_.use_net_locking && label(e) == kLocked;
  const Weight w = hg_.net_weight(e);
  const auto phi = state_.phi(e);
  const int from = 1 - to;
  const auto pin_count_to = phi[static_cast<std::size_t>(to)];
  const auto pin_count_from = phi[static_cast<std::size_t>(from)];

  if (pin_count_to == 1) {
    for (VertexId p : hg_.pins(e)) {
      if (p != mover) touch_pin(p, w, locked);
    }
  } else if (pin_count_to == 2) {
    for (VertexId p : hg_.pins(e)) {
      if (p != mover && state_.block_of(p) == to) {
        touch_pin(p, -w, locked);
        break;
      }
    }
  }
  if (pin_count_from == 0) {
    for (VertexId p : hg_.pins(e)) {
      if (p != mover) touch_pin(p, -w, locked);
    }
  } else if (pin_count_from == 1) {
    for (VertexId p : hg_.pins(e)) {
      if (state_.block_of(p) == from) {
        touch_pin(p, w, locked);
        break;
      }
    }
  }
}

void TwoWayFm::apply_move(VertexId v, int to, Weight gain_used) {
  state_.move(v, to);
  vertex_epoch_[v] = epoch_;
  marked_[v] = 1;
  active_[v] = 0;
  cache_.set_from_move(v, -gain_used);

  for (NetId e : hg_.incident_nets(v)) {
    delta_update(e, v, to);
    // free -> loose on the first moved pin; loose -> locked once moved pins
    // sit in both blocks
    if (net_epoch_[e] != epoch_) {
      net_epoch_[e] = epoch_;
      net_label_[e] = kFree;
      net_moved_to_[0][e] = 0;
      net_moved_to_[1][e] = 0;
    }
    net_moved_to_[to][e] = 1;
    net_label_[e] = net_moved_to_[0][e] && net_moved_to_[1][e] ? kLocked : kLoose;
  }

  ++seen_stamp_;
  for (NetId e : hg_.incident_nets(v)) {
    for (VertexId p : hg_.pins(e)) {
      if (p == v || seen_epoch_[p] == seen_stamp_) continue;
      seen_epoch_[p] = seen_stamp_;
      if (marked(p)) continue;
      if (active(p)) {
        if (!state_.is_border(p)) {
          pq_[1 - state_.block_of(p)].remove(p);
          active_[p] = 0;
        }
      } else if (state_.is_border(p)) {
        cache_.warm(hg_, state_, p);
        activate(p);
      }
    }
  }
}

bool TwoWayFm::queue_keys_consistent() const {
  for (VertexId v = 0; v < hg_.vertex_capacity(); ++v) {
    const bool is_active = active(v);
    const bool queued = pq_[0].contains(v) || pq_[1].contains(v);
    if (is_active != queued) return false;
    if (is_active) {
      const auto& pq = pq_[1 - state_.block_of(v)];
      if (!pq.contains(v) || !cache_.contains(v) || pq.key_of(v) != cache_.value(v)) return false;
    }
  }
  return true;
}

void TwoWayFm::finish_pass() {
  assert(pass_open_);
  while (log_.size() > best_prefix_) {
    const MoveRecord mv = log_.back();
    log_.pop_back();
    state_.move(mv.vertex, mv.from);
  }
  cache_.segment_rollback();
  pq_[0].clear();
  pq_[1].clear();
  pass_open_ = false;
  if (state_.cut() > cut_start_) ++monotonicity_violations_;
}

}  // namespace hgpart
