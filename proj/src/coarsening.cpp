#include "coarsening.hpp"

#include <cassert>
#include <cmath>

namespace hgpart {

std::optional<Rating> rate(const Hypergraph& hg, VertexId u, double c_max, Rng& rng) {
  // One accumulation pass over I(u): score[v] = sum over shared nets of
  // omega(e) / (|e| - 1), then scale by 1 / (c(u) c(v)).
  static thread_local std::vector<double> score;
  static thread_local std::vector<VertexId> candidates;
  if (score.size() < hg.vertex_capacity()) score.resize(hg.vertex_capacity(), 0.0);
  candidates.clear();

  for (NetId e : hg.incident_nets(u)) {
    const std::uint32_t size = hg.net_size(e);
    if (size < 2) continue;
    const double contribution = static_cast<double>(hg.net_weight(e)) / (size - 1);
    for (VertexId v : hg.pins(e)) {
      if (v == u) continue;
      if (score[v] == 0.0) candidates.push_back(v);
      score[v] += contribution;
    }
  }

  const double cu = static_cast<double>(hg.vertex_weight(u));
  Rating best_fit;        // merged weight stays within c_max
  Rating best_overflow;   // fallback when every merge overflows
  std::uint32_t ties_fit = 0;
  std::uint32_t ties_overflow = 0;
  for (VertexId v : candidates) {
    const double cv = static_cast<double>(hg.vertex_weight(v));
    const double s = score[v] / (std::max(cu, 1.0) * std::max(cv, 1.0));
    score[v] = 0.0;
    if (cv > c_max) continue;
    Rating& best = (cu + cv <= c_max) ? best_fit : best_overflow;
    std::uint32_t& ties = (cu + cv <= c_max) ? ties_fit : ties_overflow;
    if (best.partner == kInvalidVertex || s > best.score) {
      best = {s, v};
      ties = 1;
    } else if (s == best.score) {
      ++ties;
      if (rng.below(ties) == 0) best.partner = v;
    }
  }
  if (best_fit.partner != kInvalidVertex) return best_fit;
  if (best_overflow.partner != kInvalidVertex) return best_overflow;
  return std::nullopt;
}

Coarsener::Coarsener(Hypergraph& hg, const CoarseningConfig& config, Rng& rng)
    : hg_(hg),
      config_(config),
      rng_(rng),
      c_max_(config.weight_scale *
             static_cast<double>(ceil_div(hg.total_vertex_weight(), config.coarsest_size))),
      pq_(hg.vertex_capacity()),
      partner_(hg.vertex_capacity(), kInvalidVertex),
      valid_(hg.vertex_capacity(), 0) {
  result_.fingerprint_seed = rng_.next();
  for (VertexId u = 0; u < hg_.vertex_capacity(); ++u) {
    if (!hg_.vertex_enabled(u)) continue;
    if (static_cast<double>(hg_.vertex_weight(u)) > c_max_) continue;
    if (auto r = rate_tracked(u)) {
      pq_.insert(u, r->score);
      partner_[u] = r->partner;
      valid_[u] = 1;
    }
  }
}

std::optional<Rating> Coarsener::rate_tracked(VertexId u) {
  ++result_.rating_calls;
  return rate(hg_, u, c_max_, rng_);
}

void Coarsener::refresh(VertexId w) {
  if (!hg_.vertex_enabled(w)) {
    pq_.remove_if_contains(w);
    return;
  }
  if (static_cast<double>(hg_.vertex_weight(w)) > c_max_) {
    pq_.remove_if_contains(w);
    return;
  }
  if (auto r = rate_tracked(w)) {
    pq_.insert_or_update(w, r->score);
    partner_[w] = r->partner;
    valid_[w] = 1;
  } else {
    pq_.remove_if_contains(w);
  }
}

bool Coarsener::step() {
  while (hg_.num_vertices() > config_.coarsest_size && !pq_.empty()) {
    const VertexId u = pq_.top_id();
    if (config_.lazy && !valid_[u]) {
      pq_.remove(u);
      if (hg_.vertex_enabled(u) && static_cast<double>(hg_.vertex_weight(u)) <= c_max_) {
        if (auto r = rate_tracked(u)) {
          pq_.insert(u, r->score);
          partner_[u] = r->partner;
          valid_[u] = 1;
        }
      }
      continue;
    }

    const double score = pq_.top_key();
    pq_.remove(u);
    const VertexId v = partner_[u];
    assert(hg_.vertex_enabled(v));
    if (on_extract) on_extract(u, v, score);

    CoarseningLevel level;
    level.memento = hg_.contract(u, v);
    pq_.remove_if_contains(v);
    level.removals = hg_.remove_single_node_nets(u);
    auto parallel = hg_.remove_parallel_nets(u, result_.fingerprint_seed);
    level.removals.insert(level.removals.end(), parallel.begin(), parallel.end());

    if (config_.lazy) {
      for (VertexId w : hg_.neighbors(u)) {
        valid_[w] = 0;
      }
      if (static_cast<double>(hg_.vertex_weight(u)) <= c_max_) {
        // reinsert with the stale key; re-rated when it reaches the top
        pq_.insert(u, score);
        valid_[u] = 0;
      }
    } else {
      refresh(u);
      for (VertexId w : hg_.neighbors(u)) refresh(w);
    }

    result_.levels.push_back(std::move(level));
    return true;
  }
  return false;
}

CoarseningResult coarsen(Hypergraph& hg, const CoarseningConfig& config, Rng& rng) {
  Coarsener coarsener(hg, config, rng);
  while (coarsener.step()) {
  }
  return coarsener.take_result();
}

}  // namespace hgpart
