#include "initial_partitioning.hpp"

#include <algorithm>
#include <cassert>

#include "addressable_pq.hpp"
#include "oracle.hpp"

namespace hgpart {

namespace {

const char* const kAlgorithmNames[kPortfolioSize] = {
    "random",         "bfs",
    "ghg-fm-global",  "ghg-fm-sequential",  "ghg-fm-round-robin",
    "ghg-net-global", "ghg-net-sequential", "ghg-net-round-robin",
    "ghg-pin-global", "ghg-pin-sequential", "ghg-pin-round-robin",
    "sclap"};

std::int8_t lighter_feasible_block(const std::array<Weight, 2>& weight,
                                   const std::array<Weight, 2>& target, Weight c) {
  const int lighter = weight[0] <= weight[1] ? 0 : 1;
  if (weight[static_cast<std::size_t>(lighter)] + c <= target[static_cast<std::size_t>(lighter)]) {
    return static_cast<std::int8_t>(lighter);
  }
  if (weight[static_cast<std::size_t>(1 - lighter)] + c <=
      target[static_cast<std::size_t>(1 - lighter)]) {
    return static_cast<std::int8_t>(1 - lighter);
  }
  return static_cast<std::int8_t>(lighter);
}

// Fills in cut, block weights, load and the feasibility flag.
void finalize(const Hypergraph& hg, const PortfolioConfig& cfg, Candidate& c) {
  std::array<Weight, 2> weight{0, 0};
  std::array<std::int64_t, 2> count{0, 0};
  for (VertexId v = 0; v < hg.vertex_capacity(); ++v) {
    if (!hg.vertex_enabled(v)) continue;
    assert(c.assignment[v] == 0 || c.assignment[v] == 1);
    weight[static_cast<std::size_t>(c.assignment[v])] += hg.vertex_weight(v);
    ++count[static_cast<std::size_t>(c.assignment[v])];
  }
  c.cut = oracle::recompute_cut(hg, c.assignment);
  const double t0 = static_cast<double>(std::max<Weight>(cfg.target_weights[0], 1));
  const double t1 = static_cast<double>(std::max<Weight>(cfg.target_weights[1], 1));
  c.load = std::max(static_cast<double>(weight[0]) / t0, static_cast<double>(weight[1]) / t1);
  const bool blocks_nonempty = (count[0] > 0 && count[1] > 0) || (count[0] + count[1]) < 2;
  c.feasible = blocks_nonempty && weight[0] <= cfg.target_weights[0] &&
               weight[1] <= cfg.target_weights[1];
}

// BFS expansion order: pins of each net in storage order after a seeded
// shuffle, restarting from a random unvisited vertex on empty frontiers.
class BfsDriver {
 public:
  BfsDriver(const Hypergraph& hg, Rng& rng) : hg_(hg), rng_(rng), visited_(hg.vertex_capacity(), 0) {}

  void push(VertexId v) {
    visited_[v] = 1;
    queue_.push_back(v);
  }

  bool pop(VertexId& out) {
    if (head_ == queue_.size() && !restart()) return false;
    out = queue_[head_++];
    return true;
  }

  void expand(VertexId v) {
    scratch_.clear();
    for (NetId e : hg_.incident_nets(v)) {
      for (VertexId p : hg_.pins(e)) {
        if (!visited_[p]) {
          visited_[p] = 1;
          scratch_.push_back(p);
        }
      }
    }
    rng_.shuffle(scratch_);
    queue_.insert(queue_.end(), scratch_.begin(), scratch_.end());
  }

  bool visited(VertexId v) const { return visited_[v] != 0; }

 private:
  bool restart() {
    std::vector<VertexId> unvisited;
    for (VertexId v = 0; v < hg_.vertex_capacity(); ++v) {
      if (hg_.vertex_enabled(v) && !visited_[v]) unvisited.push_back(v);
    }
    if (unvisited.empty()) return false;
    push(unvisited[rng_.below(unvisited.size())]);
    return true;
  }

  const Hypergraph& hg_;
  Rng& rng_;
  std::vector<std::uint8_t> visited_;
  std::vector<VertexId> queue_;
  std::size_t head_ = 0;
  std::vector<VertexId> scratch_;
};

VertexId bfs_last(const Hypergraph& hg, VertexId start, Rng& rng) {
  BfsDriver bfs(hg, rng);
  bfs.push(start);
  VertexId v = start;
  VertexId last = start;
  while (bfs.pop(v)) {
    last = v;
    bfs.expand(v);
  }
  return last;
}

}  // namespace

const char* portfolio_algorithm_name(int index) { return kAlgorithmNames[index]; }

std::pair<VertexId, VertexId> pseudo_peripheral_pair(const Hypergraph& hg, Rng& rng) {
  const auto ids = hg.enabled_vertices();
  assert(!ids.empty());
  const VertexId start = ids[rng.below(ids.size())];
  const VertexId a = bfs_last(hg, start, rng);
  const VertexId b = bfs_last(hg, a, rng);
  return {a, b};
}

Candidate random_bipartition(const Hypergraph& hg, const PortfolioConfig& cfg, Rng& rng) {
  Candidate c;
  c.assignment.assign(hg.vertex_capacity(), -1);
  auto ids = hg.enabled_vertices();
  rng.shuffle(ids);
  std::array<Weight, 2> weight{0, 0};
  for (VertexId v : ids) {
    const Weight cw = hg.vertex_weight(v);
    auto b = static_cast<std::int8_t>(rng.below(2));
    if (weight[static_cast<std::size_t>(b)] + cw > cfg.target_weights[static_cast<std::size_t>(b)]) {
      b = static_cast<std::int8_t>(1 - b);
      if (weight[static_cast<std::size_t>(b)] + cw >
          cfg.target_weights[static_cast<std::size_t>(b)]) {
        b = weight[0] <= weight[1] ? 0 : 1;
      }
    }
    c.assignment[v] = b;
    weight[static_cast<std::size_t>(b)] += cw;
  }
  finalize(hg, cfg, c);
  return c;
}

Candidate bfs_bipartition(const Hypergraph& hg, const PortfolioConfig& cfg, Rng& rng) {
  Candidate c;
  c.assignment.assign(hg.vertex_capacity(), -1);
  for (VertexId v : hg.enabled_vertices()) c.assignment[v] = 1;

  const auto ids = hg.enabled_vertices();
  BfsDriver bfs(hg, rng);
  bfs.push(ids[rng.below(ids.size())]);
  Weight w0 = 0;
  VertexId v = 0;
  while (bfs.pop(v)) {
    if (w0 + hg.vertex_weight(v) > cfg.target_weights[0]) break;
    c.assignment[v] = 0;
    w0 += hg.vertex_weight(v);
    bfs.expand(v);
  }
  finalize(hg, cfg, c);
  return c;
}

Weight fm_growth_score(const Hypergraph& hg, const std::vector<std::array<std::int32_t, 2>>& counts,
                       VertexId v, int i) {
  Weight g = 0;
  for (NetId e : hg.incident_nets(v)) {
    const auto assigned = counts[e][static_cast<std::size_t>(i)];
    if (assigned == static_cast<std::int32_t>(hg.net_size(e)) - 1) g += hg.net_weight(e);
    if (assigned == 0) g -= hg.net_weight(e);
  }
  return g;
}

Weight max_net_score(const Hypergraph& hg, const std::vector<std::array<std::int32_t, 2>>& counts,
                     VertexId v, int i) {
  Weight g = 0;
  for (NetId e : hg.incident_nets(v)) {
    if (counts[e][static_cast<std::size_t>(i)] > 0) g += hg.net_weight(e);
  }
  return g;
}

Weight max_pin_score(const Hypergraph& hg, const std::vector<std::array<std::int32_t, 2>>& counts,
                     VertexId v, int i) {
  Weight g = 0;
  for (NetId e : hg.incident_nets(v)) g += counts[e][static_cast<std::size_t>(i)];
  return g;
}

namespace {

class GrowthRun {
 public:
  GrowthRun(const Hypergraph& hg, const PortfolioConfig& cfg, GhgScore score, Rng& rng)
      : hg_(hg),
        cfg_(cfg),
        score_(score),
        rng_(rng),
        block_(hg.vertex_capacity(), -1),
        counts_(hg.net_capacity(), {0, 0}),
        pq_{AddressablePq<Weight>(hg.vertex_capacity()),
            AddressablePq<Weight>(hg.vertex_capacity())},
        dropped_{std::vector<std::uint8_t>(hg.vertex_capacity(), 0),
                 std::vector<std::uint8_t>(hg.vertex_capacity(), 0)},
        remaining_(hg.num_vertices()) {
    for (VertexId v : hg.enabled_vertices()) unassigned_.push_back(v);
  }

  Weight score_of(VertexId v, int i) const {
    switch (score_) {
      case GhgScore::kFm:
        return fm_growth_score(hg_, counts_, v, i);
      case GhgScore::kMaxNet:
        return max_net_score(hg_, counts_, v, i);
      case GhgScore::kMaxPin:
        return max_pin_score(hg_, counts_, v, i);
    }
    return 0;
  }

  void assign(VertexId v, int i) {
    assert(block_[v] == -1);
    block_[v] = static_cast<std::int8_t>(i);
    weight_[static_cast<std::size_t>(i)] += hg_.vertex_weight(v);
    --remaining_;
    pq_[0].remove_if_contains(v);
    pq_[1].remove_if_contains(v);
    for (NetId e : hg_.incident_nets(v)) {
      ++counts_[e][static_cast<std::size_t>(i)];
      for (VertexId p : hg_.pins(e)) {
        if (block_[p] != -1) continue;
        // scores of frontier vertices change only for the receiving block
        if (!dropped_[static_cast<std::size_t>(i)][p]) {
          pq_[static_cast<std::size_t>(i)].insert_or_update(p, score_of(p, i));
        }
      }
    }
  }

  // Pops misfits until the top of pq[i] fits the target; false when no
  // assignable vertex remains in that queue.
  bool clean_top(int i) {
    auto& pq = pq_[static_cast<std::size_t>(i)];
    while (!pq.empty()) {
      const VertexId w = pq.top_id();
      if (weight_[static_cast<std::size_t>(i)] + hg_.vertex_weight(w) <=
          cfg_.target_weights[static_cast<std::size_t>(i)]) {
        return true;
      }
      pq.remove(w);
      dropped_[static_cast<std::size_t>(i)][w] = 1;
    }
    return false;
  }

  // Seeds the queue of block i from a random unassigned vertex; declares the
  // block done if the pick cannot fit.
  bool restart(int i) {
    if (done_[static_cast<std::size_t>(i)]) return false;
    compact_unassigned();
    if (unassigned_.empty()) return false;
    const VertexId w = unassigned_[rng_.below(unassigned_.size())];
    if (weight_[static_cast<std::size_t>(i)] + hg_.vertex_weight(w) >
        cfg_.target_weights[static_cast<std::size_t>(i)]) {
      done_[static_cast<std::size_t>(i)] = true;
      return false;
    }
    assign(w, i);
    return true;
  }

  bool grow_one(int i) {
    if (done_[static_cast<std::size_t>(i)]) return false;
    if (clean_top(i)) {
      assign(pq_[static_cast<std::size_t>(i)].top_id(), i);
      return true;
    }
    return restart(i);
  }

  void run(GhgGrowth growth, VertexId seed0, VertexId seed1) {
    assign(seed0, 0);
    if (block_[seed1] == -1) assign(seed1, 1);

    switch (growth) {
      case GhgGrowth::kSequential:
        while (remaining_ > 0 && grow_one(0)) {
        }
        while (remaining_ > 0 && grow_one(1)) {
        }
        break;
      case GhgGrowth::kRoundRobin: {
        int cur = 0;
        int stuck = 0;
        while (remaining_ > 0 && stuck < 2) {
          stuck = grow_one(cur) ? 0 : stuck + 1;
          cur = 1 - cur;
        }
        break;
      }
      case GhgGrowth::kGlobal: {
        for (;;) {
          if (remaining_ == 0) break;
          const bool has0 = !done_[0] && clean_top(0);
          const bool has1 = !done_[1] && clean_top(1);
          if (has0 && has1) {
            const Weight k0 = pq_[0].top_key();
            const Weight k1 = pq_[1].top_key();
            const int pick = k0 > k1 ? 0 : (k1 > k0 ? 1 : (rng_.coin() ? 0 : 1));
            assign(pq_[static_cast<std::size_t>(pick)].top_id(), pick);
          } else if (has0) {
            assign(pq_[0].top_id(), 0);
          } else if (has1) {
            assign(pq_[1].top_id(), 1);
          } else {
            const int lighter = weight_[0] <= weight_[1] ? 0 : 1;
            if (!restart(lighter) && !restart(1 - lighter)) break;
          }
        }
        break;
      }
    }

    // unreached vertices go to the lighter feasible block
    compact_unassigned();
    for (VertexId v : unassigned_) {
      const auto b = lighter_feasible_block(weight_, cfg_.target_weights, hg_.vertex_weight(v));
      block_[v] = b;
      weight_[static_cast<std::size_t>(b)] += hg_.vertex_weight(v);
    }
    unassigned_.clear();
    remaining_ = 0;
  }

  std::vector<std::int8_t> take_blocks() { return std::move(block_); }

 private:
  void compact_unassigned() {
    std::erase_if(unassigned_, [&](VertexId v) { return block_[v] != -1; });
  }

  const Hypergraph& hg_;
  const PortfolioConfig& cfg_;
  GhgScore score_;
  Rng& rng_;
  std::vector<std::int8_t> block_;
  std::vector<std::array<std::int32_t, 2>> counts_;
  AddressablePq<Weight> pq_[2];
  std::vector<std::uint8_t> dropped_[2];
  std::vector<VertexId> unassigned_;
  std::array<Weight, 2> weight_{0, 0};
  std::array<bool, 2> done_{false, false};
  std::int64_t remaining_ = 0;
};

}  // namespace

Candidate greedy_hypergraph_growing(const Hypergraph& hg, const PortfolioConfig& cfg,
                                    GhgScore score, GhgGrowth growth, Rng& rng) {
  Candidate c;
  auto [a, b] = pseudo_peripheral_pair(hg, rng);
  if (b == a && hg.num_vertices() > 1) {
    for (VertexId v : hg.enabled_vertices()) {
      if (v != a) {
        b = v;
        break;
      }
    }
  }
  GrowthRun run(hg, cfg, score, rng);
  run.run(growth, a, b);
  c.assignment = run.take_blocks();
  finalize(hg, cfg, c);
  return c;
}

Candidate sclap_bipartition(const Hypergraph& hg, const PortfolioConfig& cfg, Rng& rng) {
  Candidate c;
  c.assignment.assign(hg.vertex_capacity(), -1);
  std::array<Weight, 2> weight{0, 0};
  auto label_of = [&](VertexId v) { return c.assignment[v]; };
  auto set_label = [&](VertexId v, std::int8_t l) {
    if (c.assignment[v] == l) return;
    if (c.assignment[v] != -1) {
      weight[static_cast<std::size_t>(c.assignment[v])] -= hg.vertex_weight(v);
    }
    c.assignment[v] = l;
    if (l != -1) weight[static_cast<std::size_t>(l)] += hg.vertex_weight(v);
  };

  const auto [a, b] = pseudo_peripheral_pair(hg, rng);
  set_label(a, 0);
  auto seed_neighborhood = [&](VertexId s, std::int8_t l, VertexId skip) {
    auto nbrs = hg.neighbors(s);
    rng.shuffle(nbrs);
    int placed = 0;
    for (VertexId w : nbrs) {
      if (placed >= cfg.tau) break;
      if (w == skip) continue;
      set_label(w, l);
      ++placed;
    }
  };
  seed_neighborhood(a, 0, b);
  if (b != a) {
    set_label(b, 1);
    seed_neighborhood(b, 1, a);
  }

  auto ids = hg.enabled_vertices();
  for (int round = 0; round < 100; ++round) {
    bool changed = false;
    rng.shuffle(ids);
    for (VertexId v : ids) {
      std::array<Weight, 2> support{0, 0};
      for (NetId e : hg.incident_nets(v)) {
        bool has[2] = {false, false};
        for (VertexId p : hg.pins(e)) {
          if (p != v && c.assignment[p] != -1) has[c.assignment[p]] = true;
        }
        if (has[0]) support[0] += hg.net_weight(e);
        if (has[1]) support[1] += hg.net_weight(e);
      }
      const std::int8_t cur = label_of(v);
      std::int8_t want = -1;
      if (support[0] > support[1]) {
        want = 0;
      } else if (support[1] > support[0]) {
        want = 1;
      } else if (support[0] > 0) {
        want = cur != -1 ? cur : static_cast<std::int8_t>(rng.below(2));
      }
      if (want == -1 || want == cur) continue;
      if (weight[static_cast<std::size_t>(want)] + hg.vertex_weight(v) >
          cfg.target_weights[static_cast<std::size_t>(want)]) {
        continue;
      }
      set_label(v, want);
      changed = true;
    }
    if (!changed) break;
  }

  // vertices the propagation never reached
  for (VertexId v : hg.enabled_vertices()) {
    if (c.assignment[v] == -1) {
      const auto l = lighter_feasible_block(weight, cfg.target_weights, hg.vertex_weight(v));
      set_label(v, l);
    }
  }
  finalize(hg, cfg, c);
  return c;
}

PortfolioResult run_portfolio(const Hypergraph& hg, const PortfolioConfig& cfg, Rng& rng) {
  PortfolioResult out;
  bool have = false;
  for (int algo = 0; algo < kPortfolioSize; ++algo) {
    for (int run = 0; run < cfg.runs_per_algorithm; ++run) {
      Candidate c;
      if (algo == 0) {
        c = random_bipartition(hg, cfg, rng);
      } else if (algo == 1) {
        c = bfs_bipartition(hg, cfg, rng);
      } else if (algo == 11) {
        c = sclap_bipartition(hg, cfg, rng);
      } else {
        const int ghg = algo - 2;
        const auto score = static_cast<GhgScore>(ghg / 3);
        const auto growth = static_cast<GhgGrowth>(ghg % 3);
        c = greedy_hypergraph_growing(hg, cfg, score, growth, rng);
      }
      c.algorithm = algo;
      c.run = run;
      ++out.candidates_evaluated;
      const Candidate& best = out.winner;
      bool better;
      if (!have) {
        better = true;
      } else if (c.feasible != best.feasible) {
        better = c.feasible;
      } else if (c.feasible) {
        better = c.cut < best.cut || (c.cut == best.cut && c.load < best.load);
      } else {
        better = c.load < best.load || (c.load == best.load && c.cut < best.cut);
      }
      if (better) {
        out.winner = std::move(c);
        have = true;
      }
    }
  }

  // Degenerate guard: a one-sided "bisection" would make the recursion
  // collapse, so force at least one vertex over.
  if (hg.num_vertices() >= 2) {
    std::array<std::int64_t, 2> count{0, 0};
    for (VertexId v : hg.enabled_vertices()) {
      ++count[static_cast<std::size_t>(out.winner.assignment[v])];
    }
    if (count[0] == 0 || count[1] == 0) {
      const int empty = count[0] == 0 ? 0 : 1;
      VertexId lightest = kInvalidVertex;
      for (VertexId v : hg.enabled_vertices()) {
        if (lightest == kInvalidVertex || hg.vertex_weight(v) < hg.vertex_weight(lightest)) {
          lightest = v;
        }
      }
      out.winner.assignment[lightest] = static_cast<std::int8_t>(empty);
      finalize(hg, cfg, out.winner);
    }
  }
  return out;
}

}  // namespace hgpart
