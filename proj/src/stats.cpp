#include "stats.hpp"

#include <json.hpp>

namespace hgpart {

std::string stats_to_json(const RunStats& s, bool include_timings) {
  nlohmann::ordered_json j;
  j["schema"] = "hgpart-run-stats-v1";
  j["instance"] = s.instance;
  j["k"] = s.k;
  j["epsilon"] = s.epsilon;
  j["seed"] = s.seed;
  j["config"] = {
      {"coarsest_size", s.config.coarsening.coarsest_size},
      {"weight_scale", s.config.coarsening.weight_scale},
      {"rating_strategy", s.config.coarsening.lazy ? "lazy" : "full"},
      {"move_limit", s.config.refinement.move_limit},
      {"sclap_tau", s.config.sclap_tau},
      {"ip_runs_per_algorithm", s.config.ip_runs_per_algorithm},
  };
  j["cut"] = s.result.total_cut;
  j["imbalance"] = s.result.imbalance;
  j["feasible"] = s.result.feasible;
  j["flags"] = {
      {"infeasible", !s.result.feasible},
      {"single_node_nets_removed_at_load", s.load.single_node_nets_removed},
      {"duplicate_pins_removed_at_load", s.load.duplicate_pins_removed},
      {"epsilon_clamps", s.result.epsilon_clamps},
  };

  nlohmann::ordered_json bisections = nlohmann::ordered_json::array();
  for (const BisectionStats& b : s.result.bisections) {
    nlohmann::ordered_json jb;
    jb["block_ids"] = {b.k_l, b.k_h};
    jb["epsilon_prime"] = b.epsilon_prime;
    jb["target_weights"] = {b.target_weights[0], b.target_weights[1]};
    jb["block_weights"] = {b.block_weights[0], b.block_weights[1]};
    jb["cut"] = b.cut;
    jb["met_targets"] = b.met_targets;
    jb["input_vertices"] = b.input_vertices;
    jb["coarse_vertices"] = b.coarse_vertices;
    jb["contractions"] = b.contractions;
    jb["rating_calls"] = b.rating_calls;
    jb["ip_candidates"] = b.ip_candidates;
    jb["ip_winner"] = b.ip_winner;
    jb["fm_passes"] = b.fm_passes;
    jb["fm_moves"] = b.fm_moves;
    jb["fm_gain_computations"] = b.fm_gain_computations;
    jb["forced_moves"] = b.forced_moves;
    if (include_timings) {
      jb["timings_ms"] = {
          {"coarsening", b.coarsening_ms},
          {"initial_partitioning", b.initial_ms},
          {"refinement", b.refinement_ms},
      };
    }
    bisections.push_back(std::move(jb));
  }
  j["bisections"] = std::move(bisections);
  if (include_timings) j["total_ms"] = s.result.total_ms;
  return j.dump(2) + "\n";
}

}  // namespace hgpart
