// hgpart command line front end. Talks to the library exclusively through the
// C API in hgpart.h; aggregation for the bench harness happens here.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgpart.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitVerifyFailed = 3;

struct HypergraphDeleter {
  void operator()(hgp_hypergraph* hg) const { hgp_hypergraph_free(hg); }
};
struct ResultDeleter {
  void operator()(hgp_result* r) const { hgp_result_free(r); }
};
using HypergraphPtr = std::unique_ptr<hgp_hypergraph, HypergraphDeleter>;
using ResultPtr = std::unique_ptr<hgp_result, ResultDeleter>;

struct PartitionOptions {
  std::string hgr;
  int k = 0;
  double epsilon = 0.03;
  std::uint64_t seed = 0;
  std::string output;
  std::string stats;
  long long t = 320;
  double s = 3.25;
  int c = 350;
  int tau = 5;
  int ip_runs = 20;
  std::string coarsening = "lazy";
  bool verify = false;
  bool timings = false;
};

hgp_config make_config(const PartitionOptions& opt) {
  hgp_config cfg;
  hgp_config_defaults(&cfg);
  cfg.seed = opt.seed;
  cfg.k = opt.k;
  cfg.epsilon = opt.epsilon;
  cfg.coarsest_size = opt.t;
  cfg.max_weight_scale = opt.s;
  cfg.move_limit = opt.c;
  cfg.sclap_tau = opt.tau;
  cfg.ip_runs = opt.ip_runs;
  cfg.lazy_rating = opt.coarsening == "lazy" ? 1 : 0;
  return cfg;
}

int run_partition(const PartitionOptions& opt) {
  hgp_hypergraph* raw_hg = nullptr;
  if (hgp_hypergraph_read_hgr(opt.hgr.c_str(), &raw_hg) != HGP_OK) {
    std::cerr << "error: " << hgp_last_error() << "\n";
    return kExitInputError;
  }
  HypergraphPtr hg(raw_hg);

  const hgp_config cfg = make_config(opt);
  hgp_result* raw_result = nullptr;
  const hgp_status status = hgp_partition(hg.get(), &cfg, &raw_result);
  if (status == HGP_ERR_INVALID_ARGUMENT) {
    std::cerr << "error: " << hgp_last_error() << "\n";
    return kExitInputError;
  }
  if (status != HGP_OK) {
    std::cerr << "error: " << hgp_last_error() << "\n";
    return kExitVerifyFailed;
  }
  ResultPtr result(raw_result);

  if (opt.verify && hgp_result_verify(hg.get(), result.get()) != HGP_OK) {
    std::cerr << "verification failed: " << hgp_last_error() << "\n";
    return kExitVerifyFailed;
  }

  if (!opt.output.empty() &&
      hgp_result_write_partition(result.get(), opt.output.c_str()) != HGP_OK) {
    std::cerr << "error: " << hgp_last_error() << "\n";
    return kExitInputError;
  }

  const std::string instance = std::filesystem::path(opt.hgr).filename().string();
  if (!opt.stats.empty()) {
    char* json = nullptr;
    if (hgp_result_stats_json(result.get(), instance.c_str(), opt.timings ? 1 : 0, &json) !=
        HGP_OK) {
      std::cerr << "error: " << hgp_last_error() << "\n";
      return kExitInputError;
    }
    std::ofstream out(opt.stats, std::ios::binary);
    if (!out) {
      hgp_string_free(json);
      std::cerr << "error: cannot open " << opt.stats << " for writing\n";
      return kExitInputError;
    }
    out << json;
    hgp_string_free(json);
  }

  std::cout << instance << ": k=" << opt.k << " cut=" << hgp_result_cut(result.get())
            << " imbalance=" << hgp_result_imbalance(result.get())
            << (hgp_result_feasible(result.get()) ? "" : " (infeasible)") << "\n";
  return hgp_result_feasible(result.get()) ? kExitOk : kExitInfeasible;
}

struct BenchOptions {
  std::string dir;
  std::vector<int> ks{2};
  std::vector<double> epsilons{0.03};
  std::vector<std::uint64_t> seeds;
  int repetitions = 1;
  std::string out;
  long long t = 320;
  double s = 3.25;
  int c = 350;
  int tau = 5;
  int ip_runs = 20;
  std::string coarsening = "lazy";
};

int run_bench(const BenchOptions& opt) {
  std::vector<std::string> instances;
  for (const auto& entry : std::filesystem::directory_iterator(opt.dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".hgr") {
      instances.push_back(entry.path().string());
    }
  }
  std::sort(instances.begin(), instances.end());
  if (instances.empty()) {
    std::cerr << "error: no .hgr instances in " << opt.dir << "\n";
    return kExitInputError;
  }

  std::vector<std::uint64_t> seeds = opt.seeds;
  if (seeds.empty()) {
    for (int r = 0; r < opt.repetitions; ++r) seeds.push_back(static_cast<std::uint64_t>(r));
  }

  nlohmann::ordered_json report;
  report["instances"] = nlohmann::ordered_json::array();
  // geometric means use cut 1 in place of 0 so zero-cut runs stay comparable
  auto adjusted = [](double cut) { return std::max(cut, 1.0); };

  std::map<std::pair<int, double>, std::vector<double>> geo_avg, geo_best;
  for (const std::string& path : instances) {
    const std::string name = std::filesystem::path(path).filename().string();
    hgp_hypergraph* raw_hg = nullptr;
    if (hgp_hypergraph_read_hgr(path.c_str(), &raw_hg) != HGP_OK) {
      std::cerr << "error: " << name << ": " << hgp_last_error() << "\n";
      return kExitInputError;
    }
    HypergraphPtr hg(raw_hg);

    for (int k : opt.ks) {
      for (double eps : opt.epsilons) {
        double cut_sum = 0.0;
        double time_sum = 0.0;
        long long best_cut = -1;
        int feasible_runs = 0;
        for (std::uint64_t seed : seeds) {
          PartitionOptions popt;
          popt.k = k;
          popt.epsilon = eps;
          popt.seed = seed;
          popt.t = opt.t;
          popt.s = opt.s;
          popt.c = opt.c;
          popt.tau = opt.tau;
          popt.ip_runs = opt.ip_runs;
          popt.coarsening = opt.coarsening;
          const hgp_config cfg = make_config(popt);
          hgp_result* raw_result = nullptr;
          if (hgp_partition(hg.get(), &cfg, &raw_result) != HGP_OK) {
            std::cerr << "error: " << name << ": " << hgp_last_error() << "\n";
            return kExitInputError;
          }
          ResultPtr result(raw_result);
          char* json = nullptr;
          hgp_result_stats_json(result.get(), name.c_str(), 1, &json);
          const auto record = nlohmann::json::parse(json);
          hgp_string_free(json);

          const auto cut = static_cast<long long>(hgp_result_cut(result.get()));
          cut_sum += static_cast<double>(cut);
          time_sum += record["total_ms"].get<double>();
          feasible_runs += hgp_result_feasible(result.get());
          if (best_cut < 0 || cut < best_cut) best_cut = cut;
        }
        const double avg_cut = cut_sum / static_cast<double>(seeds.size());
        nlohmann::ordered_json row;
        row["instance"] = name;
        row["k"] = k;
        row["epsilon"] = eps;
        row["repetitions"] = seeds.size();
        row["avg_cut"] = avg_cut;
        row["best_cut"] = best_cut;
        row["avg_time_ms"] = time_sum / static_cast<double>(seeds.size());
        row["feasible_runs"] = feasible_runs;
        report["instances"].push_back(std::move(row));
        geo_avg[{k, eps}].push_back(adjusted(avg_cut));
        geo_best[{k, eps}].push_back(adjusted(static_cast<double>(best_cut)));
      }
    }
  }

  report["aggregate"] = nlohmann::ordered_json::array();
  for (const auto& [key, values] : geo_avg) {
    double log_sum_avg = 0.0;
    for (double v : values) log_sum_avg += std::log(v);
    double log_sum_best = 0.0;
    for (double v : geo_best[key]) log_sum_best += std::log(v);
    nlohmann::ordered_json row;
    row["k"] = key.first;
    row["epsilon"] = key.second;
    row["geomean_avg_cut"] = std::exp(log_sum_avg / static_cast<double>(values.size()));
    row["geomean_best_cut"] = std::exp(log_sum_best / static_cast<double>(values.size()));
    report["aggregate"].push_back(std::move(row));
  }

  const std::string text = report.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << opt.out << " for writing\n";
      return kExitInputError;
    }
    out << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hgpart: multilevel hypergraph partitioner over hMetis hgr files"};
  app.require_subcommand(0, 1);

  PartitionOptions popt;
  app.add_option("--hgr", popt.hgr, "input hypergraph in hgr format");
  app.add_option("--k", popt.k, "number of blocks");
  app.add_option("--epsilon", popt.epsilon, "allowed imbalance")->capture_default_str();
  app.add_option("--seed", popt.seed, "random seed")->capture_default_str();
  app.add_option("--output", popt.output, "partition file to write");
  app.add_option("--stats", popt.stats, "stats record (JSON) to write");
  app.add_option("--t", popt.t, "coarsening stops at this many vertices")->capture_default_str();
  app.add_option("--s", popt.s, "max vertex weight scale")->capture_default_str();
  app.add_option("--c", popt.c, "FM moves without improvement")->capture_default_str();
  app.add_option("--tau", popt.tau, "SCLaP seed neighborhood size")->capture_default_str();
  app.add_option("--ip-runs", popt.ip_runs, "runs per initial partitioning algorithm")
      ->capture_default_str();
  app.add_option("--coarsening", popt.coarsening, "re-rating strategy")
      ->check(CLI::IsMember({"full", "lazy"}))
      ->capture_default_str();
  app.add_flag("--verify", popt.verify, "cross-check the cut by recomputation");
  app.add_flag("--timings", popt.timings, "include wall-clock timings in the stats record");

  auto* convert_mtx = app.add_subcommand("convert-mtx", "MatrixMarket file to hgr (row-net model)");
  std::string conv_in, conv_out;
  convert_mtx->add_option("input", conv_in, "matrix market file")->required();
  convert_mtx->add_option("output", conv_out, "hgr file to write")->required();

  auto* convert_cnf = app.add_subcommand("convert-cnf", "DIMACS CNF file to hgr");
  std::string cnf_in, cnf_out;
  convert_cnf->add_option("input", cnf_in, "cnf file")->required();
  convert_cnf->add_option("output", cnf_out, "hgr file to write")->required();

  auto* bench = app.add_subcommand("bench", "partition every .hgr in a directory and aggregate");
  BenchOptions bopt;
  bench->add_option("--dir", bopt.dir, "instance directory")->required();
  bench->add_option("--k", bopt.ks, "block counts")->delimiter(',');
  bench->add_option("--epsilon", bopt.epsilons, "imbalance values")->delimiter(',');
  bench->add_option("--seeds", bopt.seeds, "seeds, one repetition each")->delimiter(',');
  bench->add_option("--reps", bopt.repetitions, "repetitions (seeds 0..reps-1)")
      ->capture_default_str();
  bench->add_option("--out", bopt.out, "report file (stdout when omitted)");
  bench->add_option("--t", bopt.t)->capture_default_str();
  bench->add_option("--s", bopt.s)->capture_default_str();
  bench->add_option("--c", bopt.c)->capture_default_str();
  bench->add_option("--tau", bopt.tau)->capture_default_str();
  bench->add_option("--ip-runs", bopt.ip_runs)->capture_default_str();
  bench->add_option("--coarsening", bopt.coarsening)->check(CLI::IsMember({"full", "lazy"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (convert_mtx->parsed()) {
      if (hgp_convert_mtx_to_hgr(conv_in.c_str(), conv_out.c_str()) != HGP_OK) {
        std::cerr << "error: " << hgp_last_error() << "\n";
        return kExitInputError;
      }
      return kExitOk;
    }
    if (convert_cnf->parsed()) {
      if (hgp_convert_cnf_to_hgr(cnf_in.c_str(), cnf_out.c_str()) != HGP_OK) {
        std::cerr << "error: " << hgp_last_error() << "\n";
        return kExitInputError;
      }
      return kExitOk;
    }
    if (bench->parsed()) {
      return run_bench(bopt);
    }
    if (popt.hgr.empty() || popt.k < 1) {
      std::cerr << app.help();
      std::cerr << "\nerror: --hgr and --k are required\n";
      return kExitInputError;
    }
    return run_partition(popt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
