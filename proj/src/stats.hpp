#ifndef HGPART_STATS_HPP
#define HGPART_STATS_HPP

#include <cstdint>
#include <string>

#include "io/hgr_io.hpp"
#include "partitioner.hpp"

namespace hgpart {

struct RunStats {
  std::string instance;
  int k = 1;
  double epsilon = 0.03;
  std::uint64_t seed = 0;
  AlgoConfig config;
  io::LoadInfo load;
  PartitionResult result;
};

// One self-describing JSON record per run (schema in the README). Timings are
// wall-clock and excluded by default so identical runs serialize identically.
std::string stats_to_json(const RunStats& stats, bool include_timings);

}  // namespace hgpart

#endif
