#ifndef HGPART_IO_HGR_IO_HPP
#define HGPART_IO_HGR_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "../hypergraph.hpp"
#include "../types.hpp"

namespace hgpart {
namespace io {

struct LoadInfo {
  std::int64_t single_node_nets_removed = 0;
  std::int64_t duplicate_pins_removed = 0;
};

// hMetis hgr: header "m n [fmt]" with fmt 1 = net weights prefix net lines,
// 10 = vertex weight lines follow the nets, 11 = both. '%' lines are
// comments; pins are 1-based. Single-node nets are disabled at load and
// counted; duplicate pins within a net are dropped with a count.
Hypergraph parse_hgr(std::string_view text, LoadInfo* info = nullptr);
Hypergraph read_hgr_file(const std::string& path, LoadInfo* info = nullptr);

// Writes the enabled part of the hypergraph back in hgr form, picking the
// lightest fmt code that preserves the weights.
void write_hgr(const Hypergraph& hg, std::ostream& out);

// One line per vertex holding its 0-based block id.
void write_partition(std::span<const std::int32_t> blocks, std::ostream& out);
void write_partition_file(std::span<const std::int32_t> blocks, const std::string& path);

// Row-net model: every matrix row becomes a net over the columns of its
// nonzeros; empty rows are discarded. Returns the discarded-row count.
std::int64_t convert_mtx_to_hgr(std::istream& in, std::ostream& out);

// DIMACS CNF: every clause becomes a net; a variable and its complement map
// to one vertex. Returns the discarded (empty) clause count.
std::int64_t convert_cnf_to_hgr(std::istream& in, std::ostream& out);

}  // namespace io
}  // namespace hgpart

#endif
