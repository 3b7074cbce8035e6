#include "hgr_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace hgpart {
namespace io {

namespace {

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;
  int line = 0;

  // Next non-comment, non-blank line; false at end of input.
  bool next_line(std::string_view& out) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      pos = end + 1;
      ++line;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      const auto first = raw.find_first_not_of(" \t");
      if (first == std::string_view::npos) continue;  // blank
      if (raw[first] == '%') continue;                // comment
      out = raw;
      return true;
    }
    return false;
  }
};

std::vector<std::int64_t> parse_ints(std::string_view line, int line_no) {
  std::vector<std::int64_t> out;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p >= end) break;
    std::int64_t value = 0;
    const auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc()) throw ParseError(line_no, "expected an integer");
    p = next;
    out.push_back(value);
  }
  return out;
}

}  // namespace

Hypergraph parse_hgr(std::string_view text, LoadInfo* info) {
  Tokenizer tok{text};
  std::string_view line;
  if (!tok.next_line(line)) throw ParseError(1, "missing header line");

  const auto header = parse_ints(line, tok.line);
  if (header.size() < 2 || header.size() > 3) {
    throw ParseError(tok.line, "header must be 'num_nets num_vertices [fmt]'");
  }
  const std::int64_t m = header[0];
  const std::int64_t n = header[1];
  if (m < 0 || n < 1) throw ParseError(tok.line, "invalid counts in header");
  bool has_net_weights = false;
  bool has_vertex_weights = false;
  if (header.size() == 3) {
    switch (header[2]) {
      case 1:
        has_net_weights = true;
        break;
      case 10:
        has_vertex_weights = true;
        break;
      case 11:
        has_net_weights = true;
        has_vertex_weights = true;
        break;
      default:
        throw ParseError(tok.line, "fmt must be 1, 10 or 11");
    }
  }

  LoadInfo local;
  std::vector<std::vector<VertexId>> nets;
  std::vector<Weight> net_weights;
  nets.reserve(static_cast<std::size_t>(m));
  for (std::int64_t e = 0; e < m; ++e) {
    if (!tok.next_line(line)) throw ParseError(tok.line, "unexpected end of file inside net list");
    auto values = parse_ints(line, tok.line);
    std::size_t at = 0;
    Weight w = 1;
    if (has_net_weights) {
      if (values.empty()) throw ParseError(tok.line, "net line missing weight");
      w = values[at++];
      if (w <= 0) throw ParseError(tok.line, "net weight must be positive");
    }
    if (at == values.size()) throw ParseError(tok.line, "net has no pins");
    std::vector<VertexId> pins;
    std::set<std::int64_t> seen;
    for (; at < values.size(); ++at) {
      const std::int64_t pin = values[at];
      if (pin < 1 || pin > n) {
        throw ParseError(tok.line, "pin id " + std::to_string(pin) + " out of range [1, " +
                                       std::to_string(n) + "]");
      }
      if (!seen.insert(pin).second) {
        ++local.duplicate_pins_removed;
        continue;
      }
      pins.push_back(static_cast<VertexId>(pin - 1));
    }
    nets.push_back(std::move(pins));
    net_weights.push_back(w);
  }

  std::vector<Weight> vertex_weights;
  if (has_vertex_weights) {
    vertex_weights.reserve(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v) {
      if (!tok.next_line(line)) {
        throw ParseError(tok.line, "unexpected end of file inside vertex weights");
      }
      const auto values = parse_ints(line, tok.line);
      if (values.size() != 1) throw ParseError(tok.line, "expected one vertex weight per line");
      if (values[0] < 1) throw ParseError(tok.line, "vertex weight must be positive");
      vertex_weights.push_back(values[0]);
    }
  }
  if (tok.next_line(line)) throw ParseError(tok.line, "trailing content after hypergraph");

  Hypergraph hg(static_cast<std::uint64_t>(n), nets,
                has_net_weights ? net_weights : std::vector<Weight>{},
                has_vertex_weights ? vertex_weights : std::vector<Weight>{});
  local.single_node_nets_removed = hg.drop_single_node_nets();
  if (info != nullptr) *info = local;
  return hg;
}

Hypergraph read_hgr_file(const std::string& path, LoadInfo* info) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hgr(buf.str(), info);
}

void write_hgr(const Hypergraph& hg, std::ostream& out) {
  const auto nets = hg.enabled_nets();
  bool net_weights = false;
  bool vertex_weights = false;
  for (NetId e : nets) net_weights |= hg.net_weight(e) != 1;
  for (VertexId v = 0; v < hg.vertex_capacity(); ++v) {
    if (hg.vertex_enabled(v)) vertex_weights |= hg.vertex_weight(v) != 1;
  }

  out << nets.size() << ' ' << hg.vertex_capacity();
  if (net_weights && vertex_weights) {
    out << " 11";
  } else if (net_weights) {
    out << " 1";
  } else if (vertex_weights) {
    out << " 10";
  }
  out << '\n';
  for (NetId e : nets) {
    bool first = true;
    if (net_weights) {
      out << hg.net_weight(e);
      first = false;
    }
    for (VertexId p : hg.pins(e)) {
      if (!first) out << ' ';
      out << (p + 1);
      first = false;
    }
    out << '\n';
  }
  if (vertex_weights) {
    for (VertexId v = 0; v < hg.vertex_capacity(); ++v) {
      out << hg.vertex_weight(v) << '\n';
    }
  }
}

void write_partition(std::span<const std::int32_t> blocks, std::ostream& out) {
  for (std::int32_t b : blocks) out << b << '\n';
}

void write_partition_file(std::span<const std::int32_t> blocks, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_partition(blocks, out);
}

std::int64_t convert_mtx_to_hgr(std::istream& in, std::ostream& out) {
  std::string line;
  int line_no = 0;
  bool symmetric = false;
  bool saw_banner = false;

  // banner + comments
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '%') {
      if (!saw_banner && line.rfind("%%MatrixMarket", 0) == 0) {
        saw_banner = true;
        std::istringstream banner(line);
        std::string tag, object, format, field, symmetry;
        banner >> tag >> object >> format >> field >> symmetry;
        if (format != "coordinate") {
          throw ParseError(line_no, "only coordinate MatrixMarket files are supported");
        }
        symmetric = symmetry == "symmetric" || symmetry == "skew-symmetric" ||
                    symmetry == "hermitian";
      }
      continue;
    }
    break;
  }
  if (line.empty() && !in) throw ParseError(line_no, "missing MatrixMarket size line");

  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::int64_t nnz = 0;
  {
    std::istringstream sizes(line);
    if (!(sizes >> rows >> cols >> nnz) || rows < 1 || cols < 1 || nnz < 0) {
      throw ParseError(line_no, "invalid MatrixMarket size line");
    }
  }

  std::vector<std::set<std::int64_t>> row_cols(static_cast<std::size_t>(rows));
  for (std::int64_t k = 0; k < nnz; ++k) {
    std::int64_t i = 0;
    std::int64_t j = 0;
    if (!(in >> i >> j)) throw ParseError(line_no, "unexpected end of MatrixMarket entries");
    in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    ++line_no;
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError(line_no, "MatrixMarket entry out of range");
    }
    row_cols[static_cast<std::size_t>(i - 1)].insert(j);
    if (symmetric && i != j && i <= cols && j <= rows) {
      row_cols[static_cast<std::size_t>(j - 1)].insert(i);
    }
  }

  std::int64_t discarded = 0;
  std::vector<const std::set<std::int64_t>*> nets;
  for (const auto& r : row_cols) {
    if (r.empty()) {
      ++discarded;
    } else {
      nets.push_back(&r);
    }
  }

  out << nets.size() << ' ' << cols << '\n';
  for (const auto* r : nets) {
    bool first = true;
    for (std::int64_t j : *r) {
      if (!first) out << ' ';
      out << j;
      first = false;
    }
    out << '\n';
  }
  return discarded;
}

std::int64_t convert_cnf_to_hgr(std::istream& in, std::ostream& out) {
  std::string token;
  std::int64_t num_vars = 0;
  std::int64_t num_clauses = 0;
  bool have_problem = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream p(line);
      std::string tag, format;
      if (!(p >> tag >> format >> num_vars >> num_clauses) || format != "cnf" || num_vars < 1 ||
          num_clauses < 0) {
        throw ParseError(line_no, "invalid DIMACS problem line");
      }
      have_problem = true;
      break;
    }
    throw ParseError(line_no, "expected DIMACS problem line");
  }
  if (!have_problem) throw ParseError(line_no, "missing DIMACS problem line");

  std::vector<std::set<std::int64_t>> clauses;
  std::set<std::int64_t> current;
  std::int64_t discarded = 0;
  std::int64_t literal = 0;
  while (in >> token) {
    if (token == "c") {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
      continue;
    }
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), literal);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "invalid literal '" + token + "'");
    }
    if (literal == 0) {
      if (current.empty()) {
        ++discarded;
      } else {
        clauses.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    const std::int64_t var = std::llabs(literal);  // a variable and its complement share a vertex
    if (var > num_vars) throw ParseError(line_no, "literal exceeds declared variable count");
    current.insert(var);
  }
  if (!current.empty()) clauses.push_back(std::move(current));

  out << clauses.size() << ' ' << num_vars << '\n';
  for (const auto& clause : clauses) {
    bool first = true;
    for (std::int64_t v : clause) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
  return discarded;
}

}  // namespace io
}  // namespace hgpart
