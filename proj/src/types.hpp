#ifndef HGPART_TYPES_HPP
#define HGPART_TYPES_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hgpart {

using VertexId = std::uint32_t;
using NetId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr VertexId kInvalidVertex = std::numeric_limits<VertexId>::max();
inline constexpr NetId kInvalidNet = std::numeric_limits<NetId>::max();

// Thrown when contractions/uncontractions or net removals/restores are
// replayed out of LIFO order.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline Weight ceil_div(Weight a, Weight b) { return (a + b - 1) / b; }

}  // namespace hgpart

#endif
