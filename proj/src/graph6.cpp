#include <algorithm>
#include <string>

#include "kpg/error.hpp"
#include "kpg/graph.hpp"

namespace kpg {

namespace {

constexpr int kBias = 63;

Graph parse_one(std::string_view text, std::size_t base) {
  if (text.empty()) throw ParseError("empty graph6 string", base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) throw ParseError("byte outside the graph6 alphabet", base + i);
  }
  const int header = static_cast<unsigned char>(text[0]) - kBias;
  if (header == 63) throw SizeError("graph6 input with more than 62 vertices");
  const int n = header;
  if (n > kMaxVertices) {
    throw SizeError("graph6 input has " + std::to_string(n) + " vertices, limit is " +
                    std::to_string(kMaxVertices));
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != 1 + body) {
    throw ParseError("graph6 body must be " + std::to_string(body) + " bytes for n=" +
                         std::to_string(n),
                     base + std::min(text.size(), 1 + body));
  }
  EdgeMask edges = 0;
  for (std::size_t k = 0; k < body; ++k) {
    const int chunk = static_cast<unsigned char>(text[1 + k]) - kBias;
    for (int b = 0; b < 6; ++b) {
      const std::size_t slot = 6 * k + static_cast<std::size_t>(b);
      const bool set = (chunk >> (5 - b)) & 1;
      if (!set) continue;
      if (slot >= bits) throw ParseError("nonzero graph6 padding bit", base + 1 + k);
      edges |= slot_bit(static_cast<int>(slot));
    }
  }
  return Graph(n, edges);
}

}  // namespace

Graph parse_graph6(std::string_view text) { return parse_one(text, 0); }

std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out(1, static_cast<char>(n + kBias));
  const int bits = n * (n - 1) / 2;
  for (int k = 0; 6 * k < bits; ++k) {
    int chunk = 0;
    for (int b = 0; b < 6; ++b) {
      const int slot = 6 * k + b;
      chunk <<= 1;
      if (slot < bits && (g.edges() & slot_bit(slot)) != 0) chunk |= 1;
    }
    out += static_cast<char>(chunk + kBias);
  }
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') out.push_back(parse_one(line, pos));
    pos = end + 1;
  }
  return out;
}

}  // namespace kpg
