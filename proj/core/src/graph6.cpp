#include "graphsim/graph6.hpp"

#include "graphsim/errors.hpp"

namespace graphsim {

namespace {

constexpr int kBias = 63;   // printable offset added to every 6-bit group
constexpr int kMaxShort = 62;

int checked_byte(std::string_view text, std::size_t pos) {
  const unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126)
    throw ParseError("graph6 parse error at byte " + std::to_string(pos) +
                         ": character outside the printable alphabet",
                     pos);
  return c - kBias;
}

} // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty())
    throw ParseError("graph6 parse error at byte 0: empty input", 0);
  if (text[0] == '~')
    throw ParseError(
        "graph6 parse error at byte 0: long-form size header is unsupported "
        "(only n <= 62)",
        0);
  const int n = checked_byte(text, 0);
  if (n < 1)
    throw ParseError("graph6 parse error at byte 0: vertex count must be "
                     "at least 1",
                     0);

  // Upper triangle, column by column: x(0,1); x(0,2), x(1,2); ...
  // packed into 6-bit groups, most significant bit first.
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() < 1 + nbytes)
    throw ParseError("graph6 parse error at byte " +
                         std::to_string(text.size()) +
                         ": truncated adjacency bits (need " +
                         std::to_string(1 + nbytes) + " bytes for n=" +
                         std::to_string(n) + ")",
                     text.size());
  if (text.size() > 1 + nbytes)
    throw ParseError("graph6 parse error at byte " +
                         std::to_string(1 + nbytes) +
                         ": trailing garbage after adjacency bits",
                     1 + nbytes);

  Graph g(n);
  std::size_t bit = 0;
  int group = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0)
        group = checked_byte(text, 1 + bit / 6);
      if (group & (1 << (5 - static_cast<int>(bit % 6))))
        g.add_edge(i, j);
    }
  }
  // Padding bits beyond the triangle must be zero in canonical graph6;
  // tolerate nonzero padding silently (some writers do not zero it).
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxShort)
    throw BudgetError("graph6 short form supports at most 62 vertices, got " +
                      std::to_string(n));
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out;
  out.reserve(1 + (nbits + 5) / 6);
  out.push_back(static_cast<char>(kBias + n));
  int group = 0;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j))
        group |= 1 << (5 - static_cast<int>(bit % 6));
      if (bit % 6 == 5) {
        out.push_back(static_cast<char>(kBias + group));
        group = 0;
      }
    }
  }
  if (nbits % 6 != 0)
    out.push_back(static_cast<char>(kBias + group));
  return out;
}

} // namespace graphsim
