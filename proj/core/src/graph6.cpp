#include "hamlab/graph6.hpp"

#include <cstddef>

#include "hamlab/errors.hpp"

namespace hamlab {

namespace {

constexpr int kBias = 63;      // printable offset added to every 6-bit group
constexpr int kExtended = 126;  // '~', introduces a multi-byte size header

int data_byte(std::string_view text, std::size_t pos) {
  if (pos >= text.size())
    throw ParseError("unexpected end of graph6 line", text.size());
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kExtended)
    throw ParseError("byte outside graph6 range 63..126", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 line", 0);

  std::size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(text[0]) != kExtended) {
    n = data_byte(text, pos++);
  } else if (text.size() >= 2 &&
             static_cast<unsigned char>(text[1]) != kExtended) {
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | data_byte(text, pos++);
  } else {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | data_byte(text, pos++);
  }
  if (n > kMaxOrder)
    throw ParseError("graph order " + std::to_string(n) +
                         " exceeds supported maximum " +
                         std::to_string(kMaxOrder),
                     0);

  Graph g(static_cast<int>(n));
  int bits = 0, group = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (bits == 0) {
        group = data_byte(text, pos++);
        bits = 6;
      }
      if (group & (1 << (bits - 1))) g.add_edge(row, col);
      --bits;
    }
  }
  if (pos != text.size())
    throw ParseError("trailing bytes after graph6 body", pos);
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    // 18-bit size header; sufficient for every order this Graph can hold.
    out.push_back(static_cast<char>(kExtended));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
  int bits = 0, group = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(group + kBias));
        bits = 0;
        group = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + kBias));
  return out;
}

}  // namespace hamlab
