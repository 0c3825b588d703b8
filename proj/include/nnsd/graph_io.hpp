#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nnsd/graph.hpp"

namespace nnsd {

// graph6, single-byte order variant: byte 0 is n + 63 with 0 <= n <= 62, then
// the upper triangle of the adjacency matrix read column by column (x(i,j) for
// j = 1..n-1, i = 0..j-1), packed into 6-bit groups most significant bit first,
// zero-padded to a multiple of 6, each group emitted as value + 63.

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw TooLarge("graph6 single-byte form requires n <= 62, got n = " + std::to_string(n));
  std::string out;
  out.push_back(char(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(char(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph decode_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw MalformedHeader("graph6: empty line");
  for (char c : line)
    if (c < 63 || c > 126)
      throw MalformedHeader("graph6: byte out of printable range 63..126");
  if (line[0] == 126) throw MalformedHeader("graph6: multi-byte order encoding not supported");
  const int n = line[0] - 63;
  const long long bits_needed = (long long)n * (n - 1) / 2;
  const long long bytes_needed = (bits_needed + 5) / 6;
  if ((long long)line.size() - 1 < bytes_needed) throw TruncatedBitStream("graph6: bit stream too short");
  if ((long long)line.size() - 1 > bytes_needed) throw TruncatedBitStream("graph6: trailing bytes after bit stream");
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int group = line[1 + bit / 6] - 63;
      if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // pad bits beyond the triangle must be zero
  for (long long b = bits_needed; b < bytes_needed * 6; ++b) {
    const int group = line[1 + b / 6] - 63;
    if ((group >> (5 - b % 6)) & 1) throw NonCanonicalPadding("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

// Edge list: line 1 is "n m", then m lines "u v" with 0 <= u < v < n.
// Lines starting with '#' are comments; blank lines are ignored.

inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_line(header)) throw BadHeader("edge list: missing header line");
  long long n = 0, m = 0;
  {
    std::istringstream hs(header);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw BadHeader("edge list: header must be \"n m\"");
  }
  if (n < 1 || m < 0) throw BadHeader("edge list: invalid header values");
  std::vector<std::pair<int, int>> edges;
  std::string row;
  for (long long k = 0; k < m; ++k) {
    if (!next_line(row)) throw EdgeCountMismatch("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(k));
    std::istringstream es(row);
    long long u = 0, v = 0;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) throw BadInput("edge list: bad edge line \"" + row + "\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw IndexOutOfRange("edge list: endpoint out of range in \"" + row + "\"");
    if (u == v) throw SelfLoop("edge list: self-loop in \"" + row + "\"");
    if (u > v) throw BadInput("edge list: endpoints must satisfy u < v in \"" + row + "\"");
    edges.emplace_back(int(u), int(v));
  }
  if (next_line(row)) throw EdgeCountMismatch("edge list: extra lines after " + std::to_string(m) + " edges");
  return Graph(int(n), edges);
}

}  // namespace nnsd
