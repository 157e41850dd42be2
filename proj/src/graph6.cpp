#include "snarklab/graph6.hpp"

#include <algorithm>

namespace snarklab {

namespace {
constexpr const char* kHeader = ">>graph6<<";
}

std::string graph6_encode(const Multipole& g) {
  if (!g.is_graph()) throw Error(Err::NonSimpleGraph, "cannot encode a multipole with semiedges");
  if (!g.is_simple()) throw Error(Err::NonSimpleGraph, "cannot encode loops or parallel edges");
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  auto rows = g.adjacency_rows();
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((rows[i] >> j) & 1);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Multipole graph6_decode(const std::string& line) {
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(kHeader, 0) == 0) s = s.substr(std::string(kHeader).size());
  if (s.empty()) throw Error(Err::MalformedHeader, "empty graph6 line");
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw Error(Err::TruncatedBitVector, "graph6 line too short");
    unsigned char c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw Error(Err::MalformedHeader, "byte outside graph6 range");
    return c;
  };
  int n;
  int c0 = next();
  if (c0 == 126) {
    int c1 = next();
    if (c1 == 126) throw Error(Err::MalformedHeader, "graphs beyond 258047 vertices unsupported");
    n = ((c1 - 63) << 12) | ((next() - 63) << 6) | (next() - 63);
  } else {
    n = c0 - 63;
  }
  if (n > kMaxVertices) throw Error(Err::BadInput, "graph too large for this build");
  std::vector<std::pair<int, int>> edges;
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next() - 63;
        bits = 6;
      }
      if ((acc >> (bits - 1)) & 1) edges.push_back({i, j});
      --bits;
    }
  }
  if (pos != s.size()) throw Error(Err::TruncatedBitVector, "trailing bytes after graph6 body");
  return Multipole::graph(n, edges);
}

}  // namespace snarklab
