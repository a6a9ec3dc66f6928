#include "posetlab/graph6.hpp"

namespace posetlab {

namespace {
constexpr int kLo = 63, kHi = 126;

[[noreturn]] void parse_fail(size_t offset, const std::string& what) {
  fail("parse-error", "graph6 parse error at offset " + std::to_string(offset) + ": " + what);
}
}  // namespace

Graph parse_graph6(const std::string& s) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (pos + k > s.size()) parse_fail(s.size(), "truncated input");
  };
  need(1);
  long long n;
  if (s[pos] != '~') {
    if (s[pos] < kLo || s[pos] > kHi) parse_fail(pos, "invalid character");
    n = s[pos] - kLo;
    ++pos;
  } else {
    ++pos;
    need(1);
    int width = 3;
    if (s[pos] == '~') {
      ++pos;
      width = 6;
    }
    need(width);
    n = 0;
    for (int i = 0; i < width; ++i, ++pos) {
      if (s[pos] < kLo || s[pos] > kHi) parse_fail(pos, "invalid character");
      n = (n << 6) | (s[pos] - kLo);
    }
  }
  if (n > Graph::kMaxVertices) parse_fail(0, "vertex count too large for this build");
  Graph g(static_cast<int>(n));
  long long nbits = n * (n - 1) / 2;
  long long nchars = (nbits + 5) / 6;
  need(static_cast<size_t>(nchars));
  if (pos + nchars != s.size()) parse_fail(pos + nchars, "trailing characters");
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      char c = s[pos + bit / 6];
      if (c < kLo || c > kHi) parse_fail(pos + bit / 6, "invalid character");
      if (((c - kLo) >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  // padding bits beyond the triangle must be zero
  for (long long b = nbits; b < nchars * 6; ++b) {
    char c = s[pos + b / 6];
    if (c < kLo || c > kHi) parse_fail(pos + b / 6, "invalid character");
    if (((c - kLo) >> (5 - b % 6)) & 1) parse_fail(pos + b / 6, "non-zero padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kLo));
  } else {
    out.push_back('~');
    for (int i = 2; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3f) + kLo));
  }
  int acc = 0, nb = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + kLo));
        acc = nb = 0;
      }
    }
  if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + kLo));
  return out;
}

}  // namespace posetlab
