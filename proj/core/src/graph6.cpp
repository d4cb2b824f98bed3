#include "pturan/graph6.hpp"

#include <cstdint>

#include "pturan/errors.hpp"

namespace pturan {

namespace {

constexpr int kBias = 63;

struct BitReader {
  std::string_view s;
  std::size_t byte;
  int bit = 0;  // 0..5, msb first inside each 6-bit group

  bool done() const { return byte >= s.size(); }
  int take(std::size_t err_base) {
    if (byte >= s.size())
      throw ParseError("unexpected end of bit stream", err_base + byte);
    char c = s[byte];
    if (c < kBias || c > 126)
      throw ParseError("byte out of printable graph6 range", err_base + byte);
    int v = (c - kBias) >> (5 - bit) & 1;
    if (++bit == 6) {
      bit = 0;
      ++byte;
    }
    return v;
  }
  long read(int k, std::size_t err_base) {
    long v = 0;
    for (int i = 0; i < k; ++i) v = v << 1 | take(err_base);
    return v;
  }
};

// Reads N(n); returns bytes consumed.
std::size_t read_order(std::string_view s, std::size_t off, long& n) {
  if (off >= s.size()) throw ParseError("missing vertex count", off);
  unsigned char c = static_cast<unsigned char>(s[off]);
  if (c == 126) {
    // long form: 126 followed by three (or 126 + six) more bytes
    if (off + 1 < s.size() && static_cast<unsigned char>(s[off + 1]) == 126) {
      if (off + 8 > s.size()) throw ParseError("truncated vertex count", off);
      n = 0;
      for (int i = 2; i < 8; ++i) {
        int d = s[off + i] - kBias;
        if (d < 0 || d > 63) throw ParseError("bad vertex count byte", off + i);
        n = n << 6 | d;
      }
      return 8;
    }
    if (off + 4 > s.size()) throw ParseError("truncated vertex count", off);
    n = 0;
    for (int i = 1; i < 4; ++i) {
      int d = s[off + i] - kBias;
      if (d < 0 || d > 63) throw ParseError("bad vertex count byte", off + i);
      n = n << 6 | d;
    }
    return 4;
  }
  if (c < kBias || c > 125) throw ParseError("bad vertex count byte", off);
  n = c - kBias;
  return 1;
}

Graph decode_graph6(std::string_view s, std::size_t base) {
  long n;
  std::size_t used = read_order(s, 0, n);
  if (n > Graph::kMaxVertices)
    throw SizeError("graph6 order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(Graph::kMaxVertices));
  Graph g(static_cast<int>(n));
  long bits = n * (n - 1) / 2;
  std::size_t need = used + static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() < need)
    throw ParseError("graph6 body too short", base + s.size());
  if (s.size() > need)
    throw ParseError("trailing bytes after graph6 body", base + need);
  BitReader br{s.substr(used), 0};
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (br.read(1, base + used)) g.add_edge(i, j);
  return g;
}

Graph decode_sparse6(std::string_view s, std::size_t base) {
  // s starts after the ':' marker.
  long n;
  std::size_t used = read_order(s, 0, n);
  if (n > Graph::kMaxVertices)
    throw SizeError("sparse6 order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(Graph::kMaxVertices));
  Graph g(static_cast<int>(n));
  if (n == 0) return g;
  int k = 0;
  while ((1L << k) < n - 1 + 1) ++k;  // bits needed for values 0..n-1
  if (k == 0) k = 1;
  BitReader br{s.substr(used), 0};
  long v = 0;
  for (;;) {
    // stop when fewer than k+1 bits remain (padding)
    std::size_t bits_left = (br.s.size() - br.byte) * 6 - static_cast<std::size_t>(br.bit);
    if (br.done() || bits_left < static_cast<std::size_t>(k) + 1) break;
    int b = br.take(base + used);
    long x = br.read(k, base + used);
    if (b) ++v;
    if (x >= n || v >= n) break;  // padding hit
    if (x > v)
      v = x;
    else if (x != v)
      g.add_edge(static_cast<int>(x), static_cast<int>(v));
    else
      throw ParseError("sparse6 loop edge", base + used + br.byte);
  }
  return g;
}

}  // namespace

std::string g6_encode(const Graph& g) {
  if (g.order() > 62)
    throw SizeError("g6_encode supports the short form only (n <= 62)");
  std::string out;
  out.push_back(static_cast<char>(g.order() + kBias));
  int acc = 0, nb = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        nb = 0;
      }
    }
  if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + kBias));
  return out;
}

Graph g6_decode(std::string_view text) {
  std::size_t off = 0;
  auto skip = [&](std::string_view hdr) {
    if (text.substr(off).starts_with(hdr)) off += hdr.size();
  };
  skip(">>graph6<<");
  skip(">>sparse6<<");
  while (off < text.size() &&
         (text[off] == '\n' || text[off] == '\r' || text[off] == ' '))
    ++off;
  std::size_t end = text.size();
  while (end > off && (text[end - 1] == '\n' || text[end - 1] == '\r' ||
                       text[end - 1] == ' '))
    --end;
  if (off >= end) throw ParseError("empty graph6 input", off);
  std::string_view body = text.substr(off, end - off);
  if (body[0] == ':') return decode_sparse6(body.substr(1), off + 1);
  return decode_graph6(body, off);
}

}  // namespace pturan
