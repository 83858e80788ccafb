#include "starspec/graph6.hpp"

#include "starspec/error.hpp"

namespace starspec {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
  throw Error(Errc::parse_error,
              "graph6: " + what + " at byte " + std::to_string(offset), offset);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3F) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3F) + kBias));
    out.push_back(static_cast<char>((n & 0x3F) + kBias));
  }
  // Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kHeader)) {
    base = kHeader.size();
    line.remove_prefix(kHeader.size());
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) fail(base, "empty input");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) fail(base + i, "character outside 63..126");
  }

  int n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = line[0] - kBias;
    pos = 1;
  } else {
    if (line.size() < 4) fail(base + line.size(), "truncated order field");
    if (line[1] == '~') fail(base + 1, "orders above 258047 are not supported");
    n = ((line[1] - kBias) << 12) | ((line[2] - kBias) << 6) | (line[3] - kBias);
    pos = 4;
    if (n <= 62) fail(base + 1, "non-minimal order encoding");
  }
  if (n > kMaxOrder) {
    throw Error(Errc::order_too_large,
                "graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder),
                base);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (line.size() < expected) fail(base + line.size(), "truncated edge data");
  if (line.size() > expected) fail(base + expected, "trailing data");

  std::vector<VertexMask> rows(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (k % 6 != 0) {
    const int byte = line[pos + k / 6] - kBias;
    if ((byte & ((1 << (6 - k % 6)) - 1)) != 0) fail(base + pos + k / 6, "nonzero padding bits");
  }
  return Graph::from_rows(n, rows);
}

std::vector<Graph> graph6_decode_all(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(graph6_decode(line));
      } catch (const Error& e) {
        if (e.code() != Errc::parse_error) throw;
        throw Error(Errc::parse_error, e.what(), start + e.position());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace starspec
