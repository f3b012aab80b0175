#include <charconv>
#include <optional>
#include <sstream>

#include "spectough/graph.hpp"

namespace spectough {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::MalformedInput, "graph6: " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  if (c < 63 || c > 126) malformed(std::string("byte out of range: '") + c + "'");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) malformed("empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = sextet(text[0]);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) malformed("unsupported order header");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) malformed("long order header used for n < 63");
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices) malformed("order " + std::to_string(n) + " out of range [1, 64]");

  const long bit_count = n * (n - 1) / 2;
  const std::size_t byte_count = static_cast<std::size_t>((bit_count + 5) / 6);
  if (text.size() - pos != byte_count) {
    malformed("expected " + std::to_string(byte_count) + " data bytes, got " +
              std::to_string(text.size() - pos));
  }

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  for (; k < static_cast<long>(byte_count) * 6; ++k) {
    if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1) malformed("nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> g;
  int line_no = 0;
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorCode::MalformedInput, "edge list line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long> values;
    std::string tok;
    while (fields >> tok) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("not an integer: " + tok);
      values.push_back(value);
    }
    if (values.empty()) continue;
    if (!g) {
      if (values.size() != 1) fail("first line must hold only the vertex count");
      if (values[0] < 1 || values[0] > kMaxVertices) fail("vertex count out of range [1, 64]");
      g.emplace(static_cast<int>(values[0]));
      continue;
    }
    if (values.size() != 2) fail("expected \"u v\"");
    const long u = values[0];
    const long v = values[1];
    if (u < 0 || v < 0 || u >= g->order() || v >= g->order()) fail("vertex out of range");
    if (u == v) fail("self-loop");
    g->add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!g) throw Error(ErrorCode::MalformedInput, "edge list: missing vertex count");
  return *g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace spectough
