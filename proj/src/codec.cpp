#include "wsatlab/codec.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <vector>

#include "wsatlab/error.hpp"

namespace wsatlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view word, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw ParseError("expected an integer, got '" + std::string(word) + "'", line);
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");

  std::size_t pos = 0;
  auto byte = [&](std::size_t i) { return static_cast<int>(text[i]) - 63; };
  int n = 0;
  if (text[0] != '~') {
    n = byte(0);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw ParseError("graph6 header for n > 64 is not supported");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  }
  if (n > Graph::kMaxVertices) throw ParseError("graph6 encodes " + std::to_string(n) + " vertices; at most 64 supported");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expect = (bits + 5) / 6;
  if (text.size() - pos != expect)
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                     std::to_string(expect));

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  // Padding bits must be zero for a canonical encoding.
  for (; k < expect * 6; ++k)
    if ((byte(pos + k / 6) >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding bits");
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  std::set<Edge> seen;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto words = split_words(line);
    if (!g) {
      if (words.size() != 2 || words[0] != "n") throw ParseError("expected header 'n <count>'", line_no);
      const int n = parse_int(words[1], line_no);
      if (n < 1 || n > Graph::kMaxVertices) throw ParseError("vertex count must lie in [1, 64]", line_no);
      g.emplace(n);
    } else {
      if (words.size() != 2) throw ParseError("expected 'u v'", line_no);
      const int u = parse_int(words[0], line_no);
      const int v = parse_int(words[1], line_no);
      const int n = g->vertex_count();
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParseError("vertex index out of range for n = " + std::to_string(n), line_no);
      if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_no);
      const Edge e = make_edge(u, v);
      if (!seen.insert(e).second) throw ParseError("duplicate edge " + to_string(e), line_no);
      g->add_edge(e);
    }
    if (end == text.size()) break;
  }
  if (!g) throw ParseError("missing 'n <count>' header");
  return *g;
}

std::string emit_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_graph_auto(std::string_view text) {
  std::string_view body = trim(text);
  // Skip leading comment lines before sniffing.
  while (body.starts_with("#")) {
    auto nl = body.find('\n');
    if (nl == std::string_view::npos) {
      body = {};
      break;
    }
    body = trim(body.substr(nl + 1));
  }
  if (body.size() >= 2 && body[0] == 'n' && (body[1] == ' ' || body[1] == '\t')) return parse_edge_list(text);
  return parse_graph6(body);
}

}  // namespace wsatlab
