#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "equipart/errors.hpp"
#include "equipart/graph.hpp"

namespace equipart {
namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6Max = 126;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (is_space(s.front()) || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (is_space(s.back()) || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t offset = 0;
  while (offset < text.size() && (is_space(text[offset]) || text[offset] == '\n')) {
    ++offset;
  }
  if (text.substr(offset, header.size()) == header) offset += header.size();
  std::string_view body = text.substr(offset);
  const auto end = body.find('\n');
  if (end != std::string_view::npos) {
    if (!trim(body.substr(end)).empty()) {
      throw MalformedInput("graph6 input holds more than one graph", 2, 0);
    }
    body = body.substr(0, end);
  }
  while (!body.empty() && is_space(body.back())) body.remove_suffix(1);
  if (body.empty()) throw MalformedInput("empty graph6 string", 1, offset);

  for (std::size_t i = 0; i < body.size(); ++i) {
    const int c = static_cast<unsigned char>(body[i]);
    if (c < kGraph6Bias || c > kGraph6Max) {
      throw MalformedInput("character outside the graph6 range 63..126", 1,
                           offset + i);
    }
  }
  const int n = static_cast<unsigned char>(body[0]) - kGraph6Bias;
  if (n > kMaxGraph6Order) {
    throw MalformedInput("graph6 orders above " +
                             std::to_string(kMaxGraph6Order) +
                             " (multi-byte size prefix) are not supported",
                         1, offset);
  }
  const std::size_t bits =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (body.size() - 1 != expected) {
    throw MalformedInput("graph6 body has " + std::to_string(body.size() - 1) +
                             " bytes, expected " + std::to_string(expected),
                         1, offset + 1);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(body[1 + k / 6]) - kGraph6Bias;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

std::optional<long long> parse_int(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start});
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::optional<int> declared;
  std::vector<Edge> edges;
  std::vector<std::pair<std::size_t, std::size_t>> where;
  int max_id = -1;
  bool first = true;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    std::vector<long long> values;
    for (const auto& tok : tokens) {
      auto v = parse_int(tok.text);
      if (!v || *v < 0) {
        throw MalformedInput("expected a non-negative integer, got '" +
                                 std::string(tok.text) + "'",
                             line_no, tok.column);
      }
      if (*v > 1'000'000'000) {
        throw MalformedInput("integer too large", line_no, tok.column);
      }
      values.push_back(*v);
    }

    if (first && values.size() == 1) {
      declared = static_cast<int>(values[0]);
      first = false;
      continue;
    }
    first = false;
    if (values.size() != 2) {
      throw MalformedInput("expected an edge line 'u v'", line_no, tokens.front().column);
    }
    const auto u = static_cast<Vertex>(values[0]);
    const auto v = static_cast<Vertex>(values[1]);
    if (u == v) {
      throw MalformedInput("self-loop at vertex " + std::to_string(u), line_no,
                           tokens.front().column);
    }
    if (declared && (u >= *declared || v >= *declared)) {
      throw MalformedInput("vertex out of range 0.." + std::to_string(*declared - 1),
                           line_no, u >= *declared ? tokens[0].column : tokens[1].column);
    }
    max_id = std::max({max_id, u, v});
    edges.push_back({u, v});
  }
  const int n = declared ? *declared : max_id + 1;
  return Graph(n, edges);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6:
      return parse_graph6(text);
    case GraphFormat::edge_list:
      return parse_edge_list(text);
  }
  throw BadParameters("unknown graph format");
}

GraphFormat detect_format(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.rfind(">>graph6<<", 0) == 0) return GraphFormat::graph6;
  const std::string_view first_line = body.substr(0, body.find('\n'));
  if (first_line.empty()) return GraphFormat::edge_list;
  const bool graph6_chars = std::all_of(first_line.begin(), first_line.end(), [](char c) {
    const int b = static_cast<unsigned char>(c);
    return b >= kGraph6Bias && b <= kGraph6Max;
  });
  return graph6_chars ? GraphFormat::graph6 : GraphFormat::edge_list;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw BadParameters("graph6 output supports at most " +
                        std::to_string(kMaxGraph6Order) + " vertices");
  }
  std::string out(1, static_cast<char>(n + kGraph6Bias));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Bias));
  }
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace equipart
