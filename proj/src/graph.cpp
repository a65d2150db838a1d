#include "catmouse/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace catmouse {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::HasCycle: return "has-cycle";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NoWinningStrategy: return "no-winning-strategy";
    case ErrorKind::TooLarge: return "too-large";
  }
  return "unknown";
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<Label> labels) {
  Graph g;
  g.adjacency_.resize(n);
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), Label{0});
  }
  if (labels.size() != n) throw Error(ErrorKind::Parse, "label count does not match vertex count");
  g.labels_ = std::move(labels);

  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorKind::Parse, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::Parse, "self-loop at vertex " + std::to_string(g.labels_[u]));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& nbrs = g.adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw Error(ErrorKind::Parse, "duplicate edge at vertex " + std::to_string(g.labels_[v]));
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<VertexId> Graph::find_label(Label label) const {
  // Labels are ascending whenever the graph came from parse_graph, but
  // induced subgraphs and hand-built graphs need not be.
  for (VertexId v = 0; v < size(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  if (size() == 0) return true;
  const VertexId root = 0;
  auto dist = distances_from(*this, std::span(&root, 1));
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreachable; });
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < s.size() && !(s[j] == ' ' || s[j] == '\t' || s[j] == '\r' || s[j] == '\n')) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<Label> parse_label(std::string_view token) {
  Label value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  struct RawEdge {
    Label u, v;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  std::vector<Label> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_ws(line);
    if (tokens.size() > 2)
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected \"u v\"");
    std::vector<Label> values;
    for (auto tok : tokens) {
      auto value = parse_label(tok);
      if (!value)
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(line_no) + ": non-integer token '" + std::string(tok) + "'");
      values.push_back(*value);
      seen.push_back(*value);
    }
    if (values.size() == 2) {
      if (values[0] == values[1])
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": self-loop");
      raw.push_back({std::min(values[0], values[1]), std::max(values[0], values[1]), line_no});
    }
  }

  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  auto id_of = [&](Label l) {
    return static_cast<VertexId>(std::lower_bound(seen.begin(), seen.end(), l) - seen.begin());
  };

  std::map<std::pair<Label, Label>, std::size_t> first_line;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    auto [it, inserted] = first_line.emplace(std::pair{e.u, e.v}, e.line);
    if (!inserted)
      throw Error(ErrorKind::Parse, "line " + std::to_string(e.line) + ": duplicate edge " + std::to_string(e.u) +
                                        " " + std::to_string(e.v) + " (first on line " +
                                        std::to_string(it->second) + ")");
    edges.emplace_back(id_of(e.u), id_of(e.v));
  }
  return Graph::from_edges(seen.size(), edges, seen);
}

std::string serialize_graph(const Graph& g) {
  std::vector<std::pair<Label, Label>> lines;
  for (auto [u, v] : g.edges()) {
    auto a = g.label(u), b = g.label(v);
    lines.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(lines.begin(), lines.end());
  std::ostringstream out;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.degree(v) == 0) out << g.label(v) << '\n';
  for (auto [a, b] : lines) out << a << ' ' << b << '\n';
  return out.str();
}

Tree as_tree(Graph g) {
  if (g.size() == 0) throw Error(ErrorKind::Disconnected, "disconnected: empty graph");
  if (g.edge_count() >= g.size()) throw Error(ErrorKind::HasCycle, "has cycle");
  if (g.edge_count() + 1 != g.size() || !g.is_connected())
    throw Error(ErrorKind::Disconnected, "disconnected");
  return Tree(std::move(g));
}

std::size_t internal_degree(const Graph& g, VertexId v) {
  const auto nbrs = g.neighbours(v);
  return static_cast<std::size_t>(std::count_if(nbrs.begin(), nbrs.end(), [&](VertexId u) { return g.degree(u) >= 2; }));
}

std::vector<VertexId> leaves(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<VertexId> twigs(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.size(); ++v) {
    // at least deg-1 leaf neighbours <=> at most one internal neighbour
    if (g.degree(v) >= 2 && internal_degree(g, v) <= 1) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> internal_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.degree(v) >= 2) out.push_back(v);
  return out;
}

std::vector<std::size_t> distances_from(const Graph& g, std::span<const VertexId> sources) {
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::queue<VertexId> queue;
  for (VertexId s : sources) {
    if (dist[s] == 0) continue;
    dist[s] = 0;
    queue.push(s);
  }
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop();
    for (VertexId w : g.neighbours(u)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      queue.push(w);
    }
  }
  return dist;
}

std::vector<VertexId> tree_path(const Tree& t, VertexId from, VertexId to) {
  std::vector<VertexId> parent(t.size(), static_cast<VertexId>(t.size()));
  std::vector<VertexId> stack{to};
  parent[to] = to;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    if (u == from) break;
    for (VertexId w : t.neighbours(u)) {
      if (parent[w] != t.size()) continue;
      parent[w] = u;
      stack.push_back(w);
    }
  }
  std::vector<VertexId> path{from};
  for (VertexId v = from; v != to;) {
    v = parent[v];
    path.push_back(v);
  }
  return path;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  std::vector<VertexId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  constexpr auto kAbsent = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> new_id(g.size(), kAbsent);
  std::vector<Label> labels;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    new_id[sorted[i]] = static_cast<VertexId>(i);
    labels.push_back(g.label(sorted[i]));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (new_id[u] != kAbsent && new_id[v] != kAbsent) edges.emplace_back(new_id[u], new_id[v]);
  return Graph::from_edges(sorted.size(), edges, std::move(labels));
}

Tree induced_subtree(const Tree& t, std::span<const VertexId> keep) {
  return as_tree(induced_subgraph(t, keep));
}

Tree make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return as_tree(Graph::from_edges(n, edges));
}

Graph make_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Tree make_star(std::size_t leaf_count) {
  std::vector<Edge> edges;
  for (VertexId i = 1; i <= leaf_count; ++i) edges.emplace_back(0, i);
  return as_tree(Graph::from_edges(leaf_count + 1, edges));
}

Tree make_spider(std::span<const std::size_t> leg_lengths) {
  std::vector<Edge> edges;
  VertexId next = 1;
  for (std::size_t len : leg_lengths) {
    VertexId prev = 0;
    for (std::size_t k = 0; k < len; ++k, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return as_tree(Graph::from_edges(next, edges));
}

std::vector<VertexId> parse_sequence(const Graph& g, std::string_view text) {
  std::vector<VertexId> out;
  for (auto tok : split_ws(text)) {
    auto value = parse_label(tok);
    if (!value) throw Error(ErrorKind::Parse, "non-integer token '" + std::string(tok) + "' in sequence");
    auto id = g.find_label(*value);
    if (!id) throw Error(ErrorKind::Parse, "unknown vertex " + std::string(tok) + " in sequence");
    out.push_back(*id);
  }
  return out;
}

std::string format_sequence(const Graph& g, std::span<const VertexId> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(g.label(seq[i]));
  }
  return out;
}

}  // namespace catmouse
