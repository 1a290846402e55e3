#include "pathalg/graph.hpp"

#include <algorithm>
#include <deque>

#include "pathalg/error.hpp"

namespace pathalg {

void Graph::check_name_free(const std::string& name) const {
  if (name.empty()) {
    throw DomainError("empty name");
  }
  if (find_vertex(name) || find_edge(name)) {
    throw DomainError("duplicate name '" + name + "'");
  }
}

VertexId Graph::add_vertex(std::string name) {
  check_name_free(name);
  vertex_names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  declared_singular_.push_back(false);
  return VertexId{static_cast<std::uint32_t>(vertex_names_.size() - 1)};
}

EdgeId Graph::add_edge(std::string name, VertexId source, VertexId range) {
  check_name_free(name);
  if (source.index >= vertex_count() || range.index >= vertex_count()) {
    throw DomainError("edge '" + name + "' has an unknown endpoint");
  }
  EdgeId id{static_cast<std::uint32_t>(edges_.size())};
  edges_.push_back(EdgeData{std::move(name), source, range});
  out_[source.index].push_back(id);
  in_[range.index].push_back(id);
  return id;
}

void Graph::declare_singular(VertexId v) { declared_singular_.at(v.index) = true; }

bool Graph::has_default_ck2() const {
  for (std::size_t i = 0; i < vertex_count(); ++i) {
    if (declared_singular_[i] && !out_[i].empty()) {
      return false;
    }
  }
  return true;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
    if (vertex_names_[i] == name) {
      return VertexId{static_cast<std::uint32_t>(i)};
    }
  }
  return std::nullopt;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].name == name) {
      return EdgeId{static_cast<std::uint32_t>(i)};
    }
  }
  return std::nullopt;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < vertex_count(); ++i) {
    out.push_back(VertexId{i});
  }
  return out;
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out;
  for (std::uint32_t i = 0; i < edge_count(); ++i) {
    out.push_back(EdgeId{i});
  }
  return out;
}

Path Path::from_edges(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty()) {
    throw DomainError("a path given by edges needs at least one edge");
  }
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.range(edges[i]) != g.source(edges[i + 1])) {
      throw DomainError("edges " + g.name(edges[i]) + " and " + g.name(edges[i + 1]) +
                        " do not compose");
    }
  }
  VertexId s = g.source(edges.front());
  VertexId r = g.range(edges.back());
  return Path(s, r, std::move(edges));
}

bool Path::is_prefix_of(const Path& other) const {
  if (source_ != other.source_ || edges_.size() > other.edges_.size()) {
    return false;
  }
  return std::equal(edges_.begin(), edges_.end(), other.edges_.begin());
}

Path Path::prefix(const Graph& g, std::size_t n) const {
  if (n == 0) {
    return vertex(source_);
  }
  std::vector<EdgeId> head(edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(n));
  VertexId r = g.range(head.back());
  return Path(source_, r, std::move(head));
}

Path Path::drop(const Graph& g, std::size_t n) const {
  if (n == 0) {
    return *this;
  }
  if (n == edges_.size()) {
    return vertex(range_);
  }
  std::vector<EdgeId> tail(edges_.begin() + static_cast<std::ptrdiff_t>(n), edges_.end());
  const VertexId s = g.source(tail.front());
  return Path(s, range_, std::move(tail));
}

Path Path::concat(const Path& other) const {
  if (range_ != other.source_) {
    throw DomainError("paths do not compose");
  }
  std::vector<EdgeId> joined = edges_;
  joined.insert(joined.end(), other.edges_.begin(), other.edges_.end());
  return Path(source_, other.range_, std::move(joined));
}

Path Path::append(const Graph& g, EdgeId e) const {
  if (range_ != g.source(e)) {
    throw DomainError("edge " + g.name(e) + " does not extend the path");
  }
  std::vector<EdgeId> joined = edges_;
  joined.push_back(e);
  return Path(source_, g.range(e), std::move(joined));
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = edges_.size() <=> other.edges_.size(); c != 0) {
    return c;
  }
  if (auto c = std::lexicographical_compare_three_way(edges_.begin(), edges_.end(),
                                                      other.edges_.begin(), other.edges_.end());
      c != 0) {
    return c;
  }
  return source_ <=> other.source_;
}

std::vector<VertexId> singular_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (!g.in_ck2(v)) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<VertexId> sinks(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (g.is_sink(v)) {
      out.push_back(v);
    }
  }
  return out;
}

namespace {

// Shortest closed path through `start`, by BFS over out-edges.
std::optional<std::vector<EdgeId>> shortest_cycle_through(const Graph& g, VertexId start) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<EdgeId>> parent(n);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue;
  queue.push_back(start);
  seen[start.index] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.range(e);
      if (w == start) {
        std::vector<EdgeId> cycle{e};
        VertexId cur = v;
        while (cur != start) {
          EdgeId p = *parent[cur.index];
          cycle.push_back(p);
          cur = g.source(p);
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (!seen[w.index]) {
        seen[w.index] = true;
        parent[w.index] = e;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CycleCheck is_acyclic(const Graph& g) {
  std::optional<std::vector<EdgeId>> best;
  for (VertexId v : g.vertices()) {
    auto c = shortest_cycle_through(g, v);
    if (c && (!best || c->size() < best->size())) {
      best = std::move(c);
    }
  }
  if (!best) {
    return {};
  }
  return CycleCheck{false, Path::from_edges(g, std::move(*best))};
}

CycleCheck condition_L(const Graph& g) {
  for (VertexId start : g.vertices()) {
    std::vector<EdgeId> walk;
    std::vector<bool> visited(g.vertex_count(), false);
    VertexId cur = start;
    while (!visited[cur.index] && g.in_ck2(cur) && g.out_edges(cur).size() == 1) {
      visited[cur.index] = true;
      EdgeId e = g.out_edges(cur).front();
      walk.push_back(e);
      cur = g.range(e);
      if (cur == start) {
        return CycleCheck{false, Path::from_edges(g, std::move(walk))};
      }
    }
  }
  return {};
}

Graph disjoint_union(const Graph& e, const Graph& f, const std::string& left_prefix,
                     const std::string& right_prefix) {
  Graph out;
  auto copy_in = [&out](const Graph& src, const std::string& prefix) {
    std::vector<VertexId> map;
    for (VertexId v : src.vertices()) {
      map.push_back(out.add_vertex(prefix + src.name(v)));
    }
    for (EdgeId x : src.edges()) {
      out.add_edge(prefix + src.name(x), map[src.source(x).index], map[src.range(x).index]);
    }
    for (VertexId v : src.vertices()) {
      if (src.declared_singular(v)) {
        out.declare_singular(map[v.index]);
      }
    }
  };
  copy_in(e, left_prefix);
  copy_in(f, right_prefix);
  return out;
}

std::vector<Path> paths_into(const Graph& g, VertexId v, std::optional<std::size_t> max_len) {
  if (!max_len && !is_acyclic(g).holds) {
    throw DomainError("unbounded enumeration on cyclic graph");
  }
  std::vector<Path> out{Path::vertex(v)};
  std::vector<Path> frontier = out;
  for (std::size_t len = 1; !frontier.empty() && (!max_len || len <= *max_len); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (EdgeId e : g.in_edges(p.source())) {
        next.push_back(Path::edge(g, e).concat(p));
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::string to_string(const Graph& g, const Path& p) {
  if (p.is_vertex()) {
    return g.name(p.source());
  }
  std::string out;
  for (EdgeId e : p.edges()) {
    if (!out.empty()) {
      out += ',';
    }
    out += g.name(e);
  }
  return out;
}

}  // namespace pathalg
