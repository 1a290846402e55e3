#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathalg {

struct VertexId {
  std::uint32_t index = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct EdgeId {
  std::uint32_t index = 0;
  auto operator<=>(const EdgeId&) const = default;
};

/// A finite directed graph E = (E0, E1, r, s) together with the set of
/// vertices at which the (CK2) relation is imposed.
///
/// By default (CK2) holds at every vertex that emits an edge. A vertex
/// declared singular is removed from that set; this is how an infinite
/// emitter is modelled with finitely many materialized edges. Vertex and edge
/// insertion order is the total order used for deterministic output.
class Graph {
 public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId source, VertexId range);
  /// Removes `v` from the (CK2) set.
  void declare_singular(VertexId v);

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& name(VertexId v) const { return vertex_names_.at(v.index); }
  const std::string& name(EdgeId e) const { return edges_.at(e.index).name; }
  VertexId source(EdgeId e) const { return edges_.at(e.index).source; }
  VertexId range(EdgeId e) const { return edges_.at(e.index).range; }

  /// Edges with source `v`, in edge order.
  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v.index); }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v.index); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  bool is_sink(VertexId v) const { return out_edges(v).empty(); }
  /// True iff (CK2) is imposed at `v`.
  bool in_ck2(VertexId v) const { return !is_sink(v) && !declared_singular_.at(v.index); }
  bool declared_singular(VertexId v) const { return declared_singular_.at(v.index); }
  /// True iff the (CK2) set is exactly the set of non-sinks.
  bool has_default_ck2() const;

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  struct EdgeData {
    std::string name;
    VertexId source;
    VertexId range;
    bool operator==(const EdgeData&) const = default;
  };

  void check_name_free(const std::string& name) const;

  std::vector<std::string> vertex_names_;
  std::vector<EdgeData> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<bool> declared_singular_;
};

/// A finite path: a vertex (length 0) or a nonempty chain of edges with
/// r(e_i) = s(e_{i+1}).
class Path {
 public:
  Path() = default;

  static Path vertex(VertexId v) { return Path(v, v, {}); }
  static Path edge(const Graph& g, EdgeId e) { return Path(g.source(e), g.range(e), {e}); }
  /// Throws `DomainError` if `edges` is empty or not a chain.
  static Path from_edges(const Graph& g, std::vector<EdgeId> edges);

  VertexId source() const noexcept { return source_; }
  VertexId range() const noexcept { return range_; }
  std::size_t length() const noexcept { return edges_.size(); }
  bool is_vertex() const noexcept { return edges_.empty(); }
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  EdgeId front() const { return edges_.front(); }
  EdgeId back() const { return edges_.back(); }
  EdgeId operator[](std::size_t i) const { return edges_[i]; }

  /// True iff this path is an initial subpath of `other`.
  bool is_prefix_of(const Path& other) const;
  /// The first `n` edges (n <= length).
  Path prefix(const Graph& g, std::size_t n) const;
  /// The path with the first `n` edges removed (n <= length).
  Path drop(const Graph& g, std::size_t n) const;
  /// Concatenation; throws `DomainError` unless range() == other.source().
  Path concat(const Path& other) const;
  Path append(const Graph& g, EdgeId e) const;

  bool operator==(const Path&) const = default;
  /// Shortlex: by length, then edge sequence in edge order, then source.
  std::strong_ordering operator<=>(const Path& other) const;

 private:
  Path(VertexId source, VertexId range, std::vector<EdgeId> edges)
      : source_(source), range_(range), edges_(std::move(edges)) {}

  VertexId source_;
  VertexId range_;
  std::vector<EdgeId> edges_;
};

/// Vertices outside the (CK2) set.
std::vector<VertexId> singular_vertices(const Graph& g);
std::vector<VertexId> sinks(const Graph& g);

struct CycleCheck {
  bool holds = true;
  /// A witness cycle when `holds` is false.
  std::optional<Path> witness;
};

/// `holds` is true iff the graph has no cycle; otherwise `witness` is a
/// shortest cycle.
CycleCheck is_acyclic(const Graph& g);

/// `holds` is true iff every cycle has an exit. A vertex outside the (CK2)
/// set counts as an exit of any cycle through it. The witness cycle, when
/// present, starts at its smallest vertex.
CycleCheck condition_L(const Graph& g);

/// Disjoint union; names are prefixed with `left_prefix` / `right_prefix`.
Graph disjoint_union(const Graph& e, const Graph& f, const std::string& left_prefix = "L.",
                     const std::string& right_prefix = "R.");

/// All paths alpha with r(alpha) = v and |alpha| <= max_len, in shortlex
/// order. An unbounded request on a graph with a cycle throws `DomainError`.
std::vector<Path> paths_into(const Graph& g, VertexId v,
                             std::optional<std::size_t> max_len = std::nullopt);

/// Comma-separated edge names, or the vertex name for a length-0 path.
std::string to_string(const Graph& g, const Path& p);

}  // namespace pathalg
