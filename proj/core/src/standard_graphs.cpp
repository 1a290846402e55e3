#include "pathalg/standard_graphs.hpp"

#include <string>

namespace pathalg {

Graph rose(std::size_t petals) {
  Graph g;
  VertexId v = g.add_vertex("v");
  for (std::size_t i = 0; i < petals; ++i) {
    std::string name = i == 0 ? "e" : i == 1 ? "f" : "e" + std::to_string(i + 1);
    g.add_edge(name, v, v);
  }
  return g;
}

Graph toeplitz() {
  Graph g;
  VertexId u = g.add_vertex("u");
  VertexId v = g.add_vertex("v");
  g.add_edge("e", u, u);
  g.add_edge("f", u, v);
  return g;
}

Graph line(std::size_t n) {
  Graph g;
  for (std::size_t i = 1; i <= n; ++i) {
    g.add_vertex("v" + std::to_string(i));
  }
  for (std::size_t i = 1; i < n; ++i) {
    g.add_edge("e" + std::to_string(i), VertexId{static_cast<std::uint32_t>(i - 1)},
               VertexId{static_cast<std::uint32_t>(i)});
  }
  return g;
}

}  // namespace pathalg
