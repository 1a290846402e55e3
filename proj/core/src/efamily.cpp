#include "pathalg/efamily.hpp"

namespace pathalg {

std::vector<Scalar> ring_probes(const Ring& ring) {
  if (ring.kind() != Ring::Kind::integers_mod) {
    return {Scalar::one(ring)};
  }
  std::vector<Scalar> out;
  for (std::uint64_t k = 1; k < ring.modulus(); ++k) {
    out.emplace_back(ring, static_cast<long>(k));
  }
  return out;
}

std::string to_string(const EFamilyReport& report) {
  std::string out;
  for (const RelationCheck& r : report.relations) {
    out += "(" + r.name + "): " + (r.holds ? "holds" : "fails at " + r.first_failure) + "\n";
  }
  out += std::string("rv nonzero: ") +
         (report.vertices_nonzero ? "yes" : "no (" + report.nonzero_failure + ")") + "\n";
  for (const std::string& c : report.certificates) {
    out += "certificate: " + c + "\n";
  }
  return out;
}

EFamily<SteinbergElement> steinberg_family(GraphPtr graph, Ring ring) {
  const Graph& g = *graph;
  EFamily<SteinbergElement> fam;
  const Scalar one = Scalar::one(ring);
  for (VertexId v : g.vertices()) {
    fam.vertices.push_back(
        SteinbergElement::indicator(graph, BisectionAtom::unit(v), one));
  }
  for (EdgeId e : g.edges()) {
    const Path pe = Path::edge(g, e);
    const Path pr = Path::vertex(g.range(e));
    fam.edges.push_back(
        SteinbergElement::indicator(graph, BisectionAtom::make(g, pe, pr, {}), one));
    fam.ghosts.push_back(
        SteinbergElement::indicator(graph, BisectionAtom::make(g, pr, pe, {}), one));
  }
  return fam;
}

EFamily<LeavittElement> leavitt_family(GraphPtr graph, Ring ring) {
  const Graph& g = *graph;
  EFamily<LeavittElement> fam;
  for (VertexId v : g.vertices()) {
    fam.vertices.push_back(LeavittElement::vertex(graph, ring, v));
  }
  for (EdgeId e : g.edges()) {
    fam.edges.push_back(LeavittElement::edge(graph, ring, e));
    fam.ghosts.push_back(LeavittElement::ghost(graph, ring, e));
  }
  return fam;
}

std::optional<std::int64_t> homogeneous_degree(const SteinbergElement& f) {
  std::vector<std::int64_t> d = degrees(f);
  if (d.size() != 1) {
    return std::nullopt;
  }
  return d.front();
}

std::optional<std::int64_t> homogeneous_degree(const LeavittElement& x) {
  return homogeneous_degree(to_steinberg(x));
}

}  // namespace pathalg
