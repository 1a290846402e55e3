#include "pathalg/classify.hpp"

#include "pathalg/error.hpp"

namespace pathalg {

Classification classify(const Graph& g) {
  CycleCheck acyclic = is_acyclic(g);
  if (!acyclic.holds) {
    throw DomainError("not acyclic (witness cycle: " + to_string(g, *acyclic.witness) + ")");
  }
  if (!g.has_default_ck2()) {
    throw DomainError("non-default ck2 set");
  }
  Classification c;
  for (VertexId v : sinks(g)) {
    const std::size_t n = paths_into(g, v).size();
    c.sinks.push_back(v);
    c.counts.push_back(n);
    c.dimension += n * n;
  }
  return c;
}

std::string to_string(const Classification& c, const Ring& ring) {
  std::string out;
  for (std::size_t n : c.counts) {
    if (!out.empty()) {
      out += " (+) ";
    }
    out += "M_" + std::to_string(n) + "(" + ring.name() + ")";
  }
  if (out.empty()) {
    out = "0";
  }
  return out + ", dim " + std::to_string(c.dimension);
}

bool MatrixAlgebraElement::is_zero() const {
  for (const Matrix& m : blocks_) {
    if (!m.is_zero()) {
      return false;
    }
  }
  return true;
}

namespace {

template <class Op>
MatrixAlgebraElement blockwise(const MatrixAlgebraElement& a, const MatrixAlgebraElement& b,
                               Op op) {
  if (a.blocks().size() != b.blocks().size()) {
    throw DomainError("block structure mismatch");
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.blocks().size(); ++i) {
    out.push_back(op(a.blocks()[i], b.blocks()[i]));
  }
  return MatrixAlgebraElement(std::move(out));
}

}  // namespace

MatrixAlgebraElement operator+(const MatrixAlgebraElement& a, const MatrixAlgebraElement& b) {
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) { return x + y; });
}

MatrixAlgebraElement operator-(const MatrixAlgebraElement& a, const MatrixAlgebraElement& b) {
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) { return x - y; });
}

MatrixAlgebraElement operator*(const MatrixAlgebraElement& a, const MatrixAlgebraElement& b) {
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) { return x * y; });
}

MatrixAlgebraElement operator*(const Scalar& r, const MatrixAlgebraElement& a) {
  MatrixAlgebraElement out = a;
  for (Matrix& m : out.blocks()) {
    m = r * m;
  }
  return out;
}

MatrixModel::MatrixModel(GraphPtr graph, Ring ring)
    : graph_(std::move(graph)), ring_(ring), classification_(classify(*graph_)) {
  for (std::size_t i = 0; i < classification_.sinks.size(); ++i) {
    VertexId v = classification_.sinks[i];
    block_of_[v] = i;
    std::size_t k = 0;
    for (Path& p : paths_into(*graph_, v)) {
      index_.emplace(std::move(p), k++);
    }
  }
}

MatrixAlgebraElement MatrixModel::zero() const {
  std::vector<Matrix> blocks;
  for (std::size_t n : classification_.counts) {
    blocks.emplace_back(ring_, n);
  }
  return MatrixAlgebraElement(std::move(blocks));
}

MatrixAlgebraElement MatrixModel::one() const {
  std::vector<Matrix> blocks;
  for (std::size_t n : classification_.counts) {
    blocks.push_back(Matrix::identity(ring_, n));
  }
  return MatrixAlgebraElement(std::move(blocks));
}

void MatrixModel::add_monomial(MatrixAlgebraElement& out, const Monomial& m,
                               const Scalar& c) const {
  const Graph& g = *graph_;
  const VertexId w = m.mu.range();
  if (g.is_sink(w)) {
    Matrix& block = out.blocks()[block_of_.at(w)];
    Scalar& entry = block(index_.at(m.mu), index_.at(m.nu));
    entry += c;
    return;
  }
  for (EdgeId e : g.out_edges(w)) {
    add_monomial(out, Monomial{m.mu.append(g, e), m.nu.append(g, e)}, c);
  }
}

MatrixAlgebraElement MatrixModel::operator()(const LeavittElement& x) const {
  if (!(x.ring() == ring_)) {
    throw DomainError("ring mismatch: " + x.ring().name() + " vs " + ring_.name());
  }
  MatrixAlgebraElement out = zero();
  for (const auto& [m, c] : x.terms()) {
    add_monomial(out, m, c);
  }
  return out;
}

MatrixAlgebraElement explicit_iso(const LeavittElement& x) {
  return MatrixModel(x.graph_ptr(), x.ring())(x);
}

}  // namespace pathalg
