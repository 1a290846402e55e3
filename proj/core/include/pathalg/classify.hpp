#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pathalg/leavitt.hpp"
#include "pathalg/matrix.hpp"

namespace pathalg {

/// L_R(E) = (+)_i M_{n(v_i)}(R) for a finite acyclic graph, one block per sink
/// v_i with n(v_i) the number of paths ending at v_i.
struct Classification {
  std::vector<VertexId> sinks;
  std::vector<std::size_t> counts;
  std::size_t dimension = 0;
};

/// Throws `DomainError` for a graph with a cycle ("not acyclic (witness cycle:
/// ...)") or a non-default (CK2) set.
Classification classify(const Graph& g);

/// `M_3(Q) (+) M_2(Q), dim 13`.
std::string to_string(const Classification& c, const Ring& ring);

/// An element of a finite direct sum of matrix algebras.
class MatrixAlgebraElement {
 public:
  explicit MatrixAlgebraElement(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {}

  const std::vector<Matrix>& blocks() const { return blocks_; }
  std::vector<Matrix>& blocks() { return blocks_; }

  bool is_zero() const;

  friend MatrixAlgebraElement operator+(const MatrixAlgebraElement& a,
                                        const MatrixAlgebraElement& b);
  friend MatrixAlgebraElement operator-(const MatrixAlgebraElement& a,
                                        const MatrixAlgebraElement& b);
  friend MatrixAlgebraElement operator*(const MatrixAlgebraElement& a,
                                        const MatrixAlgebraElement& b);
  friend MatrixAlgebraElement operator*(const Scalar& r, const MatrixAlgebraElement& a);

  bool operator==(const MatrixAlgebraElement&) const = default;

 private:
  std::vector<Matrix> blocks_;
};

inline bool is_zero(const MatrixAlgebraElement& m) { return m.is_zero(); }

/// The explicit isomorphism L_R(E) -> (+)_i M_{n(v_i)}(R).
///
/// A monomial mu nu^* whose common range is a sink maps to the matrix unit
/// E_{idx(mu), idx(nu)} in that sink's block, where idx enumerates the paths
/// into the sink in shortlex order. Other monomials are first expanded with
/// (CK2) until every range is a sink.
class MatrixModel {
 public:
  MatrixModel(GraphPtr graph, Ring ring);

  const Classification& classification() const { return classification_; }
  const Ring& ring() const { return ring_; }

  MatrixAlgebraElement zero() const;
  MatrixAlgebraElement one() const;
  MatrixAlgebraElement operator()(const LeavittElement& x) const;

  /// Row/column index of `p` in its sink's block.
  std::size_t index_of(const Path& p) const { return index_.at(p); }

 private:
  void add_monomial(MatrixAlgebraElement& out, const Monomial& m, const Scalar& c) const;

  GraphPtr graph_;
  Ring ring_;
  Classification classification_;
  std::map<VertexId, std::size_t> block_of_;
  std::map<Path, std::size_t> index_;
};

MatrixAlgebraElement explicit_iso(const LeavittElement& x);

}  // namespace pathalg
