#pragma once

// Bound quiver algebras kQ/I over GF(p).
//
// Convention: a path is stored as its arrows in application order, so the
// arrow list [a, b] is the composite b∘a ("a then b"). A representation
// assigns to an arrow x: i -> j a matrix M_x: M_i -> M_j.

#include <memory>
#include <mutex>
#include <vector>

#include "hcot/matrix.hpp"

namespace hcot {

struct Arrow {
  int id = 0;
  int source = 0;
  int target = 0;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  /// Index of the arrow with the given id; throws ContractViolation if absent.
  std::size_t arrow_index(int id) const;
};

struct Path {
  int source = 0;
  int target = 0;
  std::vector<std::size_t> arrows;  // arrow indices, application order

  std::size_t length() const noexcept { return arrows.size(); }
  bool operator==(const Path&) const = default;
};

struct RelationTerm {
  std::int64_t coefficient = 1;
  std::vector<int> arrow_ids;  // application order
};

/// A linear combination of parallel paths, each of length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional kQ/I with an explicit path basis. Immutable.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const PrimeField& field() const noexcept { return field_; }
  int nilpotency_bound() const noexcept { return bound_; }
  int vertex_count() const noexcept { return quiver_.vertex_count; }
  std::size_t arrow_count() const noexcept { return quiver_.arrows.size(); }
  const Arrow& arrow(std::size_t idx) const { return quiver_.arrows.at(idx); }

  /// Residue paths forming a basis of kQ/I.
  const std::vector<Path>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  /// Indices into basis() of the basis paths from `from` to `to`.
  const std::vector<std::size_t>& basis_between(int from, int to) const;

  /// Coordinates (over basis()) of the given arrow-index path. Paths longer
  /// than the nilpotency bound reduce to zero.
  std::vector<Scalar> normal_form(const std::vector<std::size_t>& arrows,
                                  int source) const;
  /// Product "first a, then b" of two basis paths, as basis coordinates.
  std::vector<Scalar> multiply(std::size_t a, std::size_t b) const;

  /// kQ^op/I^op with arrows reversed (ids kept). Cached; opposite of the
  /// opposite is this algebra again.
  AlgebraPtr opposite() const;

private:
  friend AlgebraPtr build_algebra(const Quiver&, const std::vector<Relation>&,
                                  int, std::uint32_t);
  Algebra(Quiver q, std::vector<Relation> rels, PrimeField f, int bound)
      : quiver_(std::move(q)), relations_(std::move(rels)), field_(f),
        bound_(bound) {}

  Quiver quiver_;
  std::vector<Relation> relations_;
  PrimeField field_;
  int bound_;

  std::vector<Path> all_paths_;  // every path of length <= bound, longest first
  std::vector<std::size_t> basis_columns_;  // indices into all_paths_
  std::vector<Path> basis_;
  std::vector<std::vector<std::vector<std::size_t>>> between_;
  Mat ideal_rref_;  // rows span the ideal inside the truncated path space
  std::vector<std::size_t> ideal_pivots_;
  std::vector<long> column_to_basis_;

  mutable std::once_flag op_once_;
  mutable std::shared_ptr<const Algebra> op_;
  mutable std::weak_ptr<const Algebra> op_of_;

  long path_index(const Path& p) const;
};

/// Builds kQ/I, verifying admissibility (every term has length >= 2, terms
/// parallel, every path of length L lies in I). Throws NotAdmissible.
AlgebraPtr build_algebra(const Quiver& quiver,
                         const std::vector<Relation>& relations, int bound,
                         std::uint32_t p);

/// Same quiver as `base` with additional relations: the quotient algebra.
AlgebraPtr quotient_algebra(const Algebra& base,
                            const std::vector<Relation>& extra, int bound);

}  // namespace hcot
