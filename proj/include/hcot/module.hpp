#pragma once

// Representations of a bound quiver (the objects of mod-Λ) and their maps.

#include <optional>
#include <string>
#include <vector>

#include "hcot/algebra.hpp"
#include "hcot/options.hpp"

namespace hcot {

/// A finite-dimensional representation satisfying the relations of its
/// algebra. Immutable.
class Module {
public:
  Module() = default;
  /// Validates matrix shapes and relations; throws RelationViolated or
  /// ContractViolation.
  Module(AlgebraPtr algebra, std::vector<std::size_t> dims,
         std::vector<Mat> arrow_mats, std::string label = {});
  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const PrimeField& field() const { return algebra_->field(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(int v) const { return dims_.at(v); }
  std::size_t total_dim() const noexcept;
  bool is_zero() const noexcept { return total_dim() == 0; }
  const Mat& arrow_mat(std::size_t arrow) const { return mats_.at(arrow); }
  const std::vector<Mat>& arrow_mats() const noexcept { return mats_; }
  /// Matrix of a path given as arrow indices in application order.
  Mat path_matrix(const std::vector<std::size_t>& arrows, int source) const;

  const std::string& label() const noexcept { return label_; }
  Module with_label(std::string label) const;
  /// Label if set, otherwise the dimension vector.
  std::string display_name() const;

  /// Structural equality (same algebra, dims and matrices); labels ignored.
  bool same_as(const Module& o) const noexcept;

private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Mat> mats_;
  std::string label_;
};

/// A vertex-wise linear map commuting with the arrow actions.
class ModuleMap {
public:
  ModuleMap() = default;
  /// Validates shapes and commuting squares; throws ContractViolation.
  ModuleMap(Module source, Module target, std::vector<Mat> vertex_mats);
  static ModuleMap zero(const Module& source, const Module& target);
  static ModuleMap identity(const Module& m);

  const Module& source() const noexcept { return source_; }
  const Module& target() const noexcept { return target_; }
  const Mat& at(int v) const { return mats_.at(v); }
  const std::vector<Mat>& vertex_mats() const noexcept { return mats_; }

  bool is_zero() const noexcept;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
  std::optional<ModuleMap> inverse() const;
  std::size_t rank() const;

  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap operator-(const ModuleMap& o) const;
  ModuleMap operator-() const;
  ModuleMap scaled(Scalar s) const;
  bool operator==(const ModuleMap& o) const noexcept;

  /// Flattened vertex matrices (row-major, vertex order).
  std::vector<Scalar> flatten() const;

private:
  Module source_;
  Module target_;
  std::vector<Mat> mats_;
};

/// Composite g∘f ("f then g").
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

/// Hom_Λ(M, N) with a fixed basis.
struct HomSpace {
  Module source;
  Module target;
  std::vector<ModuleMap> basis;
  Mat flat;  // column i = basis[i].flatten()

  std::size_t dim() const noexcept { return basis.size(); }
  /// Coordinates of f in `basis`; f must lie in Hom(source, target).
  std::vector<Scalar> coords(const ModuleMap& f) const;
  ModuleMap combination(const std::vector<Scalar>& coeffs) const;
};

/// Basis of Hom_Λ(M, N): the null space of the commuting-square system.
HomSpace hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);
/// Matrix of Hom(d, N): φ ↦ φ∘d from `from` = Hom(B, N) to `into` = Hom(A, N)
/// for d: A -> B, in basis coordinates.
Mat hom_precompose(const HomSpace& from, const ModuleMap& d, const HomSpace& into);
/// Matrix of Hom(M, d): φ ↦ d∘φ from Hom(M, A) to Hom(M, B) for d: A -> B.
Mat hom_postcompose(const HomSpace& from, const ModuleMap& d, const HomSpace& into);

struct Factorization {
  ModuleMap kernel;     // ker f -> source
  Module image;
  ModuleMap coimage;    // source ->> image
  ModuleMap image_inclusion;  // image -> target
  ModuleMap cokernel;   // target ->> coker f
};

Factorization map_factorization(const ModuleMap& f);

/// Inclusion of the subrepresentation spanned at each vertex by the columns of
/// `spans[v]` (which need not be independent). Throws ContractViolation if the
/// subspace is not arrow-stable.
ModuleMap submodule(const Module& m, const std::vector<Mat>& spans);
/// Projection M ->> M / span.
ModuleMap quotient_by(const Module& m, const std::vector<Mat>& spans);

/// The unique map g: a' -> b' with into_b∘g = f∘into_a, where into_a and
/// into_b are injective. Throws ContractViolation when f does not restrict.
ModuleMap restrict_map(const ModuleMap& f, const ModuleMap& into_a,
                       const ModuleMap& into_b);
/// The unique map g: coker -> target with g∘proj = f, for a surjection proj
/// with f vanishing on ker proj.
ModuleMap descend_map(const ModuleMap& f, const ModuleMap& proj);

struct DirectSum {
  Module sum;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};

DirectSum direct_sum(const std::vector<Module>& ms, const AlgebraPtr& algebra);
DirectSum direct_sum(const std::vector<Module>& ms);
/// Map between direct sums given by a block matrix of component maps
/// (blocks[i][j]: sources[j] -> targets[i]).
ModuleMap block_map(const DirectSum& source, const DirectSum& target,
                    const std::vector<std::vector<ModuleMap>>& blocks);

struct Square {
  Module object;
  ModuleMap first;   // pushout: tgt f -> object; pullback: object -> src f
  ModuleMap second;  // pushout: tgt g -> object; pullback: object -> src g
};

/// Pushout of f: a -> b and g: a -> c: coker of (f, -g)^T: a -> b ⊕ c.
Square pushout(const ModuleMap& f, const ModuleMap& g);
/// Pullback of f: b -> d and g: c -> d: ker of (f, -g): b ⊕ c -> d.
Square pullback(const ModuleMap& f, const ModuleMap& g);

/// k-dual D(M) = Hom_k(M, k), a module over the opposite algebra.
Module dual(const Module& m);
/// D(f): D(target) -> D(source).
ModuleMap dual(const ModuleMap& f);

/// dim of top(M) = M / rad M at each vertex.
std::vector<std::size_t> top_dims(const Module& m);
/// dim of soc(M) at each vertex.
std::vector<std::size_t> socle_dims(const Module& m);
/// Per-vertex spans of rad M = sum of the images of the arrow actions.
std::vector<Mat> radical_spans(const Module& m);

/// Some k: a -> b with u∘k = h (h: a -> c, u: b -> c), if one exists.
std::optional<ModuleMap> factor_through_right(const ModuleMap& h,
                                              const ModuleMap& u);
/// Some k: b -> c with k∘u = h (h: a -> c, u: a -> b), if one exists.
std::optional<ModuleMap> factor_through_left(const ModuleMap& h,
                                             const ModuleMap& u);

/// Indecomposable projective e_v Λ: paths starting at v, arrows acting by
/// post-composition. Labelled "P<v+1>".
Module projective_module(const AlgebraPtr& algebra, int v);
/// Indecomposable injective D(Λ e_v): dual of the paths ending at v.
/// Labelled "I<v+1>".
Module injective_module(const AlgebraPtr& algebra, int v);
/// Simple module at v. Labelled "S<v+1>".
Module simple_module(const AlgebraPtr& algebra, int v);
std::vector<Module> projective_modules(const AlgebraPtr& algebra);
std::vector<Module> injective_modules(const AlgebraPtr& algebra);
/// Λ as a right module over itself: the sum of the projectives.
Module regular_module(const AlgebraPtr& algebra);

/// Random module map in Hom(m, n) and random endomorphisms.
ModuleMap random_map(const HomSpace& hom, Rng& rng);

/// M' isomorphic to M via the invertible per-vertex matrices `change`
/// (M'_x = T_j M_x T_i^{-1}); returns the isomorphism M -> M'.
ModuleMap change_of_basis(const Module& m, const std::vector<Mat>& change);
/// Random invertible change of basis.
ModuleMap random_change_of_basis(const Module& m, Rng& rng);

}  // namespace hcot
