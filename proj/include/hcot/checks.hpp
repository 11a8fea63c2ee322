#pragma once

// Decision procedures for n-cluster tilting subcategories, X-exact_n
// sequences, n-cotorsion classes, left closure, Wakamatsu and wideness.

#include <optional>
#include <string>
#include <vector>

#include "hcot/approx.hpp"

namespace hcot {

enum class Completeness { Complete, Declared };

/// The indecomposables a "for all modules" check ranges over.
struct Universe {
  AlgebraPtr algebra;
  std::vector<Module> indecomposables;
  Completeness completeness = Completeness::Declared;
  std::string name;

  std::string scope() const;
  /// The member with this label, if any.
  std::optional<Module> find(const std::string& label) const;
};

/// Degrades Pass to PassRelative on a declared universe and records the scope.
CheckReport scoped(CheckReport r, const Universe& u);

CheckReport is_n_cluster_tilting(const Universe& u, const Subcat& msub, std::size_t n,
                                 const Options& opt = {});
/// Ω^{ni} g ∈ add(M) for i <= depth and Ω^{-n} g ∈ add(M), for every generator.
CheckReport is_nZ(const Subcat& msub, std::size_t n, std::size_t depth, const Options& opt = {});
/// is_n_cluster_tilting and is_nZ together.
CheckReport is_nZ_cluster_tilting(const Universe& u, const Subcat& msub, std::size_t n,
                                  std::size_t depth, const Options& opt = {});

/// 0 -> Ext^k(x, r_n) -> ... -> Ext^k(x, r_1) -> 0 for a tail r_n -> ... -> r_1.
struct ExtLadder {
  std::size_t degree = 0;
  std::vector<std::size_t> dims;   // per tail object
  std::vector<std::size_t> ranks;  // per tail map
  bool exact = false;
  std::size_t failing_spot = 0;    // index into the tail objects when not exact
};
ExtLadder ext_ladder(const Module& x, const Tail& tail, std::size_t degree);

/// Tail r_n -> ... -> r_1 of an n-kernel sequence 0 -> r_n -> ... -> r_1 -> x -> m -> 0.
Tail tail_of(const NSequence& s);

CheckReport is_in_X_exact_n(const Subcat& x, const Tail& tail, std::size_t n,
                            std::size_t degree = 0);
/// Generators of M whose ladder against every tail is exact.
Subcat left_perp_of_family(const Subcat& msub, const std::vector<Tail>& family, std::size_t n);

struct SpecialPrecover {
  NSequence sequence;  // 0 -> r_n -> ... -> r_1 -> x -> m -> 0
  Tail tail;
  CheckReport report;
};
SpecialPrecover n_special_precover(const Subcat& x, const Subcat& msub, const Module& m,
                                   std::size_t n, const Options& opt = {});

enum class CotorsionStrategy { Theorem, Relative };
CheckReport is_n_cotorsion(const Subcat& x, const Subcat& msub, const Universe& u, std::size_t n,
                           CotorsionStrategy strategy, const Options& opt = {},
                           const std::vector<Tail>& extra_tails = {});
CheckReport basic_properties_audit(const Subcat& x, const Subcat& msub, std::size_t n,
                                   std::size_t depth, const Options& opt = {});
/// Ext^n(X, X) = 0 plus classical special precovers over the universe. If `y`
/// is given, also checks M ⊆ Y and Ext^1(X, M) = 0.
CheckReport thm_ext_vanishing_path(const Subcat& x, const Subcat& msub, const Universe& u,
                                   std::size_t n, const std::optional<Subcat>& y = std::nullopt,
                                   const Options& opt = {});

/// Exactness of the long sequence Hom(x, s) -> Ext^n(x, s) -> Ext^{2n}(x, s)
/// -> ... through degree n*depth, with connecting maps given by s.
CheckReport long_ext_sequence(const Module& x, const NSequence& s, std::size_t depth);

CheckReport is_left_closed_under_n_extensions(const Subcat& x, const Subcat& msub, std::size_t n,
                                              const Options& opt = {});
CheckReport wakamatsu_check(const Subcat& x, const Subcat& msub, const Module& m, std::size_t n,
                            const Options& opt = {});
CheckReport is_wide(const Subcat& w, const Subcat& msub, std::size_t n, const Options& opt = {});
CheckReport wide_implies_cotorsion_experiment(const Subcat& w, const Subcat& msub,
                                              const Universe& u, std::size_t n,
                                              const Options& opt = {});

/// Inflation along Λ -> Λ' = Λ/I: same vertex spaces and arrow matrices.
Module restrict_scalars(const AlgebraPtr& big, const Module& m);
Subcat restrict_scalars(const AlgebraPtr& big, const Subcat& c, const Options& opt = {});
/// Compares Ext^n over Λ' with Ext^n over Λ for restricted modules, together
/// with the rank of the induced map between them.
CheckReport ext_compare(const AlgebraPtr& big, const Module& a, const Module& b, std::size_t n);

}  // namespace hcot
