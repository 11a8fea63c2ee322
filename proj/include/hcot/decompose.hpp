#pragma once

// Krull-Schmidt decomposition, isomorphism and add-membership.

#include <optional>
#include <string>
#include <vector>

#include "hcot/module.hpp"
#include "hcot/options.hpp"

namespace hcot {

/// One isomorphism class of indecomposable summands. inclusions[k] and
/// projections[k] realize the k-th copy; together they split the source:
/// sum_k incl_k∘proj_k (over all classes) = id and proj_k∘incl_l = δ_kl.
struct Summand {
  Module module;
  std::size_t multiplicity = 0;
  std::vector<ModuleMap> inclusions;   // module -> M
  std::vector<ModuleMap> projections;  // M -> module
};

/// Splits M into indecomposables, grouped by isomorphism class.
/// Throws DecompositionInconclusive when a summand can neither be split nor
/// certified indecomposable.
std::vector<Summand> decompose(const Module& m, const Options& opt = {});

/// How indecomposability was certified (or "" if M splits).
std::string indecomposability_certificate(const Module& m, const Options& opt = {});
bool is_indecomposable(const Module& m, const Options& opt = {});

/// An isomorphism M -> N, or nullopt when none exists. Never a heuristic
/// negative: throws IsoInconclusive if the search budget is exhausted.
std::optional<ModuleMap> is_isomorphic(const Module& m, const Module& n,
                                       const Options& opt = {});

/// add(generators). Generators are indecomposable and pairwise
/// non-isomorphic.
struct Subcat {
  std::vector<Module> generators;

  /// Decomposes every module and keeps one representative per class.
  static Subcat from_modules(const std::vector<Module>& ms, const Options& opt = {});
  std::size_t size() const noexcept { return generators.size(); }
  std::string describe() const;
};

/// Multiplicity of each generator in M, or nullopt if M ∉ add(C).
std::optional<std::vector<std::size_t>> in_add(const Module& m, const Subcat& c,
                                               const Options& opt = {});
/// Index of the generator isomorphic to the indecomposable m, if any.
std::optional<std::size_t> generator_index(const Module& m, const Subcat& c,
                                           const Options& opt = {});

// Endomorphism-ring helpers.

/// f^k for an endomorphism f (k = 0 gives the identity).
ModuleMap map_power(const ModuleMap& f, std::size_t k);
bool is_nilpotent(const ModuleMap& f);
/// A basis of the span of the given maps (all with the same source/target).
std::vector<ModuleMap> span_basis(const std::vector<ModuleMap>& maps,
                                  const Module& source, const Module& target);
/// Whether the multiplicatively closed span generated by `gens` (endomorphisms
/// of one module) is nilpotent. For a one-sided ideal of End this decides
/// whether it lies in the radical.
bool generates_nilpotent(const std::vector<ModuleMap>& gens, const Module& x);
/// A non-nilpotent element of span(ideal), which should be a one-sided ideal
/// of End(x) that is not nilpotent. Searches basis elements, their products,
/// exhaustive combinations (within the cap) and random combinations.
std::optional<ModuleMap> find_non_nilpotent(const std::vector<ModuleMap>& ideal,
                                            const Module& x, const Options& opt,
                                            Rng& rng);

/// Fitting splitting x = im ψ^N ⊕ ker ψ^N of an endomorphism ψ.
struct FittingSplit {
  ModuleMap image_inclusion, kernel_inclusion;
  ModuleMap image_projection, kernel_projection;
};
FittingSplit fitting_split(const ModuleMap& psi);

}  // namespace hcot
