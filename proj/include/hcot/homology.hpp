#pragma once

// Projective covers, minimal (co)resolutions and Ext at cochain level.

#include <vector>

#include "hcot/module.hpp"

namespace hcot {

/// Minimal projective cover ⊕ P_v^{dim top_v(M)} ->> M.
ModuleMap projective_cover(const Module& m);
/// Minimal injective envelope M >-> ⊕ I_v^{dim soc_v(M)}.
ModuleMap injective_envelope(const Module& m);

bool is_projective(const Module& m);
bool is_injective(const Module& m);

/// 0 <- M <- P_0 <- P_1 <- ... <- P_K. Stops early once a syzygy vanishes.
struct Resolution {
  Module target;
  std::vector<Module> terms;               // P_0..P_K
  ModuleMap augmentation;                  // P_0 -> target
  std::vector<ModuleMap> differentials;    // differentials[i-1] = d_i: P_i -> P_{i-1}
  std::vector<Module> syzygies;            // syzygies[i-1] = Ω^i M
  std::vector<ModuleMap> syzygy_inclusions;  // Ω^i M -> P_{i-1}
  std::size_t requested = 0;               // K asked for; terms beyond are 0 if shorter

  std::size_t length() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }
  /// P_i, or the zero module beyond the computed range.
  Module term(std::size_t i) const;
  /// d_i: P_i -> P_{i-1} for i >= 1, zero beyond the range.
  ModuleMap differential(std::size_t i) const;
};

Resolution min_projective_resolution(const Module& m, std::size_t k);
/// Ω^k M (k = 0 gives M).
Module syzygy(const Module& m, std::size_t k);

/// 0 -> M -> I^0 -> I^1 -> ... -> I^K.
struct Coresolution {
  Module source;
  std::vector<Module> terms;              // I^0..I^K
  ModuleMap coaugmentation;               // source -> I^0
  std::vector<ModuleMap> differentials;   // differentials[i-1]: I^{i-1} -> I^i
  std::vector<Module> cosyzygies;         // cosyzygies[i-1] = Ω_{-i} M
};

Coresolution min_injective_coresolution(const Module& m, std::size_t k);
Module cosyzygy(const Module& m, std::size_t k);

/// Ext^k(M, N) = H^k Hom(P_•, N) with explicit cocycle representatives.
/// Cochains are coordinate vectors over `cochains.basis`.
struct ExtSpace {
  Module source;
  Module target;
  std::size_t degree = 0;
  Resolution resolution;
  HomSpace cochains;   // Hom(P_k, N)
  Mat cocycles;        // columns: basis of Z^k
  Mat coboundaries;    // columns: basis of B^k
  Mat classes;         // columns: cocycles completing B^k to Z^k

  std::size_t dim() const noexcept { return classes.cols(); }
  /// Cocycle -> coordinates of its class over `classes`. Throws
  /// ContractViolation if the vector is not a cocycle.
  std::vector<Scalar> class_of(const std::vector<Scalar>& cocycle) const;
  /// Same, for a map P_k -> N.
  std::vector<Scalar> class_of(const ModuleMap& cocycle) const;
  /// The cocycle P_k -> N representing the class with the given coordinates.
  ModuleMap representative(const std::vector<Scalar>& coords) const;
};

ExtSpace ext_space(const Module& m, const Module& n, std::size_t k);
/// Shares the resolution of an existing space (same source, same degree).
ExtSpace ext_space(const Resolution& res, const Module& n, std::size_t k);
std::size_t ext_dim(const Module& m, const Module& n, std::size_t k);
/// dim Ext^k(M, N) from the cochain complex Hom(M, I^•) of the injective
/// coresolution of N. Independent of the resolution route.
std::size_t ext_dim_via_coresolution(const Module& m, const Module& n, std::size_t k);

/// Matrix of Ext^k(x, f): Ext^k(x, r) -> Ext^k(x, r') in class coordinates.
Mat ext_induced_map(const Module& x, const ModuleMap& f, std::size_t k);
/// Same, against precomputed spaces (sharing the resolution of x).
Mat ext_induced_map(const ExtSpace& from, const ExtSpace& to, const ModuleMap& f);

/// Chain map c_i: Pa_i -> Pb_i over f: a -> b, for i = 0..k
/// (aug_b c_0 = f aug_a, d_i c_i = c_{i-1} d_i).
std::vector<ModuleMap> lift_to_resolutions(const ModuleMap& f, const Resolution& from,
                                           const Resolution& to, std::size_t k);

}  // namespace hcot
