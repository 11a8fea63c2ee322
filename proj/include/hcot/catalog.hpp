#pragma once

// Algebras with a classification of their indecomposables, and an exhaustive
// search for n-cluster tilting subcategories.

#include <cstdint>
#include <string>
#include <vector>

#include "hcot/checks.hpp"

namespace hcot {

// kA_m / rad^l with the interval modules as universe.
struct NakayamaSpec {
  int m = 1;
  int l = 2;
  std::uint32_t p = 2;
};

Universe nakayama_universe(const NakayamaSpec& spec);
/// v isolated vertices; the simples.
Universe semisimple_universe(int v, std::uint32_t p);
/// k[x]/(x^l) with the Jordan blocks J_1..J_l.
Universe truncated_universe(int l, std::uint32_t p);

/// "nakayama:m=3,l=2,p=2", "semisimple:v=2,p=3" or "truncated:l=2,p=2".
/// Throws InputError.
Universe universe_by_name(const std::string& name);

/// Subcategory add(U_i : bit i of mask set).
Subcat subcat_from_mask(const Universe& u, std::uint64_t mask);

struct OracleResult {
  std::vector<std::uint64_t> masks;  // ascending
  std::vector<Subcat> hits;
  std::size_t subsets_checked = 0;
  /// The search over all subsets ran (small universes) and found the same hits.
  bool unconstrained_checked = false;
  bool unconstrained_agrees = false;
};

/// Every n-cluster tilting subcategory add(S), S ⊆ U, by direct evaluation of
/// the definition on an Ext table computed from injective coresolutions.
/// Throws UniverseTooLarge above 20 members.
OracleResult brute_force_nct_search(const Universe& u, std::size_t n);

}  // namespace hcot
