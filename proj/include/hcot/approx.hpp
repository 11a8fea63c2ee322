#pragma once

// Approximations by add(C), n-kernels and n-cokernels inside a subcategory,
// n-exact sequences and their Ext classes.

#include <optional>
#include <string>
#include <vector>

#include "hcot/decompose.hpp"
#include "hcot/homology.hpp"
#include "hcot/report.hpp"

namespace hcot {

struct ApproxResult {
  ModuleMap map;         // right: x -> m; left: m -> x
  bool minimal = false;
  bool surjective = false;  // for left approximations: injective
  std::string certificate;
};

/// Evaluation map ⊕_g g^{dim Hom(g,m)} -> m: a right add(C)-approximation.
ApproxResult right_approx(const Subcat& c, const Module& m, bool force_epi = false);
/// Strips summands of x on which the map vanishes until right-minimal.
/// Throws MinimalityInconclusive if no witness of non-minimality is found.
ApproxResult right_minimalize(const ApproxResult& r, const Options& opt = {});
ApproxResult min_right_approx(const Subcat& c, const Module& m, const Options& opt = {});

/// m -> ⊕_g g^{dim Hom(m,g)}: a left add(C)-approximation (computed over the
/// opposite algebra).
ApproxResult left_approx(const Subcat& c, const Module& m, bool force_mono = false);
ApproxResult left_minimalize(const ApproxResult& r, const Options& opt = {});
ApproxResult min_left_approx(const Subcat& c, const Module& m, const Options& opt = {});

/// Whether φ: x -> m is right-minimal (every ψ with φψ = φ is invertible).
bool is_right_minimal(const ModuleMap& phi, const Options& opt = {});

/// A chain of maps objects[0] -> objects[1] -> ... with zero composites.
/// An n-exact sequence 0 -> m_{n+1} -> ... -> m_0 -> 0 is stored as
/// objects = {m_{n+1}, ..., m_0} and maps[j]: objects[j] -> objects[j+1],
/// so u_i: m_i -> m_{i-1} is maps[n+1-i].
struct NSequence {
  std::size_t n = 0;
  std::vector<Module> objects;
  std::vector<ModuleMap> maps;

  const Module& m(std::size_t i) const { return objects.at(n + 1 - i); }
  const ModuleMap& u(std::size_t i) const { return maps.at(n + 1 - i); }
  /// Throws ContractViolation on length, composability or nonzero composites.
  void validate() const;
  std::size_t total_dim() const;
  std::string describe() const;
};

/// Sequence of maps r_n -> ... -> r_1 (left to right): the tail of an
/// n-special precover.
struct Tail {
  std::vector<Module> objects;
  std::vector<ModuleMap> maps;  // maps[j]: objects[j] -> objects[j+1]
  std::string describe() const;
};

/// 0 -> x' -> x' -> 0 -> ... -> 0 -> x -> x -> 0 (for n = 1 the middle term
/// is x' ⊕ x).
NSequence contractible_sequence(const Module& x_prime, const Module& x, std::size_t n);
NSequence direct_sum(const NSequence& a, const NSequence& b);
/// D of every term; the result lives over the opposite algebra, reversed.
NSequence dual(const NSequence& s);

/// n-kernel of f: x -> m inside add(M) by iterated minimal right
/// M-approximations of kernels: 0 -> r_n -> ... -> r_1 -> x -> m.
/// Throws NKernelEscapesM if r_n ∉ add(M); ApproxNotSurjective if f is onto
/// but an approximation step is not.
NSequence n_kernel_in(const Subcat& msub, const ModuleMap& f, std::size_t n,
                      const Options& opt = {});
/// Dual: m' -> x -> r_1 -> ... -> r_n -> 0 by left approximations of cokernels.
NSequence n_cokernel_in(const Subcat& msub, const ModuleMap& f, std::size_t n,
                        const Options& opt = {});

/// Hom(g, -) and Hom(-, g) exactness for every generator g.
CheckReport is_n_exact(const Subcat& msub, const NSequence& s, const Options& opt = {},
                       bool check_membership = true);

/// Retraction of u_{n+1} and section of u_1, searched independently.
struct ContractibilityResult {
  bool left_split = false;
  bool right_split = false;
  bool agree() const noexcept { return left_split == right_split; }
  bool contractible() const noexcept { return left_split && right_split; }
};
ContractibilityResult contractibility(const NSequence& s);
CheckReport is_contractible(const NSequence& s);

struct PushoutDiagram {
  NSequence bottom;
  std::vector<ModuleMap> vertical;  // vertical[j]: top.objects[j] -> bottom.objects[j]
};
/// n-pushout of the n-exact sequence s along g: m_{n+1} -> x'. The bottom row
/// ends at the same m_0 and vertical.back() is the identity.
PushoutDiagram n_pushout(const Subcat& msub, const NSequence& s, const ModuleMap& g,
                         const Options& opt = {});

/// Comparison maps from the minimal resolution of m_0 into s:
/// c_i: P_i -> m_{i+1}, i = 0..n.
std::vector<ModuleMap> comparison_maps(const Resolution& res, const NSequence& s);
/// Class of s in Ext^n(m_0, m_{n+1}), in the coordinates of `ext`, which
/// must be ext_space(m_0, m_{n+1}, n).
std::vector<Scalar> sequence_class(const NSequence& s, const ExtSpace& ext);

/// An n-exact sequence 0 -> x' -> E_n ... E_1 -> x -> 0 with middle terms in
/// add(M) whose class is `coords` in ext = ext_space(x, x', n). Throws
/// RepresentativeEscapesM.
NSequence ext_class_representative(const Subcat& msub, const ExtSpace& ext,
                                   const std::vector<Scalar>& coords, const Options& opt = {});

/// Whether f: a -> b lies in the radical: {g∘f : g ∈ Hom(b, a)} is a
/// nilpotent left ideal of End(a).
bool is_radical_map(const ModuleMap& f);
/// Splits off contractible summands until every interior u_i (2 <= i <= n)
/// is radical. End terms and class are preserved.
NSequence almost_minimalize(const NSequence& s, const Options& opt = {});
bool is_almost_minimal(const NSequence& s);

/// m relabelled as a sum of generator names when it lies in add(c).
Module labelled_by(const Module& m, const Subcat& c, const Options& opt = {});

/// Dual subcategory over the opposite algebra.
Subcat dual(const Subcat& c);

}  // namespace hcot
