#include "doctest.h"
#include "fixtures.hpp"
#include "hcot/decompose.hpp"
#include "hcot/homology.hpp"

using namespace hcot;

namespace {
ModuleMap only_map(const Module& a, const Module& b) {
  auto h = hom_basis(a, b);
  REQUIRE(h.dim() == 1);
  return h.basis[0];
}
}  // namespace

TEST_CASE("projective_cover examples") {
  auto A = fx::a3_rad2();
  auto P1 = projective_module(A, 0);
  auto c = projective_cover(P1);
  CHECK(c.is_isomorphism());
  auto S1 = simple_module(A, 0);
  auto c1 = projective_cover(S1);
  CHECK(is_isomorphic(c1.source(), P1).has_value());
  CHECK(is_isomorphic(map_factorization(c1).kernel.source(), simple_module(A, 1)).has_value());
  auto D = fx::dual_numbers();
  auto S = simple_module(D, 0);
  auto cd = projective_cover(S);
  CHECK(cd.source().total_dim() == 2);
  CHECK(is_isomorphic(map_factorization(cd).kernel.source(), S).has_value());
}

TEST_CASE("covers are minimal on a universe") {
  auto A = fx::nakayama(4, 3, 3);
  for (const auto& a : fx::intervals(A, 3))
    for (const auto& b : fx::intervals(A, 3)) {
      auto m = direct_sum({a, b}).sum;
      auto c = projective_cover(m);
      CHECK(c.is_surjective());
      CHECK(top_dims(c.source()) == top_dims(m));
    }
}

TEST_CASE("min_projective_resolution examples") {
  auto A = fx::a3_rad2();
  auto r0 = min_projective_resolution(projective_module(A, 1), 3);
  CHECK(r0.length() == 0);
  auto r = min_projective_resolution(simple_module(A, 0), 2);
  REQUIRE(r.length() == 2);
  CHECK(is_isomorphic(r.terms[0], projective_module(A, 0)).has_value());
  CHECK(is_isomorphic(r.terms[1], projective_module(A, 1)).has_value());
  CHECK(is_isomorphic(r.syzygies[0], simple_module(A, 1)).has_value());
  CHECK(is_isomorphic(r.syzygies[1], simple_module(A, 2)).has_value());
  CHECK(r.length() == 2);
  // P_2 = P3 = S3 and the resolution stops there.
  auto r5 = min_projective_resolution(simple_module(A, 0), 5);
  CHECK(r5.length() == 2);
  CHECK(compose(r.augmentation, r.differentials[0]).is_zero());
  CHECK(compose(r.differentials[0], r.differentials[1]).is_zero());

  auto D = fx::dual_numbers();
  auto S = simple_module(D, 0);
  auto rp = min_projective_resolution(S, 4);
  REQUIRE(rp.syzygies.size() == 4);
  for (const auto& o : rp.syzygies) CHECK(is_isomorphic(o, S).has_value());
}

TEST_CASE("ext_dim examples") {
  auto A = fx::a3_rad2();
  auto S1 = simple_module(A, 0), S2 = simple_module(A, 1), S3 = simple_module(A, 2);
  for (std::size_t k = 1; k <= 3; ++k) CHECK(ext_dim(projective_module(A, 0), S2, k) == 0);
  CHECK(ext_dim(S1, S2, 1) == 1);
  CHECK(ext_dim(S1, S3, 2) == 1);
  CHECK(ext_dim(S1, S3, 1) == 0);
  CHECK(ext_dim(S1, S2, 0) == 0);
  CHECK(ext_dim(S1, S1, 0) == 1);
  auto D = fx::dual_numbers();
  auto S = simple_module(D, 0);
  for (std::size_t k = 0; k <= 6; ++k) CHECK(ext_dim(S, S, k) == 1);
}

TEST_CASE("ext_induced_map examples") {
  auto A = fx::a3_rad2();
  auto S1 = simple_module(A, 0), S3 = simple_module(A, 2), P2 = projective_module(A, 1);
  auto id = ext_induced_map(S1, ModuleMap::identity(S3), 2);
  CHECK(id == Mat::identity(1, A->field()));
  auto z = ext_induced_map(S1, ModuleMap::zero(S3, S3), 2);
  CHECK(z.is_zero());
  auto f = only_map(S3, P2);
  auto m = ext_induced_map(S1, f, 2);
  CHECK(m.rows() == 0);
  CHECK(m.cols() == 1);
  CHECK(ext_dim(S1, P2, 2) == 0);
}

TEST_CASE("min_injective_coresolution examples") {
  auto A = fx::a3_rad2();
  auto c0 = min_injective_coresolution(injective_module(A, 1), 3);
  CHECK(c0.terms.size() == 1);
  auto S3 = simple_module(A, 2);
  auto c = min_injective_coresolution(S3, 2);
  REQUIRE(c.terms.size() >= 2);
  CHECK(is_isomorphic(c.terms[0], projective_module(A, 1)).has_value());
  CHECK(is_isomorphic(c.cosyzygies[0], simple_module(A, 1)).has_value());
  CHECK(c.coaugmentation.is_injective());
  CHECK(is_injective(c.terms[0]));
}

TEST_CASE("balance, dimension shift and functoriality") {
  std::vector<std::pair<AlgebraPtr, std::vector<Module>>> cases;
  {
    auto A = fx::nakayama(4, 3, 2);
    cases.push_back({A, fx::intervals(A, 3)});
  }
  {
    auto A = fx::a3_rad2(3);
    cases.push_back({A, fx::intervals(A, 2)});
  }
  {
    auto K = fx::kronecker(3);
    cases.push_back({K, {simple_module(K, 0), simple_module(K, 1), projective_module(K, 0),
                        fx::kronecker_module(K, 1, 2), fx::kronecker_module(K, 0, 1)}});
  }
  Rng rng(99);
  int pairs = 0;
  for (auto& [A, u] : cases) {
    for (int t = 0; t < 10; ++t) {
      const auto& m = u[rng.below(u.size())];
      const auto& n = u[rng.below(u.size())];
      for (std::size_t k = 0; k <= 3; ++k)
        CHECK(ext_dim(m, n, k) == ext_dim_via_coresolution(m, n, k));
      for (std::size_t k = 1; k <= 2; ++k)
        CHECK(ext_dim(m, n, k + 1) == ext_dim(syzygy(m, 1), n, k));
      ++pairs;
      // functoriality of Ext^k(x, -)
      const auto& r1 = u[rng.below(u.size())];
      auto f = random_map(hom_basis(n, r1), rng);
      const auto& r2 = u[rng.below(u.size())];
      auto g = random_map(hom_basis(r1, r2), rng);
      for (std::size_t k = 1; k <= 2; ++k)
        CHECK(ext_induced_map(m, compose(g, f), k) ==
              ext_induced_map(m, g, k) * ext_induced_map(m, f, k));
    }
  }
  CHECK(pairs >= 20);
}

TEST_CASE("additivity of induced maps") {
  auto A = fx::a3_rad2();
  auto S1 = simple_module(A, 0), S2 = simple_module(A, 1), S3 = simple_module(A, 2);
  auto f = ModuleMap::identity(S2);
  auto g = ModuleMap::identity(S3);
  auto ds = direct_sum({S2, S3});
  auto fg = block_map(ds, ds, {{f, ModuleMap::zero(S3, S2)}, {ModuleMap::zero(S2, S3), g}});
  for (std::size_t k = 1; k <= 2; ++k) {
    Mat m = ext_induced_map(S1, fg, k);
    CHECK(m.rows() == ext_dim(S1, S2, k) + ext_dim(S1, S3, k));
    CHECK(m == Mat::identity(m.rows(), A->field()));
  }
}

TEST_CASE("long exact sequence ranks") {
  auto A = fx::nakayama(4, 3, 2);
  auto u = fx::intervals(A, 3);
  Rng rng(7);
  int tested = 0;
  for (const auto& b : u) {
    // 0 -> soc-part -> b -> b / sub -> 0 for every proper submodule from a random map
    for (const auto& a : u) {
      auto h = hom_basis(a, b);
      if (h.dim() == 0) continue;
      auto fmap = random_map(h, rng);
      if (!fmap.is_injective()) continue;
      auto fac = map_factorization(fmap);
      const auto& g = fac.cokernel;
      const auto& c = g.target();
      for (const auto& x : u) {
        std::vector<std::size_t> dA, dB, dC, rf, rg;
        for (std::size_t k = 0; k <= 2; ++k) {
          dA.push_back(ext_dim(x, a, k));
          dB.push_back(ext_dim(x, b, k));
          dC.push_back(ext_dim(x, c, k));
          rf.push_back(rank(ext_induced_map(x, fmap, k)));
          rg.push_back(rank(ext_induced_map(x, g, k)));
        }
        CHECK(dA[0] == rf[0]);
        for (std::size_t k = 0; k <= 2; ++k) CHECK(rf[k] + rg[k] == dB[k]);
        for (std::size_t k = 1; k <= 2; ++k)
          CHECK(dA[k] == (dC[k - 1] - rg[k - 1]) + rf[k]);
        ++tested;
      }
    }
  }
  CHECK(tested > 10);
}

TEST_CASE("lift to resolutions commutes") {
  auto A = fx::nakayama(4, 3, 3);
  auto u = fx::intervals(A, 3);
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    const auto& a = u[rng.below(u.size())];
    const auto& b = u[rng.below(u.size())];
    auto f = random_map(hom_basis(a, b), rng);
    auto ra = min_projective_resolution(a, 3), rb = min_projective_resolution(b, 3);
    auto c = lift_to_resolutions(f, ra, rb, 3);
    CHECK(compose(rb.augmentation, c[0]) == compose(f, ra.augmentation));
    for (std::size_t i = 1; i <= 3; ++i)
      CHECK(compose(rb.differential(i), c[i]) == compose(c[i - 1], ra.differential(i)));
  }
}
