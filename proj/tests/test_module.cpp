#include "doctest.h"
#include "fixtures.hpp"
#include "hcot/decompose.hpp"
#include "hcot/errors.hpp"

using namespace hcot;

namespace {
// Inclusion of the socle S2 -> P1 over A3/rad^2 etc.: the unique nonzero map
// up to scalar between the given modules.
ModuleMap only_map(const Module& a, const Module& b) {
  auto h = hom_basis(a, b);
  REQUIRE(h.dim() == 1);
  return h.basis[0];
}
}  // namespace

TEST_CASE("module validation") {
  auto A = fx::a3_rad2();
  // both arrows nonzero violates b∘a = 0
  Mat one = Mat::identity(1, A->field());
  CHECK_THROWS_AS(Module(A, {1, 1, 1}, {one, one}), RelationViolated);
  CHECK_THROWS_AS(Module(A, {1, 1}, {one, one}), ContractViolation);
  CHECK_THROWS_AS(Module(A, {1, 1, 1}, {Mat(2, 1, A->field()), one}), ContractViolation);
}

TEST_CASE("hom_basis examples") {
  auto A = fx::a3_rad2();
  auto S1 = simple_module(A, 0), S2 = simple_module(A, 1);
  CHECK(hom_dim(S1, S2) == 0);
  CHECK(hom_dim(S1, S1) == 1);
  auto P1 = projective_module(A, 0), P2 = projective_module(A, 1);
  auto f = only_map(P2, P1);
  CHECK(f.rank() == 1);
  CHECK(map_factorization(f).image.dims() == std::vector<std::size_t>{0, 1, 0});
}

TEST_CASE("map_factorization examples") {
  auto A = fx::a3_rad2();
  auto P1 = projective_module(A, 0), S1 = simple_module(A, 0), S2 = simple_module(A, 1);
  auto id = map_factorization(ModuleMap::identity(P1));
  CHECK(id.kernel.source().is_zero());
  CHECK(id.cokernel.target().is_zero());
  CHECK(id.image.dims() == P1.dims());
  auto z = map_factorization(ModuleMap::zero(P1, S2));
  CHECK(z.kernel.source().dims() == P1.dims());
  CHECK(z.cokernel.target().dims() == S2.dims());
  auto fac = map_factorization(only_map(P1, S1));
  CHECK(is_isomorphic(fac.kernel.source(), S2).has_value());
}

TEST_CASE("direct_sum examples") {
  auto A = fx::a3_rad2();
  auto S1 = simple_module(A, 0), S2 = simple_module(A, 1), P1 = projective_module(A, 0);
  CHECK(direct_sum({}, A).sum.is_zero());
  CHECK(is_isomorphic(direct_sum({S1}).sum, S1).has_value());
  auto ds = direct_sum({S1, S2});
  CHECK(ds.sum.dims() == std::vector<std::size_t>{1, 1, 0});
  CHECK_FALSE(is_isomorphic(ds.sum, P1).has_value());
  auto d3 = direct_sum({P1, S2, S1});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto c = compose(d3.projections[i], d3.injections[j]);
      if (i == j) CHECK(c == ModuleMap::identity(d3.injections[j].source()));
      else CHECK(c.is_zero());
    }
}

TEST_CASE("decompose examples") {
  auto A = fx::a3_rad2();
  auto S1 = simple_module(A, 0);
  auto d = decompose(S1);
  REQUIRE(d.size() == 1);
  CHECK(d[0].multiplicity == 1);
  auto d2 = decompose(direct_sum({S1, S1}).sum);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].multiplicity == 2);
  auto reg = decompose(regular_module(A));
  REQUIRE(reg.size() == 3);
  Subcat prj{projective_modules(A)};
  auto counts = in_add(regular_module(A), prj);
  REQUIRE(counts);
  CHECK(*counts == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("decomposition splits the identity") {
  auto A = fx::a3_rad2(3);
  Rng rng(5);
  auto P = projective_modules(A);
  auto S2 = simple_module(A, 1);
  auto base = direct_sum({P[0], S2, P[0], P[1], simple_module(A, 0)}).sum;
  auto m = random_change_of_basis(base, rng).target();
  auto parts = decompose(m);
  ModuleMap acc = ModuleMap::zero(m, m);
  std::size_t total = 0;
  for (const auto& s : parts) {
    total += s.multiplicity;
    for (std::size_t k = 0; k < s.multiplicity; ++k) {
      acc = acc + compose(s.inclusions[k], s.projections[k]);
      CHECK(compose(s.projections[k], s.inclusions[k]) == ModuleMap::identity(s.module));
    }
  }
  CHECK(total == 5);
  CHECK(acc == ModuleMap::identity(m));
}

TEST_CASE("is_isomorphic examples") {
  auto A = fx::a3_rad2(5);
  auto P1 = projective_module(A, 0);
  CHECK(is_isomorphic(P1, P1).has_value());
  CHECK_FALSE(is_isomorphic(simple_module(A, 0), simple_module(A, 1)).has_value());
  Rng rng(3);
  auto shuffled = random_change_of_basis(direct_sum({P1, P1}).sum, rng).target();
  auto w = is_isomorphic(direct_sum({P1, P1}).sum, shuffled);
  REQUIRE(w.has_value());
  CHECK(w->is_isomorphism());
}

TEST_CASE("in_add examples") {
  auto A = fx::a3_rad2();
  auto P1 = projective_module(A, 0), P2 = projective_module(A, 1), S3 = simple_module(A, 2);
  Subcat c{{P1, P2, S3}};
  auto z = in_add(Module::zero(A), c);
  REQUIRE(z);
  CHECK(*z == std::vector<std::size_t>{0, 0, 0});
  auto m = in_add(direct_sum({P1, S3}).sum, c);
  REQUIRE(m);
  CHECK(*m == std::vector<std::size_t>{1, 0, 1});
  Subcat c2{{simple_module(A, 0), S3, P1, P2}};
  CHECK_FALSE(in_add(simple_module(A, 1), c2).has_value());
}

TEST_CASE("pushout examples") {
  auto A = fx::a3_rad2();
  auto P1 = projective_module(A, 0), P2 = projective_module(A, 1), S2 = simple_module(A, 1);
  // Hom(S2, P2) = 0 here, so the second leg is the zero map.
  CHECK(hom_dim(S2, P2) == 0);
  auto g = ModuleMap::zero(S2, P2);
  auto sq = pushout(only_map(S2, P1), g);
  CHECK(sq.object.dims() == std::vector<std::size_t>{1, 1, 1});
  auto f = only_map(S2, P1);
  auto po = pushout(ModuleMap::identity(S2), f);
  CHECK(is_isomorphic(po.object, P1).has_value());
  auto zero = Module::zero(A);
  auto s = pushout(ModuleMap::zero(zero, P1), ModuleMap::zero(zero, S2));
  CHECK(is_isomorphic(s.object, direct_sum({P1, S2}).sum).has_value());
  // commutativity of the square
  CHECK(compose(sq.first, only_map(S2, P1)) == compose(sq.second, g));
}

TEST_CASE("pullback and universal property") {
  auto A = fx::a3_rad2();
  auto P1 = projective_module(A, 0), S1 = simple_module(A, 0);
  auto pi = only_map(P1, S1);
  auto pb = pullback(pi, pi);
  CHECK(compose(pi, pb.first) == compose(pi, pb.second));
  CHECK(pb.object.total_dim() == 3);
}

TEST_CASE("module properties on random data") {
  auto A = fx::a3_rad2(3);
  Rng rng(17);
  std::vector<Module> u = {simple_module(A, 0), simple_module(A, 1), simple_module(A, 2),
                           projective_module(A, 0), projective_module(A, 1)};
  for (int t = 0; t < 15; ++t) {
    auto& a = u[rng.below(u.size())];
    auto& b = u[rng.below(u.size())];
    auto x = direct_sum({a, b}).sum;
    auto y = direct_sum({b, u[rng.below(u.size())]}).sum;
    auto h = hom_basis(x, y);
    auto f = random_map(h, rng);
    auto fac = map_factorization(f);
    CHECK(fac.kernel.source().total_dim() + fac.image.total_dim() == x.total_dim());
    CHECK(compose(fac.cokernel, f).is_zero());
    CHECK(compose(f, fac.kernel).is_zero());
    auto xc = random_change_of_basis(x, rng).target();
    CHECK(hom_dim(xc, y) == h.dim());
    auto parts = decompose(x);
    std::size_t count = 0;
    for (auto& s : parts) count += s.multiplicity;
    CHECK(count == 2);
  }
}

TEST_CASE("duality") {
  auto A = fx::a3_rad2();
  auto P1 = projective_module(A, 0);
  auto d = dual(P1);
  CHECK(d.algebra() == A->opposite());
  CHECK(dual(d).same_as(P1));
  // D(P_v over Λ) is the injective I_v over Λ^op
  CHECK(is_isomorphic(d, injective_module(A->opposite(), 0)).has_value());
}

TEST_CASE("self-injective dual numbers") {
  auto D = fx::dual_numbers();
  CHECK(is_isomorphic(projective_module(D, 0), injective_module(D, 0)).has_value());
}
