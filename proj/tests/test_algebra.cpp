#include "doctest.h"
#include "fixtures.hpp"
#include "hcot/errors.hpp"

using namespace hcot;

TEST_CASE("build_algebra examples") {
  auto k = fx::semisimple(1);
  CHECK(k->dimension() == 1);

  Quiver a3{3, {{0, 0, 1}, {1, 1, 2}}};
  auto A = build_algebra(a3, {{{{1, {0, 1}}}}}, 3, 2);
  CHECK(A->dimension() == 5);
  std::size_t lengths[2] = {0, 0};
  for (const auto& p : A->basis()) lengths[p.length()]++;
  CHECK(lengths[0] == 3);
  CHECK(lengths[1] == 2);

  auto D = fx::dual_numbers();
  CHECK(D->dimension() == 2);
}

TEST_CASE("admissibility failures") {
  Quiver a3{3, {{0, 0, 1}, {1, 1, 2}}};
  // bound too small: path b∘a of length 2 survives
  CHECK_THROWS_AS(build_algebra(a3, {}, 2, 2), NotAdmissible);
  Quiver loop{1, {{0, 0, 0}}};
  CHECK_THROWS_AS(build_algebra(loop, {{{{1, {0}}}}}, 2, 2), NotAdmissible);
  CHECK_THROWS_AS(build_algebra(a3, {{{{1, {1, 0}}}}}, 3, 2), NotAdmissible);
  CHECK_THROWS_AS(build_algebra(loop, {}, 1, 2), NotAdmissible);
}

TEST_CASE("projective and injective modules") {
  auto A = fx::a3_rad2();
  auto P = projective_modules(A);
  CHECK(P[0].dims() == std::vector<std::size_t>{1, 1, 0});
  CHECK(P[1].dims() == std::vector<std::size_t>{0, 1, 1});
  CHECK(P[2].dims() == std::vector<std::size_t>{0, 0, 1});
  auto I = injective_modules(A);
  CHECK(I[0].dims() == std::vector<std::size_t>{1, 0, 0});
  CHECK(I[1].dims() == std::vector<std::size_t>{1, 1, 0});
  CHECK(I[2].dims() == std::vector<std::size_t>{0, 1, 1});
  std::size_t total = 0;
  for (auto& p : P) total += p.total_dim();
  CHECK(total == A->dimension());

  auto S = fx::semisimple(2);
  for (int v = 0; v < 2; ++v) {
    CHECK(projective_module(S, v).total_dim() == 1);
    CHECK(injective_module(S, v).total_dim() == 1);
  }
  auto D = fx::dual_numbers();
  CHECK(projective_module(D, 0).total_dim() == 2);
  CHECK(injective_module(D, 0).total_dim() == 2);
}

TEST_CASE("commutative square") {
  Quiver q{4, {{0, 0, 1}, {1, 1, 3}, {2, 0, 2}, {3, 2, 3}}};
  auto A = build_algebra(q, {{{{1, {0, 1}}, {-1, {2, 3}}}}}, 3, 3);
  CHECK(A->dimension() == 9);
  CHECK(projective_module(A, 0).dims() == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("associativity on small algebras") {
  Quiver sq{4, {{0, 0, 1}, {1, 1, 3}, {2, 0, 2}, {3, 2, 3}}};
  auto square = build_algebra(sq, {{{{1, {0, 1}}, {-1, {2, 3}}}}}, 3, 3);
  for (auto A : {fx::a3_rad2(3), fx::dual_numbers(3), square}) {
    const auto n = A->dimension();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          // (ab)c
          std::vector<Scalar> left(n, 0), right(n, 0);
          auto ab = A->multiply(a, b);
          for (std::size_t i = 0; i < n; ++i)
            if (ab[i]) {
              auto t = A->multiply(i, c);
              for (std::size_t j = 0; j < n; ++j)
                left[j] = A->field().add(left[j], A->field().mul(ab[i], t[j]));
            }
          auto bc = A->multiply(b, c);
          for (std::size_t i = 0; i < n; ++i)
            if (bc[i]) {
              auto t = A->multiply(a, i);
              for (std::size_t j = 0; j < n; ++j)
                right[j] = A->field().add(right[j], A->field().mul(bc[i], t[j]));
            }
          CHECK(left == right);
        }
  }
}

TEST_CASE("opposite algebra round trip") {
  auto A = fx::a3_rad2();
  auto op = A->opposite();
  CHECK(op->dimension() == A->dimension());
  CHECK(op->opposite() == A);
  CHECK(A->opposite() == op);
}
