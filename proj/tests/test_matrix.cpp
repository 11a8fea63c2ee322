#include "doctest.h"
#include "hcot/errors.hpp"
#include "hcot/matrix.hpp"
#include "hcot/options.hpp"

using namespace hcot;

namespace {
Mat random_mat(std::size_t r, std::size_t c, const PrimeField& f, Rng& rng) {
  Mat m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.scalar(f);
  return m;
}
}  // namespace

TEST_CASE("field arithmetic") {
  PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(PrimeField(8), ContractViolation);
  PrimeField big(2147483647u);
  CHECK(big.mul(big.inv(123456), 123456) == 1);
}

TEST_CASE("rref examples") {
  PrimeField f2(2);
  auto id = rref(Mat::identity(2, f2));
  CHECK(id.reduced == Mat::identity(2, f2));
  CHECK(id.rank == 2);
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});

  auto z = rref(Mat(3, 2, f2));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
  CHECK(z.reduced.is_zero());

  auto r = rref(Mat::from_rows({{1, 1}, {1, 1}}, f2));
  CHECK(r.reduced == Mat::from_rows({{1, 1}, {0, 0}}, f2));
  CHECK(r.rank == 1);

  auto e = rref(Mat(0, 0, f2));
  CHECK(e.rank == 0);
}

TEST_CASE("kernel examples") {
  PrimeField f2(2);
  CHECK(kernel_basis(Mat::identity(3, f2)).cols() == 0);
  auto k = kernel_basis(Mat(2, 3, f2));
  CHECK(k == Mat::identity(3, f2));
  auto k1 = kernel_basis(Mat::from_rows({{1, 1}}, f2));
  REQUIRE(k1.cols() == 1);
  CHECK(k1(0, 0) == 1);
  CHECK(k1(1, 0) == 1);
}

TEST_CASE("solve examples") {
  PrimeField f2(2);
  auto b = Mat::from_rows({{1}, {0}, {1}}, f2);
  CHECK(*solve(Mat::identity(3, f2), b) == b);
  CHECK_FALSE(solve(Mat(3, 3, f2), b).has_value());
  auto x = solve(Mat::from_rows({{1, 1}, {0, 0}}, f2), Mat::from_rows({{1}, {0}}, f2));
  REQUIRE(x.has_value());
  CHECK(*x == Mat::from_rows({{1}, {0}}, f2));
  CHECK_THROWS_AS(solve(Mat::identity(2, f2), b), ContractViolation);
}

TEST_CASE("randomized linear algebra properties") {
  Rng rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      std::size_t r = rng.below(6), c = rng.below(6);
      Mat a = random_mat(r, c, f, rng);
      auto rr = rref(a);
      CHECK(rref(rr.reduced).reduced == rr.reduced);
      CHECK(rank(a) == rank(a.transpose()));
      Mat k = kernel_basis(a);
      CHECK(k.cols() + rank(a) == c);
      CHECK((a * k).is_zero());
      Mat bvec = random_mat(r, 1, f, rng);
      if (auto x = solve(a, bvec)) CHECK(a * *x == bvec);
      Mat y = random_mat(c, 1, f, rng);
      auto x2 = solve(a, a * y);
      REQUIRE(x2.has_value());
      CHECK(a * *x2 == a * y);
      if (r == c)
        if (auto inv = inverse(a)) CHECK(a * *inv == Mat::identity(r, f));
      Mat lk = left_kernel_rows(a);
      CHECK((lk * a).is_zero());
      CHECK(lk.rows() + rank(a) == r);
    }
  }
}
