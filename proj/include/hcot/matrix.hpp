#pragma once

// Exact dense linear algebra over a prime field GF(p).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hcot {

using Scalar = std::uint32_t;

/// The prime field GF(p), 2 <= p <= 2^31 - 1. Elements are residues in [0, p).
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Scalar reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Scalar>(s >= p_ ? s - p_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const noexcept {
    return a >= b ? a - b : static_cast<Scalar>(std::uint64_t{a} + p_ - b);
  }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(std::uint64_t{a} * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(Scalar a) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

class Mat;

struct RrefResult;

/// Dense row-major matrix over GF(p).
class Mat {
public:
  Mat() : field_(2) {}
  Mat(std::size_t rows, std::size_t cols, PrimeField field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

  static Mat zero(std::size_t rows, std::size_t cols, PrimeField field) {
    return Mat(rows, cols, field);
  }
  static Mat identity(std::size_t n, PrimeField field);
  /// Builds from signed integer rows, reducing mod p. All rows must have equal
  /// length; `cols` disambiguates the shape of an empty row list.
  static Mat from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                       PrimeField field, std::size_t cols = 0);
  static Mat column(std::span<const Scalar> entries, PrimeField field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) noexcept {
    return data_[r * cols_ + c];
  }
  const std::vector<Scalar>& data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  bool is_square() const noexcept { return rows_ == cols_; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(Scalar s) const;
  bool operator==(const Mat& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
           data_ == o.data_;
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr,
            std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat select_columns(std::span<const std::size_t> cols) const;
  Mat select_rows(std::span<const std::size_t> rows) const;
  std::vector<Scalar> column_vector(std::size_t c) const;

  static Mat hstack(const std::vector<Mat>& parts, std::size_t rows,
                    PrimeField field);
  static Mat vstack(const std::vector<Mat>& parts, std::size_t cols,
                    PrimeField field);
  /// Block-diagonal matrix.
  static Mat diag(const std::vector<Mat>& parts, PrimeField field);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots chosen as the first nonzero entry.
RrefResult rref(const Mat& a);
std::size_t rank(const Mat& a);
/// Columns form a basis of the right null space of `a`, one column per free
/// variable in increasing order.
Mat kernel_basis(const Mat& a);
/// Some x with a*x = b, free variables zero. Throws ContractViolation on a
/// row-count mismatch.
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& a);
/// Columns of `a` at the pivot positions: a basis of its column space.
Mat column_space_basis(const Mat& a);
/// Rows y with y*a = 0, returned as the rows of a matrix.
Mat left_kernel_rows(const Mat& a);

}  // namespace hcot
