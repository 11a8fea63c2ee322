#include "hcot/matrix.hpp"

#include <sstream>

#include "hcot/errors.hpp"

namespace hcot {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > 2147483647u || !is_prime(p))
    throw ContractViolation("field modulus " + std::to_string(p) +
                            " is not a prime in [2, 2^31-1]");
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw ContractViolation("inverse of zero");
  return pow(a, p_ - 2);
}

Mat Mat::identity(std::size_t n, PrimeField field) {
  Mat m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                   PrimeField field, std::size_t cols) {
  std::size_t c = rows.empty() ? cols : rows.front().size();
  Mat m(rows.size(), c, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c)
      throw ContractViolation("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.reduce(rows[i][j]);
  }
  return m;
}

Mat Mat::column(std::span<const Scalar> entries, PrimeField field) {
  Mat m(entries.size(), 1, field);
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(i, 0) = entries[i] % field.p();
  return m;
}

bool Mat::is_zero() const noexcept {
  for (auto v : data_)
    if (v) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_))
    throw ContractViolation("matrix product shape mismatch " +
                            std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " * " +
                            std::to_string(o.rows_) + "x" +
                            std::to_string(o.cols_));
  Mat r(rows_, o.cols_, field_);
  const std::uint64_t p = field_.p();
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (!a) continue;
      const Scalar* row = &o.data_[k * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j)
        acc[j] = (acc[j] + a * row[j]) % p;
    }
    for (std::size_t j = 0; j < o.cols_; ++j)
      r(i, j) = static_cast<Scalar>(acc[j]);
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ContractViolation("matrix sum shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = field_.add(data_[i], o.data_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ContractViolation("matrix difference shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = field_.sub(data_[i], o.data_[i]);
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& v : r.data_) v = field_.neg(v);
  return r;
}

Mat Mat::scaled(Scalar s) const {
  Mat r = *this;
  for (auto& v : r.data_) v = field_.mul(v, s);
  return r;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw ContractViolation("block out of range");
  Mat b(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw ContractViolation("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::select_columns(std::span<const std::size_t> cols) const {
  Mat r(rows_, cols.size(), field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(i, cols[j]);
  return r;
}

Mat Mat::select_rows(std::span<const std::size_t> rows) const {
  Mat r(rows.size(), cols_, field_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(rows[i], j);
  return r;
}

std::vector<Scalar> Mat::column_vector(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Mat Mat::hstack(const std::vector<Mat>& parts, std::size_t rows,
                PrimeField field) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw ContractViolation("hstack row mismatch");
    total += p.cols();
  }
  Mat r(rows, total, field);
  std::size_t c = 0;
  for (const auto& p : parts) {
    r.set_block(0, c, p);
    c += p.cols();
  }
  return r;
}

Mat Mat::vstack(const std::vector<Mat>& parts, std::size_t cols,
                PrimeField field) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw ContractViolation("vstack column mismatch");
    total += p.rows();
  }
  Mat r(total, cols, field);
  std::size_t row = 0;
  for (const auto& p : parts) {
    r.set_block(row, 0, p);
    row += p.rows();
  }
  return r;
}

Mat Mat::diag(const std::vector<Mat>& parts, PrimeField field) {
  std::size_t nr = 0, nc = 0;
  for (const auto& p : parts) {
    nr += p.rows();
    nc += p.cols();
  }
  Mat r(nr, nc, field);
  std::size_t i = 0, j = 0;
  for (const auto& p : parts) {
    r.set_block(i, j, p);
    i += p.rows();
    j += p.cols();
  }
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Mat& a) {
  RrefResult res{a, 0, {}};
  Mat& m = res.reduced;
  const auto& f = a.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Scalar s = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Scalar c = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(c, m(row, j)));
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank(const Mat& a) { return rref(a).rank; }

Mat kernel_basis(const Mat& a) {
  auto r = rref(a);
  const auto& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Mat k(a.cols(), free.size(), f);
  for (std::size_t t = 0; t < free.size(); ++t) {
    k(free[t], t) = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      k(r.pivots[i], t) = f.neg(r.reduced(i, free[t]));
  }
  return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows())
    throw ContractViolation("solve: right-hand side has " +
                            std::to_string(b.rows()) + " rows, expected " +
                            std::to_string(a.rows()));
  Mat aug = Mat::hstack({a, b}, a.rows(), a.field());
  auto r = rref(aug);
  Mat x(a.cols(), b.cols(), a.field());
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t pc = r.pivots[i];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j)
      x(pc, j) = r.reduced(i, a.cols() + j);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (!a.is_square()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Mat::identity(a.rows(), a.field()));
}

Mat column_space_basis(const Mat& a) {
  auto r = rref(a);
  return a.select_columns(r.pivots);
}

Mat left_kernel_rows(const Mat& a) { return kernel_basis(a.transpose()).transpose(); }

}  // namespace hcot
