#include "prmqc/matrix.hpp"

#include <algorithm>

#include "prmqc/error.hpp"

namespace prmqc {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows) {
  Matrix m(std::move(field), 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) throw Error(Errc::ShapeMismatch, "row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

void Matrix::truncate_rows(std::size_t count) {
  rows_ = std::min(rows_, count);
  data_.resize(rows_ * cols_);
}

Matrix Matrix::frobenius(int q0) const {
  Matrix out = *this;
  std::vector<Elem> table(field_->q());
  for (int a = 0; a < field_->q(); ++a) table[a] = field_->frobenius(static_cast<Elem>(a), q0);
  for (auto& e : out.data_) e = table[e];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::operator==(const Matrix& other) const noexcept {
  return same_field(field_, other.field_) && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

void add_scaled_row(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem factor,
                    std::size_t from) noexcept {
  if (factor == 0) return;
  const Elem* mrow = f.mul_row(factor);
  const std::size_t n = dst.size();
  if (f.p() == 2) {
    // Characteristic 2: addition of encodings is XOR.
    for (std::size_t j = from; j < n; ++j) dst[j] ^= mrow[src[j]];
    return;
  }
  const int q = f.q();
  const Elem* add = f.add_row(0);
  for (std::size_t j = from; j < n; ++j) {
    const Elem s = src[j];
    if (s != 0) dst[j] = add[dst[j] * q + mrow[s]];
  }
}

void scale_row(const Field& f, std::span<Elem> row, Elem factor, std::size_t from) noexcept {
  const Elem* mrow = f.mul_row(factor);
  for (std::size_t j = from; j < row.size(); ++j) row[j] = mrow[row[j]];
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) noexcept {
  Elem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

RrefResult rref(Matrix m) {
  const Field& f = *m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    m.swap_rows(pr, r);
    auto prow = m.row(r);
    if (prow[c] != 1) scale_row(f, prow, f.inv(prow[c]), c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem e = m(i, c);
      if (e != 0) add_scaled_row(f, m.row(i), prow, f.neg(e), c);
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return {std::move(m), r, std::move(pivots)};
}

std::size_t rank(Matrix m) { return rref(std::move(m)).rank; }

Matrix null_space(const Matrix& m) {
  const Field& f = *m.field();
  const std::size_t n = m.cols();
  auto [red, rk, pivots] = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix basis(m.field(), 0, n);
  std::vector<Elem> v(n);
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::fill(v.begin(), v.end(), Elem{0});
    v[fc] = 1;
    for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = f.neg(red(i, fc));
    basis.append_row(v);
  }
  return rref(std::move(basis)).reduced;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "vstack: column counts differ");
  if (!same_field(a.field(), b.field())) throw Error(Errc::FieldMismatch, "vstack: fields differ");
  Matrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

Matrix sum_row_spaces(const Matrix& a, const Matrix& b) { return rref(vstack(a, b)).reduced; }

Matrix intersect_row_spaces(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "intersect: column counts differ");
  return null_space(vstack(null_space(a), null_space(b)));
}

std::optional<std::vector<Elem>> solve(const Matrix& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw Error(Errc::ShapeMismatch, "solve: right-hand side length");
  const std::size_t n = m.cols();
  Matrix aug(m.field(), m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
    aug(r, n) = b[r];
  }
  auto [red, rk, pivots] = rref(std::move(aug));
  if (rk > 0 && pivots.back() == n) return std::nullopt;
  std::vector<Elem> x(n, 0);
  for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = red(i, n);
  return x;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "multiply: inner dimensions differ");
  const Field& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) add_scaled_row(f, out.row(i), b.row(k), a(i, k));
  return out;
}

Matrix multiply_transposed(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "multiply_transposed: column counts differ");
  const Field& f = *a.field();
  Matrix out(a.field(), a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) out(i, j) = dot(f, a.row(i), b.row(j));
  return out;
}

}  // namespace prmqc
