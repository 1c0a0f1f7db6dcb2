#include "colonlab/linalg.hpp"

#include <utility>

#include "colonlab/errors.hpp"
#include "colonlab/kernels.hpp"

namespace colonlab {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw UsageError("matrix operands over different fields");
}

}  // namespace

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime()) {
    residues_.assign(rows * cols, 0);
  } else {
    rationals_.assign(rows * cols, mpq_class(0));
  }
}

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

FieldElement DenseMatrix::get(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return field_.from_residue(residues_[r * cols_ + c]);
  const mpq_class& q = rationals_[r * cols_ + c];
  return field_.from_fraction(q.get_num(), q.get_den());
}

void DenseMatrix::set(std::size_t r, std::size_t c, const FieldElement& value) {
  require_same_field(field_, value.field());
  if (field_.is_prime()) {
    residues_[r * cols_ + c] = value.residue();
  } else {
    rationals_[r * cols_ + c] = value.rational();
  }
}

std::vector<FieldElement> DenseMatrix::row(std::size_t r) const {
  std::vector<FieldElement> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c));
  return out;
}

void DenseMatrix::append_row(std::span<const FieldElement> values) {
  if (values.size() != cols_) throw UsageError("append_row: width mismatch");
  if (field_.is_prime()) {
    residues_.resize(residues_.size() + cols_);
  } else {
    rationals_.resize(rationals_.size() + cols_);
  }
  ++rows_;
  for (std::size_t c = 0; c < cols_; ++c) set(rows_ - 1, c, values[c]);
}

void DenseMatrix::append_row_from(const DenseMatrix& src, std::size_t r) {
  require_same_field(field_, src.field_);
  if (src.cols_ != cols_) throw UsageError("append_row_from: width mismatch");
  if (field_.is_prime()) {
    const auto row = src.residue_row(r);
    residues_.insert(residues_.end(), row.begin(), row.end());
  } else {
    rationals_.insert(rationals_.end(), src.rationals_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      src.rationals_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  ++rows_;
}

void DenseMatrix::add_scaled_row(std::size_t dst, std::size_t src, const FieldElement& c) {
  if (c.is_zero()) return;
  if (field_.is_prime()) {
    kernels::axpy_mod(residue_row(dst), residue_row(src), c.residue(), field_.characteristic());
    return;
  }
  const mpq_class& s = c.rational();
  for (std::size_t k = 0; k < cols_; ++k) {
    const mpq_class& v = rationals_[src * cols_ + k];
    if (sgn(v) != 0) rationals_[dst * cols_ + k] += s * v;
  }
}

void DenseMatrix::scale_row(std::size_t r, const FieldElement& c) {
  if (field_.is_prime()) {
    kernels::scale_mod(residue_row(r), c.residue(), field_.characteristic());
    return;
  }
  const mpq_class& s = c.rational();
  for (std::size_t k = 0; k < cols_; ++k) rationals_[r * cols_ + k] *= s;
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < cols_; ++k) {
    if (field_.is_prime()) {
      std::swap(residues_[a * cols_ + k], residues_[b * cols_ + k]);
    } else {
      std::swap(rationals_[a * cols_ + k], rationals_[b * cols_ + k]);
    }
  }
}

bool DenseMatrix::row_is_zero(std::size_t r) const {
  for (std::size_t k = 0; k < cols_; ++k) {
    if (field_.is_prime() ? residues_[r * cols_ + k] != 0 : sgn(rationals_[r * cols_ + k]) != 0) {
      return false;
    }
  }
  return true;
}

void DenseMatrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  if (field_.is_prime()) {
    residues_.resize(n * cols_);
  } else {
    rationals_.resize(n * cols_);
  }
}

bool DenseMatrix::is_zero() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!row_is_zero(r)) return false;
  }
  return true;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  require_same_field(lhs.field_, rhs.field_);
  if (lhs.cols_ != rhs.rows_) throw UsageError("matrix product: dimension mismatch");
  DenseMatrix out(lhs.field_, lhs.rows_, rhs.cols_);
  const std::uint32_t p = lhs.field_.characteristic();
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      if (lhs.field_.is_prime()) {
        const std::uint32_t a = lhs.residues_[i * lhs.cols_ + k];
        if (a != 0) kernels::axpy_mod(out.residue_row(i), rhs.residue_row(k), a, p);
      } else {
        const mpq_class& a = lhs.rationals_[i * lhs.cols_ + k];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          out.rationals_[i * out.cols_ + j] += a * rhs.rationals_[k * rhs.cols_ + j];
        }
      }
    }
  }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("matrix sum: dimension mismatch");
  DenseMatrix out = a;
  if (a.field_.is_prime()) {
    const std::uint32_t p = a.field_.characteristic();
    kernels::axpy_mod(out.residues_, b.residues_, 1, p);
  } else {
    for (std::size_t k = 0; k < out.rationals_.size(); ++k) out.rationals_[k] += b.rationals_[k];
  }
  return out;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.residues_ == b.residues_ && a.rationals_ == b.rationals_;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (field_.is_prime()) {
        out.residues_[c * rows_ + r] = residues_[r * cols_ + c];
      } else {
        out.rationals_[c * rows_ + r] = rationals_[r * cols_ + c];
      }
    }
  }
  return out;
}

DenseMatrix DenseMatrix::hconcat(const DenseMatrix& other) const {
  require_same_field(field_, other.field_);
  if (rows_ != other.rows_) throw UsageError("hconcat: row count mismatch");
  DenseMatrix out(field_, rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < out.cols_; ++c) {
      const DenseMatrix& src = c < cols_ ? *this : other;
      const std::size_t sc = c < cols_ ? c : c - cols_;
      if (field_.is_prime()) {
        out.residues_[r * out.cols_ + c] = src.residues_[r * src.cols_ + sc];
      } else {
        out.rationals_[r * out.cols_ + c] = src.rationals_[r * src.cols_ + sc];
      }
    }
  }
  return out;
}

DenseMatrix DenseMatrix::column_slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > cols_) throw UsageError("column_slice out of range");
  DenseMatrix out(field_, rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = begin; c < end; ++c) {
      if (field_.is_prime()) {
        out.residues_[r * out.cols_ + (c - begin)] = residues_[r * cols_ + c];
      } else {
        out.rationals_[r * out.cols_ + (c - begin)] = rationals_[r * cols_ + c];
      }
    }
  }
  return out;
}

std::vector<std::size_t> row_reduce(DenseMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.get(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    m.scale_row(r, m.get(r, c).inverse());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const FieldElement f = m.get(i, c);
      if (!f.is_zero()) m.add_scaled_row(i, r, -f);
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

std::size_t rank(DenseMatrix m) { return row_reduce(m).size(); }

DenseMatrix left_kernel(const DenseMatrix& m) {
  const std::size_t width = m.cols();
  DenseMatrix aug = m.hconcat(DenseMatrix::identity(m.field(), m.rows()));
  const auto pivots = row_reduce(aug);
  const DenseMatrix tail = aug.column_slice(width, aug.cols());
  DenseMatrix out(m.field(), 0, m.rows());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= width) out.append_row_from(tail, i);
  }
  return out;
}

std::vector<FieldElement> vector_times(std::span<const FieldElement> v, const DenseMatrix& m) {
  if (v.size() != m.rows()) throw UsageError("vector_times: dimension mismatch");
  DenseMatrix row(m.field(), 0, m.rows());
  row.append_row(v);
  return (row * m).row(0);
}

}  // namespace colonlab
