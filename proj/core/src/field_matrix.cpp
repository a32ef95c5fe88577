#include "compalg/field_matrix.hpp"

#include <sstream>
#include <utility>

namespace compalg {

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  data_.assign(rows * cols, Scalar::zero(field_));
}

FieldMatrix FieldMatrix::identity(const Field& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

FieldMatrix FieldMatrix::from_rows(const Field& field,
                                   const std::vector<std::vector<long>>& rows) {
  require(!rows.empty(), Errc::DimensionMismatch, "empty matrix");
  FieldMatrix m(field, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols_, Errc::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j)
      m(i, j) = Scalar::from_int(field, rows[i][j]);
  }
  return m;
}

FieldMatrix FieldMatrix::from_scalars(const Field& field, std::size_t rows,
                                      std::size_t cols,
                                      std::vector<Scalar> data) {
  require(data.size() == rows * cols, Errc::DimensionMismatch,
          "entry count does not match shape");
  for (const auto& s : data)
    require(same_field(s.field(), field), Errc::SpecMismatch,
            "entry outside the matrix field");
  FieldMatrix m;
  m.field_ = field;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(data);
  return m;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FieldMatrix FieldMatrix::scaled(const Scalar& c) const {
  FieldMatrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

FieldMatrix FieldMatrix::submatrix(std::span<const std::size_t> rows,
                                   std::span<const std::size_t> cols) const {
  FieldMatrix out(field_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

bool FieldMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

FieldMatrix& FieldMatrix::operator+=(const FieldMatrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, Errc::DimensionMismatch,
          "matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

FieldMatrix& FieldMatrix::operator-=(const FieldMatrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, Errc::DimensionMismatch,
          "matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

FieldMatrix operator*(const FieldMatrix& lhs, const FieldMatrix& rhs) {
  require(lhs.cols_ == rhs.rows_, Errc::DimensionMismatch,
          "matrix product shape mismatch");
  require(same_field(lhs.field_, rhs.field_), Errc::SpecMismatch,
          "matrix product over different fields");
  FieldMatrix out(lhs.field_, lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool operator==(const FieldMatrix& lhs, const FieldMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ &&
         same_field(lhs.field_, rhs.field_) && lhs.data_ == rhs.data_;
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << (*this)(i, j).to_string();
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

bool is_split_quadratic(const Field& field) {
  if (field->kind() != FieldKind::QuadExt) return false;
  return is_square(Scalar::from_rational(field->base(), field->radicand())) ==
         Tri::Yes;
}

namespace {

Scalar det_by_elimination(FieldMatrix m) {
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(m.field());
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar factor = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
    }
  }
  return det;
}

}  // namespace

Scalar det_field(const FieldMatrix& m) {
  require(m.is_square(), Errc::NotSquare, "determinant of non-square matrix");
  if (m.rows() == 0) return Scalar::one(m.field());
  const Field& f = m.field();
  if (!is_split_quadratic(f)) return det_by_elimination(m);

  // k[sqrt(c^2)] ~ k + k via x + y sqrt(a) -> (x + c y, x - c y)
  const Field& k = f->base();
  Scalar c = *sqrt_in_base(Scalar::from_rational(k, f->radicand()));
  FieldMatrix plus(k, m.rows(), m.cols());
  FieldMatrix minus(k, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Scalar x = m(i, j).real_part();
      Scalar y = m(i, j).imag_part() * c;
      plus(i, j) = x + y;
      minus(i, j) = x - y;
    }
  Scalar d1 = det_by_elimination(std::move(plus));
  Scalar d2 = det_by_elimination(std::move(minus));
  Scalar half = Scalar::from_int(k, 2).inverse();
  return Scalar::quad(f, (d1 + d2) * half, (d1 - d2) * half * c.inverse());
}

EchelonForm row_reduce(const FieldMatrix& input) {
  require(!is_split_quadratic(input.field()), Errc::Unsupported,
          "row reduction needs a field, not a split quadratic algebra");
  EchelonForm out{input, {}};
  FieldMatrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const FieldMatrix& m) { return row_reduce(m).pivots.size(); }

std::optional<std::vector<Scalar>> first_null_vector(const FieldMatrix& m) {
  EchelonForm ef = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::size_t free = 0;
  while (free < m.cols() && is_pivot[free]) ++free;
  if (free == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
  x[free] = Scalar::one(m.field());
  for (std::size_t r = 0; r < ef.pivots.size(); ++r)
    x[ef.pivots[r]] = -ef.reduced(r, free);
  return x;
}

std::optional<std::vector<Scalar>> solve(const FieldMatrix& m,
                                         std::span<const Scalar> rhs) {
  require(rhs.size() == m.rows(), Errc::DimensionMismatch,
          "right-hand side length mismatch");
  FieldMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  EchelonForm ef = row_reduce(aug);
  if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t r = 0; r < ef.pivots.size(); ++r)
    x[ef.pivots[r]] = ef.reduced(r, m.cols());
  return x;
}

}  // namespace compalg
