#include "compalg/comp_matrix.hpp"

#include <sstream>

namespace compalg {

CompMatrix::CompMatrix(Algebra algebra, std::size_t rows, std::size_t cols)
    : algebra_(std::move(algebra)), rows_(rows), cols_(cols) {
  data_.assign(rows * cols, QuaternionElement::zero(algebra_));
}

CompMatrix CompMatrix::identity(const Algebra& algebra, std::size_t n) {
  CompMatrix m(algebra, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = QuaternionElement::one(algebra);
  return m;
}

CompMatrix CompMatrix::from_elements(const Algebra& algebra, std::size_t rows,
                                     std::size_t cols,
                                     std::vector<QuaternionElement> entries) {
  require(entries.size() == rows * cols, Errc::DimensionMismatch,
          "entry count does not match shape");
  for (const auto& e : entries)
    require(same_algebra(e.algebra(), algebra), Errc::AlgebraMismatch,
            "entry from a different algebra");
  CompMatrix m;
  m.algebra_ = algebra;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(entries);
  return m;
}

void CompMatrix::check_same(const CompMatrix& rhs) const {
  require(same_algebra(algebra_, rhs.algebra_), Errc::AlgebraMismatch,
          "matrices over different algebras");
}

CompMatrix CompMatrix::submatrix(std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols) const {
  CompMatrix out(algebra_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

CompMatrix CompMatrix::truncated(std::size_t keep) const {
  require(keep <= rows_, Errc::DimensionMismatch, "truncation beyond row count");
  CompMatrix out(algebra_, keep, cols_);
  for (std::size_t i = 0; i < keep; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
  return out;
}

CompMatrix CompMatrix::right_scaled(const QuaternionElement& q) const {
  require(same_algebra(algebra_, q.algebra()), Errc::AlgebraMismatch,
          "scalar from a different algebra");
  CompMatrix out = *this;
  for (auto& e : out.data_) e = e * q;
  return out;
}

bool CompMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

CompMatrix& CompMatrix::operator+=(const CompMatrix& rhs) {
  check_same(rhs);
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, Errc::DimensionMismatch,
          "matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CompMatrix& CompMatrix::operator-=(const CompMatrix& rhs) {
  check_same(rhs);
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, Errc::DimensionMismatch,
          "matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

CompMatrix operator*(const CompMatrix& lhs, const CompMatrix& rhs) {
  lhs.check_same(rhs);
  require(lhs.cols_ == rhs.rows_, Errc::DimensionMismatch,
          "matrix product shape mismatch");
  CompMatrix out(lhs.algebra_, lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const QuaternionElement& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool operator==(const CompMatrix& lhs, const CompMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ &&
         same_algebra(lhs.algebra_, rhs.algebra_) && lhs.data_ == rhs.data_;
}

std::string CompMatrix::to_string() const {
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

FieldMatrix symplectic_rep(const CompMatrix& z) {
  require(z.is_square(), Errc::NotSquare, "symplectic representation needs n x n");
  const Algebra& alg = z.algebra();
  const Field& L = alg->subfield();
  const Scalar b = embed(L, alg->b());
  const std::size_t n = z.rows();
  FieldMatrix out(L, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto [x, y] = cayley_dickson_coords(z(i, j));
      out(i, j) = x;
      out(i, n + j) = -tau(y);
      out(n + i, j) = -(b * y);
      out(n + i, n + j) = tau(x);
    }
  return out;
}

Scalar study_det(const CompMatrix& z) {
  require(z.is_square(), Errc::NotSquare, "Study determinant needs n x n");
  Scalar d = det_field(symplectic_rep(z));
  return quad_norm(d);
}

namespace {

// Entries of z rewritten on the Mat(2,k) matrix-unit basis.
CompMatrix as_matrix_form(const CompMatrix& z) {
  const Algebra& alg = z.algebra();
  if (alg->is_matrix_form()) return z;
  require(alg->has_matrix_realization(), Errc::NotSplitForm,
          alg->to_string() + " has no registered Mat(2,k) realization");
  Algebra mat2 = QuatAlgebra::split_matrix(alg->base());
  std::vector<QuaternionElement> entries;
  entries.reserve(z.rows() * z.cols());
  for (const auto& e : z.entries()) entries.push_back(to_matrix_form(e, mat2));
  return CompMatrix::from_elements(mat2, z.rows(), z.cols(), std::move(entries));
}

}  // namespace

FieldMatrix flatten_split(const CompMatrix& z) {
  CompMatrix m = as_matrix_form(z);
  FieldMatrix out(m.algebra()->base(), 2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const QuaternionElement& e = m(i, j);
      out(2 * i, 2 * j) = e[0];
      out(2 * i, 2 * j + 1) = e[1];
      out(2 * i + 1, 2 * j) = e[2];
      out(2 * i + 1, 2 * j + 1) = e[3];
    }
  return out;
}

CompMatrix unflatten_split(const FieldMatrix& m, const Algebra& algebra) {
  require(m.rows() % 2 == 0 && m.cols() % 2 == 0, Errc::DimensionMismatch,
          "flattened matrix must have even dimensions");
  require(same_field(m.field(), algebra->base()), Errc::SpecMismatch,
          "flattened matrix over the wrong field");
  Algebra mat2 = algebra->is_matrix_form()
                     ? algebra
                     : QuatAlgebra::split_matrix(algebra->base());
  require(algebra->has_matrix_realization(), Errc::NotSplitForm,
          algebra->to_string() + " has no registered Mat(2,k) realization");
  const std::size_t rows = m.rows() / 2;
  const std::size_t cols = m.cols() / 2;
  std::vector<QuaternionElement> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      QuaternionElement e(mat2, {m(2 * i, 2 * j), m(2 * i, 2 * j + 1),
                                 m(2 * i + 1, 2 * j), m(2 * i + 1, 2 * j + 1)});
      entries.push_back(algebra->is_matrix_form() ? e
                                                  : from_matrix_form(e, algebra));
    }
  return CompMatrix::from_elements(algebra, rows, cols, std::move(entries));
}

std::pair<FieldMatrix, FieldMatrix> split_pair(const CompMatrix& z) {
  require(z.is_square(), Errc::NotSquare, "split_pair needs n x n");
  CompMatrix m = as_matrix_form(z);
  const Field& k = m.algebra()->base();
  FieldMatrix first(k, m.rows(), m.cols());
  FieldMatrix second(k, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const QuaternionElement& e = m(i, j);
      require(e[1].is_zero() && e[2].is_zero(), Errc::NotDiagonalBlock,
              "entry (" + std::to_string(i) + "," + std::to_string(j) +
                  ") is not a diagonal 2x2 block");
      first(i, j) = e[0];
      second(i, j) = e[3];
    }
  return {std::move(first), std::move(second)};
}

InvertibilityRoutes invertibility_routes(const CompMatrix& z) {
  require(z.is_square(), Errc::NotSquare, "invertibility needs n x n");
  InvertibilityRoutes routes;
  const Algebra& alg = z.algebra();
  if (!alg->is_matrix_form()) routes.study = !study_det(z).is_zero();
  if (alg->has_matrix_realization())
    routes.flattened = !det_field(flatten_split(z)).is_zero();
  return routes;
}

bool is_invertible(const CompMatrix& z) {
  require(z.is_square(), Errc::NotSquare, "invertibility needs n x n");
  if (z.algebra()->is_matrix_form())
    return !det_field(flatten_split(z)).is_zero();
  return !study_det(z).is_zero();
}

SkewEchelon skew_row_reduce(const CompMatrix& a) {
  require(!a.algebra()->is_matrix_form(), Errc::UnexpectedZeroDivisor,
          "Mat(2,k) is split; skew elimination needs a division algebra");
  SkewEchelon out{a, {}};
  CompMatrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    auto inv = try_inverse(m(row, col));
    if (!inv)
      fail(Errc::UnexpectedZeroDivisor,
           "nonzero pivot " + m(row, col).to_string() + " has norm zero in " +
               a.algebra()->to_string());
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = *inv * m(row, j);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      QuaternionElement factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(r, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::optional<std::vector<QuaternionElement>> skew_solve(const CompMatrix& a) {
  SkewEchelon ef = skew_row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::size_t free = 0;
  while (free < a.cols() && is_pivot[free]) ++free;
  if (free == a.cols()) return std::nullopt;

  const Algebra& alg = a.algebra();
  std::vector<QuaternionElement> coeffs(a.cols(), QuaternionElement::zero(alg));
  coeffs[free] = QuaternionElement::one(alg);
  for (std::size_t r = 0; r < ef.pivots.size(); ++r)
    coeffs[ef.pivots[r]] = -ef.reduced(r, free);

  // Normalise on the right so the first nonzero coefficient is 1.
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    QuaternionElement inv = quat_inverse(c);
    for (auto& x : coeffs) x = x * inv;
    break;
  }
  return coeffs;
}

std::size_t skew_column_rank(const CompMatrix& a) {
  return skew_row_reduce(a).pivots.size();
}

}  // namespace compalg
