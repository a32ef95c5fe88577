#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "compalg/field_matrix.hpp"
#include "compalg/quaternion.hpp"

namespace compalg {

/// m x n matrix with entries in a quaternion algebra. Mat_{m x n}(C) is a
/// right C-module: scalars act on the right throughout.
class CompMatrix {
 public:
  CompMatrix() = default;
  CompMatrix(Algebra algebra, std::size_t rows, std::size_t cols);

  static CompMatrix identity(const Algebra& algebra, std::size_t n);
  static CompMatrix from_elements(const Algebra& algebra, std::size_t rows,
                                  std::size_t cols,
                                  std::vector<QuaternionElement> entries);

  [[nodiscard]] const Algebra& algebra() const noexcept { return algebra_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  QuaternionElement& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const QuaternionElement& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  [[nodiscard]] std::span<const QuaternionElement> entries() const noexcept {
    return data_;
  }

  [[nodiscard]] CompMatrix submatrix(std::span<const std::size_t> rows,
                                     std::span<const std::size_t> cols) const;
  /// The first `keep` rows.
  [[nodiscard]] CompMatrix truncated(std::size_t keep) const;
  /// Every entry multiplied on the right by q.
  [[nodiscard]] CompMatrix right_scaled(const QuaternionElement& q) const;
  [[nodiscard]] bool is_zero() const;

  CompMatrix& operator+=(const CompMatrix& rhs);
  CompMatrix& operator-=(const CompMatrix& rhs);
  friend CompMatrix operator+(CompMatrix lhs, const CompMatrix& rhs) {
    return lhs += rhs;
  }
  friend CompMatrix operator-(CompMatrix lhs, const CompMatrix& rhs) {
    return lhs -= rhs;
  }
  friend CompMatrix operator*(const CompMatrix& lhs, const CompMatrix& rhs);
  friend bool operator==(const CompMatrix& lhs, const CompMatrix& rhs);

  [[nodiscard]] std::string to_string() const;

 private:
  void check_same(const CompMatrix& rhs) const;

  Algebra algebra_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QuaternionElement> data_;
};

/// X + vY -> [[X, -tau(Y)], [-bY, tau(X)]] over L = k(sqrt a).
[[nodiscard]] FieldMatrix symplectic_rep(const CompMatrix& z);

/// d * tau(d) with d = det(symplectic_rep(z)), as an element of k.
[[nodiscard]] Scalar study_det(const CompMatrix& z);

/// Mat(m x n, Mat(2,k)) -> Mat(2m x 2n, k) by block substitution. Accepts
/// Mat(2,k)-form algebras and (1,-1)_k through its matrix realization.
[[nodiscard]] FieldMatrix flatten_split(const CompMatrix& z);
[[nodiscard]] CompMatrix unflatten_split(const FieldMatrix& m,
                                         const Algebra& algebra);

/// (Z1, Z2): upper-left and lower-right entries of each diagonal 2x2 block.
[[nodiscard]] std::pair<FieldMatrix, FieldMatrix> split_pair(
    const CompMatrix& z);

/// Invertibility by the Study determinant (quaternion form) or by the
/// flattened determinant (Mat(2,k) form).
[[nodiscard]] bool is_invertible(const CompMatrix& z);

/// Both invertibility routes, where each applies.
struct InvertibilityRoutes {
  std::optional<bool> study;
  std::optional<bool> flattened;
};
[[nodiscard]] InvertibilityRoutes invertibility_routes(const CompMatrix& z);

/// Reduced echelon form over a division quaternion algebra, built from
/// left row operations so the right null space is preserved. Throws
/// UnexpectedZeroDivisor if a nonzero pivot has norm zero.
struct SkewEchelon {
  CompMatrix reduced;
  std::vector<std::size_t> pivots;
};
[[nodiscard]] SkewEchelon skew_row_reduce(const CompMatrix& a);

/// Right coefficients (a_1..a_M), first nonzero one equal to 1, with
/// sum_j column_j * a_j = 0; nullopt when the columns are right-independent.
[[nodiscard]] std::optional<std::vector<QuaternionElement>> skew_solve(
    const CompMatrix& a);

/// Number of right-independent columns over a division algebra.
[[nodiscard]] std::size_t skew_column_rank(const CompMatrix& a);

}  // namespace compalg
