#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "compalg/field.hpp"

namespace compalg {

/// Dense row-major matrix over a FieldSpec.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(Field field, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(const Field& field, std::size_t n);
  static FieldMatrix from_rows(const Field& field,
                               const std::vector<std::vector<long>>& rows);
  static FieldMatrix from_scalars(const Field& field, std::size_t rows,
                                  std::size_t cols, std::vector<Scalar> data);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  [[nodiscard]] std::span<const Scalar> data() const noexcept { return data_; }

  [[nodiscard]] FieldMatrix transpose() const;
  [[nodiscard]] FieldMatrix scaled(const Scalar& c) const;
  [[nodiscard]] FieldMatrix submatrix(std::span<const std::size_t> rows,
                                      std::span<const std::size_t> cols) const;
  [[nodiscard]] bool is_zero() const;

  FieldMatrix& operator+=(const FieldMatrix& rhs);
  FieldMatrix& operator-=(const FieldMatrix& rhs);
  friend FieldMatrix operator+(FieldMatrix lhs, const FieldMatrix& rhs) {
    return lhs += rhs;
  }
  friend FieldMatrix operator-(FieldMatrix lhs, const FieldMatrix& rhs) {
    return lhs -= rhs;
  }
  friend FieldMatrix operator*(const FieldMatrix& lhs, const FieldMatrix& rhs);
  friend bool operator==(const FieldMatrix& lhs, const FieldMatrix& rhs);

  [[nodiscard]] std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact determinant. Fields use division elimination with the first
/// nonzero pivot; a split quadratic algebra k[sqrt(c^2)] is handled
/// through its component decomposition into k + k.
[[nodiscard]] Scalar det_field(const FieldMatrix& m);

/// Rank over a field. Unsupported on split quadratic algebras.
[[nodiscard]] std::size_t rank(const FieldMatrix& m);

/// Reduced row echelon form with first-nonzero pivoting; returns the pivot
/// columns alongside the reduced matrix.
struct EchelonForm {
  FieldMatrix reduced;
  std::vector<std::size_t> pivots;
};
[[nodiscard]] EchelonForm row_reduce(const FieldMatrix& m);

/// First null vector of m (free column with the smallest index set to 1),
/// or nullopt when the columns are independent.
[[nodiscard]] std::optional<std::vector<Scalar>> first_null_vector(
    const FieldMatrix& m);

/// Some x with m x = rhs, or nullopt if the system is inconsistent.
[[nodiscard]] std::optional<std::vector<Scalar>> solve(
    const FieldMatrix& m, std::span<const Scalar> rhs);

/// True when the radicand of a quadratic algebra is a square in its base.
[[nodiscard]] bool is_split_quadratic(const Field& field);

}  // namespace compalg
