#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "compalg/error.hpp"

namespace compalg {

/// Dense integer matrix, arbitrary precision, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_diagonal() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Fraction-free (Bareiss) determinant.
[[nodiscard]] mpz_class det(const IntMatrix& a);
[[nodiscard]] bool is_unimodular(const IntMatrix& a);

/// U * A * V = D, U and V unimodular, D diagonal with d1 | d2 | ... and
/// nonnegative entries. Pivots: smallest nonzero |value|, ties broken by
/// (row, column).
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  /// Nonzero diagonal entries of D, in order.
  [[nodiscard]] std::vector<mpz_class> invariant_factors() const;
  [[nodiscard]] std::size_t rank() const { return invariant_factors().size(); }
};

[[nodiscard]] SmithForm smith_normal_form(const IntMatrix& a);

/// Checks on 0 -> Z^a --f--> Z^m --g--> Z^p -> 0, with f of shape m x a and
/// g of shape p x m.
struct SequenceVerdict {
  bool injective_f = false;
  bool composite_zero = false;
  bool exact_middle = false;
  bool surjective_g = false;
  /// Cokernel of f torsion-free: every invariant factor of f is 1.
  bool splits = false;
  std::vector<mpz_class> f_invariants;
  std::vector<mpz_class> g_invariants;

  [[nodiscard]] bool all() const {
    return injective_f && composite_zero && exact_middle && surjective_g && splits;
  }
};

[[nodiscard]] SequenceVerdict sequence_checks(const IntMatrix& f, const IntMatrix& g);

}  // namespace compalg
