#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "compalg/field.hpp"

namespace compalg {

/// How the four basis coordinates of an algebra element are read.
///  Quaternion:   x0 + x1 u + x2 v + x3 w with u^2 = a, v^2 = b, w = uv = -vu.
///  MatrixUnits:  the 2x2 matrix [[x0, x1], [x2, x3]] over k (Mat(2,k)).
enum class AlgebraForm { Quaternion, MatrixUnits };

enum class Splitness { Split, Nonsplit, Undecided };

std::string to_string(Splitness s);

class QuatAlgebra;
using Algebra = std::shared_ptr<const QuatAlgebra>;

class QuatAlgebra {
 public:
  /// (a,b)_k. Rejects characteristic 2, zero parameters and any base that
  /// is not Q or F_p. The structure constants are derived from the
  /// defining relations and checked for associativity on all 64 basis
  /// triples before the algebra is returned.
  static Algebra make(const Field& base, const Scalar& a, const Scalar& b);
  static Algebra make(const Field& base, long a, long b);

  /// Mat(2,k) on the matrix-unit basis E11, E12, E21, E22. Any prime
  /// field is accepted, including F_2.
  static Algebra split_matrix(const Field& base);

  [[nodiscard]] AlgebraForm form() const noexcept { return form_; }
  [[nodiscard]] bool is_matrix_form() const noexcept {
    return form_ == AlgebraForm::MatrixUnits;
  }
  [[nodiscard]] const Field& base() const noexcept { return base_; }
  /// Parameters of the quaternion form; Unsupported for MatrixUnits.
  [[nodiscard]] const Scalar& a() const;
  [[nodiscard]] const Scalar& b() const;
  /// L = k(sqrt a) used by the Cayley-Dickson coordinates.
  [[nodiscard]] const Field& subfield() const;

  /// Coefficient of basis element k in the product e_i e_j.
  [[nodiscard]] const Scalar& structure(int i, int j, int k) const {
    return table_[i][j][k];
  }
  /// Sign (+1/-1) and target index of the conjugation on basis element i.
  [[nodiscard]] std::pair<int, int> conjugation(int i) const {
    return conj_[i];
  }
  [[nodiscard]] const std::array<Scalar, 4>& unit() const { return unit_; }

  /// True for (1,-1)_k, which carries a verified isomorphism onto Mat(2,k).
  [[nodiscard]] bool has_matrix_realization() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const QuatAlgebra& lhs, const QuatAlgebra& rhs);

 private:
  QuatAlgebra() = default;
  void check_associative() const;

  AlgebraForm form_ = AlgebraForm::Quaternion;
  Field base_;
  Scalar a_;
  Scalar b_;
  Field subfield_;
  std::array<std::array<std::array<Scalar, 4>, 4>, 4> table_;
  std::array<std::pair<int, int>, 4> conj_;
  std::array<Scalar, 4> unit_;
};

[[nodiscard]] bool same_algebra(const Algebra& lhs, const Algebra& rhs);

class QuaternionElement {
 public:
  QuaternionElement() = default;
  QuaternionElement(Algebra algebra, std::array<Scalar, 4> coeffs);

  static QuaternionElement zero(const Algebra& algebra);
  static QuaternionElement one(const Algebra& algebra);
  static QuaternionElement basis(const Algebra& algebra, int index);
  /// c * 1 for a base-field scalar c.
  static QuaternionElement scalar(const Algebra& algebra, const Scalar& c);
  static QuaternionElement from_ints(const Algebra& algebra, long x0, long x1,
                                     long x2, long x3);

  [[nodiscard]] const Algebra& algebra() const noexcept { return algebra_; }
  [[nodiscard]] const std::array<Scalar, 4>& coeffs() const noexcept {
    return coeffs_;
  }
  [[nodiscard]] const Scalar& operator[](int i) const { return coeffs_[i]; }
  [[nodiscard]] bool is_zero() const;

  QuaternionElement& operator+=(const QuaternionElement& rhs);
  QuaternionElement& operator-=(const QuaternionElement& rhs);
  friend QuaternionElement operator+(QuaternionElement lhs,
                                     const QuaternionElement& rhs) {
    return lhs += rhs;
  }
  friend QuaternionElement operator-(QuaternionElement lhs,
                                     const QuaternionElement& rhs) {
    return lhs -= rhs;
  }
  QuaternionElement operator-() const;
  /// Algebra product; AlgebraMismatch for elements of different algebras.
  friend QuaternionElement operator*(const QuaternionElement& lhs,
                                     const QuaternionElement& rhs);
  /// Multiplication by a base-field scalar (central, so side is irrelevant).
  [[nodiscard]] QuaternionElement scaled(const Scalar& c) const;

  friend bool operator==(const QuaternionElement& lhs,
                         const QuaternionElement& rhs);

  [[nodiscard]] std::string to_string() const;

 private:
  void check_same(const QuaternionElement& rhs) const;

  Algebra algebra_;
  std::array<Scalar, 4> coeffs_;
};

[[nodiscard]] inline QuaternionElement quat_mul(const QuaternionElement& lhs,
                                                const QuaternionElement& rhs) {
  return lhs * rhs;
}

/// x0 - x1 u - x2 v - x3 w; the adjugate on Mat(2,k).
[[nodiscard]] QuaternionElement conjugate(const QuaternionElement& z);

/// N(z) = z * conj(z), read off the identity component.
[[nodiscard]] Scalar norm(const QuaternionElement& z);

/// conj(z) / N(z); throws NotInvertible when N(z) = 0.
[[nodiscard]] QuaternionElement quat_inverse(const QuaternionElement& z);
[[nodiscard]] std::optional<QuaternionElement> try_inverse(
    const QuaternionElement& z);

/// Coordinates (x, y) in L = k(sqrt a) with z = x + v*y, u <-> sqrt(a).
[[nodiscard]] std::pair<Scalar, Scalar> cayley_dickson_coords(
    const QuaternionElement& z);
[[nodiscard]] QuaternionElement from_cayley_dickson(const Algebra& algebra,
                                                    const Scalar& x,
                                                    const Scalar& y);

/// Searches for a nonzero element of norm zero. Over F_p the search walks
/// (x1, x2) lexicographically and always terminates with a witness. Over Q
/// it tries integer points of the conic a X^2 + b Y^2 = Z^2 with
/// 0 <= X, Y <= bound.
[[nodiscard]] std::optional<QuaternionElement> find_zero_divisor(
    const Algebra& algebra, long bound = 50);

/// Split / nonsplit / undecided; see find_zero_divisor for the search.
/// Over Q, a < 0 and b < 0 certifies nonsplit (positive definite norm),
/// and for b = -1 a bounded two-squares search on a is also tried.
[[nodiscard]] Splitness is_split(const Algebra& algebra, long bound = 50);

/// The isomorphism (a,b)_k -> (b,a)_k sending u -> v', v -> u', w -> -w'.
[[nodiscard]] QuaternionElement swap_parameters(const QuaternionElement& z,
                                                const Algebra& target);

/// (1,-1)_k <-> Mat(2,k) via 1 -> I, u -> diag(1,-1), v -> [[0,-1],[1,0]],
/// w -> [[0,-1],[-1,0]]. NotSplitForm unless the algebra is (1,-1)_k.
[[nodiscard]] QuaternionElement to_matrix_form(const QuaternionElement& z,
                                               const Algebra& target);
[[nodiscard]] QuaternionElement from_matrix_form(const QuaternionElement& m,
                                                 const Algebra& target);

}  // namespace compalg
