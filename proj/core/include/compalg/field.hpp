#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>

#include "compalg/error.hpp"

namespace compalg {

enum class FieldKind { Rationals, Prime, QuadExt };

/// Three-valued answer for questions that are not always decidable
/// with the tools at hand.
enum class Tri { Yes, No, Undecided };

class FieldSpec;
class Scalar;

/// Fields are shared immutable descriptors; scalars hold a pointer to theirs.
using Field = std::shared_ptr<const FieldSpec>;

/// Describes one of: the rationals, a prime field F_p, or a quadratic
/// algebra k[sqrt(a)] over one of those two. The quadratic algebra is
/// allowed to be split (a a square in k); it is then isomorphic to k + k
/// and contains zero divisors.
class FieldSpec {
 public:
  static Field rationals();
  /// Throws InvalidField when p is not prime.
  static Field prime(const mpz_class& p);
  /// Throws InvalidField for a nested tower, a = 0 or characteristic 2.
  static Field quad_ext(const Field& base, const Scalar& a);

  [[nodiscard]] FieldKind kind() const noexcept { return kind_; }
  /// The prime p for F_p and for quadratic algebras over F_p, else 0.
  [[nodiscard]] const mpz_class& modulus() const noexcept { return modulus_; }
  [[nodiscard]] const mpz_class& characteristic() const noexcept {
    return modulus_;
  }
  /// Base field of a quadratic algebra; null for Rationals and Prime.
  [[nodiscard]] const Field& base() const noexcept { return base_; }
  /// The radicand a of k[sqrt(a)] as a canonical base-field value.
  [[nodiscard]] const mpq_class& radicand() const noexcept { return radicand_; }
  [[nodiscard]] bool is_finite() const noexcept { return modulus_ != 0; }
  [[nodiscard]] bool is_base() const noexcept {
    return kind_ != FieldKind::QuadExt;
  }

  /// "Q", "Fp:5", "Q[sqrt(2)]", "Fp:5[sqrt(4)]".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FieldSpec& lhs, const FieldSpec& rhs);

 private:
  FieldSpec() = default;

  FieldKind kind_ = FieldKind::Rationals;
  mpz_class modulus_ = 0;
  Field base_;
  mpq_class radicand_ = 0;
};

[[nodiscard]] bool same_field(const Field& lhs, const Field& rhs);

/// An exact element of a FieldSpec. Elements of Q and F_p use re() only;
/// elements x + y*sqrt(a) of a quadratic algebra store x in re() and y in
/// im(). F_p residues are kept canonical in [0, p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar from_int(const Field& field, long value);
  static Scalar from_integer(const Field& field, const mpz_class& value);
  /// Maps a rational into the field. Over F_p the denominator must be a
  /// unit mod p (ZeroDivisor otherwise).
  static Scalar from_rational(const Field& field, const mpq_class& value);
  /// x + y*sqrt(a) with x, y given as rationals mapped into the base.
  static Scalar quad(const Field& field, const mpq_class& x,
                     const mpq_class& y);
  /// Builds x + y*sqrt(a) from two base-field scalars.
  static Scalar quad(const Field& field, const Scalar& x, const Scalar& y);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] bool valid() const noexcept { return field_ != nullptr; }
  [[nodiscard]] const mpq_class& re() const noexcept { return re_; }
  [[nodiscard]] const mpq_class& im() const noexcept { return im_; }
  /// Base-field components x and y of x + y*sqrt(a).
  [[nodiscard]] Scalar real_part() const;
  [[nodiscard]] Scalar imag_part() const;

  [[nodiscard]] bool is_zero() const noexcept { return re_ == 0 && im_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return re_ == 1 && im_ == 0; }

  /// Throws ZeroInput for 0 and ZeroDivisor for nonzero non-units.
  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] bool is_unit() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(const Scalar& lhs, const Scalar& rhs) {
    return lhs * rhs.inverse();
  }
  Scalar operator-() const;

  /// Value equality; scalars over different fields compare unequal.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  [[nodiscard]] std::string to_string() const;

 private:
  Scalar(Field field, mpq_class re, mpq_class im);
  void check_same(const Scalar& rhs) const;

  Field field_;
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

/// x + y*sqrt(a) -> x - y*sqrt(a). Throws NotQuadExt on base elements.
[[nodiscard]] Scalar tau(const Scalar& x);

/// x * tau(x), returned as an element of the base field.
[[nodiscard]] Scalar quad_norm(const Scalar& x);

/// Lifts a base-field element into the quadratic algebra `ext`.
[[nodiscard]] Scalar embed(const Field& ext, const Scalar& base_value);

/// Squareness over Q is decided exactly (numerator and denominator must
/// be perfect squares); over F_p by Euler's criterion. Quadratic algebras
/// answer Undecided.
[[nodiscard]] Tri is_square(const Scalar& a);

/// A square root in the same base field, when one exists.
[[nodiscard]] std::optional<Scalar> sqrt_in_base(const Scalar& a);

[[nodiscard]] inline Scalar invert_scalar(const Scalar& x) {
  return x.inverse();
}

}  // namespace compalg
