#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compalg/field_matrix.hpp"

namespace compalg {

class CliffordAlgebra;
using Clifford = std::shared_ptr<const CliffordAlgebra>;

/// Cl(p, q) over Q: generators e_1..e_p square to +1, e_{p+1}..e_n to -1.
/// Blades are bitmasks, bit i standing for e_{i+1}; the product table is
/// built once and the generator relations are checked on construction.
class CliffordAlgebra {
 public:
  static constexpr std::size_t kMaxGenerators = 6;

  /// OutOfBudget when p + q exceeds kMaxGenerators.
  static Clifford make(std::size_t p, std::size_t q);

  [[nodiscard]] std::size_t p() const noexcept { return p_; }
  [[nodiscard]] std::size_t q() const noexcept { return q_; }
  [[nodiscard]] std::size_t n() const noexcept { return p_ + q_; }
  [[nodiscard]] std::size_t dim() const noexcept { return std::size_t{1} << n(); }
  /// Q(e_{i+1}): +1 or -1.
  [[nodiscard]] int metric(std::size_t i) const { return i < p_ ? 1 : -1; }
  /// e_A e_B = sign(A, B) e_{A xor B}.
  [[nodiscard]] int sign(std::uint32_t a, std::uint32_t b) const {
    return signs_[a * dim() + b];
  }
  /// Blade masks in graded-lexicographic order.
  [[nodiscard]] const std::vector<std::uint32_t>& blade_order() const noexcept {
    return order_;
  }
  [[nodiscard]] std::string to_string() const;

 private:
  CliffordAlgebra(std::size_t p, std::size_t q);

  std::size_t p_;
  std::size_t q_;
  std::vector<int> signs_;
  std::vector<std::uint32_t> order_;
};

[[nodiscard]] bool same_clifford(const Clifford& a, const Clifford& b);

/// "", "1", "12" for 1, e1, e1e2.
[[nodiscard]] std::string blade_name(std::uint32_t mask);
[[nodiscard]] std::uint32_t parse_blade(std::string_view digits, std::size_t n);

class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(Clifford algebra);

  static Multivector scalar(const Clifford& algebra, const mpq_class& c);
  static Multivector blade(const Clifford& algebra, std::uint32_t mask,
                           const mpq_class& c = 1);
  /// e_{i+1}
  static Multivector generator(const Clifford& algebra, std::size_t i);
  static Multivector vector(const Clifford& algebra, const std::vector<mpq_class>& v);
  /// "1 + 2*e12 - 1/2*e3"; "e21" and "e2*e1" multiply the factors in order.
  static Multivector parse(const Clifford& algebra, std::string_view text);

  [[nodiscard]] const Clifford& algebra() const noexcept { return alg_; }
  [[nodiscard]] const mpq_class& operator[](std::uint32_t mask) const {
    return c_[mask];
  }
  mpq_class& operator[](std::uint32_t mask) { return c_[mask]; }
  [[nodiscard]] const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Multivector grade(std::size_t k) const;
  [[nodiscard]] bool is_homogeneous(std::size_t k) const;
  [[nodiscard]] bool is_even() const;
  /// Coefficients of e_1..e_n.
  [[nodiscard]] std::vector<mpq_class> vector_part() const;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(const mpq_class& c);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const mpq_class& c) { return a *= c; }
  /// Geometric product; SignatureMismatch across algebras.
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend bool operator==(const Multivector& a, const Multivector& b);

  [[nodiscard]] std::string to_string() const;

 private:
  Clifford alg_;
  std::vector<mpq_class> c_;
};

[[nodiscard]] Multivector geometric_product(const Multivector& x, const Multivector& y);
[[nodiscard]] Multivector grade_involution(const Multivector& x);
[[nodiscard]] Multivector reversion(const Multivector& x);
[[nodiscard]] Multivector clifford_conjugate(const Multivector& x);

/// Quadratic form on a grade-1 element.
[[nodiscard]] mpq_class quadratic_form(const Multivector& v);

/// Inverse through the regular representation; NotInvertible when singular.
[[nodiscard]] std::optional<Multivector> try_inverse(const Multivector& g);
[[nodiscard]] Multivector inverse(const Multivector& g);

/// g m g^-1 for grade-1 m; NotGradeOne, NotInvertible.
[[nodiscard]] Multivector twisted_adjoint(const Multivector& g, const Multivector& m);

/// Column j is g e_{j+1} g^-1 in coordinates e_1..e_n. NotGradeOne when some
/// image leaves grade 1.
[[nodiscard]] FieldMatrix induced_matrix(const Multivector& g);

/// diag(+1 x p, -1 x q) over Q.
[[nodiscard]] FieldMatrix metric_matrix(const Clifford& algebra);

/// A product v_1 ... v_k of grade-1 vectors with Q(v_i) = +-1, remembered
/// alongside the product.
struct UnitProduct {
  std::vector<Multivector> factors;
  Multivector product;

  /// PreconditionViolated when a factor is not a unit vector.
  static UnitProduct make(std::vector<Multivector> factors);
};

struct GroupMembership {
  bool in_gamma = false;
  bool in_even_part = false;
  bool preserves_grade_one = false;
  bool preserves_form = false;
  std::optional<FieldMatrix> induced;
  std::optional<Scalar> induced_det;
  /// Set only for inputs built as an even product of unit vectors.
  std::optional<std::vector<Multivector>> spin_witness;
};

[[nodiscard]] GroupMembership clifford_group_membership(const Multivector& g);
[[nodiscard]] GroupMembership clifford_group_membership(const UnitProduct& g);

enum class CliffordBase { R, C, H };

struct Classification {
  CliffordBase base = CliffordBase::R;
  std::size_t matrix_size = 1;
  bool direct_sum = false;

  [[nodiscard]] std::size_t real_dimension() const;
  friend bool operator==(const Classification&, const Classification&) = default;
};

[[nodiscard]] std::string to_string(CliffordBase base);
[[nodiscard]] std::string to_string(const Classification& c);

/// Standard table by r = (p - q) mod 8: r = 0, 2 real; 1 real + real;
/// 3, 7 complex; 4, 6 quaternionic; 5 quaternionic + quaternionic.
[[nodiscard]] Classification classify(std::size_t p, std::size_t q);

struct ClassificationReport {
  std::size_t p = 0;
  std::size_t q = 0;
  Classification predicted;
  std::size_t center_dim = 0;
  std::size_t predicted_center_dim = 0;
  std::size_t dimension = 0;
  /// Square of e_1...e_n, meaningful (central) for odd n.
  std::optional<int> pseudoscalar_square;
  /// Structure-constant transport onto a concrete model, where one is known.
  std::optional<std::string> transport_target;
  std::optional<bool> transport_ok;
  bool agree = false;
};

/// n <= 4 (OutOfBudget otherwise).
[[nodiscard]] ClassificationReport verify_classification(std::size_t p, std::size_t q);

/// Dimension of the center from the commutant system x e_i = e_i x.
[[nodiscard]] std::size_t center_dimension(const Clifford& algebra);

/// Associativity failures over all basis triples (n <= 4) or `samples`
/// seeded random triples of blades.
[[nodiscard]] std::size_t associativity_failures(const Clifford& algebra,
                                                 std::size_t samples = 0,
                                                 std::uint64_t seed = 0);

}  // namespace compalg
