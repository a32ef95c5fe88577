#include "compalg/quaternion.hpp"

#include <sstream>

namespace compalg {

std::string to_string(Splitness s) {
  switch (s) {
    case Splitness::Split: return "split";
    case Splitness::Nonsplit: return "nonsplit";
    case Splitness::Undecided: return "undecided";
  }
  return "undecided";
}

// ---------------------------------------------------------------------------
// QuatAlgebra

Algebra QuatAlgebra::make(const Field& base, const Scalar& a, const Scalar& b) {
  require(base != nullptr && base->is_base(), Errc::InvalidField,
          "quaternion algebras are built over Q or F_p");
  require(base->characteristic() != 2, Errc::InvalidField,
          "characteristic 2 is excluded");
  require(same_field(base, a.field()) && same_field(base, b.field()),
          Errc::SpecMismatch, "parameters must lie in the base field");
  require(!a.is_zero() && !b.is_zero(), Errc::InvalidField,
          "quaternion parameters must be nonzero");

  auto* alg = new QuatAlgebra();
  alg->form_ = AlgebraForm::Quaternion;
  alg->base_ = base;
  alg->a_ = a;
  alg->b_ = b;
  alg->subfield_ = FieldSpec::quad_ext(base, a);

  const Scalar zero = Scalar::zero(base);
  const Scalar one = Scalar::one(base);
  for (auto& row : alg->table_)
    for (auto& cell : row) cell.fill(zero);
  auto set = [&](int i, int j, int k, const Scalar& c) {
    alg->table_[i][j][k] = c;
  };
  for (int i = 0; i < 4; ++i) {
    set(0, i, i, one);
    set(i, 0, i, one);
  }
  // u=1, v=2, w=3
  set(1, 1, 0, a);
  set(1, 2, 3, one);
  set(1, 3, 2, a);
  set(2, 1, 3, -one);
  set(2, 2, 0, b);
  set(2, 3, 1, -b);
  set(3, 1, 2, -a);
  set(3, 2, 1, b);
  set(3, 3, 0, -(a * b));

  alg->conj_ = {{{1, 0}, {-1, 1}, {-1, 2}, {-1, 3}}};
  alg->unit_ = {one, zero, zero, zero};
  alg->check_associative();
  return Algebra(alg);
}

Algebra QuatAlgebra::make(const Field& base, long a, long b) {
  return make(base, Scalar::from_int(base, a), Scalar::from_int(base, b));
}

Algebra QuatAlgebra::split_matrix(const Field& base) {
  require(base != nullptr && base->is_base(), Errc::InvalidField,
          "Mat(2,k) is built over Q or F_p");
  auto* alg = new QuatAlgebra();
  alg->form_ = AlgebraForm::MatrixUnits;
  alg->base_ = base;
  const Scalar zero = Scalar::zero(base);
  const Scalar one = Scalar::one(base);
  for (auto& row : alg->table_)
    for (auto& cell : row) cell.fill(zero);
  // E_ij E_kl = [j == k] E_il with index(r, c) = 2r + c
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) alg->table_[2 * i + j][2 * j + l][2 * i + l] = one;
  alg->conj_ = {{{1, 3}, {-1, 1}, {-1, 2}, {1, 0}}};
  alg->unit_ = {one, zero, zero, one};
  alg->check_associative();
  return Algebra(alg);
}

void QuatAlgebra::check_associative() const {
  const Scalar zero = Scalar::zero(base_);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        // (e_i e_j) e_k and e_i (e_j e_k), coordinate by coordinate
        for (int t = 0; t < 4; ++t) {
          Scalar lhs = zero;
          Scalar rhs = zero;
          for (int s = 0; s < 4; ++s) {
            lhs += table_[i][j][s] * table_[s][k][t];
            rhs += table_[j][k][s] * table_[i][s][t];
          }
          require(lhs == rhs, Errc::InvalidField,
                  "structure constants fail associativity");
        }
      }
}

const Scalar& QuatAlgebra::a() const {
  require(form_ == AlgebraForm::Quaternion, Errc::Unsupported,
          "Mat(2,k) form has no (a,b) parameters");
  return a_;
}

const Scalar& QuatAlgebra::b() const {
  require(form_ == AlgebraForm::Quaternion, Errc::Unsupported,
          "Mat(2,k) form has no (a,b) parameters");
  return b_;
}

const Field& QuatAlgebra::subfield() const {
  require(form_ == AlgebraForm::Quaternion, Errc::Unsupported,
          "Mat(2,k) form has no Cayley-Dickson subfield");
  return subfield_;
}

bool QuatAlgebra::has_matrix_realization() const {
  return form_ == AlgebraForm::MatrixUnits ||
         (a_.is_one() && (-b_).is_one());
}

std::string QuatAlgebra::to_string() const {
  if (form_ == AlgebraForm::MatrixUnits)
    return "Mat(2," + base_->to_string() + ")";
  return "(" + a_.to_string() + "," + b_.to_string() + ")_" +
         base_->to_string();
}

bool operator==(const QuatAlgebra& lhs, const QuatAlgebra& rhs) {
  if (lhs.form_ != rhs.form_ || !same_field(lhs.base_, rhs.base_)) return false;
  if (lhs.form_ == AlgebraForm::MatrixUnits) return true;
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

bool same_algebra(const Algebra& lhs, const Algebra& rhs) {
  if (lhs == rhs) return true;
  if (!lhs || !rhs) return false;
  return *lhs == *rhs;
}

// ---------------------------------------------------------------------------
// QuaternionElement

QuaternionElement::QuaternionElement(Algebra algebra,
                                     std::array<Scalar, 4> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    require(same_field(c.field(), algebra_->base()), Errc::SpecMismatch,
            "coefficient outside the base field of " + algebra_->to_string());
}

QuaternionElement QuaternionElement::zero(const Algebra& algebra) {
  Scalar z = Scalar::zero(algebra->base());
  return QuaternionElement(algebra, {z, z, z, z});
}

QuaternionElement QuaternionElement::one(const Algebra& algebra) {
  return QuaternionElement(algebra, algebra->unit());
}

QuaternionElement QuaternionElement::basis(const Algebra& algebra, int index) {
  require(index >= 0 && index < 4, Errc::OutOfRange, "basis index in [0,4)");
  QuaternionElement e = zero(algebra);
  e.coeffs_[index] = Scalar::one(algebra->base());
  return e;
}

QuaternionElement QuaternionElement::scalar(const Algebra& algebra,
                                            const Scalar& c) {
  return one(algebra).scaled(c);
}

QuaternionElement QuaternionElement::from_ints(const Algebra& algebra, long x0,
                                               long x1, long x2, long x3) {
  const Field& k = algebra->base();
  return QuaternionElement(
      algebra, {Scalar::from_int(k, x0), Scalar::from_int(k, x1),
                Scalar::from_int(k, x2), Scalar::from_int(k, x3)});
}

bool QuaternionElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void QuaternionElement::check_same(const QuaternionElement& rhs) const {
  require(algebra_ != nullptr && same_algebra(algebra_, rhs.algebra_),
          Errc::AlgebraMismatch, "elements belong to different algebras");
}

QuaternionElement& QuaternionElement::operator+=(const QuaternionElement& rhs) {
  check_same(rhs);
  for (int i = 0; i < 4; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

QuaternionElement& QuaternionElement::operator-=(const QuaternionElement& rhs) {
  check_same(rhs);
  for (int i = 0; i < 4; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

QuaternionElement QuaternionElement::operator-() const {
  QuaternionElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QuaternionElement operator*(const QuaternionElement& lhs,
                            const QuaternionElement& rhs) {
  lhs.check_same(rhs);
  const QuatAlgebra& alg = *lhs.algebra_;
  QuaternionElement out = QuaternionElement::zero(lhs.algebra_);
  for (int i = 0; i < 4; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      Scalar c = lhs.coeffs_[i] * rhs.coeffs_[j];
      for (int k = 0; k < 4; ++k) {
        const Scalar& s = alg.structure(i, j, k);
        if (!s.is_zero()) out.coeffs_[k] += c * s;
      }
    }
  }
  return out;
}

QuaternionElement QuaternionElement::scaled(const Scalar& c) const {
  QuaternionElement out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

bool operator==(const QuaternionElement& lhs, const QuaternionElement& rhs) {
  return same_algebra(lhs.algebra_, rhs.algebra_) && lhs.coeffs_ == rhs.coeffs_;
}

std::string QuaternionElement::to_string() const {
  std::ostringstream os;
  os << "[" << coeffs_[0].to_string() << ", " << coeffs_[1].to_string() << ", "
     << coeffs_[2].to_string() << ", " << coeffs_[3].to_string() << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

QuaternionElement conjugate(const QuaternionElement& z) {
  const QuatAlgebra& alg = *z.algebra();
  QuaternionElement out = QuaternionElement::zero(z.algebra());
  std::array<Scalar, 4> c = out.coeffs();
  for (int i = 0; i < 4; ++i) {
    auto [sign, target] = alg.conjugation(i);
    c[target] = sign > 0 ? z[i] : -z[i];
  }
  return QuaternionElement(z.algebra(), c);
}

Scalar norm(const QuaternionElement& z) { return (z * conjugate(z))[0]; }

std::optional<QuaternionElement> try_inverse(const QuaternionElement& z) {
  Scalar n = norm(z);
  if (n.is_zero()) return std::nullopt;
  return conjugate(z).scaled(n.inverse());
}

QuaternionElement quat_inverse(const QuaternionElement& z) {
  auto inv = try_inverse(z);
  if (!inv) fail(Errc::NotInvertible, "element " + z.to_string() + " has norm 0");
  return *inv;
}

std::pair<Scalar, Scalar> cayley_dickson_coords(const QuaternionElement& z) {
  const Field& L = z.algebra()->subfield();
  // z = (x0 + x1 u) + v (x2 - x3 u), since v u = -w
  return {Scalar::quad(L, z[0], z[1]), Scalar::quad(L, z[2], -z[3])};
}

QuaternionElement from_cayley_dickson(const Algebra& algebra, const Scalar& x,
                                      const Scalar& y) {
  const Field& L = algebra->subfield();
  require(same_field(L, x.field()) && same_field(L, y.field()),
          Errc::SpecMismatch, "Cayley-Dickson coordinates must lie in L");
  return QuaternionElement(algebra, {x.real_part(), x.imag_part(),
                                     y.real_part(), -y.imag_part()});
}

std::optional<QuaternionElement> find_zero_divisor(const Algebra& algebra,
                                                   long bound) {
  if (algebra->is_matrix_form()) return QuaternionElement::basis(algebra, 0);
  const Field& k = algebra->base();
  const Scalar& a = algebra->a();
  const Scalar& b = algebra->b();
  auto witness = [&](const Scalar& t, const Scalar& x1,
                     const Scalar& x2) -> std::optional<QuaternionElement> {
    auto root = sqrt_in_base(t);
    if (!root) return std::nullopt;
    return QuaternionElement(algebra, {*root, x1, x2, Scalar::zero(k)});
  };
  if (k->is_finite()) {
    // a x1^2 + b x2^2 takes every value of F_p, so some nonzero pair hits a
    // square and x0 = sqrt(.) gives N = 0.
    const mpz_class& p = k->modulus();
    for (mpz_class i = 0; i < p; ++i) {
      Scalar x1 = Scalar::from_integer(k, i);
      for (mpz_class j = 0; j < p; ++j) {
        if (i == 0 && j == 0) continue;
        Scalar x2 = Scalar::from_integer(k, j);
        if (auto z = witness(a * x1 * x1 + b * x2 * x2, x1, x2)) return z;
      }
    }
    return std::nullopt;
  }
  for (long i = 0; i <= bound; ++i) {
    Scalar x1 = Scalar::from_int(k, i);
    for (long j = 0; j <= bound; ++j) {
      if (i == 0 && j == 0) continue;
      Scalar x2 = Scalar::from_int(k, j);
      if (auto z = witness(a * x1 * x1 + b * x2 * x2, x1, x2)) return z;
    }
  }
  return std::nullopt;
}

Splitness is_split(const Algebra& algebra, long bound) {
  if (algebra->is_matrix_form()) return Splitness::Split;
  const Field& k = algebra->base();
  const Scalar& a = algebra->a();
  const Scalar& b = algebra->b();
  if (!k->is_finite() && a.re() < 0 && b.re() < 0) return Splitness::Nonsplit;
  if (find_zero_divisor(algebra, bound)) return Splitness::Split;
  if (!k->is_finite() && (-b).is_one()) {
    // a = (p1/q)^2 + (r/q)^2 with a common denominator q <= bound
    for (long q = 1; q <= bound; ++q) {
      Scalar qq = Scalar::from_int(k, q * q);
      for (long p1 = 0; p1 <= bound; ++p1) {
        Scalar rest = a * qq - Scalar::from_int(k, p1 * p1);
        if (rest.re() >= 0 && is_square(rest) == Tri::Yes)
          return Splitness::Split;
      }
    }
  }
  return Splitness::Undecided;
}

QuaternionElement swap_parameters(const QuaternionElement& z,
                                  const Algebra& target) {
  const Algebra& src = z.algebra();
  require(!src->is_matrix_form() && !target->is_matrix_form() &&
              same_field(src->base(), target->base()) &&
              src->a() == target->b() && src->b() == target->a(),
          Errc::AlgebraMismatch, "target must be (b,a)_k");
  return QuaternionElement(target, {z[0], z[2], z[1], -z[3]});
}

QuaternionElement to_matrix_form(const QuaternionElement& z,
                                 const Algebra& target) {
  const Algebra& src = z.algebra();
  require(!src->is_matrix_form() && src->has_matrix_realization(),
          Errc::NotSplitForm, src->to_string() + " has no registered Mat(2,k) form");
  require(target->is_matrix_form() && same_field(src->base(), target->base()),
          Errc::AlgebraMismatch, "target must be Mat(2,k) over the same k");
  return QuaternionElement(
      target, {z[0] + z[1], -z[2] - z[3], z[2] - z[3], z[0] - z[1]});
}

QuaternionElement from_matrix_form(const QuaternionElement& m,
                                   const Algebra& target) {
  require(m.algebra()->is_matrix_form(), Errc::NotSplitForm,
          "source must be Mat(2,k)");
  require(!target->is_matrix_form() && target->has_matrix_realization() &&
              same_field(m.algebra()->base(), target->base()),
          Errc::NotSplitForm, "target must be (1,-1)_k over the same k");
  Scalar half = Scalar::from_int(target->base(), 2).inverse();
  return QuaternionElement(
      target, {(m[0] + m[3]) * half, (m[0] - m[3]) * half,
               (m[2] - m[1]) * half, -(m[1] + m[2]) * half});
}

}  // namespace compalg
