#include "compalg/field.hpp"

#include <utility>

namespace compalg {
namespace {

mpz_class mod_floor(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return r;
}

mpz_class mod_inverse(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
    fail(Errc::ZeroDivisor, "value is not invertible modulo the field prime");
  return r;
}

// Canonical representative of a rational in Q (p == 0) or F_p.
mpq_class reduce(const mpz_class& p, const mpq_class& v) {
  if (p == 0) {
    mpq_class out = v;
    out.canonicalize();
    return out;
  }
  mpz_class num = mod_floor(v.get_num(), p);
  mpz_class den = mod_floor(v.get_den(), p);
  if (den == 0) fail(Errc::ZeroDivisor, "denominator vanishes modulo p");
  return mpq_class(mod_floor(num * mod_inverse(den, p), p));
}

mpq_class base_add(const mpz_class& p, const mpq_class& a, const mpq_class& b) {
  if (p == 0) return a + b;
  return mpq_class(mod_floor(a.get_num() + b.get_num(), p));
}

mpq_class base_sub(const mpz_class& p, const mpq_class& a, const mpq_class& b) {
  if (p == 0) return a - b;
  return mpq_class(mod_floor(a.get_num() - b.get_num(), p));
}

mpq_class base_mul(const mpz_class& p, const mpq_class& a, const mpq_class& b) {
  if (p == 0) return a * b;
  return mpq_class(mod_floor(a.get_num() * b.get_num(), p));
}

mpq_class base_neg(const mpz_class& p, const mpq_class& a) {
  if (p == 0) return -a;
  return mpq_class(mod_floor(-a.get_num(), p));
}

mpq_class base_inv(const mpz_class& p, const mpq_class& a) {
  if (a == 0) fail(Errc::ZeroInput, "inverse of zero");
  if (p == 0) return 1 / a;
  return mpq_class(mod_inverse(a.get_num(), p));
}

// Tonelli-Shanks; `a` is a nonzero quadratic residue modulo the odd prime p.
mpz_class sqrt_mod(const mpz_class& a, const mpz_class& p) {
  if (p == 2) return a;
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  auto powm = [&](const mpz_class& b, const mpz_class& e) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  mpz_class c = powm(z, q);
  mpz_class x = powm(a, (q + 1) / 2);
  mpz_class t = powm(a, q);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec

Field FieldSpec::rationals() {
  static const Field q = std::shared_ptr<const FieldSpec>(new FieldSpec());
  return q;
}

Field FieldSpec::prime(const mpz_class& p) {
  require(p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0,
          Errc::InvalidField, "modulus " + p.get_str() + " is not prime");
  auto* spec = new FieldSpec();
  spec->kind_ = FieldKind::Prime;
  spec->modulus_ = p;
  return Field(spec);
}

Field FieldSpec::quad_ext(const Field& base, const Scalar& a) {
  require(base != nullptr && base->is_base(), Errc::InvalidField,
          "quadratic algebras are built over Q or F_p only");
  require(same_field(base, a.field()), Errc::SpecMismatch,
          "radicand does not live in the base field");
  require(base->modulus() != 2, Errc::InvalidField,
          "characteristic 2 is not supported for quadratic algebras");
  require(!a.is_zero(), Errc::InvalidField, "radicand must be nonzero");
  auto* spec = new FieldSpec();
  spec->kind_ = FieldKind::QuadExt;
  spec->modulus_ = base->modulus();
  spec->base_ = base;
  spec->radicand_ = a.re();
  return Field(spec);
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "Fp:" + modulus_.get_str();
    case FieldKind::QuadExt:
      return base_->to_string() + "[sqrt(" + radicand_.get_str() + ")]";
  }
  return "?";
}

bool operator==(const FieldSpec& lhs, const FieldSpec& rhs) {
  if (lhs.kind_ != rhs.kind_ || lhs.modulus_ != rhs.modulus_) return false;
  if (lhs.kind_ == FieldKind::QuadExt) return lhs.radicand_ == rhs.radicand_;
  return true;
}

bool same_field(const Field& lhs, const Field& rhs) {
  if (lhs == rhs) return true;
  if (!lhs || !rhs) return false;
  return *lhs == *rhs;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Field field, mpq_class re, mpq_class im)
    : field_(std::move(field)), re_(std::move(re)), im_(std::move(im)) {}

Scalar Scalar::zero(const Field& field) { return Scalar(field, 0, 0); }

Scalar Scalar::one(const Field& field) { return Scalar(field, 1, 0); }

Scalar Scalar::from_int(const Field& field, long value) {
  return from_rational(field, mpq_class(value));
}

Scalar Scalar::from_integer(const Field& field, const mpz_class& value) {
  return from_rational(field, mpq_class(value));
}

Scalar Scalar::from_rational(const Field& field, const mpq_class& value) {
  return Scalar(field, reduce(field->modulus(), value), 0);
}

Scalar Scalar::quad(const Field& field, const mpq_class& x,
                    const mpq_class& y) {
  require(field->kind() == FieldKind::QuadExt || y == 0, Errc::NotQuadExt,
          "imaginary part given for a base field element");
  return Scalar(field, reduce(field->modulus(), x), reduce(field->modulus(), y));
}

Scalar Scalar::quad(const Field& field, const Scalar& x, const Scalar& y) {
  require(field->kind() == FieldKind::QuadExt, Errc::NotQuadExt,
          "target is not a quadratic algebra");
  require(same_field(field->base(), x.field()) &&
              same_field(field->base(), y.field()),
          Errc::SpecMismatch, "components must lie in the base field");
  return Scalar(field, x.re(), y.re());
}

Scalar Scalar::real_part() const {
  const Field& f = field_->is_base() ? field_ : field_->base();
  return Scalar(f, re_, 0);
}

Scalar Scalar::imag_part() const {
  const Field& f = field_->is_base() ? field_ : field_->base();
  return Scalar(f, im_, 0);
}

void Scalar::check_same(const Scalar& rhs) const {
  require(field_ != nullptr && rhs.field_ != nullptr, Errc::SpecMismatch,
          "uninitialised scalar");
  require(same_field(field_, rhs.field_), Errc::SpecMismatch,
          "operands live in different fields: " + field_->to_string() +
              " vs " + rhs.field_->to_string());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same(rhs);
  const mpz_class& p = field_->modulus();
  re_ = base_add(p, re_, rhs.re_);
  im_ = base_add(p, im_, rhs.im_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same(rhs);
  const mpz_class& p = field_->modulus();
  re_ = base_sub(p, re_, rhs.re_);
  im_ = base_sub(p, im_, rhs.im_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same(rhs);
  const mpz_class& p = field_->modulus();
  if (field_->is_base()) {
    re_ = base_mul(p, re_, rhs.re_);
    return *this;
  }
  // (x1 + y1 s)(x2 + y2 s) = x1 x2 + a y1 y2 + (x1 y2 + y1 x2) s
  const mpq_class& a = field_->radicand();
  mpq_class re = base_add(p, base_mul(p, re_, rhs.re_),
                          base_mul(p, a, base_mul(p, im_, rhs.im_)));
  mpq_class im = base_add(p, base_mul(p, re_, rhs.im_),
                          base_mul(p, im_, rhs.re_));
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::operator-() const {
  const mpz_class& p = field_->modulus();
  return Scalar(field_, base_neg(p, re_), base_neg(p, im_));
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return same_field(lhs.field_, rhs.field_) && lhs.re_ == rhs.re_ &&
         lhs.im_ == rhs.im_;
}

Scalar Scalar::inverse() const {
  require(field_ != nullptr, Errc::SpecMismatch, "uninitialised scalar");
  if (is_zero()) fail(Errc::ZeroInput, "inverse of zero");
  const mpz_class& p = field_->modulus();
  if (field_->is_base()) return Scalar(field_, base_inv(p, re_), 0);
  // (x + y s)^-1 = (x - y s) / (x^2 - a y^2) when the norm is nonzero
  mpq_class n = base_sub(p, base_mul(p, re_, re_),
                         base_mul(p, field_->radicand(), base_mul(p, im_, im_)));
  if (n == 0)
    fail(Errc::ZeroDivisor,
         "nonzero element of norm zero in split algebra " + field_->to_string());
  mpq_class ninv = base_inv(p, n);
  return Scalar(field_, base_mul(p, re_, ninv),
                base_neg(p, base_mul(p, im_, ninv)));
}

bool Scalar::is_unit() const {
  if (is_zero()) return false;
  if (field_->is_base()) return true;
  return !quad_norm(*this).is_zero();
}

std::string Scalar::to_string() const {
  if (!field_) return "<none>";
  if (field_->is_base()) return re_.get_str();
  return "(" + re_.get_str() + ")+(" + im_.get_str() + ")*sqrt(" +
         field_->radicand().get_str() + ")";
}

// ---------------------------------------------------------------------------

Scalar tau(const Scalar& x) {
  require(x.valid() && x.field()->kind() == FieldKind::QuadExt,
          Errc::NotQuadExt, "tau is defined on quadratic algebra elements");
  return Scalar::quad(x.field(), x.real_part(), -x.imag_part());
}

Scalar quad_norm(const Scalar& x) {
  Scalar prod = x * tau(x);
  return prod.real_part();
}

Scalar embed(const Field& ext, const Scalar& base_value) {
  return Scalar::quad(ext, base_value, Scalar::zero(ext->base()));
}

Tri is_square(const Scalar& a) {
  const Field& f = a.field();
  switch (f->kind()) {
    case FieldKind::Rationals: {
      const mpq_class& v = a.re();
      if (v < 0) return Tri::No;
      bool sq = mpz_perfect_square_p(v.get_num_mpz_t()) != 0 &&
                mpz_perfect_square_p(v.get_den_mpz_t()) != 0;
      return sq ? Tri::Yes : Tri::No;
    }
    case FieldKind::Prime: {
      if (a.is_zero() || f->modulus() == 2) return Tri::Yes;
      mpz_class v = a.re().get_num();
      return mpz_legendre(v.get_mpz_t(), f->modulus().get_mpz_t()) == 1
                 ? Tri::Yes
                 : Tri::No;
    }
    case FieldKind::QuadExt: return Tri::Undecided;
  }
  return Tri::Undecided;
}

std::optional<Scalar> sqrt_in_base(const Scalar& a) {
  if (is_square(a) != Tri::Yes) return std::nullopt;
  const Field& f = a.field();
  if (f->kind() == FieldKind::Rationals) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), a.re().get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), a.re().get_den_mpz_t());
    return Scalar::from_rational(f, mpq_class(n, d));
  }
  if (a.is_zero()) return Scalar::zero(f);
  return Scalar::from_integer(f, sqrt_mod(a.re().get_num(), f->modulus()));
}

}  // namespace compalg
