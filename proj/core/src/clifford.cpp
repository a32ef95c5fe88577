#include "compalg/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <sstream>

#include "compalg/quaternion.hpp"
#include "compalg/random.hpp"

namespace compalg {

namespace {

int reorder_sign(std::uint32_t a, std::uint32_t b) {
  // transpositions needed to move each generator of b past the larger
  // generators of a
  int swaps = 0;
  for (std::uint32_t rest = a >> 1; rest; rest >>= 1) swaps += std::popcount(rest & b);
  return swaps % 2 ? -1 : 1;
}

std::vector<std::size_t> blade_indices(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask >> i; ++i)
    if ((mask >> i) & 1U) out.push_back(i);
  return out;
}

}  // namespace

CliffordAlgebra::CliffordAlgebra(std::size_t p, std::size_t q) : p_(p), q_(q) {
  const std::size_t d = dim();
  signs_.resize(d * d);
  for (std::uint32_t a = 0; a < d; ++a)
    for (std::uint32_t b = 0; b < d; ++b) {
      int s = reorder_sign(a, b);
      for (std::size_t i : blade_indices(a & b)) s *= metric(i);
      signs_[a * d + b] = s;
    }
  for (std::uint32_t a = 0; a < d; ++a) order_.push_back(a);
  std::sort(order_.begin(), order_.end(), [](std::uint32_t x, std::uint32_t y) {
    if (std::popcount(x) != std::popcount(y)) return std::popcount(x) < std::popcount(y);
    return blade_indices(x) < blade_indices(y);
  });
  for (std::size_t i = 0; i < n(); ++i) {
    const std::uint32_t ei = 1U << i;
    require(sign(ei, ei) == metric(i), Errc::SignatureMismatch,
            "generator square does not match the metric");
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint32_t ej = 1U << j;
      require(sign(ei, ej) == -sign(ej, ei), Errc::SignatureMismatch,
              "generators fail to anticommute");
    }
  }
}

Clifford CliffordAlgebra::make(std::size_t p, std::size_t q) {
  require(p + q <= kMaxGenerators, Errc::OutOfBudget,
          "Cl(" + std::to_string(p) + "," + std::to_string(q) + ") exceeds " +
              std::to_string(kMaxGenerators) + " generators");
  return Clifford(new CliffordAlgebra(p, q));
}

std::string CliffordAlgebra::to_string() const {
  return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

bool same_clifford(const Clifford& a, const Clifford& b) {
  return a && b && a->p() == b->p() && a->q() == b->q();
}

std::string blade_name(std::uint32_t mask) {
  std::string out;
  for (std::size_t i : blade_indices(mask)) out += std::to_string(i + 1);
  return out;
}

std::uint32_t parse_blade(std::string_view digits, std::size_t n) {
  std::uint32_t mask = 0;
  for (char c : digits) {
    require(c >= '1' && c <= '9' && static_cast<std::size_t>(c - '0') <= n,
            Errc::ParseError, "bad blade index '" + std::string(1, c) + "'");
    const std::uint32_t bit = 1U << (c - '1');
    require(!(mask & bit), Errc::ParseError, "repeated index in blade key");
    mask |= bit;
  }
  return mask;
}

// ---------------------------------------------------------------------------

Multivector::Multivector(Clifford algebra)
    : alg_(std::move(algebra)), c_(alg_->dim(), 0) {}

Multivector Multivector::scalar(const Clifford& algebra, const mpq_class& c) {
  return blade(algebra, 0, c);
}

Multivector Multivector::blade(const Clifford& algebra, std::uint32_t mask,
                               const mpq_class& c) {
  require(mask < algebra->dim(), Errc::OutOfRange, "blade outside the algebra");
  Multivector m(algebra);
  m.c_[mask] = c;
  return m;
}

Multivector Multivector::generator(const Clifford& algebra, std::size_t i) {
  require(i < algebra->n(), Errc::OutOfRange, "generator index out of range");
  return blade(algebra, 1U << i);
}

Multivector Multivector::vector(const Clifford& algebra,
                                const std::vector<mpq_class>& v) {
  require(v.size() == algebra->n(), Errc::DimensionMismatch, "vector length mismatch");
  Multivector m(algebra);
  for (std::size_t i = 0; i < v.size(); ++i) m.c_[1U << i] = v[i];
  return m;
}

Multivector Multivector::parse(const Clifford& algebra, std::string_view text) {
  Multivector out(algebra);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    require(pos > start, Errc::ParseError,
            "expected digits at offset " + std::to_string(start) + " in '" +
                std::string(text) + "'");
    return std::string(text.substr(start, pos - start));
  };
  bool first = true;
  for (;;) {
    skip();
    if (pos == text.size()) break;
    mpq_class sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
    } else {
      require(first, Errc::ParseError, "expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    Multivector term = scalar(algebra, sign);
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == 'e') {
        ++pos;
        std::string idx = digits();
        for (char c : idx) {
          std::uint32_t mask = parse_blade(std::string_view(&c, 1), algebra->n());
          term = term * blade(algebra, mask);
        }
      } else {
        mpz_class num(digits());
        mpz_class den = 1;
        skip();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          den = mpz_class(digits());
          require(den != 0, Errc::ParseError, "zero denominator");
        }
        mpq_class c(num, den);
        c.canonicalize();
        term *= c;
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    out += term;
  }
  require(!first, Errc::ParseError, "empty multivector");
  return out;
}

bool Multivector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

Multivector Multivector::grade(std::size_t k) const {
  Multivector out(alg_);
  for (std::uint32_t a = 0; a < c_.size(); ++a)
    if (static_cast<std::size_t>(std::popcount(a)) == k) out.c_[a] = c_[a];
  return out;
}

bool Multivector::is_homogeneous(std::size_t k) const {
  for (std::uint32_t a = 0; a < c_.size(); ++a)
    if (c_[a] != 0 && static_cast<std::size_t>(std::popcount(a)) != k) return false;
  return true;
}

bool Multivector::is_even() const {
  for (std::uint32_t a = 0; a < c_.size(); ++a)
    if (c_[a] != 0 && std::popcount(a) % 2) return false;
  return true;
}

std::vector<mpq_class> Multivector::vector_part() const {
  std::vector<mpq_class> out;
  for (std::size_t i = 0; i < alg_->n(); ++i) out.push_back(c_[1U << i]);
  return out;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require(same_clifford(alg_, rhs.alg_), Errc::SignatureMismatch, "signature mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require(same_clifford(alg_, rhs.alg_), Errc::SignatureMismatch, "signature mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(const mpq_class& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

Multivector operator*(const Multivector& x, const Multivector& y) {
  require(same_clifford(x.alg_, y.alg_), Errc::SignatureMismatch,
          x.alg_->to_string() + " times " + y.alg_->to_string());
  const CliffordAlgebra& alg = *x.alg_;
  Multivector out(x.alg_);
  for (std::uint32_t a = 0; a < x.c_.size(); ++a) {
    if (x.c_[a] == 0) continue;
    for (std::uint32_t b = 0; b < y.c_.size(); ++b) {
      if (y.c_[b] == 0) continue;
      if (alg.sign(a, b) > 0)
        out.c_[a ^ b] += x.c_[a] * y.c_[b];
      else
        out.c_[a ^ b] -= x.c_[a] * y.c_[b];
    }
  }
  return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return same_clifford(a.alg_, b.alg_) && a.c_ == b.c_;
}

std::string Multivector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t a : alg_->blade_order()) {
    const mpq_class& c = c_[a];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (a == 0)
      os << mag.get_str();
    else if (mag == 1)
      os << "e" << blade_name(a);
    else
      os << mag.get_str() << "*e" << blade_name(a);
  }
  return first ? "0" : os.str();
}

Multivector geometric_product(const Multivector& x, const Multivector& y) {
  return x * y;
}

Multivector grade_involution(const Multivector& x) {
  Multivector out = x;
  for (std::uint32_t a = 0; a < out.coeffs().size(); ++a)
    if (std::popcount(a) % 2) out[a] = -out[a];
  return out;
}

Multivector reversion(const Multivector& x) {
  Multivector out = x;
  for (std::uint32_t a = 0; a < out.coeffs().size(); ++a) {
    const int k = std::popcount(a);
    if ((k * (k - 1) / 2) % 2) out[a] = -out[a];
  }
  return out;
}

Multivector clifford_conjugate(const Multivector& x) {
  return grade_involution(reversion(x));
}

mpq_class quadratic_form(const Multivector& v) {
  require(v.is_homogeneous(1), Errc::NotGradeOne, "quadratic form needs a vector");
  mpq_class s = 0;
  for (std::size_t i = 0; i < v.algebra()->n(); ++i)
    s += v.algebra()->metric(i) * v[1U << i] * v[1U << i];
  return s;
}

std::optional<Multivector> try_inverse(const Multivector& g) {
  const Clifford& alg = g.algebra();
  const std::size_t d = alg->dim();
  const Field qf = FieldSpec::rationals();
  // column b of the left-multiplication matrix is g * e_b
  FieldMatrix lg(qf, d, d);
  for (std::uint32_t b = 0; b < d; ++b) {
    Multivector col = g * Multivector::blade(alg, b);
    for (std::uint32_t a = 0; a < d; ++a) lg(a, b) = Scalar::from_rational(qf, col[a]);
  }
  std::vector<Scalar> rhs(d, Scalar::zero(qf));
  rhs[0] = Scalar::one(qf);
  auto x = solve(lg, rhs);
  if (!x) return std::nullopt;
  Multivector out(alg);
  for (std::uint32_t a = 0; a < d; ++a) out[a] = (*x)[a].re();
  // a one-sided inverse is two-sided in a finite-dimensional algebra, but
  // solve() can return a particular solution of a singular system
  if (!(out * g == Multivector::scalar(alg, 1))) return std::nullopt;
  return out;
}

Multivector inverse(const Multivector& g) {
  auto inv = try_inverse(g);
  require(inv.has_value(), Errc::NotInvertible, g.to_string() + " is not invertible");
  return *inv;
}

Multivector twisted_adjoint(const Multivector& g, const Multivector& m) {
  require(m.is_homogeneous(1), Errc::NotGradeOne, m.to_string() + " is not a vector");
  return g * m * inverse(g);
}

FieldMatrix metric_matrix(const Clifford& algebra) {
  const Field qf = FieldSpec::rationals();
  FieldMatrix out(qf, algebra->n(), algebra->n());
  for (std::size_t i = 0; i < algebra->n(); ++i)
    out(i, i) = Scalar::from_int(qf, algebra->metric(i));
  return out;
}

namespace {

struct Images {
  bool grade_one = true;
  FieldMatrix matrix;
};

Images vector_images(const Multivector& g) {
  const Clifford& alg = g.algebra();
  const Multivector inv = inverse(g);
  const Field qf = FieldSpec::rationals();
  Images out{true, FieldMatrix(qf, alg->n(), alg->n())};
  for (std::size_t j = 0; j < alg->n(); ++j) {
    Multivector img = g * Multivector::generator(alg, j) * inv;
    if (!img.is_homogeneous(1)) out.grade_one = false;
    for (std::size_t i = 0; i < alg->n(); ++i)
      out.matrix(i, j) = Scalar::from_rational(qf, img[1U << i]);
  }
  return out;
}

}  // namespace

FieldMatrix induced_matrix(const Multivector& g) {
  Images im = vector_images(g);
  require(im.grade_one, Errc::NotGradeOne, "conjugation by " + g.to_string() +
                                               " leaves the vector space");
  return im.matrix;
}

UnitProduct UnitProduct::make(std::vector<Multivector> factors) {
  require(!factors.empty(), Errc::PreconditionViolated, "empty product");
  Multivector prod = Multivector::scalar(factors.front().algebra(), 1);
  for (const auto& v : factors) {
    require(v.is_homogeneous(1), Errc::PreconditionViolated,
            v.to_string() + " is not a vector");
    mpq_class qv = quadratic_form(v);
    require(qv == 1 || qv == -1, Errc::PreconditionViolated,
            v.to_string() + " is not a unit vector");
    prod = prod * v;
  }
  return {std::move(factors), std::move(prod)};
}

GroupMembership clifford_group_membership(const Multivector& g) {
  GroupMembership out;
  Images im = vector_images(g);
  out.in_even_part = g.is_even();
  out.preserves_grade_one = im.grade_one;
  if (im.grade_one) {
    FieldMatrix eta = metric_matrix(g.algebra());
    out.preserves_form = im.matrix.transpose() * eta * im.matrix == eta;
    out.induced_det = det_field(im.matrix);
    out.induced = std::move(im.matrix);
  }
  out.in_gamma = out.preserves_grade_one && out.preserves_form;
  return out;
}

GroupMembership clifford_group_membership(const UnitProduct& g) {
  GroupMembership out = clifford_group_membership(g.product);
  if (g.factors.size() % 2 == 0) out.spin_witness = g.factors;
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(CliffordBase base) {
  switch (base) {
    case CliffordBase::R: return "R";
    case CliffordBase::C: return "C";
    case CliffordBase::H: return "H";
  }
  return "?";
}

std::string to_string(const Classification& c) {
  std::string one = c.matrix_size == 1
                        ? to_string(c.base)
                        : "Mat(" + std::to_string(c.matrix_size) + "," + to_string(c.base) + ")";
  return c.direct_sum ? one + " + " + one : one;
}

std::size_t Classification::real_dimension() const {
  const std::size_t per = base == CliffordBase::R ? 1 : base == CliffordBase::C ? 2 : 4;
  return per * matrix_size * matrix_size * (direct_sum ? 2 : 1);
}

Classification classify(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  require(n <= 2 * CliffordAlgebra::kMaxGenerators, Errc::OutOfBudget,
          "classification is limited to p + q <= " +
              std::to_string(2 * CliffordAlgebra::kMaxGenerators));
  const long r = ((static_cast<long>(p) - static_cast<long>(q)) % 8 + 8) % 8;
  Classification c;
  switch (r) {
    case 0:
    case 2: c = {CliffordBase::R, std::size_t{1} << (n / 2), false}; break;
    case 1: c = {CliffordBase::R, std::size_t{1} << ((n - 1) / 2), true}; break;
    case 3:
    case 7: c = {CliffordBase::C, std::size_t{1} << ((n - 1) / 2), false}; break;
    case 4:
    case 6: c = {CliffordBase::H, std::size_t{1} << ((n - 2) / 2), false}; break;
    case 5: c = {CliffordBase::H, std::size_t{1} << ((n - 3) / 2), true}; break;
  }
  return c;
}

std::size_t center_dimension(const Clifford& algebra) {
  const std::size_t d = algebra->dim(), n = algebra->n();
  const Field qf = FieldSpec::rationals();
  // unknown x = sum x_b e_b; rows: coefficients of x e_i - e_i x
  FieldMatrix sys(qf, n * d, d);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t ei = 1U << i;
    for (std::uint32_t b = 0; b < d; ++b) {
      const int s = algebra->sign(b, ei) - algebra->sign(ei, b);
      sys(i * d + (b ^ ei), b) = Scalar::from_int(qf, s);
    }
  }
  return d - rank(sys);
}

std::size_t associativity_failures(const Clifford& algebra, std::size_t samples,
                                   std::uint64_t seed) {
  const std::uint32_t d = static_cast<std::uint32_t>(algebra->dim());
  auto ok = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return algebra->sign(a, b) * algebra->sign(a ^ b, c) ==
           algebra->sign(b, c) * algebra->sign(a, b ^ c);
  };
  std::size_t failures = 0;
  if (algebra->n() <= 4 || samples == 0) {
    for (std::uint32_t a = 0; a < d; ++a)
      for (std::uint32_t b = 0; b < d; ++b)
        for (std::uint32_t c = 0; c < d; ++c) failures += ok(a, b, c) ? 0 : 1;
    return failures;
  }
  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto a = static_cast<std::uint32_t>(rng.below(d));
    auto b = static_cast<std::uint32_t>(rng.below(d));
    auto c = static_cast<std::uint32_t>(rng.below(d));
    failures += ok(a, b, c) ? 0 : 1;
  }
  return failures;
}

namespace {

/// Extends generator images multiplicatively to all blades, then checks the
/// structure constants are reproduced and the blade images are independent.
template <typename T>
bool transport(const Clifford& alg, const std::vector<T>& gens, const T& one,
               std::size_t target_dim, const std::function<std::vector<mpq_class>(const T&)>& coords) {
  const std::size_t d = alg->dim();
  if (target_dim != d) return false;
  std::vector<T> image(d, one);
  for (std::uint32_t a = 1; a < d; ++a) {
    T acc = one;
    for (std::size_t i : blade_indices(a)) acc = acc * gens[i];
    image[a] = acc;
  }
  for (std::uint32_t a = 0; a < d; ++a)
    for (std::uint32_t b = 0; b < d; ++b) {
      T lhs = image[a] * image[b];
      T rhs = alg->sign(a, b) > 0 ? image[a ^ b] : -image[a ^ b];
      if (!(lhs == rhs)) return false;
    }
  const Field qf = FieldSpec::rationals();
  FieldMatrix m(qf, target_dim, d);
  for (std::uint32_t a = 0; a < d; ++a) {
    std::vector<mpq_class> c = coords(image[a]);
    for (std::size_t i = 0; i < target_dim; ++i) m(i, a) = Scalar::from_rational(qf, c[i]);
  }
  return rank(m) == d;
}

std::optional<std::pair<std::string, bool>> known_transport(const Clifford& alg) {
  const Field qf = FieldSpec::rationals();
  const std::size_t p = alg->p(), q = alg->q();
  auto quat_coords = [](const QuaternionElement& z) {
    std::vector<mpq_class> out;
    for (const auto& c : z.coeffs()) out.push_back(c.re());
    return out;
  };
  auto scalar_coords = [](const Scalar& s) { return std::vector<mpq_class>{s.re(), s.im()}; };

  if (p == 0 && q == 2) {
    Algebra h = QuatAlgebra::make(qf, -1, -1);
    std::vector<QuaternionElement> gens{QuaternionElement::basis(h, 1),
                                        QuaternionElement::basis(h, 2)};
    return std::pair{h->to_string(),
                     transport<QuaternionElement>(alg, gens, QuaternionElement::one(h), 4,
                                                  quat_coords)};
  }
  if (p + q == 2 && p >= 1) {
    Algebra m2 = QuatAlgebra::split_matrix(qf);
    // e1 -> diag(1, -1); e2 -> [[0,1],[1,0]] or [[0,-1],[1,0]]
    std::vector<QuaternionElement> gens{
        QuaternionElement::from_ints(m2, 1, 0, 0, -1),
        p == 2 ? QuaternionElement::from_ints(m2, 0, 1, 1, 0)
               : QuaternionElement::from_ints(m2, 0, -1, 1, 0)};
    return std::pair{m2->to_string(),
                     transport<QuaternionElement>(alg, gens, QuaternionElement::one(m2), 4,
                                                  quat_coords)};
  }
  if (p + q == 1) {
    Field ext = FieldSpec::quad_ext(qf, Scalar::from_int(qf, p == 1 ? 1 : -1));
    std::vector<Scalar> gens{Scalar::quad(ext, mpq_class(0), mpq_class(1))};
    return std::pair{ext->to_string(),
                     transport<Scalar>(alg, gens, Scalar::one(ext), 2, scalar_coords)};
  }
  return std::nullopt;
}

}  // namespace

ClassificationReport verify_classification(std::size_t p, std::size_t q) {
  require(p + q <= 4, Errc::OutOfBudget, "verification is limited to p + q <= 4");
  Clifford alg = CliffordAlgebra::make(p, q);
  ClassificationReport r;
  r.p = p;
  r.q = q;
  r.predicted = classify(p, q);
  r.center_dim = center_dimension(alg);
  r.predicted_center_dim =
      (r.predicted.direct_sum || r.predicted.base == CliffordBase::C) ? 2 : 1;
  r.dimension = alg->dim();
  bool agree = r.center_dim == r.predicted_center_dim &&
               r.dimension == r.predicted.real_dimension();
  if (alg->n() % 2 == 1) {
    const std::uint32_t top = static_cast<std::uint32_t>(alg->dim() - 1);
    r.pseudoscalar_square = alg->sign(top, top);
    // central square -1 is the complex case, +1 the direct sum
    const bool complex = *r.pseudoscalar_square == -1;
    agree = agree && complex == (r.predicted.base == CliffordBase::C) &&
            !complex == r.predicted.direct_sum;
  }
  if (auto t = known_transport(alg)) {
    r.transport_target = t->first;
    r.transport_ok = t->second;
    agree = agree && t->second;
  }
  r.agree = agree;
  return r;
}

}  // namespace compalg
