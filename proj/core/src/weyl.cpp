#include "compalg/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "compalg/field_matrix.hpp"

namespace compalg {

SignedPerm SignedPerm::identity(std::size_t n) {
  SignedPerm g;
  g.perm.resize(n);
  std::iota(g.perm.begin(), g.perm.end(), std::size_t{0});
  g.sign.assign(n, 1);
  return g;
}

SignedPerm operator*(const SignedPerm& g, const SignedPerm& h) {
  require(g.size() == h.size(), Errc::DimensionMismatch,
          "signed permutations of different sizes");
  SignedPerm out;
  out.perm.resize(h.size());
  out.sign.resize(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    out.perm[i] = g.perm[h.perm[i]];
    out.sign[i] = h.sign[i] * g.sign[h.perm[i]];
  }
  return out;
}

namespace {

mpz_class factorial(std::size_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class pow2(std::size_t n) { return mpz_class(1) << static_cast<mp_bitcnt_t>(n); }

SignedPerm transposition(std::size_t n, std::size_t i, std::size_t j) {
  SignedPerm g = SignedPerm::identity(n);
  std::swap(g.perm[i], g.perm[j]);
  return g;
}

SignedPerm flip(std::size_t n, std::initializer_list<std::size_t> which) {
  SignedPerm g = SignedPerm::identity(n);
  for (auto i : which) g.sign[i] = -1;
  return g;
}

/// Places a block element at `offset` inside an identity of size n.
SignedPerm embed(const SignedPerm& g, std::size_t n, std::size_t offset) {
  SignedPerm out = SignedPerm::identity(n);
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.perm[offset + i] = offset + g.perm[i];
    out.sign[offset + i] = g.sign[i];
  }
  return out;
}

bool perm_is_identity(const SignedPerm& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.perm[i] != i) return false;
  return true;
}

}  // namespace

SignedPermGroup SignedPermGroup::sym(std::size_t n) {
  SignedPermGroup g;
  g.flavor_ = GroupFlavor::Sym;
  g.n_ = n;
  return g;
}

SignedPermGroup SignedPermGroup::hyperoctahedral(std::size_t n) {
  SignedPermGroup g = sym(n);
  g.flavor_ = GroupFlavor::Hyperoctahedral;
  return g;
}

SignedPermGroup SignedPermGroup::even_signed(std::size_t n) {
  SignedPermGroup g = sym(n);
  g.flavor_ = GroupFlavor::EvenSigned;
  return g;
}

SignedPermGroup SignedPermGroup::trivial_signs(std::size_t n) {
  SignedPermGroup g = sym(n);
  g.flavor_ = GroupFlavor::TrivialSigns;
  return g;
}

SignedPermGroup SignedPermGroup::product(std::vector<SignedPermGroup> parts) {
  SignedPermGroup g;
  g.flavor_ = GroupFlavor::Product;
  for (const auto& p : parts) g.n_ += p.n_;
  g.parts_ = std::move(parts);
  return g;
}

SignedPermGroup SignedPermGroup::from_name(const std::string& name, std::size_t n) {
  if (name == "A" || name == "Sym") return sym(n);
  if (name == "BC" || name == "Hyperoctahedral") return hyperoctahedral(n);
  if (name == "D" || name == "EvenSigned") return even_signed(n);
  if (name == "TrivialSigns") return trivial_signs(n);
  fail(Errc::ParseError, "unknown group flavor '" + name + "'");
}

mpz_class SignedPermGroup::order() const {
  switch (flavor_) {
    case GroupFlavor::Sym: return factorial(n_);
    case GroupFlavor::Hyperoctahedral: return pow2(n_) * factorial(n_);
    case GroupFlavor::EvenSigned:
      return n_ == 0 ? mpz_class(1) : pow2(n_ - 1) * factorial(n_);
    case GroupFlavor::TrivialSigns: return pow2(n_);
    case GroupFlavor::Product: {
      mpz_class out = 1;
      for (const auto& p : parts_) out *= p.order();
      return out;
    }
  }
  return 0;
}

std::vector<SignedPerm> SignedPermGroup::generators() const {
  std::vector<SignedPerm> out;
  if (flavor_ == GroupFlavor::Product) {
    std::size_t offset = 0;
    for (const auto& p : parts_) {
      for (const auto& g : p.generators()) out.push_back(embed(g, n_, offset));
      offset += p.n_;
    }
    return out;
  }
  if (flavor_ == GroupFlavor::TrivialSigns) {
    for (std::size_t i = 0; i < n_; ++i) out.push_back(flip(n_, {i}));
    return out;
  }
  for (std::size_t i = 0; i + 1 < n_; ++i) out.push_back(transposition(n_, i, i + 1));
  if (flavor_ == GroupFlavor::Hyperoctahedral && n_ >= 1) out.push_back(flip(n_, {0}));
  if (flavor_ == GroupFlavor::EvenSigned && n_ >= 2) out.push_back(flip(n_, {0, 1}));
  return out;
}

bool SignedPermGroup::contains(const SignedPerm& g) const {
  if (g.size() != n_) return false;
  switch (flavor_) {
    case GroupFlavor::Sym:
      return std::all_of(g.sign.begin(), g.sign.end(), [](int s) { return s == 1; });
    case GroupFlavor::Hyperoctahedral: return true;
    case GroupFlavor::EvenSigned:
      return std::count(g.sign.begin(), g.sign.end(), -1) % 2 == 0;
    case GroupFlavor::TrivialSigns: return perm_is_identity(g);
    case GroupFlavor::Product: {
      std::size_t offset = 0;
      for (const auto& p : parts_) {
        SignedPerm block;
        for (std::size_t i = 0; i < p.n_; ++i) {
          std::size_t target = g.perm[offset + i];
          if (target < offset || target >= offset + p.n_) return false;
          block.perm.push_back(target - offset);
          block.sign.push_back(g.sign[offset + i]);
        }
        if (!p.contains(block)) return false;
        offset += p.n_;
      }
      return true;
    }
  }
  return false;
}

std::vector<SignedPerm> SignedPermGroup::elements(const Budget& budget) const {
  std::vector<SignedPerm> out;
  if (flavor_ == GroupFlavor::Product) {
    out.push_back(SignedPerm::identity(n_));
    std::size_t offset = 0;
    for (const auto& p : parts_) {
      std::vector<SignedPerm> next;
      for (const auto& h : p.elements(budget)) {
        SignedPerm e = embed(h, n_, offset);
        for (const auto& g : out) next.push_back(g * e);
        budget.check("group enumeration");
      }
      out = std::move(next);
      offset += p.n_;
    }
    return out;
  }
  require(n_ < 8 * sizeof(unsigned long), Errc::BudgetExceeded, "group too large");
  SignedPerm g = SignedPerm::identity(n_);
  std::size_t count = 0;
  do {
    for (unsigned long mask = 0; mask < (1UL << n_); ++mask) {
      for (std::size_t i = 0; i < n_; ++i) g.sign[i] = (mask >> i) & 1UL ? -1 : 1;
      if (contains(g)) out.push_back(g);
      if ((++count & 1023U) == 0) budget.check("group enumeration");
    }
  } while (std::next_permutation(g.perm.begin(), g.perm.end()));
  return out;
}

std::string to_string(GroupFlavor flavor) {
  switch (flavor) {
    case GroupFlavor::Sym: return "Sym";
    case GroupFlavor::Hyperoctahedral: return "Hyperoctahedral";
    case GroupFlavor::EvenSigned: return "EvenSigned";
    case GroupFlavor::Product: return "Product";
    case GroupFlavor::TrivialSigns: return "TrivialSigns";
  }
  return "?";
}

std::string SignedPermGroup::to_string() const {
  if (flavor_ != GroupFlavor::Product)
    return compalg::to_string(flavor_) + "(" + std::to_string(n_) + ")";
  std::string out;
  for (const auto& p : parts_) out += (out.empty() ? "" : " x ") + p.to_string();
  return out;
}

LaurentPoly act(const SignedPerm& g, const LaurentPoly& f) {
  require(g.size() == f.nvars(), Errc::DimensionMismatch,
          "group element and polynomial differ in variable count");
  LaurentPoly out(f.nvars());
  Exponent image(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    std::fill(image.begin(), image.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) image[g.perm[i]] += g.sign[i] * e[i];
    out.add_term(image, c);
  }
  return out;
}

bool is_invariant(const SignedPermGroup& group, const LaurentPoly& f) {
  for (const auto& g : group.generators())
    if (!(act(g, f) == f)) return false;
  return true;
}

LaurentPoly reynolds(const SignedPermGroup& group, const LaurentPoly& f,
                     const Budget& budget) {
  require(group.n() == f.nvars(), Errc::DimensionMismatch,
          "group and polynomial differ in variable count");
  LaurentPoly sum(f.nvars());
  std::size_t count = 0;
  for (const auto& g : group.elements(budget)) {
    sum += act(g, f);
    if ((++count & 255U) == 0) budget.check("reynolds");
  }
  return sum * mpq_class(1, group.order());
}

std::vector<LaurentPoly> fundamental_generators(GroupFlavor flavor, std::size_t n) {
  require(n >= 1, Errc::OutOfRange, "need n >= 1");
  std::vector<LaurentPoly> vars;
  for (std::size_t i = 0; i < n; ++i) {
    if (flavor == GroupFlavor::Sym)
      vars.push_back(LaurentPoly::variable(n, i));
    else if (flavor == GroupFlavor::Hyperoctahedral)
      vars.push_back(LaurentPoly::variable(n, i) + LaurentPoly::variable(n, i, -1));
    else
      fail(Errc::Unsupported, "generators are provided for Sym and Hyperoctahedral");
  }
  // e_k by the recurrence prod (1 + y_i T)
  std::vector<LaurentPoly> e(n + 1, LaurentPoly(n));
  e[0] = LaurentPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * vars[i];
  return {e.begin() + 1, e.end()};
}

mpz_class weyl_index(const SignedPermGroup& g, const SignedPermGroup& h) {
  mpz_class og = g.order(), oh = h.order();
  require(mpz_divisible_p(og.get_mpz_t(), oh.get_mpz_t()) != 0, Errc::NotDividing,
          "|" + h.to_string() + "| = " + oh.get_str() + " does not divide |" +
              g.to_string() + "| = " + og.get_str());
  return og / oh;
}

mpz_class ktheory_rank(KPair pair, std::size_t n) {
  require(n >= 1, Errc::OutOfRange, "need n >= 1");
  switch (pair) {
    case KPair::Quaternionic:
      return weyl_index(SignedPermGroup::sym(2 * n), SignedPermGroup::sym(n));
    case KPair::Split:
      return weyl_index(SignedPermGroup::sym(2 * n),
                        SignedPermGroup::product({SignedPermGroup::sym(n),
                                                  SignedPermGroup::sym(n)}));
    case KPair::OneDimSplit:
      return weyl_index(SignedPermGroup::sym(2),
                        SignedPermGroup::product({SignedPermGroup::sym(1),
                                                  SignedPermGroup::sym(1)}));
  }
  return 0;
}

std::size_t GenerationReport::inconclusive() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const auto& e) { return !e.expressible; }));
}

namespace {

/// Products of generators with weighted degree <= bound.
std::vector<LaurentPoly> bounded_products(GroupFlavor flavor, std::size_t n,
                                          std::size_t bound) {
  std::vector<LaurentPoly> gens = fundamental_generators(flavor, n);
  std::vector<std::size_t> weight(n);
  std::iota(weight.begin(), weight.end(), std::size_t{1});
  if (flavor == GroupFlavor::Sym) {
    // e_n = x1*...*xn, so its inverse is a monomial
    gens.push_back(LaurentPoly::monomial(Exponent(n, -1)));
    weight.push_back(n);
  }
  std::vector<LaurentPoly> out;
  std::vector<unsigned> power(gens.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == gens.size()) {
      // e_n and e_n^-1 together only reproduce lower products
      if (flavor == GroupFlavor::Sym && power[n - 1] && power[n]) return;
      LaurentPoly p = LaurentPoly::constant(n, 1);
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (power[j]) p *= gens[j].pow(power[j]);
      out.push_back(std::move(p));
      return;
    }
    for (unsigned k = 0; used + k * weight[i] <= bound; ++k) {
      power[i] = k;
      self(self, i + 1, used + k * weight[i]);
    }
    power[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

bool in_span(const std::vector<LaurentPoly>& basis, const LaurentPoly& f) {
  std::set<Exponent> support;
  for (const auto& b : basis)
    for (const auto& [e, c] : b.terms()) support.insert(e);
  for (const auto& [e, c] : f.terms())
    if (!support.count(e)) return false;
  const Field q = FieldSpec::rationals();
  FieldMatrix m(q, support.size(), basis.size());
  std::vector<Scalar> rhs;
  std::size_t row = 0;
  for (const auto& e : support) {
    for (std::size_t j = 0; j < basis.size(); ++j)
      m(row, j) = Scalar::from_rational(q, basis[j].coeff(e));
    rhs.push_back(Scalar::from_rational(q, f.coeff(e)));
    ++row;
  }
  return solve(m, rhs).has_value();
}

std::size_t abs_degree(const Exponent& e) {
  std::size_t s = 0;
  for (int x : e) s += static_cast<std::size_t>(x < 0 ? -x : x);
  return s;
}

SignedPermGroup group_for(GroupFlavor flavor, std::size_t n) {
  if (flavor == GroupFlavor::Sym) return SignedPermGroup::sym(n);
  if (flavor == GroupFlavor::Hyperoctahedral) return SignedPermGroup::hyperoctahedral(n);
  fail(Errc::Unsupported, "generation checks cover Sym and Hyperoctahedral");
}

}  // namespace

bool expressible_within(GroupFlavor flavor, const LaurentPoly& f,
                        std::size_t degree_bound) {
  return in_span(bounded_products(flavor, f.nvars(), degree_bound), f);
}

GenerationReport verify_generation(GroupFlavor flavor, std::size_t n,
                                   std::size_t degree_bound, const Budget& budget) {
  require(n >= 1, Errc::OutOfRange, "need n >= 1");
  require(n <= 3 && degree_bound <= 6, Errc::BudgetExceeded,
          "generation checks are limited to n <= 3 and degree bound <= 6");
  SignedPermGroup group = group_for(flavor, n);
  std::vector<SignedPerm> elems = group.elements(budget);
  std::vector<LaurentPoly> basis = bounded_products(flavor, n, degree_bound);

  GenerationReport report;
  report.flavor = flavor;
  report.n = n;
  report.degree_bound = degree_bound;
  report.candidate_products = basis.size();

  const int b = static_cast<int>(degree_bound);
  std::set<Exponent> seen;
  Exponent e(n, -b);
  for (;;) {
    if (abs_degree(e) <= degree_bound && !seen.count(e)) {
      std::set<Exponent> orbit;
      for (const auto& g : elems) {
        Exponent image(n, 0);
        for (std::size_t i = 0; i < n; ++i) image[g.perm[i]] += g.sign[i] * e[i];
        orbit.insert(image);
      }
      LaurentPoly sum(n);
      for (const auto& o : orbit) {
        sum.add_term(o, 1);
        seen.insert(o);
      }
      budget.check("verify_generation");
      report.entries.push_back({sum, in_span(basis, sum)});
    }
    std::size_t i = 0;
    while (i < n && e[i] == b) e[i++] = -b;
    if (i == n) break;
    ++e[i];
  }
  return report;
}

}  // namespace compalg
