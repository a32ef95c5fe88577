#include "compalg/poly.hpp"

#include <sstream>
#include <utility>

namespace compalg {

UniPoly::UniPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(long c) { return UniPoly({mpz_class(c)}); }

UniPoly UniPoly::monomial(long c, std::size_t k) {
  std::vector<mpz_class> v(k + 1, 0);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::one_minus(std::size_t k) {
  return constant(1) - monomial(1, k);
}

UniPoly UniPoly::one_plus(std::size_t k) { return constant(1) + monomial(1, k); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class UniPoly::operator[](std::size_t k) const {
  return k < c_.size() ? c_[k] : mpz_class(0);
}

mpz_class UniPoly::eval(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<mpz_class> out(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

bool UniPoly::is_palindromic() const {
  for (std::size_t i = 0, j = c_.size(); i < j--; ++i)
    if (c_[i] != c_[j]) return false;
  return true;
}

bool UniPoly::has_nonnegative_coeffs() const {
  for (const auto& x : c_)
    if (x < 0) return false;
  return true;
}

namespace {

std::string render(const std::vector<mpz_class>& c, bool latex) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    mpz_class mag = abs(c[k]);
    if (first)
      os << (c[k] < 0 ? "-" : "");
    else
      os << (c[k] < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k == 0) continue;
    os << "t";
    if (k > 1) {
      if (latex)
        os << "^{" << k << "}";
      else
        os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace

std::string UniPoly::to_text() const { return render(c_, false); }
std::string UniPoly::to_latex() const { return render(c_, true); }

DivResult divmod(const UniPoly& num, const UniPoly& den) {
  require(!den.is_zero(), Errc::ZeroInput, "polynomial division by zero");
  std::vector<mpz_class> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  if (rem.size() <= dd) return {UniPoly(), num};
  std::vector<mpz_class> q(rem.size() - dd, 0);
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), d[dd].get_mpz_t())) {
      std::vector<mpz_class> low(rem.begin(), rem.begin() + static_cast<long>(k) + 1);
      throw InexactDivisionError("leading coefficient does not divide",
                                 UniPoly(std::move(low)));
    }
    mpz_class f = rem[k] / d[dd];
    q[k - dd] = f;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= f * d[i];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& num, const UniPoly& den) {
  DivResult r = divmod(num, den);
  if (!r.remainder.is_zero())
    throw InexactDivisionError(
        "(" + num.to_text() + ") / (" + den.to_text() + ") leaves remainder " +
            r.remainder.to_text(),
        r.remainder);
  return std::move(r.quotient);
}

}  // namespace compalg
