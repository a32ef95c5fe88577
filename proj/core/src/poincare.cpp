#include "compalg/poincare.hpp"

#include <algorithm>
#include <charconv>

namespace compalg {

std::vector<std::size_t> weyl_degrees(WeylType type, std::size_t n) {
  std::vector<std::size_t> out;
  switch (type) {
    case WeylType::A:
      require(n >= 1, Errc::OutOfRange, "A:n needs n >= 1");
      for (std::size_t i = 2; i <= n; ++i) out.push_back(i);
      break;
    case WeylType::BC:
      require(n >= 1, Errc::OutOfRange, "BC:n needs n >= 1");
      for (std::size_t i = 1; i <= n; ++i) out.push_back(2 * i);
      break;
    case WeylType::D:
      require(n >= 2, Errc::OutOfRange, "D:n needs n >= 2");
      for (std::size_t i = 1; i < n; ++i) out.push_back(2 * i);
      out.push_back(n);
      break;
    case WeylType::U1SU:
      require(n >= 1, Errc::OutOfRange, "U1SU:n needs n >= 1");
      out.push_back(2);
      for (std::size_t i = 2; i <= n; ++i) out.push_back(i);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeylDegrees::WeylDegrees(std::vector<WeylFactor> factors)
    : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    auto d = weyl_degrees(f.type, f.n);
    degrees_.insert(degrees_.end(), d.begin(), d.end());
  }
  std::sort(degrees_.begin(), degrees_.end());
}

WeylDegrees WeylDegrees::parse(std::string_view text) {
  std::vector<WeylFactor> factors;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(pos, end - pos);
    std::size_t colon = part.find(':');
    require(colon != std::string_view::npos, Errc::ParseError,
            "expected TYPE:n in '" + std::string(part) + "'");
    std::string_view tag = part.substr(0, colon);
    std::string_view num = part.substr(colon + 1);
    WeylFactor f;
    if (tag == "A")
      f.type = WeylType::A;
    else if (tag == "BC" || tag == "B" || tag == "C")
      f.type = WeylType::BC;
    else if (tag == "D")
      f.type = WeylType::D;
    else if (tag == "U1SU")
      f.type = WeylType::U1SU;
    else
      fail(Errc::ParseError, "unknown Weyl type '" + std::string(tag) + "'");
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), f.n);
    require(ec == std::errc() && ptr == num.data() + num.size(), Errc::ParseError,
            "bad rank in '" + std::string(part) + "'");
    factors.push_back(f);
    pos = end + 1;
  }
  return WeylDegrees(std::move(factors));
}

std::string WeylDegrees::to_string() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "*";
    switch (f.type) {
      case WeylType::A: out += "A"; break;
      case WeylType::BC: out += "BC"; break;
      case WeylType::D: out += "D"; break;
      case WeylType::U1SU: out += "U1SU"; break;
    }
    out += ":" + std::to_string(f.n);
  }
  return out;
}

UniPoly hirsch(const WeylDegrees& g, const WeylDegrees& u) {
  require(g.degrees().size() == u.degrees().size(), Errc::RankMismatch,
          g.to_string() + " and " + u.to_string() + " have different ranks");
  UniPoly num = UniPoly::constant(1), den = UniPoly::constant(1);
  for (auto s : g.degrees()) num *= UniPoly::one_minus(2 * s);
  for (auto r : u.degrees()) den *= UniPoly::one_minus(2 * r);
  return exact_div(num, den);
}

UniPoly product_form(ProductSpace space, std::size_t n) {
  const std::size_t top = space == ProductSpace::Y ? n : n - 1;
  require(space == ProductSpace::Y ? n >= 2 : n >= 3, Errc::OutOfRange,
          "product form needs n >= 2 for Y and n >= 3 for Z");
  UniPoly out = UniPoly::constant(1);
  for (std::size_t i = 2; i <= top; ++i) out *= UniPoly::one_plus(2 * i);
  return out;
}

UniPoly gaussian_binomial(std::size_t n, std::size_t k, std::size_t step) {
  require(k <= n, Errc::OutOfRange, "gaussian binomial needs k <= n");
  require(step == 1 || step == 2, Errc::OutOfRange, "step must be 1 or 2");
  UniPoly num = UniPoly::constant(1), den = UniPoly::constant(1);
  for (std::size_t i = 1; i <= k; ++i) {
    num *= UniPoly::one_minus(step * (n - k + i));
    den *= UniPoly::one_minus(step * i);
  }
  return exact_div(num, den);
}

UniPoly grassmann_poincare(std::size_t p, std::size_t q) {
  require(p >= 1 && q >= 1, Errc::OutOfRange, "grassmann needs p, q >= 1");
  UniPoly num = UniPoly::constant(1), den = UniPoly::constant(1);
  for (std::size_t i = 1; i <= p; ++i) {
    num *= UniPoly::one_minus(q + i);
    den *= UniPoly::one_minus(i);
  }
  return exact_div(num, den);
}

UniPoly oriented_grassmann_poincare(std::size_t m, std::size_t k) {
  require(k >= 1 && k <= m, Errc::OutOfRange, "need 1 <= k <= m");
  UniPoly num = UniPoly::constant(1), den = UniPoly::one_minus(2 * k);
  for (std::size_t i = m - k + 1; i <= m; ++i) num *= UniPoly::one_minus(4 * i);
  for (std::size_t i = 1; i < k; ++i) den *= UniPoly::one_minus(4 * i);
  return exact_div(num, den);
}

UniPoly clifford_gamma_poincare(std::size_t n, std::size_t p, std::size_t q) {
  require(p + q == n, Errc::OutOfRange, "need p + q = n");
  const UniPoly one_t = UniPoly::one_plus(1);
  if (n % 2 == 0) return one_t * grassmann_poincare(p, q);
  if (p % 2 != 0)
    fail(Errc::BranchUnavailable, "odd n formula needs p even, got p = " +
                                      std::to_string(p));
  return one_t * oriented_grassmann_poincare((n - 1) / 2, p / 2);
}

}  // namespace compalg
