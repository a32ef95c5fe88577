#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "compalg/error.hpp"

namespace compalg {

/// Integer polynomial in t, coefficients indexed by degree. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  /// Sentinel degree of the zero polynomial.
  static constexpr long kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<mpz_class> coeffs);

  static UniPoly constant(long c);
  /// c * t^k
  static UniPoly monomial(long c, std::size_t k);
  /// 1 - t^k and 1 + t^k
  static UniPoly one_minus(std::size_t k);
  static UniPoly one_plus(std::size_t k);

  [[nodiscard]] long degree() const noexcept {
    return static_cast<long>(c_.size()) - 1;
  }
  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  [[nodiscard]] const std::vector<mpz_class>& coeffs() const noexcept {
    return c_;
  }
  /// Coefficient of t^k (zero beyond the degree).
  [[nodiscard]] mpz_class operator[](std::size_t k) const;
  [[nodiscard]] mpz_class eval(const mpz_class& t) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  [[nodiscard]] bool is_palindromic() const;
  [[nodiscard]] bool has_nonnegative_coeffs() const;

  /// "1 + t^4 + t^6 + t^10"
  [[nodiscard]] std::string to_text() const;
  /// "1 + t^{4} + 2t^{6}"
  [[nodiscard]] std::string to_latex() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

struct DivResult {
  UniPoly quotient;
  UniPoly remainder;
};

/// Division with remainder; the divisor must have leading coefficient +-1
/// or divide every intermediate leading term (InexactDivision otherwise).
[[nodiscard]] DivResult divmod(const UniPoly& num, const UniPoly& den);

/// Thrown by exact_div; carries the nonzero remainder.
class InexactDivisionError : public Error {
 public:
  InexactDivisionError(const std::string& what, UniPoly remainder)
      : Error(Errc::InexactDivision, what), remainder_(std::move(remainder)) {}
  [[nodiscard]] const UniPoly& remainder() const noexcept { return remainder_; }

 private:
  UniPoly remainder_;
};

[[nodiscard]] UniPoly exact_div(const UniPoly& num, const UniPoly& den);

}  // namespace compalg
