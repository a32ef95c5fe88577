#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "compalg/error.hpp"

namespace compalg {

using Exponent = std::vector<int>;

/// Laurent polynomial in x1..xn with rational coefficients. Zero
/// coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t n) : n_(n) {}

  static LaurentPoly constant(std::size_t n, const mpq_class& c);
  static LaurentPoly monomial(const Exponent& e, const mpq_class& c = 1);
  /// x_i (0-based index) raised to the power k.
  static LaurentPoly variable(std::size_t n, std::size_t i, int k = 1);

  /// "x1^2*x2^-1 + 3 - 1/2*x3". Variables beyond `n` raise ParseError; with
  /// n = 0 the count is the largest index seen.
  static LaurentPoly parse(std::string_view text, std::size_t n = 0);

  [[nodiscard]] std::size_t nvars() const noexcept { return n_; }
  [[nodiscard]] const std::map<Exponent, mpq_class>& terms() const noexcept {
    return terms_;
  }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] mpq_class coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const mpq_class& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const mpq_class& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  [[nodiscard]] LaurentPoly pow(unsigned k) const;
  [[nodiscard]] std::string to_string() const;

 private:
  void check_same(const LaurentPoly& rhs) const;

  std::size_t n_ = 0;
  std::map<Exponent, mpq_class> terms_;
};

}  // namespace compalg
