#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "compalg/poly.hpp"

namespace compalg {

enum class WeylType { A, BC, D, U1SU };

/// One simple factor. For A the parameter counts letters: A:n is A(n-1)
/// with degrees 2..n, matching U(n) or SU(n).
struct WeylFactor {
  WeylType type = WeylType::A;
  std::size_t n = 1;
};

/// Degree multiset of a (product of) Weyl group(s).
class WeylDegrees {
 public:
  WeylDegrees() = default;
  explicit WeylDegrees(std::vector<WeylFactor> factors);

  static WeylDegrees single(WeylType type, std::size_t n) {
    return WeylDegrees({{type, n}});
  }
  /// "BC:3", "U1SU:3", "A:2*D:4".
  static WeylDegrees parse(std::string_view text);

  [[nodiscard]] const std::vector<WeylFactor>& factors() const noexcept {
    return factors_;
  }
  /// Sorted degree multiset.
  [[nodiscard]] const std::vector<std::size_t>& degrees() const noexcept {
    return degrees_;
  }
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<WeylFactor> factors_;
  std::vector<std::size_t> degrees_;
};

[[nodiscard]] std::vector<std::size_t> weyl_degrees(WeylType type, std::size_t n);

/// prod (1 - t^{2 s_i}) / prod (1 - t^{2 r_i}).
[[nodiscard]] UniPoly hirsch(const WeylDegrees& g, const WeylDegrees& u);

enum class ProductSpace { Y, Z };

/// Y(n) = prod_{i=2}^{n} (1 + t^{2i}), Z(n) = prod_{i=2}^{n-1} (1 + t^{2i}).
[[nodiscard]] UniPoly product_form(ProductSpace space, std::size_t n);

/// [n choose k] in q = t^step, step 1 or 2.
[[nodiscard]] UniPoly gaussian_binomial(std::size_t n, std::size_t k,
                                        std::size_t step);

/// prod_{i=1}^{p} (1 - t^{q+i}) / (1 - t^i).
[[nodiscard]] UniPoly grassmann_poincare(std::size_t p, std::size_t q);

/// prod_{i=m-k+1}^{m} (1 - t^{4i}) / (prod_{i=1}^{k-1} (1 - t^{4i}) (1 - t^{2k})).
[[nodiscard]] UniPoly oriented_grassmann_poincare(std::size_t m, std::size_t k);

/// (1 + t) times the Grassmannian factor: grassmann_poincare(p, q) for even
/// n, oriented_grassmann_poincare((n-1)/2, p/2) for odd n with p even.
[[nodiscard]] UniPoly clifford_gamma_poincare(std::size_t n, std::size_t p,
                                              std::size_t q);

}  // namespace compalg
