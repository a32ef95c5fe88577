#pragma once

// Seeded generators shared by the unit and acceptance suites.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "compalg/clifford.hpp"
#include "compalg/int_matrix.hpp"
#include "compalg/laurent.hpp"
#include "compalg/random.hpp"
#include "compalg/weyl.hpp"

namespace gen {

using compalg::SplitMix64;

/// Mat(2,k)-form matrix whose every entry is diagonal (x1 = x2 = 0).
inline compalg::CompMatrix diagonal_entry_matrix(const compalg::Algebra& alg,
                                                 std::size_t rows,
                                                 std::size_t cols,
                                                 SplitMix64& rng, long box = 5) {
  const compalg::Field& k = alg->base();
  std::vector<compalg::QuaternionElement> entries;
  for (std::size_t i = 0; i < rows * cols; ++i)
    entries.emplace_back(alg, std::array<compalg::Scalar, 4>{
                                  compalg::random_scalar(k, rng, box),
                                  compalg::Scalar::zero(k), compalg::Scalar::zero(k),
                                  compalg::random_scalar(k, rng, box)});
  return compalg::CompMatrix::from_elements(alg, rows, cols, std::move(entries));
}

inline compalg::Multivector multivector(const compalg::Clifford& alg,
                                        SplitMix64& rng, long box = 3) {
  compalg::Multivector x(alg);
  for (std::uint32_t m = 0; m < alg->dim(); ++m) x[m] = rng.between(-box, box);
  return x;
}

inline compalg::Multivector grade_one(const compalg::Clifford& alg,
                                      SplitMix64& rng, long box = 3) {
  std::vector<mpq_class> v(alg->n());
  for (auto& c : v) c = rng.between(-box, box);
  return compalg::Multivector::vector(alg, v);
}

/// A vector with Q(v) = +-1: either +-e_i, or a rotation 3/5 e_i + 4/5 e_j
/// of two generators with the same square.
inline compalg::Multivector unit_vector(const compalg::Clifford& alg,
                                        SplitMix64& rng) {
  const std::size_t n = alg->n();
  const std::size_t i = rng.below(n);
  std::vector<mpq_class> v(n, 0);
  std::size_t j = rng.below(n);
  if (rng.below(2) == 0 && j != i && alg->metric(i) == alg->metric(j)) {
    v[i] = mpq_class(3, 5);
    v[j] = mpq_class(rng.below(2) ? 4 : -4, 5);
  } else {
    v[i] = rng.below(2) ? 1 : -1;
  }
  return compalg::Multivector::vector(alg, v);
}

inline compalg::IntMatrix int_matrix(std::size_t rows, std::size_t cols,
                                     SplitMix64& rng, long box = 6) {
  compalg::IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.between(-box, box);
  return a;
}

inline compalg::SignedPerm signed_perm(std::size_t n, SplitMix64& rng) {
  compalg::SignedPerm g = compalg::SignedPerm::identity(n);
  for (std::size_t i = n; i-- > 1;) std::swap(g.perm[i], g.perm[rng.below(i + 1)]);
  for (auto& s : g.sign) s = rng.below(2) ? 1 : -1;
  return g;
}

/// Sparse Laurent polynomial with exponents in [-span, span].
inline compalg::LaurentPoly laurent(std::size_t n, SplitMix64& rng,
                                    std::size_t terms = 4, int span = 2) {
  compalg::LaurentPoly f(n);
  for (std::size_t t = 0; t < terms; ++t) {
    compalg::Exponent e(n);
    for (auto& x : e) x = static_cast<int>(rng.between(-span, span));
    f.add_term(e, rng.between(-4, 4));
  }
  return f;
}

}  // namespace gen
