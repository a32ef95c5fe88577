#pragma once

#include <cstdint>
#include <vector>

#include "compalg/comp_matrix.hpp"

namespace compalg {

/// SplitMix64 (Steele, Lea, Flood). Every sampled quantity in the library
/// is derived from this stream so runs are reproducible across platforms:
///   state += 0x9E3779B97F4A7C15
///   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// Bounded draws reject values below (2^64 - bound) mod bound, then reduce.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi].
  long between(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

/// Q: integer in [-box, box]. F_p: uniform residue. Quadratic algebras:
/// both components drawn that way.
inline Scalar random_scalar(const Field& field, SplitMix64& rng, long box = 5) {
  auto base_draw = [&](const Field& k) {
    if (k->is_finite()) {
      mpz_class p = k->modulus();
      if (p.fits_ulong_p())
        return Scalar::from_integer(k, mpz_class(rng.below(p.get_ui())));
      return Scalar::from_integer(k, mpz_class(rng.next()));
    }
    return Scalar::from_int(k, rng.between(-box, box));
  };
  if (field->is_base()) return base_draw(field);
  return Scalar::quad(field, base_draw(field->base()), base_draw(field->base()));
}

inline QuaternionElement random_element(const Algebra& algebra,
                                        SplitMix64& rng, long box = 5) {
  const Field& k = algebra->base();
  return QuaternionElement(algebra, {random_scalar(k, rng, box),
                                     random_scalar(k, rng, box),
                                     random_scalar(k, rng, box),
                                     random_scalar(k, rng, box)});
}

inline CompMatrix random_comp_matrix(const Algebra& algebra, std::size_t rows,
                                     std::size_t cols, SplitMix64& rng,
                                     long box = 5) {
  std::vector<QuaternionElement> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i)
    entries.push_back(random_element(algebra, rng, box));
  return CompMatrix::from_elements(algebra, rows, cols, std::move(entries));
}

inline FieldMatrix random_field_matrix(const Field& field, std::size_t rows,
                                       std::size_t cols, SplitMix64& rng,
                                       long box = 5) {
  std::vector<Scalar> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i)
    data.push_back(random_scalar(field, rng, box));
  return FieldMatrix::from_scalars(field, rows, cols, std::move(data));
}

}  // namespace compalg
