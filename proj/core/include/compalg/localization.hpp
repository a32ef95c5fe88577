#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "compalg/int_matrix.hpp"

namespace compalg {

/// Truncated model of 0 -> Z^{2n-1} --delta--> M --g--> Q -> 0 where M is
/// the character lattice spanned by t^s, 0 < |s| <= s_max, ordered
/// t^1, t^-1, t^2, t^-2, ... The i-th basis vector [rho_i] goes to
/// t^{sign_i * i}; g projects onto the characters delta misses.
struct LocalizationModel {
  std::size_t n = 1;
  std::size_t s_max = 1;
  std::vector<int> signs;
  IntMatrix delta;
  IntMatrix g;
};

/// Position of t^s in the character basis.
[[nodiscard]] std::size_t character_index(long s);

/// TruncationTooSmall when s_max < 2n - 1; DimensionMismatch when the sign
/// vector does not have 2n - 1 entries of +-1.
[[nodiscard]] LocalizationModel build_localization_model(std::size_t n,
                                                         std::size_t s_max,
                                                         std::vector<int> signs);

/// "++-+" -> {1, 1, -1, 1}
[[nodiscard]] std::vector<int> parse_signs(const std::string& text);
[[nodiscard]] std::vector<int> all_plus_signs(std::size_t n);
[[nodiscard]] std::vector<int> alternating_signs(std::size_t n);

struct LocalizationVerdict {
  bool delta_injective = false;
  bool cokernel_torsion_free = false;
  bool exact = false;
  bool splits = false;
  std::size_t middle_rank = 0;
  std::vector<mpz_class> delta_invariants;
  SequenceVerdict sequence;

  [[nodiscard]] bool all() const {
    return delta_injective && cokernel_torsion_free && exact && splits;
  }
};

[[nodiscard]] LocalizationVerdict verify_localization(const LocalizationModel& model);

}  // namespace compalg
