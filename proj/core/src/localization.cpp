#include "compalg/localization.hpp"

namespace compalg {

std::size_t character_index(long s) {
  require(s != 0, Errc::OutOfRange, "the trivial character is not in the lattice");
  const std::size_t mag = static_cast<std::size_t>(s < 0 ? -s : s);
  return 2 * (mag - 1) + (s < 0 ? 1 : 0);
}

std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> out;
  for (char c : text) {
    if (c == '+')
      out.push_back(1);
    else if (c == '-')
      out.push_back(-1);
    else
      fail(Errc::ParseError, "sign strings use only '+' and '-'");
  }
  return out;
}

std::vector<int> all_plus_signs(std::size_t n) {
  return std::vector<int>(2 * n - 1, 1);
}

std::vector<int> alternating_signs(std::size_t n) {
  std::vector<int> out(2 * n - 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i % 2 == 0 ? 1 : -1;
  return out;
}

LocalizationModel build_localization_model(std::size_t n, std::size_t s_max,
                                           std::vector<int> signs) {
  require(n >= 1, Errc::OutOfRange, "need n >= 1");
  const std::size_t k = 2 * n - 1;
  require(s_max >= k, Errc::TruncationTooSmall,
          "s_max = " + std::to_string(s_max) + " is below 2n - 1 = " + std::to_string(k));
  require(signs.size() == k, Errc::DimensionMismatch,
          "expected " + std::to_string(k) + " signs, got " + std::to_string(signs.size()));
  for (int s : signs)
    require(s == 1 || s == -1, Errc::DimensionMismatch, "signs must be +1 or -1");

  LocalizationModel model;
  model.n = n;
  model.s_max = s_max;
  model.signs = std::move(signs);
  const std::size_t dim = 2 * s_max;
  model.delta = IntMatrix(dim, k);
  std::vector<bool> hit(dim, false);
  for (std::size_t i = 0; i < k; ++i) {
    const long s = model.signs[i] * static_cast<long>(i + 1);
    const std::size_t row = character_index(s);
    model.delta(row, i) = 1;
    hit[row] = true;
  }
  model.g = IntMatrix(dim - k, dim);
  std::size_t out_row = 0;
  for (std::size_t j = 0; j < dim; ++j)
    if (!hit[j]) model.g(out_row++, j) = 1;
  return model;
}

LocalizationVerdict verify_localization(const LocalizationModel& model) {
  LocalizationVerdict v;
  v.sequence = sequence_checks(model.delta, model.g);
  v.delta_invariants = v.sequence.f_invariants;
  v.delta_injective = v.sequence.injective_f;
  v.cokernel_torsion_free = v.sequence.splits;
  v.exact = v.sequence.injective_f && v.sequence.exact_middle && v.sequence.surjective_g;
  v.splits = v.exact && v.sequence.splits;
  // rank of the outer terms, which add up by exactness
  v.middle_rank = v.sequence.f_invariants.size() + v.sequence.g_invariants.size();
  return v;
}

}  // namespace compalg
