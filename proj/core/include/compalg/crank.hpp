#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compalg/budget.hpp"
#include "compalg/comp_matrix.hpp"

namespace compalg {

/// Largest r such that some r x r submatrix is invertible. Brute force over
/// row/column subsets, largest size first, subsets in lexicographic order.
[[nodiscard]] std::size_t c_rank(const CompMatrix& z);

/// Column rank by skew elimination; only meaningful for division algebras.
[[nodiscard]] std::size_t c_rank_nonsplit(const CompMatrix& z);

/// m - d + 1 for nonsplit algebras, 4 (m - d + 1) for split ones.
/// SplitnessUndecided when the splitness search is inconclusive.
[[nodiscard]] std::size_t m_zero(const Algebra& algebra, std::size_t m,
                                 std::size_t d);

struct RankInstance {
  std::vector<CompMatrix> matrices;
  std::size_t d = 1;

  /// Shared shape and algebra, m <= n, 1 <= d <= m, pairwise distinct.
  void validate() const;
};

struct LowRankCombination {
  std::vector<QuaternionElement> coeffs;
  CompMatrix combination;
  std::size_t rank = 0;
  /// True when the relation was found over k (split route).
  bool over_base_field = false;
};

/// Truncates every matrix to its first m - d + 1 rows and finds a nonzero
/// right combination killing the truncations: over k for split algebras,
/// by skew elimination for nonsplit ones. The returned combination has
/// C-rank at most d - 1.
[[nodiscard]] LowRankCombination find_low_rank_combination(
    const RankInstance& instance);

struct BoundParams {
  Algebra algebra;
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t d = 1;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// Entries over Q are drawn from [-box, box].
  long box = 3;
  /// Upper limit on the estimated scalar work of the whole run.
  double work_limit = 5e9;
};

struct BoundCounterexample {
  std::size_t trial = 0;
  std::string reason;
  std::vector<CompMatrix> matrices;
  std::vector<QuaternionElement> coeffs;
};

struct BoundReport {
  BoundParams params;
  std::size_t family_size = 0;  // M = 1 + n M0
  std::size_t m0 = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::optional<BoundCounterexample> counterexample;
};

/// For each trial draws M = 1 + n M0 distinct matrices and checks that a
/// nonzero combination of C-rank <= d - 1 is produced and verifies on
/// substitution. Throws InfeasibleScale when the estimated work exceeds
/// params.work_limit.
[[nodiscard]] BoundReport verify_bound(const BoundParams& params,
                                       const Budget& budget = Budget());

/// Scalar-operation estimate used by verify_bound's feasibility gate.
[[nodiscard]] double estimate_bound_work(const BoundParams& params,
                                         std::size_t family_size);

}  // namespace compalg
