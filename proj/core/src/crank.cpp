#include "compalg/crank.hpp"

#include <algorithm>
#include <cmath>

#include "compalg/random.hpp"

namespace compalg {
namespace {

// Advances `idx` (strictly increasing, values < n) to the next subset in
// lexicographic order; false once exhausted.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

CompMatrix combine(const std::vector<CompMatrix>& matrices,
                   const std::vector<QuaternionElement>& coeffs) {
  const CompMatrix& first = matrices.front();
  CompMatrix sum(first.algebra(), first.rows(), first.cols());
  for (std::size_t i = 0; i < matrices.size(); ++i)
    sum += matrices[i].right_scaled(coeffs[i]);
  return sum;
}

}  // namespace

std::size_t c_rank(const CompMatrix& z) {
  const std::size_t top = std::min(z.rows(), z.cols());
  for (std::size_t r = top; r >= 1; --r) {
    std::vector<std::size_t> rows = first_subset(r);
    do {
      std::vector<std::size_t> cols = first_subset(r);
      do {
        if (is_invertible(z.submatrix(rows, cols))) return r;
      } while (next_subset(cols, z.cols()));
    } while (next_subset(rows, z.rows()));
  }
  return 0;
}

std::size_t c_rank_nonsplit(const CompMatrix& z) { return skew_column_rank(z); }

std::size_t m_zero(const Algebra& algebra, std::size_t m, std::size_t d) {
  require(d >= 1 && d <= m, Errc::OutOfRange, "need 1 <= d <= m");
  const std::size_t base = m - d + 1;
  switch (is_split(algebra)) {
    case Splitness::Split: return 4 * base;
    case Splitness::Nonsplit: return base;
    case Splitness::Undecided: break;
  }
  fail(Errc::SplitnessUndecided,
       "cannot decide whether " + algebra->to_string() + " is split");
}

void RankInstance::validate() const {
  require(!matrices.empty(), Errc::PreconditionViolated, "empty family");
  const CompMatrix& first = matrices.front();
  require(first.rows() <= first.cols(), Errc::PreconditionViolated,
          "rank instances need m <= n");
  require(d >= 1 && d <= first.rows(), Errc::OutOfRange, "need 1 <= d <= m");
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const CompMatrix& a = matrices[i];
    require(same_algebra(a.algebra(), first.algebra()), Errc::AlgebraMismatch,
            "family mixes algebras");
    require(a.rows() == first.rows() && a.cols() == first.cols(),
            Errc::DimensionMismatch, "family mixes shapes");
    for (std::size_t j = 0; j < i; ++j)
      require(!(matrices[j] == a), Errc::PreconditionViolated,
              "matrices " + std::to_string(j) + " and " + std::to_string(i) +
                  " coincide");
  }
}

LowRankCombination find_low_rank_combination(const RankInstance& instance) {
  instance.validate();
  const CompMatrix& first = instance.matrices.front();
  const Algebra& alg = first.algebra();
  const std::size_t m = first.rows();
  const std::size_t n = first.cols();
  const std::size_t big_m = instance.matrices.size();
  const std::size_t m0 = m_zero(alg, m, instance.d);
  require(big_m >= 1 + n * m0, Errc::PreconditionViolated,
          "family of " + std::to_string(big_m) + " matrices is below 1 + n*M0 = " +
              std::to_string(1 + n * m0));
  const std::size_t keep = m - instance.d + 1;

  LowRankCombination out;
  if (is_split(alg) == Splitness::Split) {
    // Coordinates over k of the truncated matrices, one column per matrix.
    const Field& k = alg->base();
    FieldMatrix system(k, 4 * keep * n, big_m);
    for (std::size_t t = 0; t < big_m; ++t)
      for (std::size_t i = 0; i < keep; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (int c = 0; c < 4; ++c)
            system(4 * (i * n + j) + c, t) = instance.matrices[t](i, j)[c];
    auto null = first_null_vector(system);
    require(null.has_value(), Errc::PreconditionViolated,
            "no k-linear relation among the truncations");
    for (const auto& c : *null)
      out.coeffs.push_back(QuaternionElement::scalar(alg, c));
    out.over_base_field = true;
  } else {
    CompMatrix system(alg, keep * n, big_m);
    for (std::size_t t = 0; t < big_m; ++t)
      for (std::size_t i = 0; i < keep; ++i)
        for (std::size_t j = 0; j < n; ++j)
          system(i * n + j, t) = instance.matrices[t](i, j);
    auto null = skew_solve(system);
    require(null.has_value(), Errc::PreconditionViolated,
            "no right relation among the truncations");
    out.coeffs = std::move(*null);
  }
  out.combination = combine(instance.matrices, out.coeffs);
  out.rank = c_rank(out.combination);
  return out;
}

double estimate_bound_work(const BoundParams& params, std::size_t family_size) {
  const double keep = double(params.m - params.d + 1);
  const double rows = 4.0 * keep * double(params.n);
  const double elim = double(family_size) * rows *
                      std::min(double(family_size), rows);
  double rank_cost = 0;
  for (std::size_t r = 1; r <= std::min(params.m, params.n); ++r)
    rank_cost += binomial(params.m, r) * binomial(params.n, r) *
                 std::pow(2.0 * double(r), 3.0);
  return double(params.trials) * (elim + rank_cost + double(family_size));
}

BoundReport verify_bound(const BoundParams& params, const Budget& budget) {
  require(params.algebra != nullptr, Errc::PreconditionViolated, "no algebra");
  require(params.m >= 1 && params.m <= params.n, Errc::PreconditionViolated,
          "need 1 <= m <= n");
  BoundReport report;
  report.params = params;
  report.m0 = m_zero(params.algebra, params.m, params.d);
  report.family_size = 1 + params.n * report.m0;
  if (params.trials == 0) return report;

  const Field& k = params.algebra->base();
  // log of the number of distinct m x n matrices available to the sampler
  const double per_entry =
      k->is_finite() ? std::log(k->modulus().get_d())
                     : std::log(double(2 * params.box + 1));
  const double log_space = 4.0 * double(params.m * params.n) * per_entry;
  require(log_space >= std::log(double(report.family_size)),
          Errc::InfeasibleScale, "not enough distinct matrices to sample from");
  const double work = estimate_bound_work(params, report.family_size);
  require(work <= params.work_limit, Errc::InfeasibleScale,
          "estimated work " + std::to_string(work) + " exceeds the limit");

  SplitMix64 rng(params.seed);
  for (std::size_t trial = 0; trial < params.trials; ++trial) {
    budget.check("verify_bound");
    RankInstance inst;
    inst.d = params.d;
    std::size_t attempts = 0;
    while (inst.matrices.size() < report.family_size) {
      require(++attempts <= 1000 * report.family_size, Errc::InfeasibleScale,
              "rejection sampling failed to find distinct matrices");
      CompMatrix cand =
          random_comp_matrix(params.algebra, params.m, params.n, rng, params.box);
      if (std::find(inst.matrices.begin(), inst.matrices.end(), cand) ==
          inst.matrices.end())
        inst.matrices.push_back(std::move(cand));
    }
    ++report.trials;

    std::string reason;
    LowRankCombination found;
    try {
      found = find_low_rank_combination(inst);
      // Independent re-check by substitution.
      bool nonzero = std::any_of(found.coeffs.begin(), found.coeffs.end(),
                                 [](const auto& c) { return !c.is_zero(); });
      CompMatrix sum = combine(inst.matrices, found.coeffs);
      if (!nonzero)
        reason = "all coefficients are zero";
      else if (!sum.truncated(params.m - params.d + 1).is_zero())
        reason = "truncated combination is nonzero";
      else if (c_rank(sum) + 1 > params.d)
        reason = "combination has C-rank above d - 1";
    } catch (const Error& e) {
      reason = std::string(errc_name(e.code())) + ": " + e.what();
    }
    if (reason.empty()) {
      ++report.successes;
    } else if (!report.counterexample) {
      report.counterexample =
          BoundCounterexample{trial, reason, inst.matrices, found.coeffs};
    }
  }
  return report;
}

}  // namespace compalg
