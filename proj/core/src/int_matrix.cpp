#include "compalg/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace compalg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols_, Errc::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols_ == b.rows_, Errc::ShapeMismatch, "integer matrix product shape");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

mpz_class det(const IntMatrix& input) {
  require(input.rows() == input.cols(), Errc::NotSquare, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  return abs(det(a)) == 1;
}

std::vector<mpz_class> SmithForm::invariant_factors() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

namespace {

struct Reducer {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
  }
  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(dst, j) += q * d(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += q * u(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t i = 0; i < d.rows(); ++i) d(i, dst) += q * d(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += q * v(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(r, j) = -d(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Reducer r{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  for (std::size_t t = 0; t < m && t < n; ++t) {
    for (;;) {
      // smallest |value| in the trailing block, first in row-major order
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (r.d(i, j) == 0) continue;
          if (pi == m || abs(r.d(i, j)) < abs(r.d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) return {std::move(r.u), std::move(r.d), std::move(r.v)};
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);
      const mpz_class p = r.d(t, t);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (r.d(i, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), r.d(i, t).get_mpz_t(), p.get_mpz_t());
        if (q != 0) r.add_row(i, t, -q);
        dirty = dirty || r.d(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (r.d(t, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), r.d(t, j).get_mpz_t(), p.get_mpz_t());
        if (q != 0) r.add_col(j, t, -q);
        dirty = dirty || r.d(t, j) != 0;
      }
      if (dirty) continue;

      // enforce p | every trailing entry
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(r.d(i, j).get_mpz_t(), p.get_mpz_t())) {
            r.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (!divides) continue;
      if (p < 0) r.negate_row(t);
      break;
    }
  }
  return {std::move(r.u), std::move(r.d), std::move(r.v)};
}

SequenceVerdict sequence_checks(const IntMatrix& f, const IntMatrix& g) {
  require(f.rows() == g.cols(), Errc::ShapeMismatch,
          "f has " + std::to_string(f.rows()) + " rows but g has " +
              std::to_string(g.cols()) + " columns");
  SequenceVerdict out;
  SmithForm sf = smith_normal_form(f);
  SmithForm sg = smith_normal_form(g);
  out.f_invariants = sf.invariant_factors();
  out.g_invariants = sg.invariant_factors();
  const std::size_t rank_f = out.f_invariants.size();
  const std::size_t rank_g = out.g_invariants.size();
  auto all_one = [](const std::vector<mpz_class>& v) {
    for (const auto& x : v)
      if (x != 1) return false;
    return true;
  };
  out.injective_f = rank_f == f.cols();
  out.composite_zero = (g * f).is_zero();
  // ker g is saturated of rank m - rank g; im f equals it iff the ranks
  // agree and im f is saturated too.
  out.exact_middle = out.composite_zero && rank_f + rank_g == f.rows() &&
                     all_one(out.f_invariants);
  out.surjective_g = rank_g == g.rows() && all_one(out.g_invariants);
  out.splits = all_one(out.f_invariants);
  return out;
}

}  // namespace compalg
