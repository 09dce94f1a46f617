#include "int_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "error.hpp"

namespace glued {

namespace {
int abs_cmp(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}
}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(Status::DimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec IntMatrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Vec> IntMatrix::row_list() const {
  std::vector<Vec> rows;
  rows.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rows.push_back(row(i));
  return rows;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
  if (c == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, i) += c * at(r, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "[" << vec_to_string(row(i)) << "]";
    if (i + 1 < rows_) out << "\n";
  }
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(Status::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Vec row_times_matrix(const Vec& x, const IntMatrix& m) {
  if (x.size() != m.rows()) fail(Status::DimensionMismatch, "vector-matrix shape mismatch");
  Vec y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m.at(i, j);
  }
  return y;
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
  HermiteResult res;
  res.h = a;
  res.u = IntMatrix::identity(a.rows());
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  const std::size_t m = a.rows(), n = a.cols();

  std::size_t r = 0;  // next pivot row
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclidean elimination in column c on rows r..m-1.
    while (true) {
      // Find row with smallest nonzero |h[i][c]|, i >= r.
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == m || abs_cmp(h.at(i, c), h.at(best, c)) < 0) best = i;
      }
      if (best == m) break;  // column zero below r
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h.at(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h.at(r, c) == 0) continue;  // no pivot in this column
    if (h.at(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
      if (q != 0) {
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
      }
    }
    ++r;
  }
  res.rank = r;
  return res;
}

namespace {

// Position of entry with smallest nonzero absolute value in the trailing
// submatrix of m starting at (t, t); returns false if that block is zero.
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m.at(i, j) == 0) continue;
      if (!found || abs_cmp(m.at(i, j), m.at(pi, pj)) < 0) {
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0)
    fail(Status::BadArgument, "smith_normal_form requires a nonempty matrix");
  SmithDecomposition res;
  res.d = a;
  res.p = IntMatrix::identity(a.rows());
  res.q = IntMatrix::identity(a.cols());
  IntMatrix& d = res.d;
  IntMatrix& p = res.p;
  IntMatrix& q = res.q;
  const std::size_t m = a.rows(), n = a.cols();

  std::size_t t = 0;
  while (t < m && t < n) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    p.swap_rows(t, pi);
    d.swap_cols(t, pj);
    q.swap_cols(t, pj);

    // Clear row t and column t; repeat (the pivot shrinks each round).
    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        Int quot;
        mpz_fdiv_q(quot.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -quot);
        p.add_row_multiple(i, t, -quot);
        if (d.at(i, t) != 0) {
          d.swap_rows(t, i);
          p.swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        Int quot;
        mpz_fdiv_q(quot.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
        d.add_col_multiple(j, t, -quot);
        q.add_col_multiple(j, t, -quot);
        if (d.at(t, j) != 0) {
          d.swap_cols(t, j);
          q.swap_cols(t, j);
          dirty = true;
        }
      }
      if (!dirty) {
        bool row_clear = true, col_clear = true;
        for (std::size_t i = t + 1; i < m; ++i)
          if (d.at(i, t) != 0) col_clear = false;
        for (std::size_t j = t + 1; j < n; ++j)
          if (d.at(t, j) != 0) row_clear = false;
        if (row_clear && col_clear) break;
      }
    }

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      p.negate_row(t);
    }

    // Divisibility fix: pivot must divide every trailing entry.
    bool redo = false;
    for (std::size_t i = t + 1; i < m && !redo; ++i)
      for (std::size_t j = t + 1; j < n && !redo; ++j) {
        if (d.at(i, j) % d.at(t, t) != 0) {
          d.add_row_multiple(t, i, 1);
          p.add_row_multiple(t, i, 1);
          redo = true;
        }
      }
    if (!redo) ++t;
  }

  for (std::size_t i = 0; i < std::min(m, n); ++i)
    if (d.at(i, i) != 0) res.invariant_factors.push_back(d.at(i, i));
  return res;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(Status::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& q) {
  if (q.rows() != q.cols()) fail(Status::DimensionMismatch, "inverse of non-square matrix");
  HermiteResult hr = hermite_normal_form(q);
  if (!(hr.h == IntMatrix::identity(q.rows())))
    fail(Status::Internal, "matrix is not unimodular");
  return hr.u;  // u * q == identity
}

}  // namespace glued
