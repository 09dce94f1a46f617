#pragma once

#include <cstddef>
#include <vector>

#include "types.hpp"

namespace glued {

// Dense arbitrary-precision integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  std::vector<Vec> row_list() const;
  IntMatrix transposed() const;
  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  // row i += c * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_col(std::size_t i);
  // col i += c * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& c);

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
Vec row_times_matrix(const Vec& x, const IntMatrix& m);

// Row-style Hermite normal form: h = u * a with u unimodular, pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows last.
struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};
HermiteResult hermite_normal_form(const IntMatrix& a);

// Smith normal form: d = p * a * q with p, q unimodular, d diagonal with
// nonnegative entries, each dividing the next; zero part trails.
struct SmithDecomposition {
  IntMatrix p;
  IntMatrix d;
  IntMatrix q;
  std::vector<Int> invariant_factors;  // the nonzero diagonal entries, in order
};
SmithDecomposition smith_normal_form(const IntMatrix& a);

Int determinant(const IntMatrix& a);  // square matrices only (Bareiss)
// Inverse of a unimodular matrix (throws Internal if not unimodular).
IntMatrix inverse_unimodular(const IntMatrix& q);

}  // namespace glued
