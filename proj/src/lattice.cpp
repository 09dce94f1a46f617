#include "lattice.hpp"

#include <cstddef>

#include "error.hpp"

namespace glued {

namespace {

// First nonzero column of an echelon basis row.
std::size_t pivot_col(const Vec& row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) return j;
  }
  fail(Status::Internal, "zero row in lattice basis");
}

}  // namespace

Lattice Lattice::from_generators(std::size_t ambient_dim, const std::vector<Vec>& gens) {
  Lattice lat(ambient_dim);
  if (gens.empty()) return lat;
  for (const Vec& g : gens) {
    if (g.size() != ambient_dim) fail(Status::DimensionMismatch, "lattice generator dimension");
  }
  IntMatrix m = IntMatrix::from_rows(gens, ambient_dim);
  HermiteResult h = hermite_normal_form(m);
  lat.basis_.reserve(h.rank);
  for (std::size_t i = 0; i < h.rank; ++i) lat.basis_.push_back(h.h.row(i));
  return lat;
}

std::optional<Vec> Lattice::coordinates(const Vec& v) const {
  if (v.size() != ambient_) fail(Status::DimensionMismatch, "lattice member query dimension");
  Vec rest = v;
  Vec coeffs;
  coeffs.reserve(basis_.size());
  for (const Vec& row : basis_) {
    std::size_t p = pivot_col(row);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest[p].get_mpz_t(), row[p].get_mpz_t());
    if (r != 0) return std::nullopt;
    if (q != 0) rest = vec_sub(rest, vec_scaled(row, q));
    coeffs.push_back(q);
  }
  if (!is_zero_vec(rest)) return std::nullopt;
  return coeffs;
}

bool Lattice::member(const Vec& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
  if (ambient_ != other.ambient_) fail(Status::DimensionMismatch, "lattice containment dimension");
  for (const Vec& row : other.basis_) {
    if (!member(row)) return false;
  }
  return true;
}

Lattice kernel_basis(const IntMatrix& a) {
  IntMatrix at = a.transposed();
  HermiteResult h = hermite_normal_form(at);
  std::vector<Vec> gens;
  for (std::size_t i = h.rank; i < h.u.rows(); ++i) gens.push_back(h.u.row(i));
  return Lattice::from_generators(a.cols(), gens);
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    fail(Status::DimensionMismatch, "lattice intersection dimension");
  }
  std::size_t n = a.ambient_dim();
  if (a.rank() == 0 || b.rank() == 0) return Lattice(n);
  std::vector<Vec> stacked;
  stacked.reserve(a.rank() + b.rank());
  for (const Vec& row : a.basis()) stacked.push_back(row);
  for (const Vec& row : b.basis()) stacked.push_back(vec_neg(row));
  IntMatrix m = IntMatrix::from_rows(stacked, n);
  // Left kernel of the stacked matrix: coefficient rows [x | y] with
  // x * basis(a) == y * basis(b).
  Lattice coeff = kernel_basis(m.transposed());
  IntMatrix ba = IntMatrix::from_rows(a.basis(), n);
  std::vector<Vec> gens;
  gens.reserve(coeff.rank());
  for (const Vec& k : coeff.basis()) {
    Vec x(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.rank()));
    gens.push_back(row_times_matrix(x, ba));
  }
  return Lattice::from_generators(n, gens);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    fail(Status::DimensionMismatch, "lattice sum dimension");
  }
  std::vector<Vec> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Lattice::from_generators(a.ambient_dim(), gens);
}

}  // namespace glued
