#pragma once

#include <optional>
#include <vector>

#include "int_matrix.hpp"
#include "types.hpp"

namespace glued {

// Sublattice of Z^n, stored as its row-style Hermite basis (canonical: equal
// lattices compare equal). Rank 0 is the zero lattice.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  static Lattice from_generators(std::size_t ambient_dim, const std::vector<Vec>& gens);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool member(const Vec& v) const;
  // Coefficients x with sum x[i] * basis[i] == v, if v is a member.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains(const Lattice& other) const;

  bool operator==(const Lattice& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
};

// Right kernel of a: the lattice { v : a * v == 0 } in Z^cols(a).
Lattice kernel_basis(const IntMatrix& a);

Lattice lattice_intersection(const Lattice& a, const Lattice& b);
Lattice lattice_sum(const Lattice& a, const Lattice& b);

}  // namespace glued
