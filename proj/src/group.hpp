#pragma once

#include <cstddef>
#include <vector>

#include "int_matrix.hpp"
#include "lattice.hpp"
#include "types.hpp"

namespace glued {

// Element of Z/d_1 x ... x Z/d_s x Z^f. Torsion residues are kept canonical
// in [0, d_j).
struct GroupElement {
  Vec torsion;
  Vec free_part;
  bool operator==(const GroupElement&) const = default;
};

// Total order: lexicographic on torsion residues, then on free coordinates.
int compare(const GroupElement& a, const GroupElement& b);

struct GroupElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    return compare(a, b) < 0;
  }
};

class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(std::vector<Int> torsion_orders, std::size_t free_rank);

  std::size_t torsion_rank() const { return orders_.size(); }
  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion_orders() const { return orders_; }
  bool operator==(const AbelianGroup&) const = default;

  GroupElement element(Vec torsion, Vec free_part) const;
  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scaled(const GroupElement& a, const Int& k) const;
  bool is_zero(const GroupElement& a) const;

  // Integer lift into Z^(s+f), torsion coordinates first. Subgroups of the
  // group correspond to sublattices of the lift containing every d_j * e_j.
  std::size_t lift_dim() const { return orders_.size() + free_rank_; }
  Vec lift(const GroupElement& a) const;
  GroupElement from_lift(const Vec& v) const;
  std::vector<Vec> torsion_relations() const;

 private:
  std::vector<Int> orders_;
  std::size_t free_rank_ = 0;
};

// Z^n / L presented through a Smith decomposition of a basis of L. Ambient
// coordinates map onto torsion residues (invariant factors >= 2) followed by
// free coordinates.
class QuotientGroup {
 public:
  QuotientGroup(std::size_t ambient_dim, const Lattice& relations);

  const AbelianGroup& group() const { return group_; }
  GroupElement map(const Vec& x) const;

 private:
  std::size_t n_ = 0;
  IntMatrix q_;
  std::size_t rank_ = 0;
  std::vector<std::size_t> torsion_pos_;
  AbelianGroup group_;
};

}  // namespace glued
