#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "group.hpp"
#include "lattice.hpp"
#include "types.hpp"

namespace glued {

// Bipartition of the generator index set {0..l-1}; both sides nonempty,
// stored sorted.
struct SplitSpec {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  static SplitSpec from_left(std::size_t n_generators, std::vector<std::size_t> left_indices);
  bool is_left(std::size_t i) const;
  bool operator==(const SplitSpec&) const = default;
};

// Finitely generated commutative reduced cancellative semigroup inside
// Z/d_1 x ... x Z/d_s x Z^k, given by an ordered generator list. Construction
// rejects zero generators and non-reduced inputs; the kernel lattice and a
// positive grading are computed once and cached.
class Semigroup {
 public:
  Semigroup(AbelianGroup group, std::vector<GroupElement> generators);

  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }

  GroupElement degree(const Vec& alpha) const;
  // Lattice in Z^l of integer vectors alpha with degree(alpha) == 0.
  const Lattice& kernel() const { return kernel_; }
  // Integer functional w on the free coordinates with w . free(n_i) >= 1.
  const Vec& grading() const { return grading_; }
  // Cached w-weights of the generators, each >= 1.
  const Vec& generator_weights() const { return weights_; }
  Int weight_of(const GroupElement& m) const;
  Int weight_of_exponents(const Vec& alpha) const;

  // Exact rational Fourier-Motzkin on w . free(n_i) >= 1; smallest admissible
  // back-substituted point, denominators cleared. nullopt iff infeasible or
  // some generator has zero free part.
  static std::optional<Vec> find_positive_grading(const AbelianGroup& g,
                                                  const std::vector<GroupElement>& gens);
  // Reduced (S intersect -S = {0}) iff every generator has nonzero free part
  // and a positive grading exists.
  static bool is_reduced(const AbelianGroup& g, const std::vector<GroupElement>& gens);

 private:
  AbelianGroup group_;
  std::vector<GroupElement> gens_;
  Vec grading_;
  Vec weights_;
  Lattice kernel_;
};

// The semigroup generated by the selected subset, in the same ambient group.
// Generator order follows the (sorted) index list.
Semigroup subsemigroup(const Semigroup& s, const std::vector<std::size_t>& indices);

// Group generated by the selected generators, as a sublattice of the integer
// lift Z^(s+k) (torsion coordinates first, torsion relations adjoined).
Lattice subgroup_of(const Semigroup& s, const std::vector<std::size_t>& indices);

}  // namespace glued
