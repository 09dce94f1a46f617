#pragma once

// Shared test fixtures: concrete semigroups with independently verified
// invariants (fibers, Betti degrees, gluings) used across the test suite.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "semigroup.hpp"
#include "types.hpp"

namespace fixtures {

using glued::AbelianGroup;
using glued::GroupElement;
using glued::Int;
using glued::Semigroup;
using glued::Vec;

inline Vec vec(const std::vector<long>& xs) {
  Vec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Numerical semigroup <gens> inside Z.
inline Semigroup numerical(const std::vector<long>& gens) {
  AbelianGroup g({}, 1);
  std::vector<GroupElement> elems;
  for (long x : gens) elems.push_back(g.element({}, vec({x})));
  return Semigroup(g, std::move(elems));
}

// Semigroup inside Z^2.
inline Semigroup affine2(const std::vector<std::pair<long, long>>& gens) {
  AbelianGroup g({}, 2);
  std::vector<GroupElement> elems;
  for (const auto& [a, b] : gens) elems.push_back(g.element({}, vec({a, b})));
  return Semigroup(g, std::move(elems));
}

// Semigroup with the given torsion orders; each generator tuple lists its
// torsion coordinates first, then the free ones.
inline Semigroup with_torsion(const std::vector<long>& orders,
                              const std::vector<std::vector<long>>& gens) {
  std::vector<Int> ords;
  for (long d : orders) ords.emplace_back(d);
  const std::size_t s = orders.size();
  const std::size_t free_rank = gens.empty() ? 0 : gens.front().size() - s;
  AbelianGroup g(std::move(ords), free_rank);
  std::vector<GroupElement> elems;
  for (const auto& t : gens) {
    Vec tor;
    Vec fp;
    for (std::size_t i = 0; i < t.size(); ++i)
      (i < s ? tor : fp).emplace_back(t[i]);
    elems.push_back(g.element(std::move(tor), std::move(fp)));
  }
  return Semigroup(std::move(g), std::move(elems));
}

// Eight generators in Z^2; the x block is (13,0),(5,8),(2,11),(0,13), the
// y block is (4,4),(6,6),(7,7),(9,9). Splitting 4|4 is a gluing with glued
// degree (13,13).
inline Semigroup thoma() {
  return affine2({{13, 0}, {5, 8}, {2, 11}, {0, 13}, {4, 4}, {6, 6}, {7, 7}, {9, 9}});
}

// First glue input used by the construction examples: four generators in Z^2
// spanning the whole group (the kernel has rank 2).
inline Semigroup t1_rank2() {
  return affine2({{-7, 2}, {11, 1}, {5, 0}, {0, 1}});
}

// Second glue input: the numerical semigroup <3,5,7>.
inline Semigroup t2_numeric() { return numerical({3, 5, 7}); }

// A reduced semigroup inside Z_4 x Z^2 with seven generators; the split
// 1-4|5-7 is a gluing with glued degree (0; 0, 20).
inline Semigroup torsion_example() {
  return with_torsion({4}, {{1, -5, 35},
                            {3, 12, -55},
                            {1, 5, -25},
                            {0, 1, 0},
                            {2, 0, 3},
                            {2, 0, 5},
                            {2, 0, 7}});
}

// Test pool for the property suite: >= 25 small reduced, minimally generated
// semigroups covering the numerical, higher-rank and torsion cases.
inline std::vector<Semigroup> pool() {
  std::vector<Semigroup> out;
  // Numerical semigroups.
  out.push_back(numerical({2, 3}));
  out.push_back(numerical({2, 5}));
  out.push_back(numerical({2, 7}));
  out.push_back(numerical({3, 4}));
  out.push_back(numerical({3, 5}));
  out.push_back(numerical({3, 7}));
  out.push_back(numerical({4, 5}));
  out.push_back(numerical({4, 7}));
  out.push_back(numerical({5, 6}));
  out.push_back(numerical({3, 4, 5}));
  out.push_back(numerical({3, 5, 7}));
  out.push_back(numerical({4, 6, 9}));
  out.push_back(numerical({4, 5, 6}));
  out.push_back(numerical({4, 5, 7}));
  out.push_back(numerical({4, 6, 7}));
  out.push_back(numerical({5, 6, 7}));
  out.push_back(numerical({5, 6, 9}));
  out.push_back(numerical({6, 10, 15}));
  out.push_back(numerical({4, 6, 7, 9}));
  out.push_back(numerical({5, 6, 7, 8}));
  // Rank-2 affine semigroups.
  out.push_back(affine2({{1, 0}, {0, 1}}));
  out.push_back(affine2({{2, 0}, {0, 3}}));
  out.push_back(affine2({{1, 0}, {1, 1}, {1, 2}}));
  out.push_back(affine2({{2, 1}, {1, 2}}));
  out.push_back(affine2({{13, 0}, {5, 8}, {2, 11}, {0, 13}}));
  out.push_back(affine2({{4, 4}, {6, 6}, {7, 7}, {9, 9}}));
  out.push_back(t1_rank2());
  out.push_back(thoma());
  // Torsion cases.
  out.push_back(with_torsion({2}, {{1, 1}, {0, 1}}));
  out.push_back(with_torsion({3}, {{1, 2}, {2, 3}}));
  out.push_back(torsion_example());
  return out;
}

}  // namespace fixtures
