#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gluing.hpp"

namespace glued {

// Gluing instructions: two reduced, minimally generated semigroups and one
// nonzero natural exponent vector over each generator list.
struct GlueRecipe {
  Semigroup t1;
  Semigroup t2;
  Vec gamma_x;
  Vec gamma_y;
};

struct GlueResult {
  Semigroup s;  // the glued semigroup, in canonical quotient coordinates
  std::vector<GroupElement> b1;  // images of the first side's generators
  std::vector<GroupElement> b2;  // images of the second side's generators
  IntMatrix matrix;              // the assembled relation matrix
  GroupElement glued_degree;     // common degree of gamma_x over b1 and gamma_y over b2
  bool glued = false;            // certified on the natural split (requires minimal)
  bool minimal = false;          // b1 and b2 together generate minimally
  bool complete_intersection = false;
  bool affine = false;           // the constructed group is free
  std::optional<GluingCertificate> certificate;
};

// Builds Z^(r+t) modulo the rows of [L1 0; 0 L2; gamma_x -gamma_y] and
// analyzes the outcome. The kernel of the result is exactly that row lattice.
GlueResult glue(const GlueRecipe& recipe);

// Product-of-coordinate-sums test: a cheap sufficient condition for the
// result to be glued along the natural split.
bool check_recipe_condition(const GlueRecipe& recipe);

// Recomputes the intersection of the two side groups with the independent
// lattice oracle and asserts it is the cyclic group on the glued degree.
// Returns that degree; throws Internal if the cross-check fails.
GroupElement group_intersection_check(const GlueResult& result);

bool is_affine(const GlueResult& result);
bool ci_flag(const GlueResult& result);

// For torsion-free inputs: true iff the trailing coordinates of the two gamma
// vectors, rewritten through the Smith right factors of the side kernels,
// are coprime — equivalently, iff the glue output is affine.
bool trailing_coords_coprime(const Semigroup& t1, const Semigroup& t2,
                             const Vec& gamma_x, const Vec& gamma_y);

// Full acceptance predicate of the affine search for one candidate pair:
// the product test, the coprimality test, and post-hoc verification that the
// glue output is affine, minimal and glued.
bool affine_search_accepts(const Semigroup& t1, const Semigroup& t2,
                           const Vec& gamma_x, const Vec& gamma_y);

struct AffineSearchOutcome {
  GlueRecipe recipe;
  GlueResult result;
  std::uint64_t examined = 0;  // candidate pairs inspected, accepted one included
};

// Deterministic search for gamma vectors making the glue output affine:
// candidates ordered by total coordinate sum, lexicographically within one
// sum, both vectors nonzero. Each enumerated pair counts against the budget;
// throws Exhausted when the budget runs out.
AffineSearchOutcome affine_gamma_search(const Semigroup& t1, const Semigroup& t2,
                                        std::uint64_t budget);

}  // namespace glued
