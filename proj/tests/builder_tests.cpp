#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "builder.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "gluing.hpp"
#include "int_matrix.hpp"
#include "presentation.hpp"
#include "types.hpp"

using glued::affine_gamma_search;
using glued::affine_search_accepts;
using glued::check_recipe_condition;
using glued::ci_flag;
using glued::Error;
using glued::GlueRecipe;
using glued::GlueResult;
using glued::glue;
using glued::GroupElement;
using glued::group_intersection_check;
using glued::Int;
using glued::is_affine;
using glued::is_complete_intersection;
using glued::Semigroup;
using glued::smith_normal_form;
using glued::Status;
using glued::trailing_coords_coprime;
using glued::Vec;
using glued::verify_certificate;
using fixtures::vec;

namespace {

std::vector<Int> invariant_factors(const GlueResult& r) {
  return smith_normal_form(r.matrix).invariant_factors;
}

Vec unit(std::size_t n, std::size_t i) {
  Vec e(n, Int(0));
  e[i] = 1;
  return e;
}

}  // namespace

TEST_CASE("torsion construction from the rank-2 and numerical inputs") {
  GlueRecipe recipe{fixtures::t1_rank2(), fixtures::t2_numeric(),
                    vec({2, 0, 2, 0}), vec({1, 2, 1})};
  GlueResult r = glue(recipe);

  CHECK(invariant_factors(r) == std::vector<Int>{1, 1, 1, 1, 4});
  CHECK(r.s.group().torsion_orders() == std::vector<Int>{Int(4)});
  CHECK(r.s.group().free_rank() == 2);
  CHECK_FALSE(r.affine);
  CHECK(r.minimal);
  CHECK(r.glued);
  REQUIRE(r.certificate.has_value());
  std::string why;
  CHECK(verify_certificate(r.s, *r.certificate, &why));

  // The glued degree is the common image of x1^2*x3^2 and y1*y2^2*y3.
  CHECK(r.glued_degree == r.s.degree(vec({2, 0, 2, 0, 0, 0, 0})));
  CHECK(r.glued_degree == r.s.degree(vec({0, 0, 0, 0, 1, 2, 1})));
  CHECK(r.certificate->glued_degree == r.glued_degree);

  // Generator images agree with the semigroup's own generator list.
  REQUIRE(r.b1.size() == 4);
  REQUIRE(r.b2.size() == 3);
  for (std::size_t i = 0; i < 7; ++i) {
    GroupElement expected = i < 4 ? r.b1[i] : r.b2[i - 4];
    CHECK(r.s.generators()[i] == expected);
    CHECK(r.s.degree(unit(7, i)) == expected);
  }

  // The second input is not a complete intersection, so the output is not.
  CHECK_FALSE(r.complete_intersection);
  CHECK(r.complete_intersection ==
        (is_complete_intersection(recipe.t1) && is_complete_intersection(recipe.t2)));

  // Independent group-theoretic cross-check.
  CHECK(group_intersection_check(r) == r.glued_degree);

  CHECK(is_affine(r) == r.affine);
  CHECK(ci_flag(r) == r.complete_intersection);

  // The coprimality predicate sees the torsion coming.
  CHECK_FALSE(trailing_coords_coprime(recipe.t1, recipe.t2, recipe.gamma_x,
                                      recipe.gamma_y));
  CHECK(check_recipe_condition(recipe));
}

TEST_CASE("affine construction with the published gamma pair") {
  GlueRecipe recipe{fixtures::t1_rank2(), fixtures::t2_numeric(),
                    vec({10, 1, 12, 0}), vec({14, 0, 6})};
  GlueResult r = glue(recipe);

  CHECK(invariant_factors(r) == std::vector<Int>{1, 1, 1, 1, 1});
  CHECK(r.s.group().torsion_rank() == 0);
  CHECK(r.s.group().free_rank() == 2);
  CHECK(r.affine);
  CHECK(r.minimal);
  CHECK(r.glued);
  CHECK(group_intersection_check(r) == r.glued_degree);

  CHECK(r.glued_degree == r.s.degree(vec({10, 1, 12, 0, 0, 0, 0})));
  CHECK(r.glued_degree == r.s.degree(vec({0, 0, 0, 0, 14, 0, 6})));

  // In coordinates on the second side's group, the glued degree is 84 times
  // the generator: away from basis choice this pins the degree to (0, 84).
  glued::Lattice g2 = subgroup_of(r.s, {4, 5, 6});
  REQUIRE(g2.rank() == 1);
  auto coords = g2.coordinates(r.s.group().lift(r.glued_degree));
  REQUIRE(coords.has_value());
  REQUIRE(coords->size() == 1);
  Int c = (*coords)[0];
  CHECK((c == 84 || c == -84));

  CHECK(trailing_coords_coprime(recipe.t1, recipe.t2, recipe.gamma_x,
                                recipe.gamma_y));
  CHECK(affine_search_accepts(recipe.t1, recipe.t2, recipe.gamma_x,
                              recipe.gamma_y));
}

TEST_CASE("gluing two numerical semigroups rescales their generators") {
  // gamma picks degree 3 on the left and 4 on the right, so the sides embed
  // scaled by 4 and 3; the image of 12 = 2*6 is redundant.
  GlueRecipe recipe{fixtures::numerical({3, 5}), fixtures::numerical({2, 7}),
                    vec({1, 0}), vec({2, 0})};
  GlueResult r = glue(recipe);

  CHECK(r.affine);
  CHECK_FALSE(r.minimal);
  CHECK_FALSE(r.glued);  // certification requires minimal generation
  CHECK(r.s.group().free_rank() == 1);

  std::multiset<long> degrees;
  for (const GroupElement& b : r.s.generators()) {
    Int v = b.free_part[0];
    degrees.insert(std::abs(v.get_si()));
  }
  CHECK(degrees == std::multiset<long>{6, 12, 20, 21});

  // The oracle still certifies the degree identification itself.
  CHECK(group_intersection_check(r) == r.glued_degree);
  CHECK(r.glued_degree == r.s.degree(vec({1, 0, 0, 0})));
  CHECK(r.glued_degree == r.s.degree(vec({0, 0, 2, 0})));
}

TEST_CASE("recipe validation") {
  Semigroup t1 = fixtures::numerical({2, 3});
  Semigroup t2 = fixtures::numerical({2, 5});

  auto expect_status = [&](const GlueRecipe& recipe, Status status) {
    try {
      glue(recipe);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.status() == status);
    }
  };

  expect_status({t1, t2, vec({1}), vec({1, 0})}, Status::DimensionMismatch);
  expect_status({t1, t2, vec({1, 0}), vec({1, 0, 0})}, Status::DimensionMismatch);
  expect_status({t1, t2, vec({0, 0}), vec({1, 0})}, Status::BadArgument);
  expect_status({t1, t2, vec({1, -1}), vec({1, 0})}, Status::BadArgument);
  expect_status({fixtures::numerical({2, 3, 5}), t2, vec({1, 0, 0}), vec({1, 0})},
                Status::NotMinimal);

  // The product condition fails exactly when both coordinate sums are 1.
  CHECK_FALSE(check_recipe_condition({t1, t2, vec({1, 0}), vec({0, 1})}));
  CHECK(check_recipe_condition({t1, t2, vec({1, 1}), vec({0, 1})}));
  CHECK(check_recipe_condition({t1, t2, vec({1, 0}), vec({2, 0})}));
}

TEST_CASE("affine search finds a verified pair within budget") {
  Semigroup t1 = fixtures::t1_rank2();
  Semigroup t2 = fixtures::t2_numeric();
  auto outcome = affine_gamma_search(t1, t2, 100000);
  CHECK(outcome.examined >= 1);
  CHECK(outcome.examined <= 100000);
  CHECK(outcome.result.affine);
  CHECK(outcome.result.minimal);
  CHECK(outcome.result.glued);
  REQUIRE(outcome.result.certificate.has_value());
  std::string why;
  CHECK(verify_certificate(outcome.result.s, *outcome.result.certificate, &why));
  // The reported recipe reproduces the reported result.
  GlueResult again = glue(outcome.recipe);
  CHECK(again.s.generators() == outcome.result.s.generators());

  // Determinism.
  auto outcome2 = affine_gamma_search(t1, t2, 100000);
  CHECK(outcome2.examined == outcome.examined);
  CHECK(outcome2.recipe.gamma_x == outcome.recipe.gamma_x);
  CHECK(outcome2.recipe.gamma_y == outcome.recipe.gamma_y);
}

TEST_CASE("affine search budget accounting") {
  Semigroup t1 = fixtures::numerical({2, 3});
  Semigroup t2 = fixtures::numerical({2, 5});

  auto expect_exhausted = [&](std::uint64_t budget) {
    try {
      affine_gamma_search(t1, t2, budget);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.status() == Status::Exhausted);
    }
  };
  expect_exhausted(0);
  // The first total-sum level holds unit pairs failing the product test, so a
  // budget of three is always exhausted.
  expect_exhausted(3);

  // Torsion inputs are rejected before any search.
  try {
    affine_gamma_search(fixtures::torsion_example(), t2, 10);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::NotAffine);
  }

  // Non-minimal inputs are rejected.
  try {
    affine_gamma_search(fixtures::numerical({2, 3, 5}), t2, 10);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::NotMinimal);
  }
}
