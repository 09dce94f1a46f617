#include "builder.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "error.hpp"

namespace glued {

namespace {

void validate_gamma(const Vec& gamma, std::size_t expect, const char* name) {
  if (gamma.size() != expect)
    fail(Status::DimensionMismatch,
         std::string(name) + " must have one entry per generator of its side");
  for (const Int& v : gamma)
    if (v < 0) fail(Status::BadArgument, std::string(name) + " must be nonnegative");
  if (is_zero_vec(gamma))
    fail(Status::BadArgument, std::string(name) + " must be nonzero");
}

void require_minimal(const Semigroup& t, const char* name) {
  if (!redundant_generators(t).empty())
    fail(Status::NotMinimal, std::string(name) + " is not minimally generated");
}

void require_affine_input(const Semigroup& t, const char* name) {
  if (t.group().torsion_rank() != 0)
    fail(Status::NotAffine, std::string(name) + " lives in a group with torsion");
}

// Right Smith factor of the side's kernel basis plus the kernel rank; the
// trailing coordinates of gamma * q decide affineness of the glue output.
struct SideChange {
  IntMatrix q;
  std::size_t rank = 0;
};

SideChange side_change(const Semigroup& t) {
  const std::size_t n = t.generator_count();
  const std::vector<Vec>& basis = t.kernel().basis();
  if (basis.empty()) return {IntMatrix::identity(n), 0};
  SmithDecomposition sd = smith_normal_form(IntMatrix::from_rows(basis, n));
  return {std::move(sd.q), basis.size()};
}

Vec trailing_coords(const SideChange& c1, const SideChange& c2, const Vec& gamma_x,
                    const Vec& gamma_y) {
  Vec gx = row_times_matrix(gamma_x, c1.q);
  Vec gy = row_times_matrix(gamma_y, c2.q);  // overall sign is irrelevant to the gcd
  Vec tau;
  for (std::size_t j = c1.rank; j < gx.size(); ++j) tau.push_back(gx[j]);
  for (std::size_t j = c2.rank; j < gy.size(); ++j) tau.push_back(gy[j]);
  return tau;
}

bool coprime_list(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return true;
  }
  return g == 1;
}

Int sum_of(const Vec& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

bool product_condition(const Vec& gamma_x, const Vec& gamma_y) {
  return sum_of(gamma_x) * sum_of(gamma_y) > 1;
}

}  // namespace

GlueResult glue(const GlueRecipe& recipe) {
  const std::size_t r = recipe.t1.generator_count();
  const std::size_t t = recipe.t2.generator_count();
  validate_gamma(recipe.gamma_x, r, "gamma_x");
  validate_gamma(recipe.gamma_y, t, "gamma_y");
  require_minimal(recipe.t1, "the first semigroup");
  require_minimal(recipe.t2, "the second semigroup");

  const std::vector<Vec>& l1 = recipe.t1.kernel().basis();
  const std::vector<Vec>& l2 = recipe.t2.kernel().basis();
  IntMatrix a(l1.size() + l2.size() + 1, r + t);
  for (std::size_t i = 0; i < l1.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) a.at(i, j) = l1[i][j];
  for (std::size_t i = 0; i < l2.size(); ++i)
    for (std::size_t j = 0; j < t; ++j) a.at(l1.size() + i, r + j) = l2[i][j];
  const std::size_t glue_row = l1.size() + l2.size();
  for (std::size_t j = 0; j < r; ++j) a.at(glue_row, j) = recipe.gamma_x[j];
  for (std::size_t j = 0; j < t; ++j) a.at(glue_row, r + j) = -recipe.gamma_y[j];

  Lattice relations = Lattice::from_generators(r + t, a.row_list());
  QuotientGroup quotient(r + t, relations);
  std::vector<GroupElement> gens;
  gens.reserve(r + t);
  for (std::size_t i = 0; i < r + t; ++i) {
    Vec e(r + t, Int(0));
    e[i] = 1;
    gens.push_back(quotient.map(e));
  }

  std::optional<Semigroup> s;
  try {
    s.emplace(quotient.group(), gens);
  } catch (const Error& e) {
    fail(Status::Internal,
         std::string("the glued semigroup failed validation: ") + e.what());
  }
  if (!(s->kernel() == relations))
    fail(Status::Internal, "kernel of the glued semigroup differs from the row lattice");
  if (relations.rank() != l1.size() + l2.size() + 1)
    fail(Status::Internal, "the glue matrix lost rank");

  Vec ex(r + t, Int(0)), ey(r + t, Int(0));
  for (std::size_t j = 0; j < r; ++j) ex[j] = recipe.gamma_x[j];
  for (std::size_t j = 0; j < t; ++j) ey[r + j] = recipe.gamma_y[j];
  GroupElement d = s->degree(ex);
  if (!(d == s->degree(ey)))
    fail(Status::Internal, "the two sides of the glue row disagree in degree");

  GlueResult out{std::move(*s),
                 std::vector<GroupElement>(gens.begin(), gens.begin() + r),
                 std::vector<GroupElement>(gens.begin() + r, gens.end()),
                 std::move(a),
                 std::move(d),
                 false,
                 false,
                 false,
                 false,
                 std::nullopt};
  out.affine = out.s.group().torsion_rank() == 0;
  out.minimal = redundant_generators(out.s).empty();
  IdealAnalysis analysis = analyze_ideal(out.s);
  out.complete_intersection = analysis.complete_intersection;
  if (out.minimal) {
    std::vector<std::size_t> left(r);
    std::iota(left.begin(), left.end(), std::size_t{0});
    GluingCheck chk = check_gluing(analysis, SplitSpec::from_left(r + t, left));
    out.glued = chk.glued();
    out.certificate = std::move(chk.certificate);
  }
  return out;
}

bool check_recipe_condition(const GlueRecipe& recipe) {
  return product_condition(recipe.gamma_x, recipe.gamma_y);
}

GroupElement group_intersection_check(const GlueResult& result) {
  const std::size_t r = result.b1.size();
  const std::size_t n = r + result.b2.size();
  std::vector<std::size_t> left(r);
  std::iota(left.begin(), left.end(), std::size_t{0});
  GroupOracleResult oracle = group_oracle_unchecked(result.s, SplitSpec::from_left(n, left));
  if (!oracle.d)
    fail(Status::Internal,
         "side-group intersection of a glue output is not cyclic: " + oracle.message);

  const AbelianGroup& g = result.s.group();
  std::vector<Vec> gens = g.torsion_relations();
  gens.push_back(g.lift(result.glued_degree));
  if (!(Lattice::from_generators(g.lift_dim(), gens) == oracle.intersection))
    fail(Status::Internal,
         "side-group intersection differs from the cyclic group on the glued degree");
  if (!(*oracle.d == result.glued_degree))
    fail(Status::Internal, "oracle generator differs from the glued degree");
  return *oracle.d;
}

bool is_affine(const GlueResult& result) {
  return result.s.group().torsion_rank() == 0;
}

bool ci_flag(const GlueResult& result) { return result.complete_intersection; }

bool trailing_coords_coprime(const Semigroup& t1, const Semigroup& t2,
                             const Vec& gamma_x, const Vec& gamma_y) {
  require_affine_input(t1, "the first semigroup");
  require_affine_input(t2, "the second semigroup");
  validate_gamma(gamma_x, t1.generator_count(), "gamma_x");
  validate_gamma(gamma_y, t2.generator_count(), "gamma_y");
  return coprime_list(trailing_coords(side_change(t1), side_change(t2), gamma_x, gamma_y));
}

bool affine_search_accepts(const Semigroup& t1, const Semigroup& t2,
                           const Vec& gamma_x, const Vec& gamma_y) {
  if (!product_condition(gamma_x, gamma_y)) return false;
  if (!trailing_coords_coprime(t1, t2, gamma_x, gamma_y)) return false;
  GlueResult result = glue(GlueRecipe{t1, t2, gamma_x, gamma_y});
  return result.affine && result.minimal && result.glued;
}

namespace {

struct AffineSearch {
  const Semigroup& t1;
  const Semigroup& t2;
  SideChange c1;
  SideChange c2;
  std::uint64_t budget = 0;
  std::uint64_t examined = 0;
  std::optional<AffineSearchOutcome> hit;

  bool consider(const Vec& w) {
    const std::size_t r = t1.generator_count();
    Vec gx(w.begin(), w.begin() + r);
    Vec gy(w.begin() + r, w.end());
    if (is_zero_vec(gx) || is_zero_vec(gy)) return false;
    if (examined == budget)
      fail(Status::Exhausted, "no affine gluing found within " +
                                  std::to_string(examined) + " candidate pairs");
    ++examined;
    if (!product_condition(gx, gy)) return false;
    if (!coprime_list(trailing_coords(c1, c2, gx, gy))) return false;
    GlueResult result = glue(GlueRecipe{t1, t2, gx, gy});
    if (!(result.affine && result.minimal && result.glued)) return false;
    hit = AffineSearchOutcome{GlueRecipe{t1, t2, std::move(gx), std::move(gy)},
                              std::move(result), examined};
    return true;
  }

  // Compositions of `remaining` over positions pos.., ascending lexicographic.
  bool enumerate(std::size_t pos, const Int& remaining, Vec& w) {
    if (pos + 1 == w.size()) {
      w[pos] = remaining;
      return consider(w);
    }
    for (Int v = 0; v <= remaining; ++v) {
      w[pos] = v;
      if (enumerate(pos + 1, remaining - v, w)) return true;
    }
    return false;
  }
};

}  // namespace

AffineSearchOutcome affine_gamma_search(const Semigroup& t1, const Semigroup& t2,
                                        std::uint64_t budget) {
  require_affine_input(t1, "the first semigroup");
  require_affine_input(t2, "the second semigroup");
  require_minimal(t1, "the first semigroup");
  require_minimal(t2, "the second semigroup");

  AffineSearch search{t1, t2, side_change(t1), side_change(t2), budget, 0, std::nullopt};
  Vec w(t1.generator_count() + t2.generator_count(), Int(0));
  for (Int total = 2;; ++total) {
    if (search.enumerate(0, total, w)) return std::move(*search.hit);
  }
}

}  // namespace glued
