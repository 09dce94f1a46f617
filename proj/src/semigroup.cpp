#include "semigroup.hpp"

#include <algorithm>

#include "error.hpp"
#include "int_matrix.hpp"

namespace glued {

namespace {

// One inequality sum_j a[j] * w[j] >= c over the grading unknowns.
struct RatRow {
  std::vector<Rat> a;
  Rat c;
};

Int rat_ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

}  // namespace

SplitSpec SplitSpec::from_left(std::size_t n_generators, std::vector<std::size_t> left_indices) {
  std::sort(left_indices.begin(), left_indices.end());
  left_indices.erase(std::unique(left_indices.begin(), left_indices.end()), left_indices.end());
  if (left_indices.empty()) fail(Status::BadSplit, "left side of split is empty");
  for (std::size_t i : left_indices) {
    if (i >= n_generators) fail(Status::BadSplit, "split index out of range");
  }
  SplitSpec s;
  s.left = std::move(left_indices);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n_generators; ++i) {
    if (next < s.left.size() && s.left[next] == i) {
      ++next;
    } else {
      s.right.push_back(i);
    }
  }
  if (s.right.empty()) fail(Status::BadSplit, "right side of split is empty");
  return s;
}

bool SplitSpec::is_left(std::size_t i) const {
  return std::binary_search(left.begin(), left.end(), i);
}

Semigroup::Semigroup(AbelianGroup group, std::vector<GroupElement> generators)
    : group_(std::move(group)), gens_(std::move(generators)) {
  if (gens_.empty()) fail(Status::BadInput, "semigroup needs at least one generator");
  for (const GroupElement& n : gens_) {
    if (n.torsion.size() != group_.torsion_rank() || n.free_part.size() != group_.free_rank()) {
      fail(Status::DimensionMismatch, "generator does not live in the ambient group");
    }
    if (group_.is_zero(n)) fail(Status::BadInput, "zero generator");
  }
  auto w = find_positive_grading(group_, gens_);
  if (!w) fail(Status::NotReduced, "semigroup is not reduced (no positive grading exists)");
  grading_ = std::move(*w);
  weights_.reserve(gens_.size());
  for (const GroupElement& n : gens_) weights_.push_back(dot(grading_, n.free_part));

  // ker S: project the kernel of [lifted generators | torsion relations]
  // (columns) onto the generator coordinates.
  std::size_t s = group_.torsion_rank();
  std::size_t l = gens_.size();
  IntMatrix b(group_.lift_dim(), l + s);
  for (std::size_t i = 0; i < l; ++i) {
    Vec lift = group_.lift(gens_[i]);
    for (std::size_t r = 0; r < lift.size(); ++r) b.at(r, i) = lift[r];
  }
  const std::vector<Int>& orders = group_.torsion_orders();
  for (std::size_t j = 0; j < s; ++j) b.at(j, l + j) = orders[j];
  Lattice full = kernel_basis(b);
  std::vector<Vec> projected;
  projected.reserve(full.rank());
  for (const Vec& v : full.basis()) {
    projected.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(l));
  }
  kernel_ = Lattice::from_generators(l, projected);
}

GroupElement Semigroup::degree(const Vec& alpha) const {
  if (alpha.size() != gens_.size()) fail(Status::DimensionMismatch, "exponent vector length");
  Vec t(group_.torsion_rank(), 0);
  Vec f(group_.free_rank(), 0);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    for (std::size_t j = 0; j < t.size(); ++j) t[j] += alpha[i] * gens_[i].torsion[j];
    for (std::size_t j = 0; j < f.size(); ++j) f[j] += alpha[i] * gens_[i].free_part[j];
  }
  return group_.element(std::move(t), std::move(f));
}

Int Semigroup::weight_of(const GroupElement& m) const { return dot(grading_, m.free_part); }

Int Semigroup::weight_of_exponents(const Vec& alpha) const { return dot(weights_, alpha); }

std::optional<Vec> Semigroup::find_positive_grading(const AbelianGroup& g,
                                                    const std::vector<GroupElement>& gens) {
  std::size_t f = g.free_rank();
  for (const GroupElement& n : gens) {
    if (is_zero_vec(n.free_part)) return std::nullopt;
  }
  if (gens.empty()) return Vec(f, 0);

  // Fourier-Motzkin elimination, last variable first; stages[k] holds the
  // system over variables 0..k.
  std::vector<std::vector<RatRow>> stages(f);
  std::vector<RatRow> cur;
  cur.reserve(gens.size());
  for (const GroupElement& n : gens) {
    RatRow row;
    row.a.reserve(f);
    for (const Int& x : n.free_part) row.a.emplace_back(x);
    row.c = 1;
    cur.push_back(std::move(row));
  }
  for (std::size_t k = f; k-- > 1;) {
    stages[k] = cur;
    std::vector<RatRow> next;
    std::vector<const RatRow*> pos, neg;
    for (const RatRow& row : stages[k]) {
      int s = sgn(row.a[k]);
      if (s > 0) {
        pos.push_back(&row);
      } else if (s < 0) {
        neg.push_back(&row);
      } else {
        next.push_back(row);
      }
    }
    for (const RatRow* p : pos) {
      for (const RatRow* n : neg) {
        RatRow comb;
        comb.a.resize(f);
        for (std::size_t j = 0; j < k; ++j) comb.a[j] = p->a[k] * n->a[j] - n->a[k] * p->a[j];
        comb.c = p->a[k] * n->c - n->a[k] * p->c;
        next.push_back(std::move(comb));
      }
    }
    cur = std::move(next);
  }
  stages[0] = std::move(cur);

  // Back-substitution: pick each variable inside its rational interval,
  // preferring the smallest admissible integer.
  std::vector<Rat> vals(f);
  for (std::size_t k = 0; k < f; ++k) {
    bool has_lo = false, has_up = false;
    Rat lo, up;
    for (const RatRow& row : stages[k]) {
      int s = sgn(row.a[k]);
      if (s == 0) {
        if (k == 0 && row.c > 0) return std::nullopt;
        continue;
      }
      Rat residual = row.c;
      for (std::size_t j = 0; j < k; ++j) residual -= row.a[j] * vals[j];
      Rat bound = residual / row.a[k];
      if (s > 0) {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else {
        if (!has_up || bound < up) up = bound;
        has_up = true;
      }
    }
    if (has_lo && has_up && lo > up) {
      if (k == 0) return std::nullopt;
      fail(Status::Internal, "Fourier-Motzkin back-substitution interval empty");
    }
    Rat v;
    if (has_lo) {
      Rat cand(rat_ceil(lo));
      v = (has_up && cand > up) ? lo : cand;
    } else if (has_up) {
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), up.get_num_mpz_t(), up.get_den_mpz_t());
      v = Rat(std::min(Int(0), fl));
    } else {
      v = 0;
    }
    vals[k] = v;
  }

  Int t = 1;
  for (const Rat& v : vals) {
    Int den = v.get_den();
    mpz_lcm(t.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
  }
  Vec w(f);
  for (std::size_t k = 0; k < f; ++k) {
    Rat scaled = vals[k] * t;
    w[k] = scaled.get_num();
  }
  for (const GroupElement& n : gens) {
    if (dot(w, n.free_part) < 1) fail(Status::Internal, "grading certificate violated");
  }
  return w;
}

bool Semigroup::is_reduced(const AbelianGroup& g, const std::vector<GroupElement>& gens) {
  return find_positive_grading(g, gens).has_value();
}

Semigroup subsemigroup(const Semigroup& s, const std::vector<std::size_t>& indices) {
  if (indices.empty()) fail(Status::BadArgument, "empty generator selection");
  std::vector<GroupElement> gens;
  gens.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= s.generator_count()) fail(Status::BadArgument, "generator index out of range");
    gens.push_back(s.generators()[i]);
  }
  return Semigroup(s.group(), std::move(gens));
}

Lattice subgroup_of(const Semigroup& s, const std::vector<std::size_t>& indices) {
  if (indices.empty()) fail(Status::BadArgument, "empty generator selection");
  std::vector<Vec> gens;
  gens.reserve(indices.size() + s.group().torsion_rank());
  for (std::size_t i : indices) {
    if (i >= s.generator_count()) fail(Status::BadArgument, "generator index out of range");
    gens.push_back(s.group().lift(s.generators()[i]));
  }
  for (Vec& r : s.group().torsion_relations()) gens.push_back(std::move(r));
  return Lattice::from_generators(s.group().lift_dim(), gens);
}

}  // namespace glued
