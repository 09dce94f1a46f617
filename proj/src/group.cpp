#include "group.hpp"

#include "error.hpp"

namespace glued {

int compare(const GroupElement& a, const GroupElement& b) {
  int c = lex_compare(a.torsion, b.torsion);
  if (c != 0) return c;
  return lex_compare(a.free_part, b.free_part);
}

AbelianGroup::AbelianGroup(std::vector<Int> torsion_orders, std::size_t free_rank)
    : orders_(std::move(torsion_orders)), free_rank_(free_rank) {
  for (const Int& d : orders_) {
    if (d < 2) fail(Status::BadInput, "torsion orders must be at least 2");
  }
}

GroupElement AbelianGroup::element(Vec torsion, Vec free_part) const {
  if (torsion.size() != orders_.size() || free_part.size() != free_rank_) {
    fail(Status::DimensionMismatch, "group element dimension");
  }
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    torsion[j] = mod_floor(torsion[j], orders_[j]);
  }
  return GroupElement{std::move(torsion), std::move(free_part)};
}

GroupElement AbelianGroup::zero() const {
  return GroupElement{Vec(orders_.size(), 0), Vec(free_rank_, 0)};
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  return element(vec_add(a.torsion, b.torsion), vec_add(a.free_part, b.free_part));
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return element(vec_sub(a.torsion, b.torsion), vec_sub(a.free_part, b.free_part));
}

GroupElement AbelianGroup::neg(const GroupElement& a) const {
  return element(vec_neg(a.torsion), vec_neg(a.free_part));
}

GroupElement AbelianGroup::scaled(const GroupElement& a, const Int& k) const {
  return element(vec_scaled(a.torsion, k), vec_scaled(a.free_part, k));
}

bool AbelianGroup::is_zero(const GroupElement& a) const {
  return is_zero_vec(a.torsion) && is_zero_vec(a.free_part);
}

Vec AbelianGroup::lift(const GroupElement& a) const {
  Vec v = a.torsion;
  v.insert(v.end(), a.free_part.begin(), a.free_part.end());
  return v;
}

GroupElement AbelianGroup::from_lift(const Vec& v) const {
  if (v.size() != lift_dim()) fail(Status::DimensionMismatch, "lift dimension");
  Vec torsion(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(orders_.size()));
  Vec free_part(v.begin() + static_cast<std::ptrdiff_t>(orders_.size()), v.end());
  return element(std::move(torsion), std::move(free_part));
}

std::vector<Vec> AbelianGroup::torsion_relations() const {
  std::vector<Vec> rels;
  rels.reserve(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    Vec r(lift_dim(), 0);
    r[j] = orders_[j];
    rels.push_back(std::move(r));
  }
  return rels;
}

QuotientGroup::QuotientGroup(std::size_t ambient_dim, const Lattice& relations)
    : n_(ambient_dim), q_(IntMatrix::identity(ambient_dim)) {
  if (relations.ambient_dim() != ambient_dim) {
    fail(Status::DimensionMismatch, "quotient relation dimension");
  }
  std::vector<Int> orders;
  if (relations.rank() > 0) {
    IntMatrix a = IntMatrix::from_rows(relations.basis(), ambient_dim);
    SmithDecomposition snf = smith_normal_form(a);
    q_ = snf.q;
    rank_ = snf.invariant_factors.size();
    for (std::size_t i = 0; i < rank_; ++i) {
      if (snf.invariant_factors[i] >= 2) {
        torsion_pos_.push_back(i);
        orders.push_back(snf.invariant_factors[i]);
      }
    }
  }
  group_ = AbelianGroup(std::move(orders), n_ - rank_);
}

GroupElement QuotientGroup::map(const Vec& x) const {
  if (x.size() != n_) fail(Status::DimensionMismatch, "quotient map dimension");
  Vec y = row_times_matrix(x, q_);
  Vec torsion;
  torsion.reserve(torsion_pos_.size());
  for (std::size_t p : torsion_pos_) torsion.push_back(y[p]);
  Vec free_part(y.begin() + static_cast<std::ptrdiff_t>(rank_), y.end());
  return group_.element(std::move(torsion), std::move(free_part));
}

}  // namespace glued
