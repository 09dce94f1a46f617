#include "gluing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "error.hpp"

namespace glued {

namespace {

std::string element_string(const GroupElement& g) {
  std::ostringstream out;
  out << '(';
  if (!g.torsion.empty()) out << vec_to_string(g.torsion) << " | ";
  out << vec_to_string(g.free_part) << ')';
  return out.str();
}

// Scatters a sub-semigroup exponent vector back into the full index set.
Vec embed_exponents(std::size_t full_len, const std::vector<std::size_t>& indices,
                    const Vec& sub) {
  Vec out(full_len, Int(0));
  for (std::size_t j = 0; j < indices.size(); ++j) out[indices[j]] = sub[j];
  return out;
}

Presentation embed_presentation(const Semigroup& s, const std::vector<std::size_t>& indices,
                                const Presentation& sub) {
  std::vector<Binomial> binomials;
  binomials.reserve(sub.binomials.size());
  const std::size_t l = s.generator_count();
  for (const Binomial& b : sub.binomials) {
    binomials.push_back(make_binomial(s, embed_exponents(l, indices, b.plus),
                                      embed_exponents(l, indices, b.minus)));
  }
  return make_presentation(s, std::move(binomials), sub.minimal);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // false if already joined
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool fail_why(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

GluingCheck not_glued(NotGluedKind kind, std::optional<GroupElement> witness,
                      std::string message) {
  GluingCheck out;
  out.reason = NotGluedReason{kind, std::move(witness), std::move(message)};
  return out;
}

}  // namespace

const char* to_string(NotGluedKind kind) {
  switch (kind) {
    case NotGluedKind::MixedOnlyComponent:
      return "mixed-only-component";
    case NotGluedKind::NoGluedDegree:
      return "no-glued-degree";
    case NotGluedKind::MixedAtGluedDegree:
      return "mixed-at-glued-degree";
    case NotGluedKind::NonUniqueGluedDegree:
      return "non-unique-glued-degree";
    case NotGluedKind::NonMultipleSharedDegree:
      return "non-multiple-shared-degree";
  }
  return "unknown";
}

GluingCheck check_gluing(const IdealAnalysis& analysis, const SplitSpec& split) {
  const Semigroup& s = analysis.s;
  // Revalidate and canonicalize the split against this generator count.
  SplitSpec sp = SplitSpec::from_left(s.generator_count(), split.left);

  struct BothSided {
    const GroupElement* degree;
    FiberSplit parts;
  };
  std::vector<BothSided> both_sided;

  for (const GroupElement& d : analysis.betti) {
    const NablaComplex& nabla = analysis.betti_complexes.at(d);
    FiberSplit parts = split_fiber(nabla.fiber, sp);
    std::vector<char> pure(nabla.fiber.members.size(), 0);
    for (std::size_t i : parts.pure_left) pure[i] = 1;
    for (std::size_t i : parts.pure_right) pure[i] = 1;
    for (const std::vector<std::size_t>& comp : nabla.components) {
      bool has_pure = std::any_of(comp.begin(), comp.end(),
                                  [&](std::size_t i) { return pure[i] != 0; });
      if (!has_pure) {
        return not_glued(NotGluedKind::MixedOnlyComponent, d,
                         "a connected component of the fiber complex at degree " +
                             element_string(d) +
                             " consists of mixed factorizations only");
      }
    }
    if (!parts.pure_left.empty() && !parts.pure_right.empty())
      both_sided.push_back({&d, std::move(parts)});
  }

  std::vector<std::size_t> candidates;  // indices into both_sided
  for (std::size_t i = 0; i < both_sided.size(); ++i)
    if (both_sided[i].parts.mixed.empty()) candidates.push_back(i);

  if (candidates.empty()) {
    if (both_sided.empty()) {
      return not_glued(NotGluedKind::NoGluedDegree, std::nullopt,
                       "no degree with a disconnected fiber complex has "
                       "factorizations on both sides of the split");
    }
    const GroupElement& w = *both_sided.front().degree;
    return not_glued(NotGluedKind::MixedAtGluedDegree, w,
                     "every shared degree also has a mixed factorization; first: " +
                         element_string(w));
  }
  if (candidates.size() > 1) {
    const GroupElement& a = *both_sided[candidates[0]].degree;
    const GroupElement& b = *both_sided[candidates[1]].degree;
    return not_glued(NotGluedKind::NonUniqueGluedDegree, b,
                     "more than one degree qualifies as the glued degree: " +
                         element_string(a) + " and " + element_string(b));
  }

  const BothSided& chosen = both_sided[candidates.front()];
  const GroupElement& d = *chosen.degree;
  const Int wd = s.weight_of(d);
  for (const BothSided& other : both_sided) {
    if (other.degree == chosen.degree) continue;
    const GroupElement& d2 = *other.degree;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.weight_of(d2).get_mpz_t(), wd.get_mpz_t());
    if (r != 0 || !(s.group().scaled(d, q) == d2)) {
      return not_glued(NotGluedKind::NonMultipleSharedDegree, d2,
                       "shared degree " + element_string(d2) +
                           " is not a natural multiple of the glued degree " +
                           element_string(d));
    }
  }

  const NablaComplex& nabla = analysis.betti_complexes.at(d);
  GluingCertificate cert;
  cert.split = sp;
  cert.glued_degree = d;
  cert.glued_binomial =
      Binomial{nabla.fiber.members[chosen.parts.pure_left.front()],
               nabla.fiber.members[chosen.parts.pure_right.front()], d};
  cert.left_presentation =
      embed_presentation(s, sp.left, minimal_presentation(subsemigroup(s, sp.left)));
  cert.right_presentation =
      embed_presentation(s, sp.right, minimal_presentation(subsemigroup(s, sp.right)));

  std::vector<Binomial> combined = cert.left_presentation.binomials;
  combined.insert(combined.end(), cert.right_presentation.binomials.begin(),
                  cert.right_presentation.binomials.end());
  combined.push_back(cert.glued_binomial);
  cert.combined = make_presentation(s, std::move(combined), true);

  GluingCheck out;
  out.certificate = std::move(cert);
  return out;
}

GluingCheck check_gluing(const Semigroup& s, const SplitSpec& split) {
  if (!redundant_generators(s).empty())
    fail(Status::NotMinimal, "the generating set is not minimal");
  return check_gluing(analyze_ideal(s), split);
}

GroupOracleResult group_oracle_unchecked(const Semigroup& s, const SplitSpec& split) {
  const std::size_t l = s.generator_count();
  SplitSpec sp = SplitSpec::from_left(l, split.left);
  const AbelianGroup& g = s.group();
  const std::size_t torsion = g.torsion_rank();

  GroupOracleResult out;
  out.intersection =
      lattice_intersection(subgroup_of(s, sp.left), subgroup_of(s, sp.right));

  const std::size_t need = torsion + 1;
  if (out.intersection.rank() != need) {
    out.message = out.intersection.rank() < need
                      ? "the intersection of the side groups is finite"
                      : "the intersection of the side groups has rank at least two";
    return out;
  }

  Vec gvec;
  if (torsion == 0) {
    gvec = out.intersection.basis().front();
  } else {
    // Coordinates of the torsion relations inside the intersection basis; the
    // quotient by them is the intersection subgroup itself.
    IntMatrix coords(torsion, need);
    std::vector<Vec> relations = g.torsion_relations();
    for (std::size_t i = 0; i < torsion; ++i) {
      std::optional<Vec> c = out.intersection.coordinates(relations[i]);
      if (!c) fail(Status::Internal, "torsion relation escaped the intersection lattice");
      for (std::size_t j = 0; j < need; ++j) coords.at(i, j) = (*c)[j];
    }
    SmithDecomposition sd = smith_normal_form(coords);
    for (const Int& f : sd.invariant_factors) {
      if (f != 1) {
        out.message = "the intersection of the side groups has torsion";
        return out;
      }
    }
    // The quotient is infinite cyclic; pull its generator back through the
    // Smith coordinate change (last row of Q^-1) into lift coordinates.
    Vec y = inverse_unimodular(sd.q).row(need - 1);
    gvec = Vec(out.intersection.ambient_dim(), Int(0));
    for (std::size_t j = 0; j < need; ++j) {
      const Vec& bj = out.intersection.basis()[j];
      for (std::size_t k = 0; k < gvec.size(); ++k) gvec[k] += y[j] * bj[k];
    }
  }

  std::vector<bool> left_allowed(l, false), right_allowed(l, false);
  for (std::size_t i : sp.left) left_allowed[i] = true;
  for (std::size_t i : sp.right) right_allowed[i] = true;
  auto in_both_sides = [&](const GroupElement& m) {
    return fiber_nonempty(s, m, &left_allowed) && fiber_nonempty(s, m, &right_allowed);
  };

  GroupElement cand = g.from_lift(gvec);
  if (in_both_sides(cand)) {
    out.d = std::move(cand);
  } else {
    GroupElement negated = g.neg(cand);
    if (in_both_sides(negated)) {
      out.d = std::move(negated);
    } else {
      out.message =
          "the intersection of the side groups is infinite cyclic, but neither "
          "generator lies in both side semigroups";
    }
  }
  return out;
}

GroupOracleResult group_oracle(const Semigroup& s, const SplitSpec& split) {
  if (!redundant_generators(s).empty())
    fail(Status::NotMinimal, "the generating set is not minimal");
  return group_oracle_unchecked(s, split);
}

std::vector<std::pair<SplitSpec, GluingCertificate>> enumerate_gluings(
    const Semigroup& s, std::size_t generator_cap) {
  const std::size_t l = s.generator_count();
  if (l > generator_cap || l >= 8 * sizeof(std::size_t))
    fail(Status::TooManyGenerators,
         "split enumeration over " + std::to_string(l) + " generators is not supported");
  if (!redundant_generators(s).empty())
    fail(Status::NotMinimal, "the generating set is not minimal");

  IdealAnalysis analysis = analyze_ideal(s);
  std::vector<std::pair<SplitSpec, GluingCertificate>> out;
  const std::size_t full = (std::size_t{1} << l) - 1;
  // Generator 0 stays on the left, so each bipartition appears exactly once.
  for (std::size_t mask = 1; mask < full; mask += 2) {
    std::vector<std::size_t> left;
    for (std::size_t i = 0; i < l; ++i)
      if ((mask >> i) & 1u) left.push_back(i);
    SplitSpec sp = SplitSpec::from_left(l, std::move(left));
    GluingCheck chk = check_gluing(analysis, sp);
    if (chk.glued()) out.emplace_back(std::move(sp), std::move(*chk.certificate));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.left < b.first.left; });
  return out;
}

bool verify_certificate(const Semigroup& s, const GluingCertificate& cert,
                        std::string* why) {
  const std::size_t l = s.generator_count();
  SplitSpec sp;
  try {
    sp = SplitSpec::from_left(l, cert.split.left);
  } catch (const Error& e) {
    return fail_why(why, std::string("invalid split: ") + e.what());
  }
  if (!(sp == cert.split)) return fail_why(why, "split is not in canonical form");

  auto pure_monomial = [&](const Vec& v, bool left_side) {
    if (v.size() != l) return false;
    bool nonzero = false;
    for (std::size_t i = 0; i < l; ++i) {
      if (v[i] < 0) return false;
      if (v[i] != 0) {
        nonzero = true;
        if (sp.is_left(i) != left_side) return false;
      }
    }
    return nonzero;
  };

  const Binomial& glue = cert.glued_binomial;
  if (!pure_monomial(glue.plus, true))
    return fail_why(why, "the glued binomial's plus side is not a pure left monomial");
  if (!pure_monomial(glue.minus, false))
    return fail_why(why, "the glued binomial's minus side is not a pure right monomial");
  if (!(s.degree(glue.plus) == cert.glued_degree) ||
      !(s.degree(glue.minus) == cert.glued_degree) ||
      !(glue.degree == cert.glued_degree))
    return fail_why(why, "the glued binomial is not homogeneous of the glued degree");

  auto binomial_ok = [&](const Binomial& b, std::string* msg) {
    if (b.plus.size() != l || b.minus.size() != l) {
      *msg = "wrong exponent length";
      return false;
    }
    for (std::size_t i = 0; i < l; ++i) {
      if (b.plus[i] < 0 || b.minus[i] < 0) {
        *msg = "negative exponent";
        return false;
      }
      if (b.plus[i] != 0 && b.minus[i] != 0) {
        *msg = "sides share support";
        return false;
      }
    }
    if (is_zero_vec(b.plus) || is_zero_vec(b.minus)) {
      *msg = "a side is the empty monomial";
      return false;
    }
    if (!(s.degree(b.plus) == b.degree) || !(s.degree(b.minus) == b.degree)) {
      *msg = "sides do not share the recorded degree";
      return false;
    }
    return true;
  };

  auto side_confined = [&](const Presentation& p, bool left_side) {
    for (const Binomial& b : p.binomials) {
      std::string msg;
      if (!binomial_ok(b, &msg)) return fail_why(why, "side presentation: " + msg);
      for (std::size_t i = 0; i < l; ++i) {
        if ((b.plus[i] != 0 || b.minus[i] != 0) && sp.is_left(i) != left_side)
          return fail_why(why, "side presentation binomial leaves its side");
      }
    }
    return true;
  };
  if (!side_confined(cert.left_presentation, true)) return false;
  if (!side_confined(cert.right_presentation, false)) return false;

  const std::vector<Binomial>& all = cert.combined.binomials;
  if (all.size() != cert.left_presentation.binomials.size() +
                        cert.right_presentation.binomials.size() + 1)
    return fail_why(why, "combined presentation has the wrong size");
  auto in_combined = [&](const Binomial& b) {
    return std::find(all.begin(), all.end(), b) != all.end();
  };
  for (const Binomial& b : cert.left_presentation.binomials)
    if (!in_combined(b)) return fail_why(why, "a left binomial is missing from the combined presentation");
  for (const Binomial& b : cert.right_presentation.binomials)
    if (!in_combined(b)) return fail_why(why, "a right binomial is missing from the combined presentation");
  if (!in_combined(glue))
    return fail_why(why, "the glued binomial is missing from the combined presentation");

  for (const Binomial& b : all) {
    std::string msg;
    if (!binomial_ok(b, &msg)) return fail_why(why, "combined presentation: " + msg);
  }

  // The difference vectors must span the kernel lattice exactly.
  std::vector<Vec> diffs;
  diffs.reserve(all.size());
  for (const Binomial& b : all) diffs.push_back(binomial_vector(b));
  if (!(Lattice::from_generators(l, diffs) == s.kernel()))
    return fail_why(why, "combined binomials do not span the kernel lattice");

  // Generation and minimality: exactly components-1 binomials per degree with
  // a disconnected complex, and they join all of its components.
  IdealAnalysis analysis = analyze_ideal(s);
  Int expected = 0;
  for (const auto& [deg, nabla] : analysis.betti_complexes)
    expected += Int(nabla.components.size()) - 1;
  if (Int(all.size()) != expected)
    return fail_why(why, "combined presentation does not have minimal size");

  for (const Binomial& b : all) {
    if (analysis.betti_complexes.find(b.degree) == analysis.betti_complexes.end())
      return fail_why(why, "a binomial sits at a degree with a connected complex");
  }
  for (const auto& [deg, nabla] : analysis.betti_complexes) {
    std::vector<std::size_t> comp_of(nabla.fiber.members.size(), 0);
    for (std::size_t c = 0; c < nabla.components.size(); ++c)
      for (std::size_t i : nabla.components[c]) comp_of[i] = c;
    UnionFind uf(nabla.components.size());
    for (const Binomial& b : all) {
      if (!(b.degree == deg)) continue;
      auto locate = [&](const Vec& v) -> std::optional<std::size_t> {
        auto it = std::find(nabla.fiber.members.begin(), nabla.fiber.members.end(), v);
        if (it == nabla.fiber.members.end()) return std::nullopt;
        return std::size_t(it - nabla.fiber.members.begin());
      };
      std::optional<std::size_t> pi = locate(b.plus), mi = locate(b.minus);
      if (!pi || !mi)
        return fail_why(why, "a binomial side is not a factorization of its degree");
      if (!uf.unite(comp_of[*pi], comp_of[*mi]))
        return fail_why(why,
                        "two binomials connect the same pair of components at degree " +
                            element_string(deg));
    }
    std::size_t root = uf.find(0);
    for (std::size_t c = 1; c < nabla.components.size(); ++c) {
      if (uf.find(c) != root)
        return fail_why(why, "binomials do not join all components at degree " +
                                 element_string(deg));
    }
  }
  return true;
}

}  // namespace glued
