#include "presentation.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <utility>

#include "error.hpp"

namespace glued {

namespace {

// Binomial as an oriented exponent pair (plus the leading monomial under the
// active order), always kept with disjoint supports.
struct OrientedBinomial {
  Vec plus;
  Vec minus;
};

// w-graded order, ties by reverse-lex with variable `cheap` last. Positive
// weights make this a term order; placing a variable last in revlex makes it
// the cheapest one, which is what the per-variable saturation passes need.
class TermOrder {
 public:
  TermOrder(const Vec& weights, std::size_t cheap)
      : w_(&weights), cheap_(cheap), l_(weights.size()) {}

  // > 0 iff monomial a is greater than b.
  int compare(const Vec& a, const Vec& b) const {
    int c = cmp(dot(*w_, a), dot(*w_, b));
    if (c != 0) return c;
    // Reverse-lex scan: last position in the reading order first; the first
    // nonzero coordinate of a - b decides, negative meaning a greater.
    auto check = [&](std::size_t j) -> int {
      int s = cmp(a[j], b[j]);
      if (s == 0) return 0;
      return (s < 0) ? +1 : -1;
    };
    if (int s = check(cheap_); s != 0) return s;
    for (std::size_t j = l_; j-- > 0;) {
      if (j == cheap_) continue;
      if (int s = check(j); s != 0) return s;
    }
    return 0;
  }

 private:
  const Vec* w_;
  std::size_t cheap_;
  std::size_t l_;
};

bool divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool disjoint_supports(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

void strip_common(Vec& p, Vec& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    Int m = (p[i] <= q[i]) ? p[i] : q[i];
    if (m != 0) {
      p[i] -= m;
      q[i] -= m;
    }
  }
}

void orient(Vec& p, Vec& q, const TermOrder& ord) {
  if (ord.compare(p, q) < 0) std::swap(p, q);
}

// Full normal form of x^p - x^q against the basis; false when it vanishes.
bool normal_form(Vec& p, Vec& q, const std::vector<OrientedBinomial>& basis,
                 const TermOrder& ord) {
  for (;;) {
    if (p == q) return false;
    orient(p, q, ord);
    bool progress = false;
    for (const OrientedBinomial& g : basis) {
      if (divides(g.plus, p)) {
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += g.minus[i] - g.plus[i];
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (const OrientedBinomial& g : basis) {
      if (divides(g.plus, q)) {
        for (std::size_t i = 0; i < q.size(); ++i) q[i] += g.minus[i] - g.plus[i];
        progress = true;
        break;
      }
    }
    if (!progress) return true;
  }
}

// Buchberger completion keeping every binomial support-disjoint. Because each
// element is divided by its common monomial factor the completed set is
// automatically saturated with respect to the order's cheapest variable.
std::vector<OrientedBinomial> complete(std::vector<OrientedBinomial> input, const TermOrder& ord) {
  std::vector<OrientedBinomial> g;
  g.reserve(input.size());
  for (OrientedBinomial& b : input) {
    strip_common(b.plus, b.minus);
    if (b.plus == b.minus) continue;
    orient(b.plus, b.minus, ord);
    g.push_back(std::move(b));
  }
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) queue.emplace_back(i, j);
  }
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    if (disjoint_supports(g[i].plus, g[j].plus)) continue;  // coprime leading terms
    std::size_t l = g[i].plus.size();
    Vec p(l), q(l);
    for (std::size_t k = 0; k < l; ++k) {
      const Int& lcm = (g[i].plus[k] >= g[j].plus[k]) ? g[i].plus[k] : g[j].plus[k];
      p[k] = lcm - g[j].plus[k] + g[j].minus[k];
      q[k] = lcm - g[i].plus[k] + g[i].minus[k];
    }
    if (!normal_form(p, q, g, ord)) continue;
    strip_common(p, q);
    orient(p, q, ord);
    std::size_t idx = g.size();
    g.push_back(OrientedBinomial{std::move(p), std::move(q)});
    for (std::size_t k = 0; k < idx; ++k) queue.emplace_back(k, idx);
  }
  return g;
}

// Minimalize and tail-reduce a completed basis into the reduced Groebner
// basis of its ideal.
std::vector<OrientedBinomial> reduced_basis(std::vector<OrientedBinomial> g, const TermOrder& ord) {
  std::sort(g.begin(), g.end(), [&](const OrientedBinomial& a, const OrientedBinomial& b) {
    int c = ord.compare(a.plus, b.plus);
    if (c != 0) return c < 0;
    return ord.compare(a.minus, b.minus) < 0;
  });
  std::vector<OrientedBinomial> kept;
  for (OrientedBinomial& cur : g) {
    bool dominated = false;
    for (const OrientedBinomial& k : kept) {
      if (divides(k.plus, cur.plus)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(cur));
  }
  for (OrientedBinomial& cur : kept) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const OrientedBinomial& h : kept) {
        if (&h == &cur) continue;
        if (divides(h.plus, cur.minus)) {
          for (std::size_t i = 0; i < cur.minus.size(); ++i)
            cur.minus[i] += h.minus[i] - h.plus[i];
          progress = true;
          break;
        }
      }
    }
    if (!disjoint_supports(cur.plus, cur.minus)) {
      fail(Status::Internal, "reduced basis element not support-disjoint");
    }
  }
  return kept;
}

}  // namespace

Binomial make_binomial(const Semigroup& s, const Vec& a, const Vec& b) {
  Vec p = a, q = b;
  strip_common(p, q);
  if (p == q) fail(Status::Internal, "binomial of equal monomials");
  if (graded_lex_compare(s, p, q) < 0) std::swap(p, q);
  Binomial bin;
  bin.degree = s.degree(p);
  if (!(bin.degree == s.degree(q))) fail(Status::Internal, "binomial sides of unequal degree");
  bin.plus = std::move(p);
  bin.minus = std::move(q);
  return bin;
}

Vec binomial_vector(const Binomial& b) { return vec_sub(b.plus, b.minus); }

int degree_compare(const Semigroup& s, const GroupElement& a, const GroupElement& b) {
  int c = cmp(s.weight_of(a), s.weight_of(b));
  if (c != 0) return c;
  return compare(a, b);
}

Presentation make_presentation(const Semigroup& s, std::vector<Binomial> binomials, bool minimal) {
  std::sort(binomials.begin(), binomials.end(), [&](const Binomial& a, const Binomial& b) {
    int c = degree_compare(s, a.degree, b.degree);
    if (c != 0) return c < 0;
    c = lex_compare(a.plus, b.plus);
    if (c != 0) return c < 0;
    return lex_compare(a.minus, b.minus) < 0;
  });
  Presentation p;
  p.binomials = std::move(binomials);
  p.minimal = minimal;
  for (std::size_t i = 0; i < p.binomials.size(); ++i) {
    auto [it, fresh] = p.by_degree.try_emplace(p.binomials[i].degree);
    it->second.push_back(i);
    if (fresh) p.betti.push_back(p.binomials[i].degree);
  }
  return p;
}

Presentation ideal_generators(const Semigroup& s) {
  std::vector<OrientedBinomial> basis;
  for (const Vec& v : s.kernel().basis()) {
    Vec p(v.size()), q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] > 0) {
        p[i] = v[i];
      } else {
        q[i] = -v[i];
      }
    }
    basis.push_back(OrientedBinomial{std::move(p), std::move(q)});
  }
  std::vector<Binomial> out;
  if (!basis.empty()) {
    std::size_t l = s.generator_count();
    for (std::size_t cheap = 0; cheap < l; ++cheap) {
      basis = complete(std::move(basis), TermOrder(s.generator_weights(), cheap));
    }
    TermOrder final_order(s.generator_weights(), l - 1);
    basis = reduced_basis(std::move(basis), final_order);
    out.reserve(basis.size());
    for (const OrientedBinomial& b : basis) out.push_back(make_binomial(s, b.plus, b.minus));
  }
  return make_presentation(s, std::move(out), false);
}

IdealAnalysis analyze_ideal(const Semigroup& s, std::uint64_t tie_break_seed) {
  IdealAnalysis a{s,  Presentation{}, {}, {}, Presentation{}, {}, false, false};
  a.generating = ideal_generators(s);

  for (const GroupElement& d : a.generating.betti) {
    NablaComplex nc = build_nabla(enumerate_fiber(s, d));
    if (nc.components.size() > 1) {
      a.betti.push_back(d);
      a.betti_complexes.emplace(d, std::move(nc));
    }
  }

  std::mt19937_64 rng(tie_break_seed);
  std::vector<Binomial> minimal_bins;
  std::vector<Binomial> indispensables;
  bool uniquely = true;
  for (const GroupElement& d : a.betti) {
    const NablaComplex& nc = a.betti_complexes.at(d);
    const auto& comps = nc.components;
    std::size_t hub = 0;
    std::vector<std::size_t> reps(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) reps[c] = comps[c].front();
    if (tie_break_seed != 0) {
      hub = rng() % comps.size();
      for (std::size_t c = 0; c < comps.size(); ++c) {
        reps[c] = comps[c][rng() % comps[c].size()];
      }
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (c == hub) continue;
      minimal_bins.push_back(
          make_binomial(s, nc.fiber.members[reps[hub]], nc.fiber.members[reps[c]]));
    }
    if (nc.fiber.members.size() == 2) {
      indispensables.push_back(make_binomial(s, nc.fiber.members[0], nc.fiber.members[1]));
    } else {
      uniquely = false;
    }
  }
  a.minimal = make_presentation(s, std::move(minimal_bins), true);
  a.indispensables = std::move(indispensables);
  a.uniquely_generated = uniquely;
  a.complete_intersection = a.minimal.binomials.size() == s.kernel().rank();
  return a;
}

std::vector<GroupElement> betti_elements(const Semigroup& s) { return analyze_ideal(s).betti; }

Presentation minimal_presentation(const Semigroup& s, std::uint64_t tie_break_seed) {
  return analyze_ideal(s, tie_break_seed).minimal;
}

std::vector<Binomial> indispensable_binomials(const Semigroup& s) {
  return analyze_ideal(s).indispensables;
}

bool is_uniquely_generated(const Semigroup& s) { return analyze_ideal(s).uniquely_generated; }

bool is_complete_intersection(const Semigroup& s) {
  return analyze_ideal(s).complete_intersection;
}

}  // namespace glued
