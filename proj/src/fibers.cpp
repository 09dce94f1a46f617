#include "fibers.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "error.hpp"

namespace glued {

namespace {

// Depth-first search over exponent vectors: alpha_i ranges up to the weight
// budget left, torsion consistency is checked at the leaf.
struct FiberSearch {
  const Semigroup& s;
  const GroupElement& target;
  const std::vector<bool>* allowed = nullptr;
  bool stop_at_first = false;

  Vec alpha;
  Vec torsion_acc;
  Vec free_acc;
  std::vector<Vec> out;
  bool found = false;

  explicit FiberSearch(const Semigroup& s_in, const GroupElement& m)
      : s(s_in),
        target(m),
        alpha(s_in.generator_count(), 0),
        torsion_acc(s_in.group().torsion_rank(), 0),
        free_acc(s_in.group().free_rank(), 0) {}

  void run() {
    Int budget = s.weight_of(target);
    if (budget < 0) return;
    descend(0, budget);
  }

  void descend(std::size_t i, const Int& budget) {
    if (found && stop_at_first) return;
    if (i == s.generator_count()) {
      if (budget != 0) return;
      GroupElement deg = s.group().element(torsion_acc, free_acc);
      if (deg == target) {
        found = true;
        if (!stop_at_first) out.push_back(alpha);
      }
      return;
    }
    const GroupElement& n = s.generators()[i];
    const Int& w = s.generator_weights()[i];
    Int max_e = (allowed != nullptr && !(*allowed)[i]) ? Int(0) : Int(budget / w);
    Int rest = budget;
    for (Int e = 0; e <= max_e; ++e) {
      if (e != 0) {
        alpha[i] = e;
        for (std::size_t j = 0; j < torsion_acc.size(); ++j) torsion_acc[j] += n.torsion[j];
        for (std::size_t j = 0; j < free_acc.size(); ++j) free_acc[j] += n.free_part[j];
        rest -= w;
      }
      descend(i + 1, rest);
      if (found && stop_at_first) break;
    }
    if (alpha[i] != 0) {
      for (std::size_t j = 0; j < torsion_acc.size(); ++j)
        torsion_acc[j] -= alpha[i] * n.torsion[j];
      for (std::size_t j = 0; j < free_acc.size(); ++j)
        free_acc[j] -= alpha[i] * n.free_part[j];
      alpha[i] = 0;
    }
  }
};

std::vector<std::size_t> support(const Vec& v) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) idx.push_back(i);
  }
  return idx;
}

bool supports_intersect(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return true;
  }
  return false;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

NablaComplex complex_on_members(GroupElement degree, std::vector<Vec> members) {
  NablaComplex nc;
  nc.fiber.degree = std::move(degree);
  nc.fiber.members = std::move(members);
  std::size_t n = nc.fiber.members.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (supports_intersect(nc.fiber.members[i], nc.fiber.members[j])) {
        nc.edges.emplace_back(i, j);
        uf.unite(i, j);
      }
    }
  }
  // Components keyed by their smallest member; member order gives the
  // canonical component order.
  std::vector<std::size_t> root_component(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    if (root_component[r] == SIZE_MAX) {
      root_component[r] = nc.components.size();
      nc.components.emplace_back();
    }
    nc.components[root_component[r]].push_back(i);
  }
  return nc;
}

}  // namespace

int graded_lex_compare(const Semigroup& s, const Vec& a, const Vec& b) {
  Int wa = s.weight_of_exponents(a);
  Int wb = s.weight_of_exponents(b);
  int c = cmp(wa, wb);
  if (c != 0) return c;
  return lex_compare(a, b);
}

Fiber enumerate_fiber(const Semigroup& s, const GroupElement& m) {
  FiberSearch search(s, m);
  search.run();
  Fiber f;
  f.degree = m;
  f.members = std::move(search.out);
  std::sort(f.members.begin(), f.members.end(),
            [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; });
  return f;
}

bool fiber_nonempty(const Semigroup& s, const GroupElement& m, const std::vector<bool>* allowed) {
  FiberSearch search(s, m);
  search.allowed = allowed;
  search.stop_at_first = true;
  search.run();
  return search.found;
}

bool is_member(const Semigroup& s, const GroupElement& m) { return fiber_nonempty(s, m); }

std::vector<std::size_t> redundant_generators(const Semigroup& s) {
  std::vector<std::size_t> redundant;
  std::size_t l = s.generator_count();
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<bool> allowed(l, true);
    allowed[i] = false;
    if (fiber_nonempty(s, s.generators()[i], &allowed)) redundant.push_back(i);
  }
  return redundant;
}

NablaComplex build_nabla(Fiber fiber) {
  return complex_on_members(fiber.degree, std::move(fiber.members));
}

FiberSplit split_fiber(const Fiber& fiber, const SplitSpec& split) {
  FiberSplit out;
  for (std::size_t k = 0; k < fiber.members.size(); ++k) {
    std::vector<std::size_t> supp = support(fiber.members[k]);
    bool any_left = false, any_right = false;
    for (std::size_t i : supp) {
      (split.is_left(i) ? any_left : any_right) = true;
    }
    if (!any_right) {
      out.pure_left.push_back(k);  // includes the zero factorization
    } else if (!any_left) {
      out.pure_right.push_back(k);
    } else {
      out.mixed.push_back(k);
    }
  }
  return out;
}

NablaComplex nabla_restricted(const Fiber& fiber, const SplitSpec& split, Side side) {
  FiberSplit cls = split_fiber(fiber, split);
  const std::vector<std::size_t>& keep = (side == Side::Left) ? cls.pure_left : cls.pure_right;
  std::vector<Vec> members;
  members.reserve(keep.size());
  for (std::size_t k : keep) members.push_back(fiber.members[k]);
  return complex_on_members(fiber.degree, std::move(members));
}

}  // namespace glued
