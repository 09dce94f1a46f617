#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "semigroup.hpp"

namespace glued {

// All factorizations of one degree, i.e. the exponent vectors alpha with
// degree(alpha) == degree. Members are sorted ascending in graded-lex order;
// within a fiber every member has the same w-value, so this is plain
// lexicographic order.
struct Fiber {
  GroupElement degree;
  std::vector<Vec> members;
};

// 1-skeleton of the gcd complex of a fiber: an edge joins two members whose
// supports intersect. Faces beyond edges never matter for connectivity, so
// only the graph is materialized. Components are sorted by smallest member
// index; vertices within a component are sorted.
struct NablaComplex {
  Fiber fiber;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> components;
};

enum class Side { Left, Right };

// Indices into fiber.members, preserving member order. A factorization is
// pure-left when its support lies inside the split's left side (the zero
// factorization counts as pure-left), pure-right symmetrically, mixed
// otherwise.
struct FiberSplit {
  std::vector<std::size_t> pure_left;
  std::vector<std::size_t> pure_right;
  std::vector<std::size_t> mixed;
};

// Graded-lex: w-value first, then lexicographic on exponents.
int graded_lex_compare(const Semigroup& s, const Vec& a, const Vec& b);

Fiber enumerate_fiber(const Semigroup& s, const GroupElement& m);
// Existence only (early exit). When `allowed` is given, exponents outside it
// are forced to zero.
bool fiber_nonempty(const Semigroup& s, const GroupElement& m,
                    const std::vector<bool>* allowed = nullptr);
bool is_member(const Semigroup& s, const GroupElement& m);
// Indices i with n_i in the semigroup generated by the other generators;
// empty iff the generating set is minimal.
std::vector<std::size_t> redundant_generators(const Semigroup& s);

NablaComplex build_nabla(Fiber fiber);
FiberSplit split_fiber(const Fiber& fiber, const SplitSpec& split);
// The complex on the chosen side's pure monomials only.
NablaComplex nabla_restricted(const Fiber& fiber, const SplitSpec& split, Side side);

}  // namespace glued
