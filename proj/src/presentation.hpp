#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fibers.hpp"
#include "semigroup.hpp"

namespace glued {

// Homogeneous binomial X^plus - X^minus: both sides have the same degree and
// disjoint supports. Presentation binomials carry the canonical sign (plus is
// graded-lex greater; the sides always tie in w-value, so lex decides).
// Gluing certificates orient by split side instead.
struct Binomial {
  Vec plus;
  Vec minus;
  GroupElement degree;
  bool operator==(const Binomial&) const = default;
};

// Strips the common monomial factor, fixes the canonical sign, recomputes the
// degree of the stripped sides. a and b must have equal semigroup degree and
// differ.
Binomial make_binomial(const Semigroup& s, const Vec& a, const Vec& b);
Vec binomial_vector(const Binomial& b);  // plus - minus, a kernel vector

// Degrees ordered by w-value, then componentwise (torsion first).
int degree_compare(const Semigroup& s, const GroupElement& a, const GroupElement& b);

struct Presentation {
  std::vector<Binomial> binomials;  // sorted canonically
  std::map<GroupElement, std::vector<std::size_t>, GroupElementLess> by_degree;
  std::vector<GroupElement> betti;  // the distinct degrees, sorted
  bool minimal = false;
};

Presentation make_presentation(const Semigroup& s, std::vector<Binomial> binomials, bool minimal);

// Binomial generating set of the semigroup ideal: kernel-basis binomials
// saturated variable by variable (Buchberger completion under a w-graded
// order with that variable cheapest, all binomials kept with the common
// factor divided out), then interreduced. Deterministic.
Presentation ideal_generators(const Semigroup& s);

std::vector<GroupElement> betti_elements(const Semigroup& s);

// Construction of a minimal presentation: per Betti degree, a star of
// C(nabla_m)-1 binomials joining the hub component (the one holding the
// graded-lex-smallest member) to every other component. tie_break_seed != 0
// permutes hub and representative choices (degree multiset is invariant).
Presentation minimal_presentation(const Semigroup& s, std::uint64_t tie_break_seed = 0);

std::vector<Binomial> indispensable_binomials(const Semigroup& s);
bool is_uniquely_generated(const Semigroup& s);
bool is_complete_intersection(const Semigroup& s);

// Everything the reports and the gluing detector need, computed once.
struct IdealAnalysis {
  Semigroup s;
  Presentation generating;
  std::vector<GroupElement> betti;
  std::map<GroupElement, NablaComplex, GroupElementLess> betti_complexes;
  Presentation minimal;
  std::vector<Binomial> indispensables;
  bool uniquely_generated = false;
  bool complete_intersection = false;
};

IdealAnalysis analyze_ideal(const Semigroup& s, std::uint64_t tie_break_seed = 0);

}  // namespace glued
