#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "presentation.hpp"

namespace glued {

// Witness that S is the gluing of the two sides of a split: the glued degree,
// one pure binomial joining the sides (plus supported on the left, minus on
// the right), and per-side minimal presentations re-embedded into the full
// exponent space. combined = left + right + glued binomial is a minimal
// presentation of S.
struct GluingCertificate {
  SplitSpec split;
  GroupElement glued_degree;
  Binomial glued_binomial;
  Presentation left_presentation;
  Presentation right_presentation;
  Presentation combined;
};

enum class NotGluedKind {
  // A component of some Betti complex has no pure monomial.
  MixedOnlyComponent,
  // No Betti degree has pure monomials on both sides.
  NoGluedDegree,
  // Every both-sided Betti degree also carries a mixed monomial.
  MixedAtGluedDegree,
  // More than one degree qualifies as glued.
  NonUniqueGluedDegree,
  // A both-sided Betti degree is not a natural multiple of the glued degree.
  NonMultipleSharedDegree,
};

const char* to_string(NotGluedKind kind);

struct NotGluedReason {
  NotGluedKind kind;
  std::optional<GroupElement> witness;
  std::string message;
};

struct GluingCheck {
  std::optional<GluingCertificate> certificate;
  std::optional<NotGluedReason> reason;
  bool glued() const { return certificate.has_value(); }
};

// Combinatorial detector over the Betti complexes. Requires S minimally
// generated (NotMinimal otherwise).
GluingCheck check_gluing(const IdealAnalysis& analysis, const SplitSpec& split);
GluingCheck check_gluing(const Semigroup& s, const SplitSpec& split);

struct GroupOracleResult {
  std::optional<GroupElement> d;
  // G(S1) ∩ G(S2) as a sublattice of the integer lift.
  Lattice intersection;
  std::string message;  // failure explanation when d is empty
};

// Independent group-theoretic test: succeeds iff the intersection of the two
// side groups is infinite cyclic with a generator lying in both side
// semigroups. Requires S minimally generated.
GroupOracleResult group_oracle(const Semigroup& s, const SplitSpec& split);
// Same computation without the minimality guard; the builder's consistency
// check uses it on deliberately non-minimal outputs.
GroupOracleResult group_oracle_unchecked(const Semigroup& s, const SplitSpec& split);

// All certified splits among the 2^(l-1)-1 bipartitions, canonically ordered
// by left index list.
std::vector<std::pair<SplitSpec, GluingCertificate>> enumerate_gluings(
    const Semigroup& s, std::size_t generator_cap = 16);

// Independent re-check of a certificate: split and support sanity, degree
// consistency, kernel-lattice equality, and the per-Betti-degree requirement
// that the certificate's binomials join all components of the complex.
bool verify_certificate(const Semigroup& s, const GluingCertificate& cert,
                        std::string* why = nullptr);

}  // namespace glued
