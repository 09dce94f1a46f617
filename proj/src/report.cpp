#include "report.hpp"

#include <sstream>

#include "error.hpp"

namespace glued {

namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_presentation(std::ostringstream& out, const Presentation& p,
                        const std::vector<std::string>& labels) {
  for (const Binomial& b : p.binomials)
    out << "  " << binomial_string(b, labels) << "  [degree " << element_string(b.degree)
        << "]\n";
}

}  // namespace

std::vector<std::string> variable_labels(std::size_t l) {
  std::vector<std::string> out;
  out.reserve(l);
  for (std::size_t i = 0; i < l; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

std::vector<std::string> variable_labels(const SplitSpec& split, std::size_t l) {
  std::vector<std::string> out(l);
  for (std::size_t j = 0; j < split.left.size(); ++j)
    out[split.left[j]] = "x" + std::to_string(j + 1);
  for (std::size_t j = 0; j < split.right.size(); ++j)
    out[split.right[j]] = "y" + std::to_string(j + 1);
  return out;
}

std::string monomial_string(const Vec& exponents, const std::vector<std::string>& labels) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << labels[i];
    if (exponents[i] != 1) out << '^' << exponents[i].get_str();
  }
  if (first) out << '1';
  return out.str();
}

std::string binomial_string(const Binomial& b, const std::vector<std::string>& labels) {
  return monomial_string(b.plus, labels) + " - " + monomial_string(b.minus, labels);
}

std::string element_string(const GroupElement& g) {
  std::ostringstream out;
  out << '(';
  if (!g.torsion.empty()) out << vec_to_string(g.torsion) << "; ";
  out << vec_to_string(g.free_part) << ')';
  return out.str();
}

std::string split_string(const SplitSpec& split) {
  std::ostringstream out;
  for (std::size_t j = 0; j < split.left.size(); ++j) {
    if (j) out << ',';
    out << split.left[j] + 1;
  }
  out << '|';
  for (std::size_t j = 0; j < split.right.size(); ++j) {
    if (j) out << ',';
    out << split.right[j] + 1;
  }
  return out.str();
}

std::string betti_report(const IdealAnalysis& a) {
  std::ostringstream out;
  out << "betti degrees: " << a.betti.size() << "\n";
  for (const GroupElement& d : a.betti) {
    const NablaComplex& nc = a.betti_complexes.at(d);
    out << "  " << element_string(d) << ": fiber size " << nc.fiber.members.size()
        << ", components " << nc.components.size() << "\n";
  }
  return out.str();
}

std::string presentation_report(const IdealAnalysis& a) {
  std::ostringstream out;
  out << "minimal presentation (" << a.minimal.binomials.size() << " binomials):\n";
  print_presentation(out, a.minimal, variable_labels(a.s.generator_count()));
  return out.str();
}

std::string indispensable_report(const IdealAnalysis& a) {
  std::ostringstream out;
  out << "indispensable binomials (" << a.indispensables.size() << "):\n";
  std::vector<std::string> labels = variable_labels(a.s.generator_count());
  for (const Binomial& b : a.indispensables)
    out << "  " << binomial_string(b, labels) << "  [degree " << element_string(b.degree)
        << "]\n";
  return out.str();
}

std::string analyze_report(const IdealAnalysis& a) {
  std::ostringstream out;
  const Semigroup& s = a.s;
  out << "generators: " << s.generator_count() << "\n";
  for (std::size_t i = 0; i < s.generator_count(); ++i)
    out << "  n" << i + 1 << " = " << element_string(s.generators()[i]) << "\n";
  out << "reduced: yes\n";
  std::vector<std::size_t> redundant = redundant_generators(s);
  if (redundant.empty()) {
    out << "minimal: yes\n";
  } else {
    out << "minimal: no (redundant:";
    for (std::size_t i : redundant) out << " n" << i + 1;
    out << ")\n";
  }
  out << "grading: (" << vec_to_string(s.grading()) << ")\n";
  out << "kernel rank: " << s.kernel().rank() << "\n";
  out << betti_report(a);
  out << presentation_report(a);
  out << indispensable_report(a);
  out << "uniquely generated: " << yesno(a.uniquely_generated) << "\n";
  out << "complete intersection: " << yesno(a.complete_intersection) << "\n";
  return out.str();
}

std::string gluing_report(const Semigroup& s, const SplitSpec& split,
                          const GluingCheck& check) {
  std::ostringstream out;
  std::vector<std::string> labels = variable_labels(split, s.generator_count());
  if (check.glued()) {
    const GluingCertificate& cert = *check.certificate;
    out << "GLUED, d=" << element_string(cert.glued_degree) << "\n";
    out << "split: " << split_string(cert.split) << "\n";
    out << "glued binomial: " << binomial_string(cert.glued_binomial, labels) << "\n";
    out << "left presentation (" << cert.left_presentation.binomials.size()
        << " binomials):\n";
    print_presentation(out, cert.left_presentation, labels);
    out << "right presentation (" << cert.right_presentation.binomials.size()
        << " binomials):\n";
    print_presentation(out, cert.right_presentation, labels);
    out << "combined minimal presentation (" << cert.combined.binomials.size()
        << " binomials):\n";
    print_presentation(out, cert.combined, labels);
  } else {
    const NotGluedReason& reason = *check.reason;
    out << "NOT GLUED, reason: " << to_string(reason.kind) << "\n";
    out << "split: " << split_string(split) << "\n";
    out << reason.message << "\n";
    if (reason.witness)
      out << "witness degree: " << element_string(*reason.witness) << "\n";
  }
  return out.str();
}

std::string gluings_report(
    const std::vector<std::pair<SplitSpec, GluingCertificate>>& found) {
  if (found.empty()) return "NO GLUING SPLITS\n";
  std::ostringstream out;
  out << "gluing splits: " << found.size() << "\n";
  for (const auto& [split, cert] : found)
    out << "GLUED split " << split_string(split)
        << ", d=" << element_string(cert.glued_degree) << "\n";
  return out.str();
}

std::string glue_report(const GlueResult& result) {
  std::ostringstream out;
  out << "# glue verification\n";
  out << "# glued degree: " << element_string(result.glued_degree) << "\n";
  SmithDecomposition sd = smith_normal_form(result.matrix);
  out << "# invariant factors:";
  for (const Int& f : sd.invariant_factors) out << ' ' << f.get_str();
  out << "\n";
  out << "# affine: " << yesno(result.affine) << "\n";
  out << "# minimal: " << yesno(result.minimal) << "\n";
  out << "# glued: " << yesno(result.glued) << "\n";
  out << "# complete intersection: " << yesno(result.complete_intersection) << "\n";
  return out.str();
}

std::string dot_export(const NablaComplex& nabla, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "graph fiber {\n";
  out << "  label=\"degree " << element_string(nabla.fiber.degree) << "\";\n";
  out << "  node [shape=box];\n";
  for (std::size_t c = 0; c < nabla.components.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=\"component " << c + 1 << "\";\n";
    for (std::size_t i : nabla.components[c])
      out << "    v" << i << " [label=\"" << monomial_string(nabla.fiber.members[i], labels)
          << "\"];\n";
    out << "  }\n";
  }
  for (const auto& [i, j] : nabla.edges) out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string fiber_text_report(const NablaComplex& nabla,
                              const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "degree: " << element_string(nabla.fiber.degree) << "\n";
  out << "members: " << nabla.fiber.members.size() << "\n";
  for (std::size_t i = 0; i < nabla.fiber.members.size(); ++i)
    out << "  v" << i << " = " << monomial_string(nabla.fiber.members[i], labels) << "\n";
  out << "edges: " << nabla.edges.size() << "\n";
  for (const auto& [i, j] : nabla.edges) out << "  v" << i << " -- v" << j << "\n";
  out << "components: " << nabla.components.size() << "\n";
  for (std::size_t c = 0; c < nabla.components.size(); ++c) {
    out << "  component " << c + 1 << ":";
    for (std::size_t i : nabla.components[c]) out << " v" << i;
    out << "\n";
  }
  return out.str();
}

}  // namespace glued
