#pragma once

#include <string>
#include <utility>
#include <vector>

#include "builder.hpp"
#include "format.hpp"

namespace glued {

// x1..xl, or x1..xr / y1..yt ordered by side for split-aware output.
std::vector<std::string> variable_labels(std::size_t l);
std::vector<std::string> variable_labels(const SplitSpec& split, std::size_t l);

std::string monomial_string(const Vec& exponents, const std::vector<std::string>& labels);
std::string binomial_string(const Binomial& b, const std::vector<std::string>& labels);
std::string element_string(const GroupElement& g);
std::string split_string(const SplitSpec& split);  // "1,2|3,4" (1-based)

std::string analyze_report(const IdealAnalysis& a);
std::string betti_report(const IdealAnalysis& a);
std::string presentation_report(const IdealAnalysis& a);
std::string indispensable_report(const IdealAnalysis& a);
std::string gluing_report(const Semigroup& s, const SplitSpec& split, const GluingCheck& check);
std::string gluings_report(
    const std::vector<std::pair<SplitSpec, GluingCertificate>>& found);
// Comment block appended to glue output files; stays parseable.
std::string glue_report(const GlueResult& result);

// 1-skeleton of the fiber complex at the given degree, one cluster per
// connected component, deterministic node order.
std::string dot_export(const NablaComplex& nabla, const std::vector<std::string>& labels);
std::string fiber_text_report(const NablaComplex& nabla, const std::vector<std::string>& labels);

}  // namespace glued
