#pragma once

#include "starsuper/analysis.hpp"
#include "starsuper/io.hpp"

#include <string>
#include <vector>

namespace starsuper {

/// Suite names accepted by run_suite: dims, thresholds, sandwich, peirce,
/// exponent, counterexamples, all.
const std::vector<std::string>& suite_names();

/// Runs one suite and returns its rows; "all" concatenates the others in the
/// order of suite_names(). Throws InvalidArgument for unknown names.
std::vector<ReportRow> run_suite(const std::string& suite, const AnalysisConfig& cfg);

/// Families of the dimension grid, in report order.
std::vector<FamilyTag> dimension_grid();

/// Closed formulas for (M+, M-, L+, L-) of a simple family.
HomDims expected_hom_dims(const FamilyTag& t);

}  // namespace starsuper
