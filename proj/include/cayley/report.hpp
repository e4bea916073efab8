#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cayley/spectrum.hpp"

namespace cayley {

using json = nlohmann::ordered_json;

struct AnalysisOptions {
  long long order_cap = kDefaultOrderCap;
  SpectrumOptions spectrum;
  bool run_oracle = true;
};

struct AnalysisReport {
  std::string group_spec;
  int degree = 0;
  long long order = 0;
  int class_count = 0;
  std::vector<long long> class_sizes;

  std::string set_spec;
  SubsetAnalysis flags;
  ComponentsReport components;
  SpectrumReport spectrum;

  bool oracle_ran = false;
  double max_discrepancy = 0.0;
};

struct CensusRow {
  std::set<int> class_indices;
  long long set_size = 0;
  bool symmetric = true;  // inversion-closed by construction
  bool euler = false;
  bool integral = false;
  bool certified = false;
};

struct CensusResult {
  std::string group_spec;
  long long order = 0;
  int class_count = 0;
  long long skipped_non_symmetric = 0;  // class unions that are not inversion-closed
  std::vector<CensusRow> rows;
};

AnalysisReport run_analysis(const std::string& group_spec, const std::string& set_spec,
                            const AnalysisOptions& opts = {});

// Enumerates every nonempty inversion-closed union of non-identity
// conjugacy classes, certifies each, and asserts the euler => integral
// implication as a hard check. Throws CapExceeded when the number of
// {i, iota(i)} blocks is above max_blocks.
CensusResult run_census(const std::string& group_spec, const AnalysisOptions& opts = {},
                        int max_blocks = 20);

// Spectrum invariants are re-asserted here before anything is emitted.
json analysis_to_json(const AnalysisReport& r);
std::string analysis_to_text(const AnalysisReport& r);
json census_to_json(const CensusResult& r);
std::string census_to_text(const CensusResult& r);

}  // namespace cayley
