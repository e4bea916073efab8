#include "cayley/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

std::vector<double> expand_spectrum(const SpectrumReport& r) {
  std::vector<double> out;
  for (const auto& p : r.pairs)
    out.insert(out.end(), p.multiplicity, p.value);
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

const char* method_name(SpectrumMethod m) {
  return m == SpectrumMethod::CentralCharacters ? "central-characters" : "direct-oracle";
}

}  // namespace

AnalysisReport run_analysis(const std::string& group_spec, const std::string& set_spec,
                            const AnalysisOptions& opts) {
  GroupTable G = GroupTable::from_spec(group_spec, opts.order_cap);
  ClassData C = conjugacy_classes(G);
  StructureConstants A = structure_constants(G, C);
  CentralCharacterTable T = central_characters(G, C, A);

  ElementSet S = resolve_set_spec(set_spec, G, C);
  if (S.empty()) throw std::invalid_argument("connection set is empty");
  if (S.contains(0)) throw std::invalid_argument("connection set contains the identity");

  AnalysisReport r;
  r.group_spec = G.spec().empty() ? group_spec : G.spec();
  r.degree = G.degree();
  r.order = G.order();
  r.class_count = C.count();
  r.class_sizes = C.sizes;
  r.set_spec = set_spec;
  r.flags = analyze_subset(G, C, S);
  if (!r.flags.symmetric)
    throw std::invalid_argument("connection set is not symmetric; wrap it in invclose[...]");

  r.spectrum = certify_integrality(G, C, A, T, S, opts.spectrum);
  r.components = components_report(G, S, opts.spectrum);

  if (opts.run_oracle && r.spectrum.method == SpectrumMethod::CentralCharacters &&
      G.order() <= opts.spectrum.oracle_cap) {
    SpectrumReport oracle =
        spectrum_direct(adjacency_matrix(G, S, opts.spectrum.oracle_cap), opts.spectrum);
    std::vector<double> lhs = expand_spectrum(r.spectrum);
    std::vector<double> rhs = expand_spectrum(oracle);
    if (lhs.size() != rhs.size())
      throw VerificationError("oracle cross-check: eigenvalue counts disagree");
    for (size_t i = 0; i < lhs.size(); ++i)
      r.max_discrepancy = std::max(r.max_discrepancy, std::abs(lhs[i] - rhs[i]));
    if (r.max_discrepancy > opts.spectrum.tol)
      throw VerificationError("oracle cross-check: spectra disagree beyond tolerance");
    r.oracle_ran = true;
  }
  return r;
}

CensusResult run_census(const std::string& group_spec, const AnalysisOptions& opts,
                        int max_blocks) {
  GroupTable G = GroupTable::from_spec(group_spec, opts.order_cap);
  ClassData C = conjugacy_classes(G);
  StructureConstants A = structure_constants(G, C);
  CentralCharacterTable T = central_characters(G, C, A);

  // inversion-closed blocks {i, iota(i)} over non-identity classes
  std::vector<std::vector<int>> blocks;
  std::vector<bool> placed(C.count(), false);
  for (int i = 1; i < C.count(); ++i) {
    if (placed[i]) continue;
    std::vector<int> block{i};
    placed[i] = true;
    int j = C.inverse_class[i];
    if (j != i) {
      block.push_back(j);
      placed[j] = true;
    }
    blocks.push_back(std::move(block));
  }
  int b = static_cast<int>(blocks.size());
  if (b > max_blocks)
    throw CapExceeded("census block count " + std::to_string(b) + " exceeds limit " +
                      std::to_string(max_blocks));

  CensusResult result;
  result.group_spec = G.spec().empty() ? group_spec : G.spec();
  result.order = G.order();
  result.class_count = C.count();
  int c = C.count() - 1;
  if (c < 62) result.skipped_non_symmetric = (1LL << c) - (1LL << b);

  for (long long mask = 1; mask < (1LL << b); ++mask) {
    std::set<int> classes;
    for (int t = 0; t < b; ++t)
      if (mask & (1LL << t)) classes.insert(blocks[t].begin(), blocks[t].end());

    ElementSet S;
    for (int e = 1; e < G.order(); ++e)
      if (classes.count(C.class_of[e])) S.members.insert(e);

    SubsetAnalysis flags = analyze_subset(G, C, S);
    SpectrumReport spec = certify_integrality(G, C, A, T, S, opts.spectrum);

    CensusRow row;
    row.class_indices = classes;
    row.set_size = S.size();
    row.euler = flags.euler;
    row.integral = spec.integral;
    row.certified = spec.certified;
    if (row.euler && !(row.integral && row.certified))
      throw VerificationError("euler normal set certified non-integral in census of " +
                              result.group_spec);
    result.rows.push_back(std::move(row));
  }
  return result;
}

namespace {

json spectrum_to_json(const SpectrumReport& s) {
  json out;
  out["method"] = method_name(s.method);
  out["certified"] = s.certified;
  out["integral"] = s.integral;
  out["residual"] = s.residual;
  json values = json::array();
  if (s.pairs.empty()) throw VerificationError("spectrum report is empty at serialization");
  for (const auto& p : s.pairs) {
    json entry;
    if (p.is_exact)
      entry["value"] = p.int_value;
    else {
      entry["value"] = format_value(p.value);
      entry["residual"] = std::abs(p.value - std::round(p.value));
    }
    entry["mult"] = p.multiplicity;
    values.push_back(entry);
  }
  out["values"] = values;
  return out;
}

}  // namespace

json analysis_to_json(const AnalysisReport& r) {
  check_spectrum_invariants(r.spectrum, r.order, r.flags.size);

  json out;
  out["group"] = {{"spec", r.group_spec},
                  {"degree", r.degree},
                  {"order", r.order},
                  {"class_count", r.class_count},
                  {"class_sizes", r.class_sizes}};

  json profile = json::object();
  for (auto [ord, count] : r.flags.order_profile) profile[std::to_string(ord)] = count;
  out["set"] = {{"spec", r.set_spec}, {"size", r.flags.size}, {"order_profile", profile}};

  json flags = {{"excludes_identity", r.flags.excludes_identity},
                {"symmetric", r.flags.symmetric},
                {"normal", r.flags.normal},
                {"euler", r.flags.euler}};
  if (r.flags.normal) flags["class_indices"] = r.flags.class_indices;
  out["flags"] = flags;

  out["components"] = {{"count", r.components.component_count},
                       {"size", r.components.component_size},
                       {"lemma_check", r.components.lemma_check}};
  out["spectrum"] = spectrum_to_json(r.spectrum);
  out["cross_check"] = {{"oracle_ran", r.oracle_ran}, {"max_discrepancy", r.max_discrepancy}};
  return out;
}

std::string analysis_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "group       " << r.group_spec << "  (order " << r.order << ", degree " << r.degree
     << ", " << r.class_count << " classes)\n";
  os << "set         " << r.set_spec << "  (size " << r.flags.size << ")\n";
  os << "flags       " << (r.flags.symmetric ? "symmetric " : "non-symmetric ")
     << (r.flags.normal ? "normal " : "non-normal ") << (r.flags.euler ? "euler" : "non-euler")
     << "\n";
  os << "components  " << r.components.component_count << " x " << r.components.component_size
     << (r.components.lemma_check ? "  (lemma check ok)" : "  (lemma check FAILED)") << "\n";
  os << "method      " << method_name(r.spectrum.method)
     << (r.spectrum.certified ? ", exact certificate" : ", numeric verdict") << "\n";
  os << "integral    " << (r.spectrum.integral ? "yes" : "NO");
  if (!r.spectrum.certified) os << "  (residual " << r.spectrum.residual << ")";
  os << "\n";
  os << "spectrum    ";
  for (const auto& p : r.spectrum.pairs) {
    if (p.is_exact)
      os << p.int_value;
    else
      os << format_value(p.value);
    os << ":" << p.multiplicity << " ";
  }
  os << "\n";
  if (r.oracle_ran)
    os << "oracle      agrees (max discrepancy " << r.max_discrepancy << ")\n";
  return os.str();
}

json census_to_json(const CensusResult& r) {
  json out;
  out["group"] = {{"spec", r.group_spec}, {"order", r.order}, {"class_count", r.class_count}};
  out["skipped_non_symmetric"] = r.skipped_non_symmetric;
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"classes", row.class_indices},
                    {"size", row.set_size},
                    {"normal", true},
                    {"symmetric", row.symmetric},
                    {"euler", row.euler},
                    {"integral", row.integral},
                    {"certified", row.certified}});
  }
  out["rows"] = rows;
  return out;
}

std::string census_to_text(const CensusResult& r) {
  std::ostringstream os;
  os << "census of " << r.group_spec << " (order " << r.order << ", " << r.class_count
     << " classes, " << r.rows.size() << " inversion-closed unions, "
     << r.skipped_non_symmetric << " non-symmetric unions skipped)\n";
  os << "classes              size  euler  integral  certified\n";
  for (const auto& row : r.rows) {
    std::string classes;
    for (int cls : row.class_indices) classes += (classes.empty() ? "" : ",") + std::to_string(cls);
    char line[160];
    std::snprintf(line, sizeof(line), "%-20s %5lld  %-5s  %-8s  %s\n", classes.c_str(),
                  row.set_size, row.euler ? "yes" : "no", row.integral ? "yes" : "NO",
                  row.certified ? "exact" : "numeric");
    os << line;
  }
  return os.str();
}

}  // namespace cayley
