#include "cayley/errors.hpp"
#include "cayley/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace cayley {

long long SpectrumReport::total_multiplicity() const {
  long long total = 0;
  for (const auto& p : pairs) total += p.multiplicity;
  return total;
}

IntMatrix subset_class_matrix(const StructureConstants& A, const std::set<int>& classes) {
  if (classes.empty()) throw std::invalid_argument("class set must be nonempty");
  if (classes.count(0)) throw std::invalid_argument("class 0 (identity) is not a valid connection class");
  IntMatrix B(A.k, std::vector<long long>(A.k, 0));
  for (int i : classes) {
    if (i < 0 || i >= A.k) throw std::out_of_range("class index out of range");
    for (int r = 0; r < A.k; ++r)
      for (int j = 0; j < A.k; ++j) B[r][j] += A.at(i, j, r);
  }
  return B;
}

namespace {

// Sorted values -> clusters split at gaps of cluster_gap * tol.
std::vector<EigenvaluePair> cluster_values(std::vector<std::pair<double, long long>> vals,
                                           const SpectrumOptions& opts) {
  std::sort(vals.begin(), vals.end());
  std::vector<EigenvaluePair> out;
  size_t i = 0;
  while (i < vals.size()) {
    size_t j = i + 1;
    while (j < vals.size() && vals[j].first - vals[j - 1].first < opts.cluster_gap * opts.tol) ++j;
    double weighted = 0.0;
    long long mult = 0;
    for (size_t t = i; t < j; ++t) {
      weighted += vals[t].first * static_cast<double>(vals[t].second);
      mult += vals[t].second;
    }
    EigenvaluePair p;
    p.value = weighted / static_cast<double>(mult);
    p.multiplicity = mult;
    p.int_value = std::llround(p.value);
    out.push_back(p);
    i = j;
  }
  std::sort(out.begin(), out.end(),
            [](const EigenvaluePair& a, const EigenvaluePair& b) { return a.value > b.value; });
  return out;
}

void finish_numeric_flags(SpectrumReport& r, const SpectrumOptions& opts) {
  r.residual = 0.0;
  r.integral = true;
  for (const auto& p : r.pairs) {
    double dist = std::abs(p.value - std::round(p.value));
    r.residual = std::max(r.residual, dist);
    if (dist > opts.tol) r.integral = false;
  }
}

}  // namespace

SpectrumReport spectrum_via_central_characters(const CentralCharacterTable& T,
                                               const std::set<int>& classes,
                                               const ClassData& C,
                                               const std::vector<std::pair<long long, int>>* exact_roots,
                                               const SpectrumOptions& opts) {
  if (classes.empty()) throw std::invalid_argument("class set must be nonempty");
  (void)C;
  SpectrumReport r;
  r.method = SpectrumMethod::CentralCharacters;

  std::vector<std::pair<double, long long>> vals;  // (lambda, chi(1)^2)
  for (int row = 0; row < T.k; ++row) {
    std::complex<double> lambda = 0.0;
    for (int i : classes) lambda += T.omega[row][i];
    if (std::abs(lambda.imag()) > opts.tol)
      throw VerificationError("central character sum has a nonreal value for a symmetric set");
    vals.emplace_back(lambda.real(), T.degrees[row] * T.degrees[row]);
  }

  if (exact_roots != nullptr) {
    // snap every character value to its certificate root
    std::vector<long long> roots;
    for (const auto& [root, mult] : *exact_roots) roots.push_back(root);
    std::map<long long, long long> mult_by_root;
    std::map<long long, int> chars_by_root;
    for (const auto& [lambda, dsq] : vals) {
      long long nearest = roots.front();
      for (long long root : roots)
        if (std::abs(lambda - static_cast<double>(root)) <
            std::abs(lambda - static_cast<double>(nearest)))
          nearest = root;
      if (std::abs(lambda - static_cast<double>(nearest)) > opts.tol)
        throw VerificationError("character value inconsistent with the exact certificate");
      mult_by_root[nearest] += dsq;
      ++chars_by_root[nearest];
    }
    for (const auto& [root, mult] : *exact_roots)
      if (chars_by_root[root] != mult)
        throw VerificationError("certificate root multiplicity disagrees with character count");
    for (auto it = mult_by_root.rbegin(); it != mult_by_root.rend(); ++it) {
      EigenvaluePair p;
      p.int_value = it->first;
      p.value = static_cast<double>(it->first);
      p.is_exact = true;
      p.multiplicity = it->second;
      r.pairs.push_back(p);
    }
    r.certified = true;
    r.integral = true;
    r.residual = 0.0;
    return r;
  }

  r.pairs = cluster_values(std::move(vals), opts);
  finish_numeric_flags(r, opts);
  return r;
}

std::vector<std::vector<int>> adjacency_matrix(const GroupTable& G, const ElementSet& S,
                                               long long oracle_cap) {
  if (S.contains(0)) throw std::invalid_argument("connection set must not contain the identity");
  for (int s : S.members)
    if (!S.contains(G.inv(s)))
      throw std::invalid_argument("connection set must be symmetric");
  if (G.order() > oracle_cap)
    throw CapExceeded("group order exceeds the direct-oracle cap");

  int n = G.order();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (int g = 0; g < n; ++g)
    for (int s : S.members) adj[g][G.mul(g, s)] = 1;
  return adj;
}

SpectrumReport spectrum_direct(const std::vector<std::vector<int>>& adj,
                               const SpectrumOptions& opts) {
  int n = static_cast<int>(adj.size());
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = static_cast<double>(adj[i][j]);

  std::vector<std::pair<double, long long>> vals;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A, Eigen::EigenvaluesOnly);
  if (solver.info() == Eigen::Success) {
    for (int i = 0; i < n; ++i) vals.emplace_back(solver.eigenvalues()(i), 1);
  } else {
    // The QL iteration occasionally hits its sweep limit on matrices with
    // highly degenerate spectra. The Schur-based general solver still works;
    // eigenvalues of a symmetric matrix are real, so drop the tiny imaginary
    // parts after checking them.
    Eigen::EigenSolver<Eigen::MatrixXd> general(A, false);
    if (general.info() != Eigen::Success)
      throw std::runtime_error("dense eigensolver failed to converge");
    for (int i = 0; i < n; ++i) {
      std::complex<double> z = general.eigenvalues()(i);
      if (std::abs(z.imag()) > opts.tol)
        throw std::runtime_error("symmetric matrix produced a complex eigenvalue");
      vals.emplace_back(z.real(), 1);
    }
  }

  SpectrumReport r;
  r.method = SpectrumMethod::DirectOracle;
  r.certified = false;
  r.pairs = cluster_values(std::move(vals), opts);
  finish_numeric_flags(r, opts);
  return r;
}

ComponentsReport components_report(const GroupTable& G, const ElementSet& S,
                                   const SpectrumOptions& opts) {
  ElementSet H = generated_subgroup(G, S);
  ComponentsReport out;
  out.component_size = H.size();
  out.component_count = G.order() / H.size();

  // (a) every BFS component of the graph has size |<S>|
  std::vector<int> seen(G.order(), 0);
  bool sizes_ok = true;
  long long found_components = 0;
  for (int start = 0; start < G.order(); ++start) {
    if (seen[start]) continue;
    ++found_components;
    long long size = 0;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++size;
      for (int s : S.members) {
        int w = G.mul(v, s);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (size != out.component_size) sizes_ok = false;
  }
  if (found_components != out.component_count) sizes_ok = false;

  // (b) spectrum of Cay(G,S) is the component-count-fold replication of the
  // spectrum of Cay(<S>,S); checked through the dense oracle when it fits.
  bool spectrum_ok = true;
  if (G.order() <= opts.oracle_cap) {
    std::vector<Permutation> gens;
    for (int s : S.members) gens.push_back(G.element(s));
    GroupTable Hgroup = GroupTable::generate(gens);
    ElementSet S_in_H;
    for (const auto& g : gens) S_in_H.members.insert(Hgroup.index_of(g));

    SpectrumReport big = spectrum_direct(adjacency_matrix(G, S, opts.oracle_cap), opts);
    SpectrumReport small = spectrum_direct(adjacency_matrix(Hgroup, S_in_H, opts.oracle_cap), opts);
    if (big.pairs.size() != small.pairs.size()) {
      spectrum_ok = false;
    } else {
      for (size_t i = 0; i < big.pairs.size(); ++i) {
        if (std::abs(big.pairs[i].value - small.pairs[i].value) > opts.tol ||
            big.pairs[i].multiplicity != small.pairs[i].multiplicity * out.component_count)
          spectrum_ok = false;
      }
    }
  }

  out.lemma_check = sizes_ok && spectrum_ok;
  return out;
}

SpectrumReport certify_integrality(const GroupTable& G, const ClassData& C,
                                   const StructureConstants& A,
                                   const CentralCharacterTable& T, const ElementSet& S,
                                   const SpectrumOptions& opts) {
  if (S.contains(0)) throw std::invalid_argument("connection set must not contain the identity");
  SubsetAnalysis flags = analyze_subset(G, C, S);
  if (!flags.symmetric)
    throw std::invalid_argument("connection set must be symmetric for an undirected graph");

  if (flags.normal) {
    IntMatrix B = subset_class_matrix(A, flags.class_indices);
    CharPolyZ p = charpoly_integer(B);
    IntegerRoots roots = integer_roots(p);
    if (roots.fully_split) {
      return spectrum_via_central_characters(T, flags.class_indices, C, &roots.roots, opts);
    }
    SpectrumReport r = spectrum_via_central_characters(T, flags.class_indices, C, nullptr, opts);
    r.certified = true;
    r.integral = false;  // a non-integer eigenvalue provably exists
    return r;
  }

  return spectrum_direct(adjacency_matrix(G, S, opts.oracle_cap), opts);
}

void check_spectrum_invariants(const SpectrumReport& r, long long group_order,
                               long long set_size, double tol) {
  if (r.pairs.empty()) throw VerificationError("spectrum report is empty");
  if (r.total_multiplicity() != group_order)
    throw VerificationError("spectrum multiplicities do not sum to |G|");

  double trace = 0.0, trace_sq = 0.0;
  for (const auto& p : r.pairs) {
    trace += p.value * static_cast<double>(p.multiplicity);
    trace_sq += p.value * p.value * static_cast<double>(p.multiplicity);
  }
  double scale = static_cast<double>(group_order) * (1.0 + static_cast<double>(set_size));
  if (std::abs(trace) > tol * scale)
    throw VerificationError("spectrum trace is nonzero");
  if (std::abs(trace_sq - static_cast<double>(set_size) * static_cast<double>(group_order)) >
      tol * scale * (1.0 + static_cast<double>(set_size)))
    throw VerificationError("spectrum A^2 trace disagrees with |S||G|");

  double top = r.pairs.front().value;
  if (std::abs(top - static_cast<double>(set_size)) > tol * (1.0 + static_cast<double>(set_size)))
    throw VerificationError("top eigenvalue is not |S|");
}

}  // namespace cayley
