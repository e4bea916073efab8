#include "cayley/characters.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cayley {

double CentralCharacterTable::homomorphism_residual(const StructureConstants& A) const {
  double worst = 0.0;
  for (const auto& row : omega) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::complex<double> lhs = row[i] * row[j];
        std::complex<double> rhs = 0.0;
        for (int r = 0; r < k; ++r)
          rhs += static_cast<double>(A.at(i, j, r)) * row[r];
        worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
      }
  }
  return worst;
}

namespace {

using Cplx = std::complex<double>;

struct Row {
  std::vector<Cplx> omega;
  long long degree = 0;
};

bool try_extract(const GroupTable& G, const ClassData& C,
                 const std::vector<Eigen::MatrixXd>& Ms, std::mt19937_64& rng,
                 const CharacterOptions& opts, std::vector<Row>& rows_out) {
  int k = static_cast<int>(Ms.size());
  std::uniform_real_distribution<double> coeff(1.0, 2.0);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) M += coeff(rng) * Ms[i];

  Eigen::EigenSolver<Eigen::MatrixXd> solver(M);
  if (solver.info() != Eigen::Success) return false;
  Eigen::MatrixXcd V = solver.eigenvectors();

  std::vector<Row> rows;
  for (int col = 0; col < k; ++col) {
    Eigen::VectorXcd v = V.col(col);
    int pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    double vnorm = v.norm();
    Row row;
    row.omega.resize(k);
    for (int i = 0; i < k; ++i) {
      Eigen::VectorXcd Mv = Ms[i].cast<Cplx>() * v;
      Cplx w = Mv(pivot) / v(pivot);
      row.omega[i] = w;
      double defect = (Mv - w * v).norm();
      if (defect > opts.verify_tol * (1.0 + std::abs(w)) * vnorm) return false;
    }
    rows.push_back(std::move(row));
  }

  // distinctness of the k character rows
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      double diff = 0.0;
      for (int i = 0; i < k; ++i)
        diff = std::max(diff, std::abs(rows[a].omega[i] - rows[b].omega[i]));
      if (diff < 1e-6) return false;
    }

  // degrees from chi(1)^2 = |G| / sum_i omega_i * omega_iota(i) / |K_i|
  long long degree_sq_sum = 0;
  for (auto& row : rows) {
    Cplx s = 0.0;
    for (int i = 0; i < k; ++i)
      s += row.omega[i] * row.omega[C.inverse_class[i]] / static_cast<double>(C.sizes[i]);
    double d = std::sqrt(static_cast<double>(G.order()) / s.real());
    long long rounded = std::llround(d);
    if (rounded < 1 || std::abs(d - static_cast<double>(rounded)) > opts.degree_tol) return false;
    row.degree = rounded;
    degree_sq_sum += rounded * rounded;
  }
  if (degree_sq_sum != G.order()) return false;

  rows_out = std::move(rows);
  return true;
}

}  // namespace

CentralCharacterTable central_characters(const GroupTable& G, const ClassData& C,
                                         const StructureConstants& A,
                                         const CharacterOptions& opts) {
  int k = A.k;
  std::vector<Eigen::MatrixXd> Ms(k);
  for (int i = 0; i < k; ++i) {
    IntMatrix Mi = class_matrix(A, i);
    Ms[i] = Eigen::MatrixXd(k, k);
    for (int r = 0; r < k; ++r)
      for (int j = 0; j < k; ++j) Ms[i](r, j) = static_cast<double>(Mi[r][j]);
  }

  std::mt19937_64 rng(opts.seed);
  std::vector<Row> rows;
  bool ok = false;
  for (int attempt = 0; attempt < opts.max_attempts && !ok; ++attempt)
    ok = try_extract(G, C, Ms, rng, opts, rows);
  if (!ok)
    throw std::runtime_error("central character extraction failed verification after retries");

  auto key = [k](const Row& r) {
    std::vector<double> v;
    v.reserve(2 * k);
    for (const auto& w : r.omega) {
      v.push_back(std::round(w.real() * 1e6) / 1e6);
      v.push_back(std::round(w.imag() * 1e6) / 1e6);
    }
    return v;
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return key(a) < key(b);
  });

  CentralCharacterTable table;
  table.k = k;
  for (auto& row : rows) {
    table.omega.push_back(std::move(row.omega));
    table.degrees.push_back(row.degree);
  }
  return table;
}

}  // namespace cayley
