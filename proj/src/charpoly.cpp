#include "cayley/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cayley {

namespace {

using i128 = __int128;

i128 add_ck(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("128-bit add overflow");
  return r;
}

i128 mul_ck(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("128-bit mul overflow");
  return r;
}

long long narrow(i128 v) {
  if (v > i128(0x7fffffffffffffffLL) || v < -i128(0x7fffffffffffffffLL) - 1)
    throw std::overflow_error("coefficient exceeds 64-bit range");
  return static_cast<long long>(v);
}

using Mat128 = std::vector<std::vector<i128>>;

Mat128 mat_mul(const Mat128& A, const Mat128& B) {
  size_t n = A.size();
  Mat128 R(n, std::vector<i128>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < n; ++l) {
      if (A[i][l] == 0) continue;
      for (size_t j = 0; j < n; ++j)
        R[i][j] = add_ck(R[i][j], mul_ck(A[i][l], B[l][j]));
    }
  return R;
}

}  // namespace

CharPolyZ charpoly_integer(const IntMatrix& B) {
  size_t n = B.size();
  for (const auto& row : B)
    if (row.size() != n) throw std::invalid_argument("charpoly needs a square matrix");
  if (n == 0) throw std::invalid_argument("charpoly needs a nonempty matrix");

  Mat128 Bw(n, std::vector<i128>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) Bw[i][j] = B[i][j];

  std::vector<i128> c(n + 1, 0);  // c[m] multiplies x^{n-m}; c[0] = 1
  c[0] = 1;
  Mat128 M = Bw;
  for (size_t m = 1; m <= n; ++m) {
    if (m > 1) {
      // M <- B * (M + c[m-1] I)
      Mat128 T = M;
      for (size_t i = 0; i < n; ++i) T[i][i] = add_ck(T[i][i], c[m - 1]);
      M = mat_mul(Bw, T);
    }
    i128 tr = 0;
    for (size_t i = 0; i < n; ++i) tr = add_ck(tr, M[i][i]);
    c[m] = -tr / static_cast<i128>(m);  // exact by the recurrence
  }

  CharPolyZ p;
  p.coeffs.resize(n + 1);
  for (size_t m = 0; m <= n; ++m) p.coeffs[n - m] = narrow(c[m]);
  return p;
}

bool cayley_hamilton_holds(const IntMatrix& B, const CharPolyZ& p) {
  size_t n = B.size();
  Mat128 Bw(n, std::vector<i128>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) Bw[i][j] = B[i][j];

  // Horner: R = I*c_d; R = R*B + c_{d-1} I; ...
  Mat128 R(n, std::vector<i128>(n, 0));
  for (size_t i = 0; i < n; ++i) R[i][i] = p.coeffs.back();
  for (int k = p.degree() - 1; k >= 0; --k) {
    R = mat_mul(R, Bw);
    for (size_t i = 0; i < n; ++i) R[i][i] = add_ck(R[i][i], p.coeffs[k]);
  }
  for (const auto& row : R)
    for (i128 v : row)
      if (v != 0) return false;
  return true;
}

namespace {

// Fujiwara bound: every root r of the monic poly satisfies
// |r| <= 2 * max_i |a_{d-i}|^(1/i).
double root_bound(const std::vector<long long>& q) {
  int d = static_cast<int>(q.size()) - 1;
  double bound = 0.0;
  for (int i = 1; i <= d; ++i) {
    double a = std::abs(static_cast<double>(q[d - i]));
    if (a > 0) bound = std::max(bound, std::pow(a, 1.0 / i));
  }
  return 2.0 * bound;
}

// Divides the monic poly q by (x - r); returns true and replaces q by the
// quotient when the remainder is zero. Overflow means r is rejected.
bool deflate(std::vector<long long>& q, long long r) {
  int d = static_cast<int>(q.size()) - 1;
  std::vector<long long> b(d);
  try {
    i128 carry = q[d];
    for (int i = d - 1; i >= 0; --i) {
      b[i] = narrow(carry);
      carry = add_ck(q[i], mul_ck(r, carry));
    }
    if (carry != 0) return false;
  } catch (const std::overflow_error&) {
    return false;
  }
  q = std::move(b);
  return true;
}

}  // namespace

IntegerRoots integer_roots(const CharPolyZ& p) {
  IntegerRoots out;
  std::vector<long long> q = p.coeffs;
  if (q.empty() || q.back() != 1) throw std::invalid_argument("integer_roots needs a monic polynomial");

  int zero_mult = 0;
  while (q.size() > 1 && q.front() == 0) {
    q.erase(q.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(0, zero_mult);

  while (q.size() > 1) {
    long long c0 = std::llabs(q.front());
    double bound = root_bound(q) + 1.0;
    long long found = 0;
    bool have_root = false;
    // Divisors above the root bound cannot be roots, so the trial loop is
    // capped by min(sqrt(c0), bound).
    for (long long d = 1; d * d <= c0 && static_cast<double>(d) <= bound && !have_root; ++d) {
      if (c0 % d != 0) continue;
      for (long long cand : {d, -d, c0 / d, -(c0 / d)}) {
        if (static_cast<double>(std::llabs(cand)) > bound) continue;
        std::vector<long long> trial = q;
        if (deflate(trial, cand)) {
          q = std::move(trial);
          found = cand;
          have_root = true;
          break;
        }
      }
    }
    if (!have_root) break;
    int mult = 1;
    while (q.size() > 1 && deflate(q, found)) ++mult;
    bool merged = false;
    for (auto& [r, m] : out.roots)
      if (r == found) { m += mult; merged = true; }
    if (!merged) out.roots.emplace_back(found, mult);
  }

  out.fully_split = (q.size() == 1);
  out.remainder.coeffs = std::move(q);
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

bool divides_exactly(const CharPolyZ& p, const std::vector<long long>& monic_divisor) {
  if (monic_divisor.empty() || monic_divisor.back() != 1)
    throw std::invalid_argument("divisor must be monic");
  std::vector<i128> rem(p.coeffs.begin(), p.coeffs.end());
  int dd = static_cast<int>(monic_divisor.size()) - 1;
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    i128 lead = rem.back();
    int shift = static_cast<int>(rem.size()) - 1 - dd;
    for (int i = 0; i <= dd; ++i)
      rem[shift + i] = add_ck(rem[shift + i], -mul_ck(lead, i128(monic_divisor[i])));
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) return true;
    if (static_cast<int>(rem.size()) - 1 < dd) break;
  }
  for (i128 v : rem)
    if (v != 0) return false;
  return true;
}

}  // namespace cayley
