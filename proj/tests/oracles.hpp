#pragma once

// Brute-force oracles kept independent of the library's normal forms: plain
// rational elimination for ranks and exhaustive subgroup enumeration in
// (Z/p^k)^n for torsion.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using IntMatrix = std::vector<std::vector<long long>>;  // row-major

inline std::vector<std::vector<mpq_class>> to_rational(const IntMatrix& M) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& row : M) {
    std::vector<mpq_class> r;
    for (long long x : row) r.emplace_back(static_cast<long>(x));
    a.push_back(std::move(r));
  }
  return a;
}

inline int rational_rank(const IntMatrix& M) {
  if (M.empty()) return 0;
  auto a = to_rational(M);
  const size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == static_cast<size_t>(rank) || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline mpq_class determinant(const IntMatrix& M) {
  auto a = to_rational(M);
  const size_t n = a.size();
  mpq_class det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      const mpq_class f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

inline int p_valuation(mpz_class n, long p) {
  if (n == 0) return -1;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// log_p |(Z/p^k)^n / <columns of M>|, by breadth-first closure of the
// subgroup generated by the reduced columns.
inline int cokernel_length_mod(const IntMatrix& M, int n, long p, int k) {
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  long long size = 1;
  for (int i = 0; i < n; ++i) size *= q;
  auto encode = [&](const std::vector<long long>& v) {
    long long code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * q + v[i];
    return code;
  };
  auto decode = [&](long long code) {
    std::vector<long long> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = code % q;
      code /= q;
    }
    return v;
  };
  std::vector<std::vector<long long>> gens;
  const size_t cols = M.empty() ? 0 : M[0].size();
  for (size_t j = 0; j < cols; ++j) {
    std::vector<long long> g(n);
    for (int i = 0; i < n; ++i) g[i] = ((M[i][j] % q) + q) % q;
    gens.push_back(g);
  }
  std::vector<char> seen(static_cast<size_t>(size), 0);
  std::vector<long long> frontier{0};
  seen[0] = 1;
  long long count = 1;
  while (!frontier.empty()) {
    std::vector<long long> next;
    for (long long c : frontier) {
      const auto v = decode(c);
      for (const auto& g : gens) {
        std::vector<long long> w(n);
        for (int i = 0; i < n; ++i) w[i] = (v[i] + g[i]) % q;
        const long long e = encode(w);
        if (!seen[e]) {
          seen[e] = 1;
          ++count;
          next.push_back(e);
        }
      }
    }
    frontier = std::move(next);
  }
  int len = 0;
  for (long long s = size / count; s > 1; s /= p) ++len;
  return len;
}

// Torsion exponents of Z_(p)^n / im(M), ascending, when enumeration up to
// p^max_k determines them; nullopt when some exponent might reach max_k.
inline std::optional<std::vector<int>> cokernel_torsion(const IntMatrix& M, int n, long p, int max_k) {
  const int free_rank = n - rational_rank(M);
  std::vector<int> at_least;  // at_least[k-1] = #(summands with e >= k), free included
  int prev = 0;
  for (int k = 1; k <= max_k; ++k) {
    const int len = cokernel_length_mod(M, n, p, k);
    at_least.push_back(len - prev);
    prev = len;
  }
  if (at_least.back() != free_rank) return std::nullopt;
  std::vector<int> exps;
  for (int k = 1; k < max_k; ++k)
    for (int c = at_least[k - 1] - at_least[k]; c > 0; --c) exps.push_back(k);
  std::sort(exps.begin(), exps.end());
  return exps;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  IntMatrix out(n, std::vector<long long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t t = 0; t < k; ++t) out[i][j] += a[i][t] * b[t][j];
  return out;
}

// A random unimodular n x n integer matrix and its inverse, as a product of
// elementary operations.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(int n, std::mt19937_64& rng, int steps = 6) {
  IntMatrix Q(n, std::vector<long long>(n, 0)), Qi = Q;
  for (int i = 0; i < n; ++i) Q[i][i] = Qi[i][i] = 1;
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const int a = idx(rng), b = idx(rng);
    const int c = coef(rng);
    if (a == b || c == 0) continue;
    // Q <- Q E with E = I + c e_{b a}: column a += c column b. Qi <- E^{-1} Qi: row b -= c row a.
    for (int i = 0; i < n; ++i) Q[i][a] += c * Q[i][b];
    for (int j = 0; j < n; ++j) Qi[b][j] -= c * Qi[a][j];
  }
  return {Q, Qi};
}

}  // namespace oracle
