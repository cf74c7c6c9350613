#pragma once

// Test-only reference implementations. Nothing here calls the library's
// multiplication, action or polynomial code; they work on dense matrices
// straight from the definitions.

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "plm/plm.hpp"

namespace oracle {

using plm::IntMatrix;

inline IntMatrix dense_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.rows();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) c(i, j) += a(i, p) * b(p, j);
  return c;
}

/// Moves row i of m to row sigma[i].
inline IntMatrix permute_rows(const std::vector<int>& sigma_one_based, const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(sigma_one_based[i] - 1, j) = m(i, j);
  return out;
}

/// Permutes the columns of m by tau^{-1}: column i of m lands in column tau[i].
inline IntMatrix permute_cols_by_inverse(const std::vector<int>& tau_one_based, const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, tau_one_based[j] - 1) = m(i, j);
  return out;
}

/// Leibniz expansion; fine up to d = 7.
inline long long leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long det = 0;
  do {
    long long term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    if (term == 0) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    det += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// det(xI − A) by evaluating at x = 0…d and Lagrange interpolation over Q.
/// Ascending coefficients.
inline std::vector<long long> char_poly_by_interpolation(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<mpq_class> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    IntMatrix shifted(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? static_cast<long long>(k) : 0) - a(i, j);
    xs.emplace_back(static_cast<long>(k));
    ys.emplace_back(static_cast<long>(leibniz_det(shifted)));
  }
  std::vector<mpq_class> coeffs(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    // basis polynomial ∏_{m≠k} (x − x_m) / (x_k − x_m)
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t m = 0; m <= n; ++m) {
      if (m == k) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t p = 0; p < basis.size(); ++p) {
        next[p + 1] += basis[p];
        next[p] -= basis[p] * xs[m];
      }
      basis = std::move(next);
      denom *= xs[k] - xs[m];
    }
    for (std::size_t p = 0; p < basis.size(); ++p) coeffs[p] += ys[k] * basis[p] / denom;
  }
  std::vector<long long> out;
  for (auto& c : coeffs) {
    c.canonicalize();
    out.push_back(c.get_num().get_si());
  }
  return out;
}

/// x^{tail} ∏_{cycles} (x^{len} − 1), read off the functional graph j ↦ colmap[j].
inline std::vector<long long> char_poly_by_cycles(const std::vector<int>& colmap_one_based) {
  const std::size_t n = colmap_one_based.size();
  std::vector<int> f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = colmap_one_based[j] - 1;
  std::vector<bool> on_cycle(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    int x = static_cast<int>(start);
    for (std::size_t step = 0; step < n; ++step) x = f[x];  // now on a cycle
    int y = x;
    do {
      on_cycle[y] = true;
      y = f[y];
    } while (y != x);
  }
  std::vector<long long> poly{1};
  const auto times = [&poly](const std::vector<long long>& q) {
    std::vector<long long> r(poly.size() + q.size() - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += poly[i] * q[j];
    poly = std::move(r);
  };
  std::vector<bool> done(n, false);
  std::size_t cyclic = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (!on_cycle[x] || done[x]) continue;
    std::size_t len = 0;
    int y = static_cast<int>(x);
    do {
      done[y] = true;
      y = f[y];
      ++len;
    } while (y != static_cast<int>(x));
    std::vector<long long> factor(len + 1, 0);
    factor[0] = -1;
    factor[len] = 1;
    times(factor);
    cyclic += len;
  }
  std::vector<long long> shift(n - cyclic + 1, 0);
  shift.back() = 1;
  times(shift);
  return poly;
}

inline std::vector<int> random_colmap(std::mt19937_64& rng, std::size_t d) {
  std::vector<int> c(d);
  for (auto& x : c) x = static_cast<int>(rng() % d) + 1;
  return c;
}

inline std::vector<int> random_perm(std::mt19937_64& rng, std::size_t d) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 1);
  for (std::size_t i = d; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return p;
}

}  // namespace oracle
