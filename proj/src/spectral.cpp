#include "plm/spectral.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "plm/errors.hpp"

namespace plm {

Plm power(const Plm& a, std::uint64_t k) {
  Plm result = identity(a.dim());
  Plm base = a;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

PowerCycle power_cycle(const Plm& a) {
  std::unordered_map<Plm, std::size_t> seen;
  Plm current = a;
  std::size_t exponent = 1;
  while (true) {
    const auto [it, fresh] = seen.emplace(current, exponent);
    if (!fresh) return {it->second, exponent - it->second};
    current = multiply(current, a);
    ++exponent;
  }
}

PeriodicityVerdict periodicity(const Plm& a) {
  const PowerCycle cycle = power_cycle(a);
  // Powers beyond s+t repeat the cycle, so a row PLM power shows up by then.
  std::optional<PreRow> prerow;
  Plm current = a;
  for (std::size_t e = 1; e <= cycle.tail + cycle.period; ++e) {
    if (const auto m = row_plm_index(current)) {
      prerow = PreRow{e, *m};
      break;
    }
    current = multiply(current, a);
  }
  if (cycle.tail == 1) return {Periodic{cycle.period}, prerow.has_value()};
  if (prerow) return {*prerow, true};
  return {EventuallyPeriodic{cycle.tail, cycle.period}, false};
}

namespace {

IntMatrix int_product(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.rows();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const long long aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

}  // namespace

CharPoly char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<long long> coeffs(n + 1, 0);
  coeffs[n] = 1;
  IntMatrix acc = IntMatrix::zero(n);  // M_0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A·M_{k−1} + c_{n−k+1} I;  c_{n−k} = −tr(A·M_k) / k
    IntMatrix next = int_product(m, acc);
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeffs[n - k + 1];
    acc = std::move(next);
    const IntMatrix am = int_product(m, acc);
    long long trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    if (trace % static_cast<long long>(k) != 0) throw Error("Faddeev–LeVerrier produced an inexact division");
    coeffs[n - k] = -trace / static_cast<long long>(k);
  }
  return {std::move(coeffs)};
}

CharPoly char_poly(const Plm& a) { return char_poly(to_dense(a)); }

namespace {

using QPoly = std::vector<mpq_class>;  // ascending powers, no trailing zeros

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::size_t degree(const QPoly& p) { return p.empty() ? 0 : p.size() - 1; }

QPoly derivative(const QPoly& p) {
  QPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

QPoly subtract(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<QPoly, QPoly> divide(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly monic(QPoly p) {
  if (p.empty()) return p;
  const mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  auto [q, r] = divide(a, b);
  if (!r.empty()) throw Error("square-free decomposition: inexact polynomial division");
  return q;
}

// Yun's algorithm: f = ∏ factor_i^i with each factor square-free and coprime.
std::vector<std::pair<QPoly, std::size_t>> square_free_factors(const QPoly& f) {
  std::vector<std::pair<QPoly, std::size_t>> out;
  if (degree(f) == 0) return out;
  const QPoly df = derivative(f);
  const QPoly a0 = gcd(f, df);
  QPoly b = exact_quotient(f, a0);
  QPoly c = exact_quotient(df, a0);
  QPoly d = subtract(c, derivative(b));
  for (std::size_t multiplicity = 1; degree(b) > 0; ++multiplicity) {
    const QPoly a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = subtract(c, derivative(b));
    if (degree(a) > 0) out.emplace_back(a, multiplicity);
  }
  return out;
}

using Complex = std::complex<double>;

// Value and derivative of a monic polynomial (ascending coefficients).
std::pair<Complex, Complex> horner(const std::vector<double>& c, Complex z) {
  Complex p = 0;
  Complex dp = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
  return {p, dp};
}

// Aberth–Ehrlich iteration for a polynomial with simple roots.
std::vector<Complex> simple_roots(const std::vector<double>& c) {
  const std::size_t n = c.size() - 1;
  if (n == 1) return {Complex(-c[0] / c[1], 0.0)};

  const double radius = std::pow(std::abs(c[0] / c[n]), 1.0 / static_cast<double>(n));
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  constexpr int kMaxIterations = 2000;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    double largest_step = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto [p, dp] = horner(c, z[k]);
      if (p == Complex(0.0, 0.0)) continue;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      const Complex ratio = dp == Complex(0.0, 0.0) ? Complex(1e-3, 1e-3) : p / dp;
      const Complex step = ratio / (1.0 - ratio * sum);
      z[k] -= step;
      largest_step = std::max(largest_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (largest_step < 1e-15) break;
  }

  for (auto& root : z) {
    for (int polish = 0; polish < 3; ++polish) {
      const auto [p, dp] = horner(c, root);
      if (dp == Complex(0.0, 0.0)) break;
      root -= p / dp;
    }
    double scale = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
      scale += std::abs(c[i]) * std::pow(std::abs(root), static_cast<double>(i));
    if (std::abs(horner(c, root).first) > 1e-9 * std::max(1.0, scale))
      throw RootFindingFailure("polynomial root iteration did not converge");
  }
  return z;
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(const CharPoly& p) {
  std::vector<Complex> roots;
  std::size_t zeros = 0;
  while (zeros < p.degree() && p.coefficients[zeros] == 0) ++zeros;
  roots.assign(zeros, Complex(0.0, 0.0));

  QPoly rest;
  for (std::size_t i = zeros; i < p.coefficients.size(); ++i)
    rest.emplace_back(static_cast<long>(p.coefficients[i]));
  trim(rest);
  for (const auto& [factor, multiplicity] : square_free_factors(rest)) {
    std::vector<double> coeffs;
    coeffs.reserve(factor.size());
    for (const auto& c : factor) coeffs.push_back(c.get_d());
    for (const Complex& root : simple_roots(coeffs)) roots.insert(roots.end(), multiplicity, root);
  }
  return roots;
}

EigenReport eigen_check(const Plm& a, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  const CharPoly poly = char_poly(a);
  const PowerCycle cycle = power_cycle(a);

  EigenReport report{};
  report.has_zero = poly.constant_term() == 0;
  report.period = cycle.period;
  report.roots_of_unity_ok = power(a, cycle.tail + cycle.period) == power(a, cycle.tail);
  report.numeric_eigenvalues = polynomial_roots(poly);
  report.spectral_radius_numeric = 0.0;
  report.numeric_check_ok = true;
  for (const Complex& lambda : report.numeric_eigenvalues) {
    const double modulus = std::abs(lambda);
    report.spectral_radius_numeric = std::max(report.spectral_radius_numeric, modulus);
    if (modulus <= tol) continue;
    Complex lifted = 1.0;
    for (std::size_t i = 0; i < cycle.period; ++i) lifted *= lambda;
    if (std::abs(modulus - 1.0) > tol || std::abs(lifted - 1.0) > tol) report.numeric_check_ok = false;
  }
  return report;
}

long long norm1(const Plm& a) {
  const DenseBinaryMatrix m = to_dense(a);
  long long best = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    long long sum = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) sum += std::llabs(m(i, j));
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace plm
