#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "plm/plm.hpp"

namespace plm {

/// Minimal (s, t), s ≥ 1, with A^{s+t} = A^s.
struct PowerCycle {
  std::size_t tail;
  std::size_t period;
  friend bool operator==(const PowerCycle&, const PowerCycle&) = default;
};

/// A^{k+1} = A with k minimal.
struct Periodic {
  std::size_t k;
  friend bool operator==(const Periodic&, const Periodic&) = default;
};
/// A^e = R_m with e minimal; only reported for matrices that are not periodic.
struct PreRow {
  std::size_t e;
  Index m;
  friend bool operator==(const PreRow&, const PreRow&) = default;
};
/// Neither periodic nor pre-row.
struct EventuallyPeriodic {
  std::size_t s;
  std::size_t t;
  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;
};

struct PeriodicityVerdict {
  std::variant<Periodic, PreRow, EventuallyPeriodic> kind;
  /// Some positive power is a row PLM. True for row PLMs themselves.
  bool is_prerow;
  friend bool operator==(const PeriodicityVerdict&, const PeriodicityVerdict&) = default;
};

/// det(xI − A) with coefficients[i] the coefficient of x^i. Monic.
struct CharPoly {
  std::vector<long long> coefficients;

  std::size_t degree() const noexcept { return coefficients.size() - 1; }
  long long constant_term() const { return coefficients.front(); }
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

struct EigenReport {
  /// x divides the characteristic polynomial.
  bool has_zero;
  /// A^{s+t} = A^s holds exactly, so every nonzero eigenvalue is a t-th root
  /// of unity.
  bool roots_of_unity_ok;
  std::size_t period;
  /// Roots of the characteristic polynomial, with multiplicity.
  std::vector<std::complex<double>> numeric_eigenvalues;
  double spectral_radius_numeric;
  /// Every numeric root is within tol of 0 or of a t-th root of unity.
  bool numeric_check_ok;
};

/// k-fold product; power(a, 0) is the identity.
Plm power(const Plm& a, std::uint64_t k);

PowerCycle power_cycle(const Plm& a);
PeriodicityVerdict periodicity(const Plm& a);

CharPoly char_poly(const Plm& a);
/// Faddeev–LeVerrier over the integers; every division is exact.
CharPoly char_poly(const IntMatrix& m);

/// Complex roots with multiplicity. Exact zero roots are split off first and
/// repeated factors are separated (square-free decomposition over Q) so the
/// iteration only ever sees simple roots. Throws RootFindingFailure when the
/// iteration does not converge.
std::vector<std::complex<double>> polynomial_roots(const CharPoly& p);

EigenReport eigen_check(const Plm& a, double tol = 1e-9);

/// Maximum column sum of the dense form.
long long norm1(const Plm& a);

}  // namespace plm
