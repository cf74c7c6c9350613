#pragma once

// Left (column) stochastic matrices over exact rationals and their greedy
// decomposition into convex combinations of PLMs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "plm/plm.hpp"
#include "plm/rational.hpp"

namespace plm {

/// Square rational matrix. Holds any entries; is_left_stochastic() says
/// whether it is actually left stochastic.
class StochasticMatrix {
 public:
  explicit StochasticMatrix(std::size_t d) : dim_(d), entries_(d * d) {}
  /// Throws InvalidArgument on ragged or non-square input.
  static StochasticMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static StochasticMatrix from_plm(const Plm& a);

  std::size_t dim() const noexcept { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  Rational column_sum(std::size_t j) const;
  std::size_t zero_count() const;
  bool is_zero() const { return zero_count() == entries_.size(); }

  friend bool operator==(const StochasticMatrix&, const StochasticMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;
};

bool is_left_stochastic(const StochasticMatrix& m);
/// Throws NotLeftStochastic naming the first offending column.
void require_left_stochastic(const StochasticMatrix& m);

/// r(B): per column, the smallest row holding a strictly positive entry.
/// Throws ZeroColumn when a column has none.
std::vector<Index> first_positive_rows(const StochasticMatrix& b);
/// P(B): the PLM whose column map is r(B).
Plm p_of(const StochasticMatrix& b);

struct DecompositionTerm {
  Rational lambda;
  Plm plm;
  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

struct Decomposition {
  std::size_t dim;
  std::vector<DecompositionTerm> terms;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Greedy vertex peeling: λ = min_j A(r(A)_j, j), A ← A − λ·P(A), until A
/// is zero. When `residuals` is given it receives A_0 = m, A_1, …, A_N = 0.
/// Throws NotLeftStochastic.
Decomposition decompose(const StochasticMatrix& m, std::vector<StochasticMatrix>* residuals = nullptr);

/// Σ λ_i · P_i. Throws WeightSumNotOne when a weight is outside [0, 1] or
/// the weights do not sum to 1, DimensionMismatch on mixed dimensions.
StochasticMatrix convex_combine(std::span<const DecompositionTerm> terms);
StochasticMatrix recompose(const Decomposition& dec);

/// Deterministic for fixed arguments on every platform: entries of column j
/// are k_i / q_j with q_j ≤ max_denominator.
StochasticMatrix random_left_stochastic(std::size_t d, std::uint64_t seed, std::uint64_t max_denominator);

// Floating-point variant of decompose(). Entries at or below
// `zero_threshold` count as zero when locating first positive entries.
// Approximate: results are not exact and carry rounding error.
struct ApproxTerm {
  double lambda;
  Plm plm;
};
std::vector<ApproxTerm> decompose_approx(std::span<const double> entries, std::size_t d,
                                         double zero_threshold = 1e-12);

}  // namespace plm
