#include "plm/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "plm/errors.hpp"

namespace plm {

StochasticMatrix StochasticMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  StochasticMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw InvalidArgument("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

StochasticMatrix StochasticMatrix::from_plm(const Plm& a) {
  StochasticMatrix m(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) m(a.row_of(j), j) = 1;
  return m;
}

Rational StochasticMatrix::column_sum(std::size_t j) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, j);
  return sum;
}

std::size_t StochasticMatrix::zero_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const Rational& q) { return sgn(q) == 0; }));
}

void require_left_stochastic(const StochasticMatrix& m) {
  for (std::size_t j = 0; j < m.dim(); ++j) {
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (sgn(m(i, j)) < 0)
        throw NotLeftStochastic(j + 1, to_string(m.column_sum(j)),
                                "negative entry " + to_string(m(i, j)) + " in row " + std::to_string(i + 1) +
                                    ", column sums to " + to_string(m.column_sum(j)));
    const Rational sum = m.column_sum(j);
    if (sum != 1) throw NotLeftStochastic(j + 1, to_string(sum), "column sums to " + to_string(sum));
  }
}

bool is_left_stochastic(const StochasticMatrix& m) {
  try {
    require_left_stochastic(m);
    return true;
  } catch (const NotLeftStochastic&) {
    return false;
  }
}

std::vector<Index> first_positive_rows(const StochasticMatrix& b) {
  std::vector<Index> rows(b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) {
    std::size_t i = 0;
    while (i < b.dim() && sgn(b(i, j)) <= 0) ++i;
    if (i == b.dim()) throw ZeroColumn(j + 1);
    rows[j] = static_cast<Index>(i);
  }
  return rows;
}

Plm p_of(const StochasticMatrix& b) { return Plm(first_positive_rows(b)); }

Decomposition decompose(const StochasticMatrix& m, std::vector<StochasticMatrix>* residuals) {
  require_left_stochastic(m);
  const std::size_t d = m.dim();
  Decomposition dec{d, {}};
  StochasticMatrix rest = m;
  if (residuals) residuals->assign(1, rest);

  while (!rest.is_zero()) {
    if (dec.terms.size() == d * d) throw Error("decomposition did not terminate within d^2 steps");
    const Plm vertex = p_of(rest);
    Rational lambda = rest(vertex.row_of(0), 0);
    for (std::size_t j = 1; j < d; ++j) lambda = std::min(lambda, rest(vertex.row_of(j), j));
    for (std::size_t j = 0; j < d; ++j) rest(vertex.row_of(j), j) -= lambda;
    dec.terms.push_back({lambda, vertex});
    if (residuals) residuals->push_back(rest);
  }
  return dec;
}

StochasticMatrix convex_combine(std::span<const DecompositionTerm> terms) {
  if (terms.empty()) throw WeightSumNotOne("empty convex combination");
  const std::size_t d = terms.front().plm.dim();
  StochasticMatrix out(d);
  Rational total = 0;
  for (const auto& term : terms) {
    if (term.plm.dim() != d) throw DimensionMismatch(d, term.plm.dim());
    if (sgn(term.lambda) < 0 || term.lambda > 1)
      throw WeightSumNotOne("weight " + to_string(term.lambda) + " outside [0, 1]");
    total += term.lambda;
    for (std::size_t j = 0; j < d; ++j) out(term.plm.row_of(j), j) += term.lambda;
  }
  if (total != 1) throw WeightSumNotOne("weights sum to " + to_string(total));
  return out;
}

StochasticMatrix recompose(const Decomposition& dec) {
  for (const auto& term : dec.terms)
    if (term.plm.dim() != dec.dim) throw DimensionMismatch(dec.dim, term.plm.dim());
  return convex_combine(dec.terms);
}

StochasticMatrix random_left_stochastic(std::size_t d, std::uint64_t seed, std::uint64_t max_denominator) {
  if (d == 0) throw InvalidArgument("dimension must be at least 1");
  if (max_denominator == 0) throw InvalidArgument("max_denominator must be at least 1");
  // mt19937_64 output is fixed by the standard; the distributions are not,
  // so reduce raw draws by hand.
  std::mt19937_64 rng(seed);
  const auto below = [&rng](std::uint64_t n) { return rng() % n; };

  StochasticMatrix m(d);
  for (std::size_t j = 0; j < d; ++j) {
    const std::uint64_t q = 1 + below(max_denominator);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < d; ++i)
      if (rng() & 1U) support.push_back(i);
    if (support.empty()) support.push_back(static_cast<std::size_t>(below(d)));

    std::vector<std::uint64_t> cuts{0, q};
    for (std::size_t k = 1; k < support.size(); ++k) cuts.push_back(below(q + 1));
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k < support.size(); ++k) {
      Rational entry(mpz_class(static_cast<unsigned long>(cuts[k + 1] - cuts[k])),
                     mpz_class(static_cast<unsigned long>(q)));
      entry.canonicalize();
      m(support[k], j) = entry;
    }
  }
  return m;
}

std::vector<ApproxTerm> decompose_approx(std::span<const double> entries, std::size_t d, double zero_threshold) {
  if (d == 0 || entries.size() != d * d) throw InvalidArgument("expected d*d entries");
  std::vector<double> rest(entries.begin(), entries.end());
  const auto at = [&rest, d](std::size_t i, std::size_t j) -> double& { return rest[i * d + j]; };
  for (std::size_t j = 0; j < d; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      if (at(i, j) < -zero_threshold)
        throw NotLeftStochastic(j + 1, std::to_string(sum), "negative entry in row " + std::to_string(i + 1));
      sum += at(i, j);
    }
    if (std::abs(sum - 1.0) > 1e-9) throw NotLeftStochastic(j + 1, std::to_string(sum), "column does not sum to 1");
  }

  std::vector<ApproxTerm> terms;
  while (terms.size() < d * d) {
    std::vector<Index> rows(d);
    bool exhausted = false;
    for (std::size_t j = 0; j < d && !exhausted; ++j) {
      std::size_t i = 0;
      while (i < d && at(i, j) <= zero_threshold) ++i;
      if (i == d) exhausted = true;
      rows[j] = static_cast<Index>(i);
    }
    if (exhausted) break;
    double lambda = at(rows[0], 0);
    for (std::size_t j = 1; j < d; ++j) lambda = std::min(lambda, at(rows[j], j));
    for (std::size_t j = 0; j < d; ++j) {
      at(rows[j], j) -= lambda;
      if (at(rows[j], j) <= zero_threshold) at(rows[j], j) = 0.0;
    }
    terms.push_back({lambda, Plm(std::move(rows))});
  }
  return terms;
}

}  // namespace plm
