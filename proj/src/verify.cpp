#include "plm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <thread>

#include "plm/errors.hpp"
#include "plm/io.hpp"
#include "plm/spectral.hpp"
#include "plm/stochastic.hpp"

namespace plm {

using nlohmann::json;

json to_json(const SweepReport& report, Timing timing) {
  return {{"sweep", report.sweep},
          {"d", report.d},
          {"cases", report.cases},
          {"pass", report.pass()},
          {"failures", report.failures},
          {"findings", report.findings},
          {"elapsed_ms", timing == Timing::Include ? report.elapsed_ms : 0}};
}

std::uint64_t plm_count(std::size_t d) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / d) throw InvalidArgument("d^d overflows");
    n *= d;
  }
  return n;
}

Plm plm_at(std::size_t d, std::uint64_t index) {
  if (d == 0) throw InvalidArgument("dimension must be at least 1");
  if (index >= plm_count(d)) throw InvalidArgument("enumeration index out of range");
  // Base-d digits, column 1 most significant.
  std::vector<Index> colmap(d);
  for (std::size_t j = d; j-- > 0;) {
    colmap[j] = static_cast<Index>(index % d);
    index /= d;
  }
  return Plm(std::move(colmap));
}

void for_each_plm(std::size_t d, const std::function<void(const Plm&)>& visit) {
  if (d == 0) throw InvalidArgument("dimension must be at least 1");
  const std::uint64_t n = plm_count(d);
  std::vector<Index> colmap(d, 0);
  for (std::uint64_t k = 0; k < n; ++k) {
    visit(Plm(colmap));
    for (std::size_t j = d; j-- > 0;) {
      if (++colmap[j] < d) break;
      colmap[j] = 0;
    }
  }
}

std::vector<Plm> enumerate(std::size_t d) {
  std::vector<Plm> out;
  out.reserve(plm_count(d));
  for_each_plm(d, [&out](const Plm& a) { out.push_back(a); });
  return out;
}

DenseBinaryMatrix oracle_multiply(const DenseBinaryMatrix& a, const DenseBinaryMatrix& b) {
  if (!a.is_square() || !b.is_square()) throw InvalidArgument("oracle_multiply needs square matrices");
  if (a.rows() != b.rows()) throw DimensionMismatch(a.rows(), b.rows());
  const std::size_t n = a.rows();
  DenseBinaryMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long sum = 0;
      for (std::size_t p = 0; p < n; ++p) sum += a(i, p) * b(p, j);
      c(i, j) = sum;
    }
  return c;
}

namespace {

using Clock = std::chrono::steady_clock;

std::size_t resolve_workers(std::size_t requested) {
  if (requested > 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Evaluates f(i) for i in [0, n) on contiguous chunks and returns the
// results in index order.
template <class R, class F>
std::vector<R> map_indices(std::uint64_t n, std::size_t workers, F f) {
  workers = std::max<std::size_t>(1, std::min<std::uint64_t>(resolve_workers(workers), n));
  std::vector<std::vector<R>> chunks(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          const std::uint64_t begin = n * w / workers;
          const std::uint64_t end = n * (w + 1) / workers;
          chunks[w].reserve(end - begin);
          for (std::uint64_t i = begin; i < end; ++i) chunks[w].push_back(f(i));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(n);
  for (auto& chunk : chunks) std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  return out;
}

std::int64_t elapsed_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

double rounded(double x) {
  if (std::abs(x) < 1e-12) return 0.0;
  const double scale = std::pow(10.0, 11 - std::floor(std::log10(std::abs(x))));
  return std::round(x * scale) / scale;
}

// Three routes for one product; empty on agreement.
std::optional<json> check_product(const Plm& a, const Plm& b, std::uint64_t index) {
  const Plm composed = multiply(a, b);
  json observed = json::object();
  bool agree = true;
  try {
    const Plm structural = structural_multiply(a, b);
    observed["structural"] = structural.one_based();
    agree = agree && structural == composed;
  } catch (const std::exception& e) {
    observed["structural"] = std::string("error: ") + e.what();
    agree = false;
  }
  try {
    const Plm dense = from_dense(oracle_multiply(to_dense(a), to_dense(b)));
    observed["dense_oracle"] = dense.one_based();
    agree = agree && dense == composed;
  } catch (const std::exception& e) {
    observed["dense_oracle"] = std::string("error: ") + e.what();
    agree = false;
  }
  if (agree) return std::nullopt;
  return json{{"index", index},
              {"inputs", {a.one_based(), b.one_based()}},
              {"expected", composed.one_based()},
              {"observed", observed}};
}

json class_counts(std::size_t d) {
  std::map<std::string, std::uint64_t> counts{{"rowplm", 0}, {"cplm", 0}, {"pcplm", 0}, {"iplm", 0}};
  for_each_plm(d, [&counts](const Plm& a) { ++counts[class_name(classify(a))]; });
  return counts;
}

}  // namespace

SweepReport sweep_multiplication(std::size_t d, const SweepOptions& opts) {
  if (d < 2) throw InvalidArgument("sweep_multiplication needs d ≥ 2");
  const auto start = Clock::now();
  const std::uint64_t n = plm_count(d);
  const auto all = enumerate(d);

  const auto per_left = map_indices<std::vector<json>>(n, opts.workers, [&](std::uint64_t ia) {
    std::vector<json> failures;
    for (std::uint64_t ib = 0; ib < n; ++ib)
      if (auto f = check_product(all[ia], all[ib], ia * n + ib)) failures.push_back(std::move(*f));
    return failures;
  });

  SweepReport report{"mul", d, n * n, {}, {}, 0};
  for (const auto& chunk : per_left) report.failures.insert(report.failures.end(), chunk.begin(), chunk.end());
  report.findings = {{"routes", {"colmap", "structural", "dense_oracle"}},
                     {"mode", "exhaustive"},
                     {"class_counts", class_counts(d)}};
  report.elapsed_ms = elapsed_since(start);
  return report;
}

SweepReport sweep_multiplication_sampled(std::size_t d, std::uint64_t cases, std::uint64_t seed,
                                         const SweepOptions& opts) {
  if (d < 2) throw InvalidArgument("sweep_multiplication needs d ≥ 2");
  const auto start = Clock::now();
  const auto results = map_indices<std::optional<json>>(cases, opts.workers, [&](std::uint64_t i) {
    std::mt19937_64 rng(case_seed(seed, i));
    std::vector<Index> left(d);
    std::vector<Index> right(d);
    for (auto& r : left) r = static_cast<Index>(rng() % d);
    for (auto& r : right) r = static_cast<Index>(rng() % d);
    return check_product(Plm(std::move(left)), Plm(std::move(right)), i);
  });

  SweepReport report{"mul", d, cases, {}, {}, 0};
  for (const auto& r : results)
    if (r) report.failures.push_back(*r);
  report.findings = {{"routes", {"colmap", "structural", "dense_oracle"}}, {"mode", "sampled"}, {"seed", seed}};
  report.elapsed_ms = elapsed_since(start);
  return report;
}

SweepReport sweep_period(std::size_t d, const SweepOptions& opts) {
  if (d < 2) throw InvalidArgument("sweep_period needs d ≥ 2");
  const auto start = Clock::now();
  const std::uint64_t n = plm_count(d);
  const bool asserted = d <= 3;

  struct Record {
    PeriodicityVerdict verdict;
    bool square_is_row;
  };
  const auto records = map_indices<Record>(n, opts.workers, [&](std::uint64_t i) {
    const Plm a = plm_at(d, i);
    return Record{periodicity(a), row_plm_index(multiply(a, a)).has_value()};
  });

  SweepReport report{"period", d, n, {}, {}, 0};
  std::map<std::string, std::uint64_t> kinds{{"periodic", 0}, {"prerow", 0}, {"eventually_periodic", 0}};
  std::map<std::string, std::uint64_t> index_distribution;
  std::uint64_t claim_holds = 0;
  json eventually_examples = json::array();
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto& r = records[i];
    const json verdict = to_json(r.verdict);
    ++kinds[verdict["periodicity"].get<std::string>()];
    const auto* periodic = std::get_if<Periodic>(&r.verdict.kind);
    if (periodic) ++index_distribution[std::to_string(periodic->k)];
    const bool holds = periodic != nullptr || r.square_is_row;
    if (holds) ++claim_holds;
    if (std::holds_alternative<EventuallyPeriodic>(r.verdict.kind) && eventually_examples.size() < 10)
      eventually_examples.push_back({{"colmap", plm_at(d, i).one_based()}, {"verdict", verdict}});
    if (asserted && !holds)
      report.failures.push_back({{"index", i},
                                 {"inputs", {plm_at(d, i).one_based()}},
                                 {"expected", "periodic or A^2 a row PLM"},
                                 {"observed", verdict}});
  }
  report.findings = {{"asserted", asserted},
                     {"verdicts", kinds},
                     {"periodic_index_distribution", index_distribution},
                     {"periodic_or_square_row", claim_holds},
                     {"claim_holds_at_this_d", claim_holds == n},
                     {"eventually_periodic_examples", eventually_examples}};
  report.elapsed_ms = elapsed_since(start);
  return report;
}

SweepReport sweep_eigen(std::size_t d, double tol, const SweepOptions& opts) {
  if (d < 2) throw InvalidArgument("sweep_eigen needs d ≥ 2");
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  const auto start = Clock::now();
  const std::uint64_t n = plm_count(d);

  struct Record {
    std::optional<EigenReport> report;
    std::string error;
    bool permutation;
  };
  const auto records = map_indices<Record>(n, opts.workers, [&](std::uint64_t i) {
    const Plm a = plm_at(d, i);
    Record r{std::nullopt, {}, is_permutation(a)};
    try {
      r.report = eigen_check(a, tol);
    } catch (const RootFindingFailure& e) {
      r.error = e.what();
    }
    return r;
  });

  SweepReport report{"eigen", d, n, {}, {}, 0};
  double max_radius = 0.0;
  std::uint64_t has_zero = 0;
  std::uint64_t permutations = 0;
  std::uint64_t conjecture_consistent = 0;
  std::map<std::string, std::uint64_t> periods;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto& r = records[i];
    if (r.permutation) ++permutations;
    const auto fail = [&](const std::string& check, json observed) {
      report.failures.push_back(
          {{"index", i}, {"inputs", {plm_at(d, i).one_based()}}, {"check", check}, {"observed", std::move(observed)}});
    };
    if (!r.report) {
      fail("root_finding", r.error);
      continue;
    }
    const auto& e = *r.report;
    max_radius = std::max(max_radius, e.spectral_radius_numeric);
    if (e.has_zero) ++has_zero;
    if (e.numeric_check_ok) ++conjecture_consistent;
    ++periods[std::to_string(e.period)];
    if (!e.roots_of_unity_ok) fail("power_cycle_identity", to_json(e));
    if (!e.numeric_check_ok) fail("numeric_roots_of_unity", to_json(e));
    if (e.has_zero == r.permutation) fail("zero_eigenvalue_iff_not_permutation", to_json(e));
    if (e.spectral_radius_numeric > 1.0 + tol) fail("spectral_radius", to_json(e));
  }
  report.findings = {{"tol", tol},
                     {"max_spectral_radius", rounded(max_radius)},
                     {"has_zero_count", has_zero},
                     {"permutation_count", permutations},
                     {"period_distribution", periods},
                     {"zero_or_root_of_unity_count", conjecture_consistent},
                     {"conjecture_consistent_at_this_d", conjecture_consistent == n}};
  report.elapsed_ms = elapsed_since(start);
  return report;
}

namespace {

// CPLM, leading element zero, PLC a row PLM.
bool has_prerow_shape(const Plm& a) {
  if (!is_cplm(a) || a.row_of(0) == 0) return false;
  return row_plm_index(cplm_parts(a).plc).has_value();
}

// The shape after relabeling rows and columns together (π A π⁻¹): some z
// with every other column mapped to one m ≠ z, and z itself not fixed.
bool has_relabeled_prerow_shape(const Plm& a) {
  const std::size_t d = a.dim();
  if (d < 3) return false;
  for (Index z = 0; z < d; ++z) {
    if (a.row_of(z) == z) continue;
    const Index m = a.row_of(z == 0 ? 1 : 0);
    if (m == z) continue;
    bool constant = true;
    for (Index j = 0; j < d && constant; ++j) constant = j == z || a.row_of(j) == m;
    if (constant) return true;
  }
  return false;
}

}  // namespace

SweepReport sweep_prerow(std::size_t d, const SweepOptions& opts) {
  if (d < 2) throw InvalidArgument("sweep_prerow needs d ≥ 2");
  const auto start = Clock::now();
  const std::uint64_t n = plm_count(d);

  struct Record {
    bool row;
    PeriodicityVerdict verdict;
    bool literal;
    bool row_permuted;
    bool relabeled;
  };
  const auto records = map_indices<Record>(n, opts.workers, [&](std::uint64_t i) {
    const Plm a = plm_at(d, i);
    return Record{row_plm_index(a).has_value(), periodicity(a), has_prerow_shape(a),
                  has_prerow_shape(canonicalize(a).cplm), has_relabeled_prerow_shape(a)};
  });

  SweepReport report{"prerow", d, n, {}, {}, 0};
  json rows = json::array();
  json listed = json::array();
  std::uint64_t literal = 0;
  std::uint64_t row_permuted = 0;
  std::uint64_t relabeled = 0;
  std::uint64_t exponent_above_two = 0;
  std::uint64_t shaped_total = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto& r = records[i];
    const Plm a = plm_at(d, i);
    if (r.literal) ++shaped_total;
    // The proven direction: the shape forces A² to be a row PLM.
    if (r.literal && !row_plm_index(multiply(a, a)))
      report.failures.push_back({{"index", i},
                                 {"inputs", {a.one_based()}},
                                 {"expected", "A^2 a row PLM"},
                                 {"observed", multiply(a, a).one_based()}});
    if (r.row) {
      rows.push_back(a.one_based());
      continue;
    }
    if (!r.verdict.is_prerow) continue;
    if (r.literal) ++literal;
    if (r.row_permuted) ++row_permuted;
    if (r.relabeled) ++relabeled;
    const auto& pre = std::get<PreRow>(r.verdict.kind);
    // The shape forces A² to be a row PLM, so e ≥ 3 rules out every reading.
    if (pre.e > 2) ++exponent_above_two;
    listed.push_back({{"colmap", a.one_based()},
                      {"e", pre.e},
                      {"m", pre.m + 1},
                      {"literal_form", r.literal},
                      {"row_permuted_form", r.row_permuted},
                      {"relabeled_form", r.relabeled}});
  }
  const auto count = static_cast<std::uint64_t>(listed.size());
  report.findings = {{"row_plms", rows},
                     {"prerow", listed},
                     {"prerow_count", count},
                     {"literal_form_count", literal},
                     {"row_permuted_form_count", row_permuted},
                     {"literal_counterexamples", count - literal},
                     {"row_permuted_counterexamples", count - row_permuted},
                     {"relabeled_form_count", relabeled},
                     {"relabeled_counterexamples", count - relabeled},
                     {"exponent_above_two", exponent_above_two},
                     {"shape_matrices", shaped_total}};
  report.elapsed_ms = elapsed_since(start);
  return report;
}

SweepReport sweep_decompose(std::size_t d, std::uint64_t n_cases, std::uint64_t seed, const SweepOptions& opts) {
  if (d < 1) throw InvalidArgument("sweep_decompose needs d ≥ 1");
  if (n_cases < 1) throw InvalidArgument("sweep_decompose needs at least one case");
  const auto start = Clock::now();

  struct Record {
    std::size_t terms;
    bool vertex_input;
    std::vector<std::string> problems;
  };
  const auto records = map_indices<Record>(n_cases, opts.workers, [&](std::uint64_t i) {
    const StochasticMatrix m = random_left_stochastic(d, case_seed(seed, i), kSweepMaxDenominator);
    std::vector<StochasticMatrix> residuals;
    const Decomposition dec = decompose(m, &residuals);
    Record r{dec.terms.size(), false, {}};
    r.vertex_input = m.zero_count() == d * d - d;

    if (recompose(dec) != m) r.problems.push_back("round trip");
    if (dec.terms.size() > d * d) r.problems.push_back("more than d^2 terms");
    Rational total = 0;
    for (std::size_t k = 0; k < dec.terms.size(); ++k) {
      const Rational& lambda = dec.terms[k].lambda;
      if (sgn(lambda) <= 0 || lambda > 1) r.problems.push_back("weight outside (0,1] at step " + std::to_string(k + 1));
      total += lambda;
      const StochasticMatrix& before = residuals[k];
      const StochasticMatrix& after = residuals[k + 1];
      if (after.zero_count() <= before.zero_count())
        r.problems.push_back("zero count not increasing at step " + std::to_string(k + 1));
      for (std::size_t row = 0; row < d; ++row)
        for (std::size_t col = 0; col < d; ++col)
          if (sgn(after(row, col)) < 0) r.problems.push_back("negative entry after step " + std::to_string(k + 1));
      for (std::size_t col = 0; col < d; ++col)
        if (after.column_sum(col) != 1 - total)
          r.problems.push_back("column sums not uniform after step " + std::to_string(k + 1));
    }
    if (total != 1) r.problems.push_back("weights sum to " + to_string(total));
    if (!r.vertex_input && !dec.terms.empty() && dec.terms.front().lambda >= 1)
      r.problems.push_back("first weight is 1 for a non-vertex input");
    return r;
  });

  SweepReport report{"decompose", d, n_cases, {}, {}, 0};
  std::size_t max_terms = 0;
  std::uint64_t total_terms = 0;
  std::uint64_t vertex_inputs = 0;
  for (std::uint64_t i = 0; i < n_cases; ++i) {
    const auto& r = records[i];
    max_terms = std::max(max_terms, r.terms);
    total_terms += r.terms;
    if (r.vertex_input) ++vertex_inputs;
    if (!r.problems.empty())
      report.failures.push_back({{"index", i}, {"case_seed", case_seed(seed, i)}, {"observed", r.problems}});
  }
  report.findings = {{"seed", seed},
                     {"max_denominator", kSweepMaxDenominator},
                     {"max_terms", max_terms},
                     {"term_bound", d * d},
                     {"total_terms", total_terms},
                     {"vertex_inputs", vertex_inputs}};
  report.elapsed_ms = elapsed_since(start);
  return report;
}

}  // namespace plm
