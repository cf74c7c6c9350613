#pragma once

// Exhaustive and randomized checks over PL_d. Every sweep is deterministic
// in its arguments: work is split across threads by enumeration index and
// merged back in index order, so reports do not depend on the worker count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "plm/plm.hpp"

namespace plm {

struct SweepReport {
  std::string sweep;
  std::size_t d = 0;
  std::uint64_t cases = 0;
  /// Counterexample descriptors, in enumeration order.
  std::vector<nlohmann::json> failures;
  nlohmann::json findings = nlohmann::json::object();
  std::int64_t elapsed_ms = 0;

  bool pass() const noexcept { return failures.empty(); }
};

enum class Timing { Include, Omit };

/// {"sweep", "d", "cases", "pass", "failures", "findings", "elapsed_ms"}.
/// Timing::Omit writes elapsed_ms as 0 so output is byte-stable.
nlohmann::json to_json(const SweepReport& report, Timing timing = Timing::Include);

/// d^d. Throws InvalidArgument when it does not fit in 64 bits.
std::uint64_t plm_count(std::size_t d);
/// The index-th PLM in lexicographic colmap order.
Plm plm_at(std::size_t d, std::uint64_t index);
std::vector<Plm> enumerate(std::size_t d);
void for_each_plm(std::size_t d, const std::function<void(const Plm&)>& visit);

/// Textbook triple-loop integer product.
DenseBinaryMatrix oracle_multiply(const DenseBinaryMatrix& a, const DenseBinaryMatrix& b);

struct SweepOptions {
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t workers = 0;
};

inline constexpr std::uint64_t kSweepMaxDenominator = 100;

/// multiply = structural_multiply = dense oracle over all (d^d)^2 pairs.
SweepReport sweep_multiplication(std::size_t d, const SweepOptions& opts = {});
/// Same three-way check on `cases` random pairs, for dimensions too large
/// to enumerate.
SweepReport sweep_multiplication_sampled(std::size_t d, std::uint64_t cases, std::uint64_t seed,
                                         const SweepOptions& opts = {});
/// Periodic or A² a row PLM: asserted for d ≤ 3, reported above.
SweepReport sweep_period(std::size_t d, const SweepOptions& opts = {});
SweepReport sweep_eigen(std::size_t d, double tol, const SweepOptions& opts = {});
/// Reports which pre-row PLMs have the CPLM / leading-zero / row-PLC shape:
/// literally, after canonicalize(), and after a simultaneous row and column
/// relabeling. Only the proven direction (the literal shape makes A² a row
/// PLM) is asserted.
SweepReport sweep_prerow(std::size_t d, const SweepOptions& opts = {});
SweepReport sweep_decompose(std::size_t d, std::uint64_t n_cases, std::uint64_t seed, const SweepOptions& opts = {});

}  // namespace plm
