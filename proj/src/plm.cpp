#include "plm/plm.hpp"

#include <algorithm>
#include <numeric>

#include "plm/errors.hpp"

namespace plm {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw InvalidArgument("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<long long>> IntMatrix::to_rows() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

Plm::Plm(std::vector<Index> colmap) : colmap_(std::move(colmap)) {
  if (colmap_.empty()) throw InvalidArgument("a PLM has dimension at least 1");
  for (std::size_t j = 0; j < colmap_.size(); ++j)
    if (colmap_[j] >= colmap_.size())
      throw InvalidArgument("column " + std::to_string(j + 1) + " maps to row " + std::to_string(colmap_[j] + 1) +
                            ", outside 1…" + std::to_string(colmap_.size()));
}

Plm Plm::from_one_based(std::span<const int> colmap) {
  std::vector<Index> zero_based;
  zero_based.reserve(colmap.size());
  for (int row : colmap) {
    if (row < 1) throw InvalidArgument("colmap entries are 1-based, got " + std::to_string(row));
    zero_based.push_back(static_cast<Index>(row - 1));
  }
  return Plm(std::move(zero_based));
}

std::vector<int> Plm::one_based() const {
  std::vector<int> out;
  out.reserve(colmap_.size());
  for (Index row : colmap_) out.push_back(static_cast<int>(row) + 1);
  return out;
}

Plm from_dense(const DenseBinaryMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("matrix is not square");
  if (m.rows() == 0) throw InvalidArgument("a PLM has dimension at least 1");
  const std::size_t d = m.rows();
  std::vector<Index> colmap(d);
  for (std::size_t j = 0; j < d; ++j) {
    long long ones = 0;
    for (std::size_t i = 0; i < d; ++i) {
      const long long entry = m(i, j);
      if (entry != 0 && entry != 1)
        throw NotPlm(j + 1, entry, "entry " + std::to_string(entry) + " in row " + std::to_string(i + 1));
      if (entry == 1) {
        ++ones;
        colmap[j] = static_cast<Index>(i);
      }
    }
    if (ones != 1) throw NotPlm(j + 1, ones, std::to_string(ones) + " ones");
  }
  return Plm(std::move(colmap));
}

DenseBinaryMatrix to_dense(const Plm& a) {
  DenseBinaryMatrix m(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) m(a.row_of(j), j) = 1;
  return m;
}

Plm identity(std::size_t d) {
  if (d == 0) throw InvalidArgument("a PLM has dimension at least 1");
  std::vector<Index> colmap(d);
  std::iota(colmap.begin(), colmap.end(), Index{0});
  return Plm(std::move(colmap));
}

Plm row_plm(std::size_t d, Index m) {
  if (d == 0) throw InvalidArgument("a PLM has dimension at least 1");
  if (m >= d) throw InvalidArgument("row " + std::to_string(m + 1) + " outside 1…" + std::to_string(d));
  return Plm(std::vector<Index>(d, m));
}

Plm multiply(const Plm& a, const Plm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  std::vector<Index> colmap(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) colmap[j] = a.row_of(b.row_of(j));
  return Plm(std::move(colmap));
}

Plm row_act(const Permutation& sigma, const Plm& a) {
  if (sigma.dim() != a.dim()) throw DimensionMismatch(sigma.dim(), a.dim());
  std::vector<Index> colmap(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) colmap[j] = sigma(a.row_of(j));
  return Plm(std::move(colmap));
}

Plm col_act(const Permutation& tau, const Plm& a) {
  if (tau.dim() != a.dim()) throw DimensionMismatch(tau.dim(), a.dim());
  std::vector<Index> colmap(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) colmap[tau(static_cast<Index>(j))] = a.row_of(j);
  return Plm(std::move(colmap));
}

std::size_t zeta(const Plm& a) {
  return static_cast<std::size_t>(std::count(a.colmap().begin(), a.colmap().end(), Index{0}));
}

std::optional<Index> row_plm_index(const Plm& a) {
  const Index m = a.row_of(0);
  if (std::all_of(a.colmap().begin(), a.colmap().end(), [m](Index r) { return r == m; })) return m;
  return std::nullopt;
}

bool is_permutation(const Plm& a) {
  std::vector<bool> hit(a.dim(), false);
  for (Index r : a.colmap()) hit[r] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

bool is_cplm(const Plm& a) {
  for (std::size_t j = 1; j < a.dim(); ++j)
    if (a.row_of(j) == 0) return false;
  return true;
}

PlmClass classify(const Plm& a) {
  if (auto m = row_plm_index(a)) return RowPlmClass{*m};
  const std::size_t ones = zeta(a);
  if (ones == 0) return CplmClass{false};
  if (ones == 1) {
    const auto it = std::find(a.colmap().begin(), a.colmap().end(), Index{0});
    const auto c = static_cast<Index>(it - a.colmap().begin());
    if (c == 0) return CplmClass{true};
    return PcplmClass{Permutation::transposition(a.dim(), 0, c)};
  }
  return IplmClass{};
}

std::string class_name(const PlmClass& c) {
  struct Visitor {
    std::string operator()(const RowPlmClass&) const { return "rowplm"; }
    std::string operator()(const CplmClass&) const { return "cplm"; }
    std::string operator()(const PcplmClass&) const { return "pcplm"; }
    std::string operator()(const IplmClass&) const { return "iplm"; }
  };
  return std::visit(Visitor{}, c);
}

Canonical canonicalize(const Plm& a) {
  const std::size_t d = a.dim();
  if (is_cplm(a)) return {Permutation::identity(d), a};
  if (row_plm_index(a)) {
    // Only R_1 reaches here; (1 2) ∗ R_1 = R_2.
    auto sigma = Permutation::transposition(d, 0, 1);
    return {sigma, row_act(sigma, a)};
  }
  std::vector<bool> used(d, false);
  for (std::size_t j = 1; j < d; ++j) used[a.row_of(j)] = true;
  const auto free_row = static_cast<Index>(std::find(used.begin(), used.end(), false) - used.begin());
  auto sigma = Permutation::transposition(d, 0, free_row);
  return {sigma, row_act(sigma, a)};
}

CplmParts cplm_parts(const Plm& a) {
  const std::size_t d = a.dim();
  if (d < 2) throw NotCplm("a CPLM needs dimension at least 2");
  if (!is_cplm(a)) throw NotCplm("first row has a 1 outside column 1");
  CplmParts parts{a.row_of(0) == 0, std::vector<int>(d - 1, 0), identity(d - 1)};
  if (!parts.leading) parts.v[a.row_of(0) - 1] = 1;
  std::vector<Index> plc(d - 1);
  for (std::size_t j = 1; j < d; ++j) plc[j - 1] = a.row_of(j) - 1;
  parts.plc = Plm(std::move(plc));
  return parts;
}

Plm assemble(const CplmParts& parts) {
  const std::size_t d = parts.plc.dim() + 1;
  if (parts.v.size() != d - 1) throw DimensionMismatch(parts.v.size(), d - 1);
  DenseBinaryMatrix m(d, d);
  m(0, 0) = parts.leading ? 1 : 0;
  for (std::size_t i = 1; i < d; ++i) m(i, 0) = parts.v[i - 1];
  for (std::size_t j = 1; j < d; ++j) m(parts.plc.row_of(j - 1) + 1, j) = 1;
  return from_dense(m);
}

IntMatrix x_matrix(const Plm& a, std::size_t n) {
  const auto parts = cplm_parts(a);
  const std::size_t k = a.dim() - 1;
  if (n > k) throw InvalidArgument("X(A, n) needs 0 ≤ n ≤ " + std::to_string(k));
  IntMatrix x(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = parts.v[i];
  return x;
}

}  // namespace plm
