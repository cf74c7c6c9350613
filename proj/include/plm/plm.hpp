#pragma once

// Permutation-like matrices: d×d 0/1 matrices with exactly one 1 in every
// column. A PLM is stored as its column map j ↦ i (the row holding the 1 of
// column j), so the product of two PLMs is composition of column maps.
//
// Indices in this API are 0-based. Text formats and JSON (see io.hpp) are
// 1-based.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "plm/permutation.hpp"

namespace plm {

/// Row-major dense integer matrix. Carries PLM dense forms, oracle products
/// and the integer blocks of the irregular product formula.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Square matrix from nested rows; throws InvalidArgument on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
  static IntMatrix zero(std::size_t n) { return IntMatrix(n, n); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  long long& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  long long operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::vector<long long>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long long> data_;
};

/// Oracle carrier: no PLM constraint is enforced.
using DenseBinaryMatrix = IntMatrix;

class Plm {
 public:
  /// Throws InvalidArgument if `colmap` is empty or has an entry ≥ size.
  explicit Plm(std::vector<Index> colmap);
  static Plm from_one_based(std::span<const int> colmap);
  static Plm from_one_based(std::initializer_list<int> colmap) {
    return from_one_based(std::span<const int>(colmap.begin(), colmap.size()));
  }

  std::size_t dim() const noexcept { return colmap_.size(); }
  /// Row of the unique 1 in column j.
  Index row_of(std::size_t j) const { return colmap_[j]; }
  const std::vector<Index>& colmap() const noexcept { return colmap_; }
  std::vector<int> one_based() const;

  friend bool operator==(const Plm&, const Plm&) = default;
  friend auto operator<=>(const Plm&, const Plm&) = default;

 private:
  std::vector<Index> colmap_;
};

Plm from_dense(const DenseBinaryMatrix& m);
DenseBinaryMatrix to_dense(const Plm& a);

Plm identity(std::size_t d);
/// R_m: every column has its 1 in row m.
Plm row_plm(std::size_t d, Index m);

/// Column-map composition: colmap_C[j] = colmap_A[colmap_B[j]].
Plm multiply(const Plm& a, const Plm& b);
inline Plm operator*(const Plm& a, const Plm& b) { return multiply(a, b); }

/// σ ∗ A: row i of A moves to row σ(i).
Plm row_act(const Permutation& sigma, const Plm& a);
/// τ ⋆ A: column j of the result is column τ⁻¹(j) of A. A left action.
Plm col_act(const Permutation& tau, const Plm& a);

/// Number of ones in the first row.
std::size_t zeta(const Plm& a);

/// The common row when every column has its 1 in the same row.
std::optional<Index> row_plm_index(const Plm& a);
bool is_permutation(const Plm& a);

// Classification, most specific class first.
struct RowPlmClass {
  Index m;
  friend bool operator==(const RowPlmClass&, const RowPlmClass&) = default;
};
struct CplmClass {
  bool leading;
  friend bool operator==(const CplmClass&, const CplmClass&) = default;
};
struct PcplmClass {
  /// tau ⋆ A is a CPLM.
  Permutation tau;
  friend bool operator==(const PcplmClass&, const PcplmClass&) = default;
};
struct IplmClass {
  friend bool operator==(const IplmClass&, const IplmClass&) = default;
};
using PlmClass = std::variant<RowPlmClass, CplmClass, PcplmClass, IplmClass>;

PlmClass classify(const Plm& a);
std::string class_name(const PlmClass& c);

/// True when the first row is zero outside column 1 (row PLMs R_m, m > 1,
/// included).
bool is_cplm(const Plm& a);

struct Canonical {
  Permutation sigma;
  Plm cplm;  // sigma ∗ a
};

/// Row-swaps a into CPLM form. sigma is the identity for CPLMs, (1 2) for
/// R_1, and otherwise (1 r) with r the smallest row that is zero in columns
/// 2…d.
Canonical canonicalize(const Plm& a);

/// Block form [[leading, 0…0], [v, plc]] of a CPLM.
struct CplmParts {
  bool leading;
  std::vector<int> v;  // entries a_{2,1} … a_{d,1}
  Plm plc;
};

/// Throws NotCplm unless is_cplm(a) and dim ≥ 2.
CplmParts cplm_parts(const Plm& a);
/// Inverse of cplm_parts; throws NotPlm if the blocks do not form a PLM.
Plm assemble(const CplmParts& parts);

/// X(A, n): (d−1)×(d−1), columns 0…n−1 equal to v, the rest zero.
IntMatrix x_matrix(const Plm& a, std::size_t n);

/// Same value as multiply(), computed through the block formulas for row
/// PLMs, CPLMs, PCPLMs and IPLMs.
Plm structural_multiply(const Plm& a, const Plm& b);

}  // namespace plm

template <>
struct std::hash<plm::Plm> {
  std::size_t operator()(const plm::Plm& a) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (plm::Index i : a.colmap()) {
      h ^= i;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
