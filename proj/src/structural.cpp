// Block-formula multiplication. Every product is reduced to a CPLM on the
// left by a row swap, then dispatched on the class of the right factor.

#include <variant>

#include "plm/errors.hpp"
#include "plm/plm.hpp"

namespace plm {
namespace {

// Order-preserving column permutation sending the columns with a 1 in the
// first row to positions 0…ζ−1 and the rest after them.
Permutation leading_run_permutation(const Plm& b) {
  const std::size_t d = b.dim();
  std::vector<Index> images(d);
  Index front = 0;
  Index back = static_cast<Index>(zeta(b));
  for (std::size_t j = 0; j < d; ++j) images[j] = b.row_of(j) == 0 ? front++ : back++;
  return Permutation(std::move(images));
}

Plm cplm_times(const Plm& a, const Plm& b);

// A CPLM, B CPLM.
Plm cplm_times_cplm(const Plm& a, const Plm& b) {
  const auto ap = cplm_parts(a);
  const auto bp = cplm_parts(b);
  const Plm plc = structural_multiply(ap.plc, bp.plc);
  if (bp.leading) return assemble({ap.leading, ap.v, plc});

  // b_{x,1} = 1 with x > 1: first column is column x−1 of A_1, first row zero.
  const Index x = b.row_of(0);
  std::vector<int> v(a.dim() - 1, 0);
  v[ap.plc.row_of(x - 1)] = 1;
  return assemble({false, std::move(v), plc});
}

// A CPLM, B irregular (1 < ζ(B) < d).
Plm cplm_times_iplm(const Plm& a, const Plm& b) {
  const std::size_t d = a.dim();
  const std::size_t ones = zeta(b);
  const Permutation tau = leading_run_permutation(b);
  const Plm bt = col_act(tau, b);
  const auto ap = cplm_parts(a);

  // Lower-right block X(A, ζ−1) + A_1·B_2, where B_2 is B_1 padded on the
  // left by ζ−1 zero columns.
  IntMatrix lower = x_matrix(a, ones - 1);
  for (std::size_t k = ones - 1; k < d - 1; ++k) lower(ap.plc.row_of(bt.row_of(k + 1) - 1), k) += 1;
  for (std::size_t i = 0; i < d - 1; ++i)
    for (std::size_t k = 0; k < d - 1; ++k)
      if (lower(i, k) != 0 && lower(i, k) != 1)
        throw Error("irregular product block has entry " + std::to_string(lower(i, k)));

  IntMatrix c(d, d);
  const long long lead = ap.leading ? 1 : 0;
  c(0, 0) = lead;
  for (std::size_t j = 1; j < ones; ++j) c(0, j) = lead;
  for (std::size_t i = 1; i < d; ++i) c(i, 0) = ap.v[i - 1];
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = 1; j < d; ++j) c(i, j) = lower(i - 1, j - 1);
  return col_act(tau.inverse(), from_dense(c));
}

Plm cplm_times(const Plm& a, const Plm& b) {
  const PlmClass cls = classify(b);
  if (const auto* row = std::get_if<RowPlmClass>(&cls))
    return Plm(std::vector<Index>(a.dim(), a.row_of(row->m)));
  if (std::holds_alternative<CplmClass>(cls)) return cplm_times_cplm(a, b);
  if (const auto* pre = std::get_if<PcplmClass>(&cls))
    return col_act(pre->tau.inverse(), cplm_times_cplm(a, col_act(pre->tau, b)));
  return cplm_times_iplm(a, b);
}

}  // namespace

Plm structural_multiply(const Plm& a, const Plm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  const std::size_t d = a.dim();
  if (d == 1) return a;
  // R_m · B = R_m.
  if (const auto m = row_plm_index(a)) return row_plm(d, *m);
  // A · R_m: every column is column m of A.
  if (const auto m = row_plm_index(b)) return Plm(std::vector<Index>(d, a.row_of(*m)));

  const auto canon = canonicalize(a);
  const Plm product = cplm_times(canon.cplm, b);
  return canon.sigma.is_identity() ? product : row_act(canon.sigma.inverse(), product);
}

}  // namespace plm
