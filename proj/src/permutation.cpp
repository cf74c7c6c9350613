#include "plm/permutation.hpp"

#include <numeric>
#include <string>

#include "plm/errors.hpp"

namespace plm {

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Index image : images_) {
    if (image >= images_.size() || seen[image])
      throw InvalidArgument("not a permutation of {1,…," + std::to_string(images_.size()) + "}");
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<Index> images(d);
  std::iota(images.begin(), images.end(), Index{0});
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t d, Index i, Index j) {
  if (i >= d || j >= d) throw InvalidArgument("transposition index out of range");
  auto p = identity(d);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<Index> zero_based;
  zero_based.reserve(images.size());
  for (int image : images) {
    if (image < 1) throw InvalidArgument("permutation entries are 1-based");
    zero_based.push_back(static_cast<Index>(image - 1));
  }
  return Permutation(std::move(zero_based));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (Index image : images_) out.push_back(static_cast<int>(image) + 1);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Index> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Index>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.dim() != dim()) throw DimensionMismatch(dim(), rhs.dim());
  std::vector<Index> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[rhs.images_[i]];
  return Permutation(std::move(out));
}

}  // namespace plm
