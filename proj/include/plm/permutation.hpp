#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace plm {

using Index = std::uint32_t;

/// An element of the symmetric group S_d, stored as its image vector
/// (0-based: images()[i] is where i is sent).
class Permutation {
 public:
  /// Throws InvalidArgument unless `images` is a bijection on {0,…,d-1}.
  explicit Permutation(std::vector<Index> images);

  static Permutation identity(std::size_t d);
  /// The transposition swapping i and j (0-based). i == j gives the identity.
  static Permutation transposition(std::size_t d, Index i, Index j);
  static Permutation from_one_based(std::span<const int> images);

  std::size_t dim() const noexcept { return images_.size(); }
  Index operator()(Index i) const { return images_[i]; }
  const std::vector<Index>& images() const noexcept { return images_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Composition (*this ∘ rhs): first apply rhs, then *this.
  Permutation operator*(const Permutation& rhs) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Index> images_;
};

}  // namespace plm
