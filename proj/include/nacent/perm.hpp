#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nacent/bitset.hpp"

namespace nacent {

using Point = std::uint16_t;
/// Position of an element in a group's canonical element list. Downstream
/// algorithms work on these rather than on permutations.
using Index = std::uint32_t;

class TableGroup;

class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection on [0, n).
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Cycle notation on 0-based points, e.g. from_cycles(4, {{0, 1}, {2, 3}}).
  static Permutation from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// (a * b)(i) = a(b(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
/// Conjugate g by c: c * g * c^-1, i.e. g with its points relabelled by c.
Permutation relabel(const Permutation& g, const Permutation& c);

/// A finite permutation group with every element enumerated and sorted
/// lexicographically by image vector. Immutable once built.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 100000;

  /// Breadth-first closure of `gens` under left multiplication. Throws
  /// CapExceeded (with the partial count) if the order passes `cap`, and
  /// std::invalid_argument on degree mismatch.
  static PermGroup close(std::size_t degree, std::vector<Permutation> gens, std::size_t cap = kDefaultOrderCap);

  /// Wraps an element set that is already known to be a group (e.g. the
  /// members of a subgroup mask). Generators are chosen greedily from it.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::span<const Point> images(Index i) const {
    return {flat_.data() + std::size_t{i} * degree_, degree_};
  }
  Permutation element(Index i) const;
  std::optional<Index> index_of(std::span<const Point> images) const;
  std::optional<Index> index_of(const Permutation& p) const { return index_of(p.images()); }

  Index identity() const { return identity_; }
  Index inverse(Index i) const { return inverses_[i]; }
  Index mul(Index i, Index j) const;
  /// a^-1 b^-1 a b
  Index commutator(Index a, Index b) const { return mul(mul(inverse(a), inverse(b)), mul(a, b)); }
  /// Throws std::out_of_range on a bad index.
  bool commutes(Index i, Index j) const;
  bool commutes_unchecked(Index i, Index j) const;

  /// Indices of the generators inside the element list.
  std::vector<Index> generator_indices() const;

 private:
  PermGroup() = default;
  void finish(std::vector<Permutation> sorted, std::vector<Permutation> gens);

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> flat_;
  std::vector<Index> inverses_;
  Index identity_ = 0;
};

/// Membership mask over a parent group's element indices. The parent must
/// outlive the mask.
class SubgroupMask {
 public:
  SubgroupMask(const PermGroup& parent, Bitset bits);

  static SubgroupMask whole(const PermGroup& g);
  static SubgroupMask trivial(const PermGroup& g);

  const PermGroup& parent() const { return *parent_; }
  const Bitset& bits() const { return bits_; }
  bool contains(Index i) const { return bits_.test(i); }
  std::size_t size() const { return bits_.count(); }
  std::vector<Index> members() const;

  /// Identity present, closed under parent multiplication and inversion.
  bool is_subgroup() const;
  bool is_normal() const;

  bool operator==(const SubgroupMask& o) const { return parent_ == o.parent_ && bits_ == o.bits_; }

 private:
  const PermGroup* parent_;
  Bitset bits_;
};

/// Subgroup of g generated by the given element indices.
SubgroupMask generate(const PermGroup& g, std::span<const Index> gens);
/// Smallest subgroup containing both.
SubgroupMask join(const SubgroupMask& a, const SubgroupMask& b);
SubgroupMask intersect(const SubgroupMask& a, const SubgroupMask& b);
/// The set product A B; a subgroup whenever one factor normalises the other.
SubgroupMask product(const SubgroupMask& a, const SubgroupMask& b);

/// The masked subgroup as a group in its own right.
PermGroup as_group(const SubgroupMask& h);
/// Transports a mask of `from` onto `to` by matching permutations; elements
/// of the mask that are not in `to` are dropped.
SubgroupMask transport(const SubgroupMask& mask, const PermGroup& to);

/// Table of element products: T[i][j] = index(elements[i] * elements[j]).
/// Throws CapExceeded above `cap` elements.
TableGroup multiplication_table(const PermGroup& g, std::size_t cap = 10000);

std::uint64_t element_order(const PermGroup& g, Index i);
/// lcm of the cycle lengths.
std::uint64_t permutation_order(std::span<const Point> images);

}  // namespace nacent
