#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nacent/perm.hpp"

namespace nacent {

/// An abstract group given by its k x k multiplication table over element
/// indices 0..k-1. Quotients and isomorphism search work on this form.
class TableGroup {
 public:
  /// Validates the Latin-square property and associativity (exhaustively up
  /// to 64 elements, on a fixed sample of triples above). Throws
  /// std::invalid_argument on failure.
  TableGroup(std::size_t size, std::vector<Index> table, Index identity);

  std::size_t size() const { return size_; }
  Index identity() const { return identity_; }
  Index mul(Index a, Index b) const { return table_[std::size_t{a} * size_ + b]; }
  Index inverse(Index a) const { return inverses_[a]; }
  std::uint64_t order_of(Index a) const { return orders_[a]; }
  const std::vector<std::uint64_t>& element_orders() const { return orders_; }
  const std::vector<Index>& table() const { return table_; }

  /// |C(a)| for every a. O(k^2).
  std::vector<std::size_t> centralizer_sizes() const;
  bool is_abelian() const;

 private:
  std::size_t size_;
  std::vector<Index> table_;
  Index identity_;
  std::vector<Index> inverses_;
  std::vector<std::uint64_t> orders_;
};

/// Direct product table; element (a, b) has index a * |B| + b.
TableGroup table_product(const TableGroup& a, const TableGroup& b);

}  // namespace nacent
