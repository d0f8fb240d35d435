#include "nacent/table_group.hpp"

#include <random>
#include <stdexcept>

namespace nacent {

TableGroup::TableGroup(std::size_t size, std::vector<Index> table, Index identity)
    : size_(size), table_(std::move(table)), identity_(identity) {
  if (size_ == 0) throw std::invalid_argument("table group must be nonempty");
  if (table_.size() != size_ * size_) throw std::invalid_argument("table has wrong shape");
  if (identity_ >= size_) throw std::invalid_argument("identity index out of range");

  std::vector<char> seen(size_);
  for (std::size_t r = 0; r < size_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < size_; ++c) {
      const Index v = table_[r * size_ + c];
      if (v >= size_ || seen[v]) throw std::invalid_argument("table is not a Latin square (rows)");
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < size_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < size_; ++r) {
      const Index v = table_[r * size_ + c];
      if (seen[v]) throw std::invalid_argument("table is not a Latin square (columns)");
      seen[v] = 1;
    }
  }
  for (std::size_t a = 0; a < size_; ++a)
    if (mul(identity_, static_cast<Index>(a)) != a || mul(static_cast<Index>(a), identity_) != a)
      throw std::invalid_argument("identity index does not act as identity");

  auto assoc = [&](Index a, Index b, Index c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (size_ <= 64) {
    for (Index a = 0; a < size_; ++a)
      for (Index b = 0; b < size_; ++b)
        for (Index c = 0; c < size_; ++c)
          if (!assoc(a, b, c)) throw std::invalid_argument("table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(size_ - 1));
    for (int t = 0; t < 4096; ++t)
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw std::invalid_argument("table is not associative");
  }

  inverses_.assign(size_, 0);
  for (Index a = 0; a < size_; ++a)
    for (Index b = 0; b < size_; ++b)
      if (mul(a, b) == identity_) {
        inverses_[a] = b;
        break;
      }
  orders_.assign(size_, 0);
  for (Index a = 0; a < size_; ++a) {
    std::uint64_t n = 1;
    for (Index x = a; x != identity_; x = mul(x, a)) ++n;
    orders_[a] = n;
  }
}

std::vector<std::size_t> TableGroup::centralizer_sizes() const {
  std::vector<std::size_t> out(size_, 0);
  for (Index a = 0; a < size_; ++a)
    for (Index b = a; b < size_; ++b)
      if (mul(a, b) == mul(b, a)) {
        ++out[a];
        if (a != b) ++out[b];
      }
  return out;
}

bool TableGroup::is_abelian() const {
  for (Index a = 0; a < size_; ++a)
    for (Index b = a + 1; b < size_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

TableGroup table_product(const TableGroup& a, const TableGroup& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Index> t(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Index ax = static_cast<Index>(x / nb), bx = static_cast<Index>(x % nb);
      const Index ay = static_cast<Index>(y / nb), by = static_cast<Index>(y % nb);
      t[std::size_t{x} * n + y] = static_cast<Index>(a.mul(ax, ay) * nb + b.mul(bx, by));
    }
  return TableGroup(n, std::move(t), static_cast<Index>(a.identity() * nb + b.identity()));
}

}  // namespace nacent
