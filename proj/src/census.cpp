#include "nacent/census.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "nacent/errors.hpp"
#include "nacent/finite_field.hpp"

namespace nacent {

namespace {

// Deduplicates bitsets by content: hash first, exact comparison on collision.
class BitsetSet {
 public:
  /// Returns true if `b` was new.
  bool insert(const Bitset& b) {
    auto& bucket = buckets_[b.hash()];
    for (auto idx : bucket)
      if (items_[idx] == b) return false;
    bucket.push_back(items_.size());
    items_.push_back(b);
    return true;
  }
  std::size_t size() const { return items_.size(); }
  const std::vector<Bitset>& items() const { return items_; }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::vector<Bitset> items_;
};

bool is_abelian_subset(const CommutationTable& t, const Bitset& members) {
  bool abelian = true;
  members.for_each([&](std::size_t a) {
    if (abelian && !members.is_subset_of(t.row(static_cast<Index>(a)))) abelian = false;
  });
  return abelian;
}

}  // namespace

CommutationTable::CommutationTable(const PermGroup& g, unsigned threads) : group_(&g) {
  const std::size_t k = g.order();
  rows_.assign(k, Bitset(k));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, k / 64)));

  // Each worker fills the upper triangle of its own rows; rows are disjoint
  // between workers, so no synchronisation is needed.
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < k; i += threads) {
      Bitset& r = rows_[i];
      r.set(i);
      for (std::size_t j = i + 1; j < k; ++j)
        if (g.commutes_unchecked(static_cast<Index>(i), static_cast<Index>(j))) r.set(j);
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < k; ++i)
    rows_[i].for_each([&](std::size_t j) {
      if (j > i) rows_[j].set(i);
    });
}

SubgroupMask centralizer(const PermGroup& g, Index i) {
  if (i >= g.order()) throw std::out_of_range("centralizer: element index out of range");
  Bitset bits(g.order());
  for (Index j = 0; j < g.order(); ++j)
    if (g.commutes_unchecked(i, j)) bits.set(j);
  return SubgroupMask(g, std::move(bits));
}

SubgroupMask center(const CommutationTable& t) {
  const std::size_t k = t.size();
  Bitset bits(k);
  for (Index i = 0; i < k; ++i)
    if (t.row(i).count() == k) bits.set(i);
  return SubgroupMask(t.group(), std::move(bits));
}

SubgroupMask center(const PermGroup& g) {
  const auto gens = g.generator_indices();
  Bitset bits(g.order());
  for (Index i = 0; i < g.order(); ++i) {
    bool central = true;
    for (auto s : gens)
      if (!g.commutes_unchecked(i, s)) {
        central = false;
        break;
      }
    if (central) bits.set(i);
  }
  return SubgroupMask(g, std::move(bits));
}

std::vector<SubgroupMask> distinct_centralizers(const CommutationTable& t) {
  BitsetSet seen;
  for (Index i = 0; i < t.size(); ++i) seen.insert(t.row(i));
  std::vector<SubgroupMask> out;
  out.reserve(seen.size());
  for (const auto& b : seen.items()) out.emplace_back(t.group(), b);
  return out;
}

CensusReport cent_census(const CommutationTable& t) {
  CensusReport r;
  r.order = t.size();
  r.center_size = center(t).size();
  std::map<std::size_t, std::size_t> sizes;
  BitsetSet seen;
  for (Index i = 0; i < t.size(); ++i) {
    const Bitset& c = t.row(i);
    if (!seen.insert(c)) continue;
    ++sizes[c.count()];
    if (is_abelian_subset(t, c))
      ++r.abelian_cent_count;
    else
      ++r.nacent_count;
  }
  r.cent_count = seen.size();
  r.is_abelian = r.cent_count == 1;
  r.is_ac = !r.is_abelian && r.nacent_count == 1;
  r.centralizer_sizes.assign(sizes.begin(), sizes.end());
  return r;
}

CensusReport cent_census(const PermGroup& g, const CensusOptions& options) {
  if (g.order() > options.cap) throw CapExceeded("census group too large", options.cap, g.order());
  return cent_census(CommutationTable(g, options.threads));
}

std::size_t restricted_cent_count(const CommutationTable& t, const SubgroupMask& h) {
  BitsetSet seen;
  h.bits().for_each([&](std::size_t x) { seen.insert(t.row(static_cast<Index>(x)) & h.bits()); });
  return seen.size();
}

RelativeCensus relative_census(const CommutationTable& t, const SubgroupMask& h) {
  if (&h.parent() != &t.group()) throw std::invalid_argument("relative_census: mask belongs to another group");
  if (!h.is_subgroup()) throw PreconditionFailed("relative_census: H is not closed");
  RelativeCensus r;
  r.cent_H = restricted_cent_count(t, h);
  BitsetSet in_g;
  h.bits().for_each([&](std::size_t x) { in_g.insert(t.row(static_cast<Index>(x))); });
  r.cent_G_H = in_g.size();
  BitsetSet all;
  for (Index i = 0; i < t.size(); ++i) all.insert(t.row(i));
  r.cent_G = all.size();
  return r;
}

RelativeCensus relative_census(const PermGroup& g, const SubgroupMask& h) {
  return relative_census(CommutationTable(g), h);
}

std::uint64_t psl2_nacent_formula(std::uint64_t q) {
  if (q <= 5) throw std::invalid_argument("nacent formula needs q > 5");
  if (as_prime_power(q).prime == 0) throw std::invalid_argument("nacent formula needs a prime power q");
  switch (q % 4) {
    case 0: return 1;
    case 1: return (q * q + q + 2) / 2;
    case 3: return (q * q - q + 2) / 2;
    default: throw std::invalid_argument("no prime power q > 5 is 2 mod 4");
  }
}

}  // namespace nacent
