#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "nacent/bitset.hpp"
#include "nacent/perm.hpp"

namespace nacent {

/// For every element, the bitset of elements it commutes with. Row i is the
/// centralizer C_G(g_i). Memory is |G|^2 / 8 bytes.
class CommutationTable {
 public:
  /// `threads == 0` picks the hardware concurrency. The result does not
  /// depend on the thread count.
  explicit CommutationTable(const PermGroup& g, unsigned threads = 0);

  const PermGroup& group() const { return *group_; }
  const Bitset& row(Index i) const { return rows_[i]; }
  std::size_t size() const { return rows_.size(); }

 private:
  const PermGroup* group_;
  std::vector<Bitset> rows_;
};

struct CensusReport {
  std::size_t order = 0;
  std::size_t center_size = 0;
  std::size_t cent_count = 0;
  std::size_t nacent_count = 0;
  std::size_t abelian_cent_count = 0;
  bool is_ac = false;
  bool is_abelian = false;
  /// Over the distinct centralizers: (subgroup order, how many), ascending.
  std::vector<std::pair<std::size_t, std::size_t>> centralizer_sizes;

  bool operator==(const CensusReport&) const = default;
};

struct CensusOptions {
  std::size_t cap = 10000;
  unsigned threads = 0;
};

SubgroupMask centralizer(const PermGroup& g, Index i);
SubgroupMask center(const PermGroup& g);
SubgroupMask center(const CommutationTable& t);

/// The distinct subgroups C_G(x), in order of the least x producing each.
std::vector<SubgroupMask> distinct_centralizers(const CommutationTable& t);

/// Throws CapExceeded when |G| exceeds options.cap.
CensusReport cent_census(const PermGroup& g, const CensusOptions& options = {});
CensusReport cent_census(const CommutationTable& t);

/// Number of distinct C_G(h) ∩ H for h in H, i.e. |cent(H)| computed inside G.
std::size_t restricted_cent_count(const CommutationTable& t, const SubgroupMask& h);

struct RelativeCensus {
  std::size_t cent_H = 0;
  std::size_t cent_G_H = 0;
  std::size_t cent_G = 0;
};

/// Throws PreconditionFailed when `h` is not a subgroup.
RelativeCensus relative_census(const PermGroup& g, const SubgroupMask& h);
RelativeCensus relative_census(const CommutationTable& t, const SubgroupMask& h);

/// Closed-form nacent(PSL(2, q)) for prime powers q > 5. The third case is
/// applied to q = 3 mod 4. Throws std::invalid_argument otherwise.
std::uint64_t psl2_nacent_formula(std::uint64_t q);

}  // namespace nacent
