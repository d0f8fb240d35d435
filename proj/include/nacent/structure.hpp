#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nacent/perm.hpp"

namespace nacent {

/// G = G^0 >= G' >= G'' >= ..., ending at the first repeated term.
struct DerivedSeries {
  std::vector<SubgroupMask> terms;
  /// Index of the first trivial term; empty when the series stalls above the
  /// trivial group (the group is not solvable).
  std::optional<std::size_t> derived_length;

  bool solvable() const { return derived_length.has_value(); }
};

/// Subgroup generated by the commutators a^-1 b^-1 a b with a, b in H.
SubgroupMask derived_subgroup(const PermGroup& g, const SubgroupMask& h);
/// [A, B]: generated by commutators [a, b], a in A, b in B.
SubgroupMask commutator_subgroup(const SubgroupMask& a, const SubgroupMask& b);

DerivedSeries derived_series(const PermGroup& g);
DerivedSeries derived_series(const SubgroupMask& h);

/// G = gamma_1 >= gamma_2 = [G, G] >= ... until it repeats.
std::vector<SubgroupMask> lower_central_series(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);

struct SylowComponent {
  std::uint64_t prime;
  SubgroupMask subgroup;
};

/// For each prime dividing |G| (ascending), the elements of p-power order.
/// Throws PreconditionFailed unless G is nilpotent.
std::vector<SylowComponent> sylow_components(const PermGroup& g);

/// Every subgroup, built as the join-closure of the cyclic subgroups. Ordered
/// by size, then by membership bits. Throws CapExceeded above `cap` elements.
std::vector<SubgroupMask> all_subgroups(const PermGroup& g, std::size_t cap = 400);

/// Proper subgroups not contained in any other proper subgroup.
std::vector<SubgroupMask> maximal_subgroups(const PermGroup& g, std::size_t cap = 400);
std::vector<SubgroupMask> maximal_subgroups(const std::vector<SubgroupMask>& lattice);

struct SylowBound {
  std::uint64_t prime = 0;
  std::size_t order = 0;
  std::size_t cent_count = 0;
  bool abelian = false;
  std::uint64_t log_bound = 0;  // floor(log_p(|cent(P)| - 1)) + 2, non-abelian components only
};

struct BoundReport {
  std::size_t n = 0;             // |cent(G)|
  std::uint64_t p = 0;           // least prime with a non-abelian Sylow subgroup
  std::size_t m = 0;             // number of non-abelian Sylow subgroups
  std::int64_t stated_bound = 0;
  std::uint64_t proof_bound = 0;
  std::size_t actual_d = 0;
  std::uint64_t excluded_prime = 0;  // component left out of the theorem's sum
  std::size_t cent_product = 0;      // product of |cent(P_i)| over all components
  std::vector<SylowBound> components;
};

/// floor(log_base(x)) for x >= 1, exact in integers.
std::uint64_t floor_log(std::uint64_t base, std::uint64_t x);

/// Derived-length bound for a finite non-abelian nilpotent group. Throws
/// PreconditionFailed for abelian or non-nilpotent input.
BoundReport derived_length_bound(const PermGroup& g);

}  // namespace nacent
