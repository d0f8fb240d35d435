#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nacent/perm.hpp"

namespace nacent {

/// Parse tree of a group description. Leaf kinds carry their integer
/// parameters; Product carries exactly two operands.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Alternating, PSL2, PSU3, Heisenberg, Dicyclic, Product };

  Kind kind = Kind::Cyclic;
  std::vector<std::int64_t> params;
  std::vector<GroupSpec> operands;

  static GroupSpec leaf(Kind k, std::int64_t n) { return GroupSpec{k, {n}, {}}; }
  static GroupSpec product(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = Kind::Product;
    s.operands = {std::move(a), std::move(b)};
    return s;
  }

  bool operator==(const GroupSpec&) const = default;
};

/// Builds the permutation group a spec names.
PermGroup build(const GroupSpec& spec, std::size_t cap = PermGroup::kDefaultOrderCap);

enum class Family { Cyclic, Dihedral, Symmetric, Alternating };

/// cyclic(n): n-cycle on n points. dihedral(n): order 2n on n points (n >= 3;
/// n = 1, 2 give C2 and the Klein four-group in regular form). symmetric(n),
/// alternating(n) in their natural actions; alternating groups are generated
/// by the consecutive 3-cycles (i, i+1, i+2).
PermGroup standard_family(Family kind, std::int64_t n, std::size_t cap = PermGroup::kDefaultOrderCap);

/// PSL(2, q) on the q + 1 points of the projective line; point q is infinity,
/// points 0..q-1 are field element codes.
PermGroup psl2(std::int64_t q, std::size_t cap = PermGroup::kDefaultOrderCap);

/// Facts recorded while building PSU(3, q), for inspection in tests.
struct UnitaryConstruction {
  std::size_t isotropic_points = 0;
  std::size_t projective_points = 0;
  std::size_t matrix_group_order = 0;
  std::size_t generators_used = 0;
  std::size_t candidates_scanned = 0;
  std::size_t kernel_size = 0;  // matrices of the group fixing every isotropic point
};

/// PSU(3, q), q prime, as a permutation group on the q^3 + 1 isotropic points
/// of the Hermitian form u1 v3^q + u2 v2^q + u3 v1^q over GF(q^2). Special
/// unitary matrices are taken in lexicographic order of their entry codes
/// until they generate all of SU(3, q).
PermGroup psu3(std::int64_t q, UnitaryConstruction* info = nullptr, std::size_t cap = PermGroup::kDefaultOrderCap);

/// Upper unitriangular 3x3 matrices over GF(p) in the regular representation.
PermGroup heisenberg(std::int64_t p, std::size_t cap = PermGroup::kDefaultOrderCap);

/// Dicyclic group of order 4n in the regular representation; n = 2 is the
/// quaternion group, n a power of two gives the generalised quaternions.
PermGroup dicyclic(std::int64_t n, std::size_t cap = PermGroup::kDefaultOrderCap);

/// Acts on the disjoint union: A on points [0, deg A), B shifted after it.
PermGroup direct_product(const PermGroup& a, const PermGroup& b, std::size_t cap = PermGroup::kDefaultOrderCap);

std::uint64_t psl2_order(std::uint64_t q);
std::uint64_t su3_order(std::uint64_t q);

}  // namespace nacent
