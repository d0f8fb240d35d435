#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nacent/census.hpp"
#include "nacent/perm.hpp"
#include "nacent/table_group.hpp"

namespace nacent {

/// G / N as a table group. Cosets are numbered by their least member index;
/// that member is the coset's representative.
struct Quotient {
  TableGroup table;
  std::vector<Index> coset_of;         // element index of G -> coset number
  std::vector<Index> representatives;  // coset number -> least member
};

/// Throws PreconditionFailed when N is not a normal subgroup.
Quotient quotient(const PermGroup& g, const SubgroupMask& n);

/// Greedy generating sequence: repeatedly adjoin the least element outside
/// the subgroup generated so far.
std::vector<Index> greedy_generators(const TableGroup& t);

/// Visits every isomorphism a -> b (as an index map) in a fixed order until
/// the visitor returns false. Returns the number visited.
std::size_t for_each_isomorphism(const TableGroup& a, const TableGroup& b,
                                 const std::function<bool(const std::vector<Index>&)>& visit);

/// First isomorphism in search order, or nothing. Orders and the multiset of
/// (element order, centralizer size) pairs are compared before any search.
std::optional<std::vector<Index>> find_isomorphism(const TableGroup& a, const TableGroup& b);

enum class IsoCertificate { Found, DifferentOrder, DifferentElementOrders, SearchExhausted, TooLarge };

struct IsomorphismResult {
  IsoCertificate certificate;
  std::optional<std::vector<Index>> map;
};

/// Permutation-group front end: the group-order certificate is decided
/// without building tables, so it stays cheap for large groups.
IsomorphismResult find_isomorphism(const PermGroup& a, const PermGroup& b, std::size_t table_cap = 10000);

/// Isoclinism (alpha, beta): alpha maps cosets of G/Z(G) to cosets of
/// S/Z(S) (numbered as in `quotient`), beta maps G' into S' as element index
/// pairs, sorted by the G index.
struct IsoclinismWitness {
  std::vector<Index> alpha;
  std::vector<std::pair<Index, Index>> beta;
};

enum class IsoclinismStatus { Isoclinic, NotIsoclinic, Inconclusive };

struct IsoclinismResult {
  IsoclinismStatus status = IsoclinismStatus::Inconclusive;
  std::optional<IsoclinismWitness> witness;
  std::string reason;
  std::size_t alphas_tried = 0;
};

/// Searches isomorphisms alpha of the central quotients; for each, beta is
/// forced on commutators by beta([g1, g2]) = [s1, s2] and accepted when it
/// extends to an isomorphism G' -> S'. Above `cap` (central quotient or
/// derived subgroup order) the answer is Inconclusive unless a cheap
/// invariant already separates the groups.
IsoclinismResult isoclinic(const PermGroup& g, const PermGroup& s, std::size_t cap = 512);

/// Recomputes every homomorphism and compatibility condition of a witness.
bool validate_witness(const PermGroup& g, const PermGroup& s, const IsoclinismWitness& w);

std::string to_string(IsoclinismStatus s);

struct Clause {
  std::string name;
  bool applicable = true;
  bool holds = true;
  std::string detail;
};

struct Verdict {
  std::string subject;
  /// False when the statement's hypothesis does not apply; its conclusions
  /// are then not evaluated.
  bool hypothesis_met = true;
  std::vector<Clause> clauses;

  bool ok() const;
  void add(std::string name, bool holds, std::string detail = {});
  void skip(std::string name, std::string detail = {});
};

/// Subgroup checks for H <= G: the cent_G(H) chain and H ∩ Z(G) <= Z(H)
/// always; when |cent(H)| = |cent(G)| also H ∩ Z(G) = Z(H),
/// H/Z(H) ≅ HZ(G)/Z(G) and H isoclinic with HZ(G).
Verdict check_lemma_pi(const PermGroup& g, const SubgroupMask& h, std::size_t iso_cap = 512);
/// Same, reusing a commutation table of G across many subgroups.
Verdict check_lemma_pi(const CommutationTable& t, const SubgroupMask& h, std::size_t iso_cap = 512);

/// For each maximal M with |cent(M)| = |cent(G)|: Z(M) = Z(G) or M is
/// isoclinic with G.
std::vector<Verdict> check_maximal_proposition(const PermGroup& g, std::size_t lattice_cap = 400,
                                               std::size_t iso_cap = 512);

/// For non-abelian G with n = |cent(G)| < 6: every H with |cent(H)| = n is
/// isoclinic with G, and G/Z(G) is one of C2 x C2, S3, C3 x C3. Empty when
/// n >= 6. Throws PreconditionFailed for abelian G.
std::vector<Verdict> check_small_n_theorem(const PermGroup& g, std::size_t lattice_cap = 400,
                                           std::size_t iso_cap = 512);

/// Whether G / Z(G) is a simple group (normal closure of every non-trivial
/// element is everything).
bool central_quotient_is_simple(const PermGroup& g);

/// When G/Z(G) is simple: G' = G'', Z(G) ∩ G' = Z(G'), G isoclinic with G'.
/// Otherwise the verdict has hypothesis_met = false and no clauses.
Verdict check_gz_simple_proposition(const PermGroup& g, std::size_t iso_cap = 512);

}  // namespace nacent
