#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nacent/perm.hpp"

namespace nacent {

/// Search and size limits shared by the drivers.
struct Caps {
  std::size_t group = 10000;
  std::size_t lattice = 400;
  std::size_t isoclinism = 512;
};

/// Corpus lists, as group-spec strings in a fixed order.
std::vector<std::string> subgroup_corpus();  // every member has order <= 120
std::vector<std::string> nilpotent_corpus();  // non-abelian nilpotent groups
std::vector<std::string> oracle_corpus();     // order <= 200
std::vector<std::string> simple_quotient_corpus();
/// Cyclic, dihedral, dicyclic, symmetric, alternating, Heisenberg and small
/// direct products, order <= max_order, sorted by (order, spec).
std::vector<std::string> conjecture_corpus(std::size_t max_order);

/// Builds each spec at most once.
class GroupCache {
 public:
  explicit GroupCache(std::size_t cap = 100000) : cap_(cap) {}
  const PermGroup& get(const std::string& spec);

 private:
  std::size_t cap_;
  std::map<std::string, std::unique_ptr<PermGroup>> groups_;
};

struct SuiteReport {
  std::string name;
  std::size_t groups = 0;
  std::size_t instances = 0;  // checks whose hypothesis applied
  std::size_t violations = 0;
  std::size_t inconclusive = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return violations == 0; }
};

/// Every subgroup H of every group: relative census chain, H ∩ Z(G) <= Z(H),
/// and the equal-census conclusions.
SuiteReport run_subgroup_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps& caps);
/// Non-abelian G whose non-abelian subgroups all share G's centralizer count
/// must have |nacent(G)| = 1.
SuiteReport run_ac_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps& caps);
SuiteReport run_maximal_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps& caps);
SuiteReport run_small_n_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps& caps);
SuiteReport run_simple_quotient_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps& caps);
/// d <= proof bound, d <= stated bound, n = prod |cent(P_i)|, |cent(P)| >= p + 1.
SuiteReport run_bound_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps& caps);

}  // namespace nacent
