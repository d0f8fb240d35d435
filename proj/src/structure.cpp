#include "nacent/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "nacent/census.hpp"
#include "nacent/errors.hpp"

namespace nacent {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_power_of(std::uint64_t p, std::uint64_t x) {
  while (x % p == 0) x /= p;
  return x == 1;
}

bool bits_less(const Bitset& a, const Bitset& b) {
  for (std::size_t i = 0; i < a.word_count(); ++i)
    if (a.data()[i] != b.data()[i]) return a.data()[i] < b.data()[i];
  return false;
}

// Smallest normal subgroup of g containing the seeds.
SubgroupMask normal_closure(const PermGroup& g, std::vector<Index> seeds) {
  const auto ggens = g.generator_indices();
  std::vector<Index> gens;
  SubgroupMask span = SubgroupMask::trivial(g);
  for (std::size_t head = 0; head < seeds.size(); ++head) {
    const Index x = seeds[head];
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = generate(g, gens);
    for (auto s : ggens) seeds.push_back(g.mul(g.mul(g.inverse(s), x), s));
  }
  return span;
}

}  // namespace

SubgroupMask commutator_subgroup(const SubgroupMask& a, const SubgroupMask& b) {
  const PermGroup& g = a.parent();
  const std::size_t deg = g.degree();
  SubgroupMask current = SubgroupMask::trivial(g);
  std::vector<Index> gens;
  std::vector<Point> buf(deg);
  const auto bm = b.members();
  for (auto x : a.members()) {
    const auto xi = g.images(x);
    const auto xinv = g.images(g.inverse(x));
    for (auto y : bm) {
      const auto yi = g.images(y);
      const auto yinv = g.images(g.inverse(y));
      // x^-1 y^-1 x y applied right to left.
      for (std::size_t p = 0; p < deg; ++p) buf[p] = xinv[yinv[xi[yi[p]]]];
      const Index c = *g.index_of(buf);
      if (current.contains(c)) continue;
      gens.push_back(c);
      current = generate(g, gens);
    }
  }
  return current;
}

SubgroupMask derived_subgroup(const PermGroup& g, const SubgroupMask& h) {
  if (&h.parent() != &g) throw std::invalid_argument("derived_subgroup: mask belongs to another group");
  if (h.size() == g.order()) {
    // [G, G] is the normal closure of the commutators of generators.
    const auto gens = g.generator_indices();
    std::vector<Index> seeds;
    for (auto a : gens)
      for (auto b : gens) seeds.push_back(g.commutator(a, b));
    return normal_closure(g, std::move(seeds));
  }
  return commutator_subgroup(h, h);
}

DerivedSeries derived_series(const SubgroupMask& h) {
  DerivedSeries s;
  s.terms.push_back(h);
  while (true) {
    SubgroupMask next = derived_subgroup(h.parent(), s.terms.back());
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  if (s.terms.back().size() == 1) s.derived_length = s.terms.size() - 1;
  return s;
}

DerivedSeries derived_series(const PermGroup& g) { return derived_series(SubgroupMask::whole(g)); }

std::vector<SubgroupMask> lower_central_series(const PermGroup& g) {
  const auto ggens = g.generator_indices();
  std::vector<SubgroupMask> terms{SubgroupMask::whole(g)};
  while (true) {
    // [N, G] for normal N is the normal closure of [n, s] over generators s.
    std::vector<Index> seeds;
    for (auto n : terms.back().members())
      for (auto s : ggens) seeds.push_back(g.commutator(n, s));
    SubgroupMask next = normal_closure(g, std::move(seeds));
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

bool is_nilpotent(const PermGroup& g) { return lower_central_series(g).back().size() == 1; }

std::vector<SylowComponent> sylow_components(const PermGroup& g) {
  if (!is_nilpotent(g)) throw PreconditionFailed("sylow_components: group is not nilpotent");
  std::vector<std::uint64_t> orders(g.order());
  for (Index i = 0; i < g.order(); ++i) orders[i] = permutation_order(g.images(i));
  std::vector<SylowComponent> out;
  for (auto p : prime_divisors(g.order())) {
    Bitset bits(g.order());
    for (Index i = 0; i < g.order(); ++i)
      if (is_power_of(p, orders[i])) bits.set(i);
    out.push_back({p, SubgroupMask(g, std::move(bits))});
  }
  return out;
}

std::vector<SubgroupMask> all_subgroups(const PermGroup& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("subgroup lattice group too large", cap, g.order());

  struct Entry {
    Bitset bits;
    std::vector<Index> gens;
  };
  std::vector<Entry> found;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  auto add = [&](Bitset bits, std::vector<Index> gens) {
    auto& bucket = buckets[bits.hash()];
    for (auto idx : bucket)
      if (found[idx].bits == bits) return;
    bucket.push_back(found.size());
    found.push_back({std::move(bits), std::move(gens)});
  };

  for (Index x = 0; x < g.order(); ++x) {
    const Index gx[] = {x};
    add(generate(g, gx).bits(), {x});
  }
  const std::size_t cyclic_count = found.size();
  std::vector<std::pair<Bitset, Index>> cyclics;
  for (std::size_t i = 0; i < cyclic_count; ++i) cyclics.emplace_back(found[i].bits, found[i].gens[0]);

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& [cbits, cgen] : cyclics) {
      if (cbits.is_subset_of(found[i].bits)) continue;
      std::vector<Index> gens = found[i].gens;
      gens.push_back(cgen);
      Bitset joined = generate(g, gens).bits();
      add(std::move(joined), std::move(gens));
    }
  }

  std::sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) {
    const auto ca = a.bits.count(), cb = b.bits.count();
    if (ca != cb) return ca < cb;
    return bits_less(a.bits, b.bits);
  });
  std::vector<SubgroupMask> out;
  out.reserve(found.size());
  for (auto& e : found) out.emplace_back(g, std::move(e.bits));
  return out;
}

std::vector<SubgroupMask> maximal_subgroups(const std::vector<SubgroupMask>& lattice) {
  if (lattice.empty()) return {};
  const std::size_t order = lattice.front().parent().order();
  std::vector<SubgroupMask> out;
  for (const auto& a : lattice) {
    if (a.size() == order) continue;
    bool maximal = true;
    for (const auto& b : lattice) {
      if (b.size() == order || b.size() <= a.size()) continue;
      if (a.bits().is_subset_of(b.bits())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<SubgroupMask> maximal_subgroups(const PermGroup& g, std::size_t cap) {
  return maximal_subgroups(all_subgroups(g, cap));
}

std::uint64_t floor_log(std::uint64_t base, std::uint64_t x) {
  if (base < 2 || x < 1) throw std::invalid_argument("floor_log needs base >= 2 and x >= 1");
  std::uint64_t e = 0;
  for (std::uint64_t v = base; v <= x; v *= base) ++e;
  return e;
}

BoundReport derived_length_bound(const PermGroup& g) {
  BoundReport r;
  r.n = cent_census(g).cent_count;
  if (r.n == 1) throw PreconditionFailed("derived_length_bound: group is abelian");
  const auto components = sylow_components(g);  // throws when not nilpotent

  r.cent_product = 1;
  for (const auto& c : components) {
    const PermGroup pg = as_group(c.subgroup);
    SylowBound sb;
    sb.prime = c.prime;
    sb.order = pg.order();
    sb.cent_count = cent_census(pg).cent_count;
    sb.abelian = sb.cent_count == 1;
    if (!sb.abelian) sb.log_bound = floor_log(c.prime, sb.cent_count - 1) + 2;
    r.cent_product *= sb.cent_count;
    r.components.push_back(sb);
  }

  const SylowBound* excluded = nullptr;
  for (const auto& sb : r.components) {
    if (sb.abelian) continue;
    ++r.m;
    if (r.p == 0) r.p = sb.prime;
    if (!excluded || sb.log_bound > excluded->log_bound) excluded = &sb;
  }
  r.proof_bound = excluded->log_bound;
  r.excluded_prime = excluded->prime;

  std::int64_t bound = 2 + static_cast<std::int64_t>(floor_log(r.p, r.n));
  for (const auto& sb : r.components)
    if (!sb.abelian && &sb != excluded) bound -= static_cast<std::int64_t>(floor_log(r.p, sb.prime + 1));
  r.stated_bound = bound;

  r.actual_d = *derived_series(g).derived_length;
  return r;
}

}  // namespace nacent
