#include "nacent/isoclinism.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "nacent/census.hpp"
#include "nacent/constructors.hpp"
#include "nacent/errors.hpp"
#include "nacent/structure.hpp"

namespace nacent {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

std::vector<char> table_generate(const TableGroup& t, const std::vector<Index>& gens) {
  std::vector<char> in(t.size(), 0);
  std::vector<Index> queue{t.identity()};
  in[t.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto s : gens) {
      const Index y = t.mul(queue[head], s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  return in;
}

std::vector<std::pair<std::uint64_t, std::size_t>> invariants(const TableGroup& t) {
  const auto cs = t.centralizer_sizes();
  std::vector<std::pair<std::uint64_t, std::size_t>> inv(t.size());
  for (Index i = 0; i < t.size(); ++i) inv[i] = {t.order_of(i), cs[i]};
  return inv;
}

// Z(H) for a subgroup mask H of G, as a mask of G.
SubgroupMask center_of(const CommutationTable& t, const SubgroupMask& h) {
  Bitset bits(t.size());
  h.bits().for_each([&](std::size_t x) {
    if (h.bits().is_subset_of(t.row(static_cast<Index>(x)))) bits.set(x);
  });
  return SubgroupMask(t.group(), std::move(bits));
}

std::string count_detail(std::size_t a, std::size_t b) { return std::to_string(a) + " vs " + std::to_string(b); }

void add_isoclinic_clause(Verdict& v, const std::string& name, const PermGroup& a, const PermGroup& b,
                          std::size_t iso_cap) {
  const auto r = isoclinic(a, b, iso_cap);
  if (r.status == IsoclinismStatus::Inconclusive) {
    v.skip(name, "inconclusive: " + r.reason);
    return;
  }
  const bool found = r.status == IsoclinismStatus::Isoclinic;
  v.add(name, found, found ? "witness after " + std::to_string(r.alphas_tried) + " alpha(s)" : r.reason);
  if (found) {
    v.add(name + "-witness-valid", validate_witness(a, b, *r.witness));
    const auto ca = cent_census(a).cent_count, cb = cent_census(b).cent_count;
    v.add(name + "-cent-equal", ca == cb, count_detail(ca, cb));
  }
}

}  // namespace

Quotient quotient(const PermGroup& g, const SubgroupMask& n) {
  if (&n.parent() != &g) throw std::invalid_argument("quotient: mask belongs to another group");
  if (!n.is_subgroup()) throw PreconditionFailed("quotient: N is not closed");
  if (!n.is_normal()) throw PreconditionFailed("quotient: N is not normal");
  const auto nm = n.members();
  std::vector<Index> coset_of(g.order(), kUnset);
  std::vector<Index> reps;
  for (Index i = 0; i < g.order(); ++i) {
    if (coset_of[i] != kUnset) continue;
    const auto c = static_cast<Index>(reps.size());
    reps.push_back(i);
    for (auto x : nm) coset_of[g.mul(i, x)] = c;
  }
  const std::size_t k = reps.size();
  std::vector<Index> table(k * k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) table[std::size_t{a} * k + b] = coset_of[g.mul(reps[a], reps[b])];
  return Quotient{TableGroup(k, std::move(table), coset_of[g.identity()]), std::move(coset_of), std::move(reps)};
}

std::vector<Index> greedy_generators(const TableGroup& t) {
  std::vector<Index> gens;
  std::vector<char> span = table_generate(t, gens);
  for (Index x = 0; x < t.size(); ++x) {
    if (span[x]) continue;
    gens.push_back(x);
    span = table_generate(t, gens);
  }
  return gens;
}

std::size_t for_each_isomorphism(const TableGroup& a, const TableGroup& b,
                                 const std::function<bool(const std::vector<Index>&)>& visit) {
  const std::size_t k = a.size();
  if (b.size() != k) return 0;
  const auto ia = invariants(a), ib = invariants(b);
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return 0;
  }
  const auto gens = greedy_generators(a);
  std::vector<std::vector<Index>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Index y = 0; y < k; ++y)
      if (ib[y] == ia[gens[i]]) cands[i].push_back(y);

  std::vector<Index> phi(k, kUnset);
  std::vector<char> used(k, 0);
  phi[a.identity()] = b.identity();
  used[b.identity()] = 1;
  std::size_t visited = 0;

  // Extends phi over the subgroup generated by gens[0..level] via
  // phi(x g) = phi(x) phi(g); fails on any inconsistency or collision.
  auto extend = [&](std::size_t level, std::vector<Index>& trail) {
    std::vector<Index> queue;
    for (Index x = 0; x < k; ++x)
      if (phi[x] != kUnset) queue.push_back(x);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index x = queue[head];
      for (std::size_t j = 0; j <= level; ++j) {
        const Index z = a.mul(x, gens[j]);
        const Index w = b.mul(phi[x], phi[gens[j]]);
        if (phi[z] == kUnset) {
          if (used[w]) return false;
          phi[z] = w;
          used[w] = 1;
          trail.push_back(z);
          queue.push_back(z);
        } else if (phi[z] != w) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t level) -> bool {
    if (level == gens.size()) {
      ++visited;
      return visit(phi);
    }
    const Index g = gens[level];
    for (auto y : cands[level]) {
      if (used[y]) continue;
      std::vector<Index> trail{g};
      phi[g] = y;
      used[y] = 1;
      bool keep_going = true;
      if (extend(level, trail)) keep_going = search(level + 1);
      for (auto z : trail) {
        used[phi[z]] = 0;
        phi[z] = kUnset;
      }
      if (!keep_going) return false;
    }
    return true;
  };
  search(0);
  return visited;
}

std::optional<std::vector<Index>> find_isomorphism(const TableGroup& a, const TableGroup& b) {
  std::optional<std::vector<Index>> found;
  for_each_isomorphism(a, b, [&](const std::vector<Index>& m) {
    found = m;
    return false;
  });
  return found;
}

IsomorphismResult find_isomorphism(const PermGroup& a, const PermGroup& b, std::size_t table_cap) {
  if (a.order() != b.order()) return {IsoCertificate::DifferentOrder, std::nullopt};
  std::vector<std::uint64_t> oa, ob;
  for (Index i = 0; i < a.order(); ++i) oa.push_back(permutation_order(a.images(i)));
  for (Index i = 0; i < b.order(); ++i) ob.push_back(permutation_order(b.images(i)));
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return {IsoCertificate::DifferentElementOrders, std::nullopt};
  if (a.order() > table_cap) return {IsoCertificate::TooLarge, std::nullopt};
  auto m = find_isomorphism(multiplication_table(a, table_cap), multiplication_table(b, table_cap));
  if (!m) return {IsoCertificate::SearchExhausted, std::nullopt};
  return {IsoCertificate::Found, std::move(m)};
}

std::string to_string(IsoclinismStatus s) {
  switch (s) {
    case IsoclinismStatus::Isoclinic: return "isoclinic";
    case IsoclinismStatus::NotIsoclinic: return "not-isoclinic";
    case IsoclinismStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

IsoclinismResult isoclinic(const PermGroup& g, const PermGroup& s, std::size_t cap) {
  IsoclinismResult result;
  const SubgroupMask zg = center(g), zs = center(s);
  const std::size_t qg = g.order() / zg.size(), qs = s.order() / zs.size();
  if (qg != qs) {
    result.status = IsoclinismStatus::NotIsoclinic;
    result.reason = "central quotient orders differ (" + count_detail(qg, qs) + ")";
    return result;
  }
  if (qg == 1) {
    // Both abelian: trivial quotients and derived subgroups.
    result.status = IsoclinismStatus::Isoclinic;
    result.alphas_tried = 1;
    result.witness = IsoclinismWitness{{0}, {{g.identity(), s.identity()}}};
    return result;
  }
  if (qg > cap) {
    result.reason = "central quotient order " + std::to_string(qg) + " above cap " + std::to_string(cap);
    return result;
  }
  const SubgroupMask dg = derived_subgroup(g, SubgroupMask::whole(g));
  const SubgroupMask ds = derived_subgroup(s, SubgroupMask::whole(s));
  if (dg.size() != ds.size()) {
    result.status = IsoclinismStatus::NotIsoclinic;
    result.reason = "derived subgroup orders differ (" + count_detail(dg.size(), ds.size()) + ")";
    return result;
  }
  if (dg.size() > cap) {
    result.reason = "derived subgroup order " + std::to_string(dg.size()) + " above cap " + std::to_string(cap);
    return result;
  }

  const Quotient q1 = quotient(g, zg), q2 = quotient(s, zs);
  const std::size_t k = qg;
  std::vector<Index> comm_g(k * k), comm_s(k * k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) {
      comm_g[a * k + b] = g.commutator(q1.representatives[a], q1.representatives[b]);
      comm_s[a * k + b] = s.commutator(q2.representatives[a], q2.representatives[b]);
    }

  // Commutator values of G and a greedy generating subset of them.
  std::vector<Index> values(comm_g);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Index> value_gens;
  {
    SubgroupMask span = SubgroupMask::trivial(g);
    for (auto v : values) {
      if (span.contains(v)) continue;
      value_gens.push_back(v);
      span = generate(g, value_gens);
    }
  }

  std::vector<Index> forced(g.order()), ext(g.order());
  std::vector<char> used(s.order());
  for_each_isomorphism(q1.table, q2.table, [&](const std::vector<Index>& alpha) {
    ++result.alphas_tried;
    std::fill(forced.begin(), forced.end(), kUnset);
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b) {
        const Index x = comm_g[a * k + b];
        const Index y = comm_s[alpha[a] * k + alpha[b]];
        if (forced[x] == kUnset)
          forced[x] = y;
        else if (forced[x] != y)
          return true;  // beta not single-valued; next alpha
      }
    // Extend multiplicatively from the generating commutators.
    std::fill(ext.begin(), ext.end(), kUnset);
    std::fill(used.begin(), used.end(), 0);
    ext[g.identity()] = s.identity();
    used[s.identity()] = 1;
    std::vector<Index> queue{g.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index x = queue[head];
      for (auto c : value_gens) {
        const Index z = g.mul(x, c);
        const Index w = s.mul(ext[x], forced[c]);
        if (ext[z] == kUnset) {
          if (used[w]) return true;
          ext[z] = w;
          used[w] = 1;
          queue.push_back(z);
        } else if (ext[z] != w) {
          return true;
        }
      }
    }
    if (queue.size() != ds.size()) return true;
    for (auto v : values)
      if (ext[v] != forced[v]) return true;

    IsoclinismWitness w;
    w.alpha = alpha;
    for (Index x = 0; x < g.order(); ++x)
      if (ext[x] != kUnset) w.beta.emplace_back(x, ext[x]);
    result.witness = std::move(w);
    return false;
  });

  if (result.witness) {
    result.status = IsoclinismStatus::Isoclinic;
  } else {
    result.status = IsoclinismStatus::NotIsoclinic;
    result.reason = result.alphas_tried == 0 ? "central quotients not isomorphic"
                                             : "no compatible beta for any of " +
                                                   std::to_string(result.alphas_tried) + " alpha(s)";
  }
  return result;
}

bool validate_witness(const PermGroup& g, const PermGroup& s, const IsoclinismWitness& w) {
  const SubgroupMask zg = center(g), zs = center(s);
  const Quotient q1 = quotient(g, zg), q2 = quotient(s, zs);
  const std::size_t k = q1.table.size();
  if (q2.table.size() != k || w.alpha.size() != k) return false;

  std::vector<char> hit(k, 0);
  for (auto y : w.alpha) {
    if (y >= k || hit[y]) return false;
    hit[y] = 1;
  }
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b)
      if (w.alpha[q1.table.mul(a, b)] != q2.table.mul(w.alpha[a], w.alpha[b])) return false;

  const SubgroupMask dg = derived_subgroup(g, SubgroupMask::whole(g));
  const SubgroupMask ds = derived_subgroup(s, SubgroupMask::whole(s));
  if (w.beta.size() != dg.size() || dg.size() != ds.size()) return false;
  std::vector<Index> beta(g.order(), kUnset);
  std::vector<char> seen(s.order(), 0);
  for (const auto& [x, y] : w.beta) {
    if (x >= g.order() || y >= s.order() || !dg.contains(x) || !ds.contains(y)) return false;
    if (beta[x] != kUnset || seen[y]) return false;
    beta[x] = y;
    seen[y] = 1;
  }
  const auto dm = dg.members();
  for (auto x : dm)
    for (auto y : dm)
      if (beta[g.mul(x, y)] != s.mul(beta[x], beta[y])) return false;

  // Compatibility over all element pairs when affordable, otherwise over
  // coset representatives.
  std::vector<Index> pool;
  if (g.order() * g.order() <= 4'000'000) {
    for (Index x = 0; x < g.order(); ++x) pool.push_back(x);
  } else {
    pool = q1.representatives;
  }
  for (auto g1 : pool) {
    const Index s1 = q2.representatives[w.alpha[q1.coset_of[g1]]];
    for (auto g2 : pool) {
      const Index s2 = q2.representatives[w.alpha[q1.coset_of[g2]]];
      if (beta[g.commutator(g1, g2)] != s.commutator(s1, s2)) return false;
    }
  }
  return true;
}

bool Verdict::ok() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return !c.applicable || c.holds; });
}

void Verdict::add(std::string name, bool holds, std::string detail) {
  clauses.push_back({std::move(name), true, holds, std::move(detail)});
}

void Verdict::skip(std::string name, std::string detail) {
  clauses.push_back({std::move(name), false, true, std::move(detail)});
}

Verdict check_lemma_pi(const PermGroup& g, const SubgroupMask& h, std::size_t iso_cap) {
  return check_lemma_pi(CommutationTable(g), h, iso_cap);
}

Verdict check_lemma_pi(const CommutationTable& t, const SubgroupMask& h, std::size_t iso_cap) {
  const RelativeCensus rc = relative_census(t, h);
  const SubgroupMask zg = center(t);
  const SubgroupMask zh = center_of(t, h);
  const SubgroupMask h_cap_zg = intersect(h, zg);

  Verdict v;
  v.subject = "H of order " + std::to_string(h.size());
  v.add("chain", rc.cent_H <= rc.cent_G_H && rc.cent_G_H <= rc.cent_G,
        std::to_string(rc.cent_H) + " <= " + std::to_string(rc.cent_G_H) + " <= " + std::to_string(rc.cent_G));
  v.add("intersection-in-center", h_cap_zg.bits().is_subset_of(zh.bits()));
  v.hypothesis_met = rc.cent_H == rc.cent_G;
  if (!v.hypothesis_met) return v;

  v.add("center-intersection", h_cap_zg == zh, count_detail(h_cap_zg.size(), zh.size()));
  const PermGroup hg = as_group(h);
  const PermGroup hzg = as_group(product(h, zg));
  const Quotient qh = quotient(hg, center(hg));
  const Quotient qhz = quotient(hzg, transport(zg, hzg));
  if (qh.table.size() > iso_cap) {
    v.skip("quotient-isomorphism", "quotient above cap");
  } else {
    v.add("quotient-isomorphism", find_isomorphism(qh.table, qhz.table).has_value(),
          count_detail(qh.table.size(), qhz.table.size()));
  }
  add_isoclinic_clause(v, "isoclinic", hg, hzg, iso_cap);
  return v;
}

std::vector<Verdict> check_maximal_proposition(const PermGroup& g, std::size_t lattice_cap, std::size_t iso_cap) {
  const auto maxes = maximal_subgroups(g, lattice_cap);
  const CommutationTable t(g);
  const std::size_t n = cent_census(t).cent_count;
  const SubgroupMask zg = center(t);
  std::vector<Verdict> out;
  for (std::size_t i = 0; i < maxes.size(); ++i) {
    const SubgroupMask& m = maxes[i];
    if (restricted_cent_count(t, m) != n) continue;
    Verdict v;
    v.subject = "maximal #" + std::to_string(i) + " of order " + std::to_string(m.size());
    const bool same_center = center_of(t, m) == zg;
    const PermGroup mg = as_group(m);
    const auto iso = isoclinic(mg, g, iso_cap);
    const bool is_iso = iso.status == IsoclinismStatus::Isoclinic;
    std::string which = same_center && is_iso ? "both" : same_center ? "Z(M) = Z(G)" : is_iso ? "isoclinic" : "neither";
    if (!same_center && iso.status == IsoclinismStatus::Inconclusive) {
      v.skip("center-or-isoclinic", "inconclusive: " + iso.reason);
    } else {
      v.add("center-or-isoclinic", same_center || is_iso, which);
    }
    if (is_iso) v.add("witness-valid", validate_witness(mg, g, *iso.witness));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> check_small_n_theorem(const PermGroup& g, std::size_t lattice_cap, std::size_t iso_cap) {
  const CommutationTable t(g);
  const std::size_t n = cent_census(t).cent_count;
  if (n == 1) throw PreconditionFailed("check_small_n_theorem: group is abelian");
  if (n >= 6) return {};

  std::vector<Verdict> out;
  {
    Verdict v;
    v.subject = "G/Z(G)";
    const Quotient q = quotient(g, center(t));
    const PermGroup c2 = standard_family(Family::Cyclic, 2), c3 = standard_family(Family::Cyclic, 3);
    const TableGroup listed[] = {multiplication_table(direct_product(c2, c2)),
                                 multiplication_table(standard_family(Family::Symmetric, 3)),
                                 multiplication_table(direct_product(c3, c3))};
    const char* names[] = {"C2 x C2", "S3", "C3 x C3"};
    std::string match = "none";
    for (int i = 0; i < 3; ++i)
      if (find_isomorphism(q.table, listed[i])) match = names[i];
    v.add("listed-quotient", match != "none", match);
    out.push_back(std::move(v));
  }
  const auto lattice = all_subgroups(g, lattice_cap);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const SubgroupMask& h = lattice[i];
    if (restricted_cent_count(t, h) != n) continue;
    Verdict v;
    v.subject = "subgroup #" + std::to_string(i) + " of order " + std::to_string(h.size());
    add_isoclinic_clause(v, "isoclinic", as_group(h), g, iso_cap);
    out.push_back(std::move(v));
  }
  return out;
}

bool central_quotient_is_simple(const PermGroup& g) {
  const Quotient q = quotient(g, center(g));
  const TableGroup& t = q.table;
  const std::size_t k = t.size();
  if (k == 1) return false;
  std::vector<char> done(k, 0);
  done[t.identity()] = 1;
  for (Index x = 0; x < k; ++x) {
    if (done[x]) continue;
    std::vector<Index> conjugates;
    for (Index y = 0; y < k; ++y) {
      const Index c = t.mul(t.mul(y, x), t.inverse(y));
      if (!done[c]) {
        done[c] = 1;
        conjugates.push_back(c);
      }
    }
    // Normal closure of the class of x.
    std::vector<Index> gens;
    std::vector<char> span = table_generate(t, gens);
    for (auto c : conjugates) {
      if (span[c]) continue;
      gens.push_back(c);
      span = table_generate(t, gens);
    }
    if (static_cast<std::size_t>(std::count(span.begin(), span.end(), 1)) != k) return false;
  }
  return true;
}

Verdict check_gz_simple_proposition(const PermGroup& g, std::size_t iso_cap) {
  Verdict v;
  v.subject = "G and G'";
  v.hypothesis_met = central_quotient_is_simple(g);
  if (!v.hypothesis_met) return v;

  const CommutationTable t(g);
  const SubgroupMask whole = SubgroupMask::whole(g);
  const SubgroupMask d1 = derived_subgroup(g, whole);
  const SubgroupMask d2 = derived_subgroup(g, d1);
  v.add("derived-perfect", d1 == d2, count_detail(d1.size(), d2.size()));
  const SubgroupMask lhs = intersect(center(t), d1);
  const SubgroupMask rhs = center_of(t, d1);
  v.add("center-of-derived", lhs == rhs, count_detail(lhs.size(), rhs.size()));
  add_isoclinic_clause(v, "isoclinic", g, as_group(d1), iso_cap);
  return v;
}

}  // namespace nacent
