#pragma once

// Deliberately slow reference implementations over std::set<Permutation>.
// They share nothing with the library beyond the Permutation type and compose.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "nacent/census.hpp"
#include "nacent/perm.hpp"

namespace oracle {

using nacent::compose;
using nacent::Permutation;
using Set = std::set<Permutation>;

inline Set closure(const std::vector<Permutation>& gens, std::size_t degree) {
  Set out{Permutation::identity(degree)};
  std::vector<Permutation> frontier(out.begin(), out.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        Permutation y = compose(x, s);
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return out;
}

inline Set elements(const nacent::PermGroup& g) { return closure(g.generators(), g.degree()); }

inline bool commute(const Permutation& a, const Permutation& b) { return compose(a, b) == compose(b, a); }

inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

inline Set centralizer(const Set& g, const Permutation& x) {
  Set out;
  for (const auto& y : g)
    if (commute(x, y)) out.insert(y);
  return out;
}

inline Set center(const Set& g) {
  Set out;
  for (const auto& x : g)
    if (std::all_of(g.begin(), g.end(), [&](const Permutation& y) { return commute(x, y); })) out.insert(x);
  return out;
}

inline bool abelian(const Set& s) {
  for (const auto& a : s)
    for (const auto& b : s)
      if (!commute(a, b)) return false;
  return true;
}

inline bool closed(const Set& s) {
  for (const auto& a : s)
    for (const auto& b : s)
      if (!s.count(compose(a, b))) return false;
  return !s.empty();
}

inline std::size_t degree_of(const Set& g) { return g.begin()->degree(); }

inline Set generated(const std::vector<Permutation>& gens, std::size_t degree) { return closure(gens, degree); }

inline Set derived(const Set& h) {
  std::vector<Permutation> comms;
  for (const auto& a : h)
    for (const auto& b : h) comms.push_back(commutator(a, b));
  return closure(comms, degree_of(h));
}

inline std::set<Set> distinct_centralizers(const Set& g) {
  std::set<Set> out;
  for (const auto& x : g) out.insert(centralizer(g, x));
  return out;
}

/// Census of H as a group in its own right.
inline nacent::CensusReport census(const Set& h) {
  nacent::CensusReport r;
  r.order = h.size();
  r.center_size = center(h).size();
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& c : distinct_centralizers(h)) {
    ++r.cent_count;
    ++sizes[c.size()];
    if (abelian(c))
      ++r.abelian_cent_count;
    else
      ++r.nacent_count;
  }
  r.is_abelian = r.cent_count == 1;
  r.is_ac = !r.is_abelian && r.nacent_count == 1;
  for (const auto& [s, n] : sizes) r.centralizer_sizes.emplace_back(s, n);
  return r;
}

/// |{C_G(h) : h in H}|.
inline std::size_t relative_count(const Set& g, const Set& h) {
  std::set<Set> out;
  for (const auto& x : h) out.insert(centralizer(g, x));
  return out.size();
}

inline Set product(const Set& a, const Set& b) {
  Set out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(compose(x, y));
  return out;
}

inline Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

/// Every subgroup, by trying every subset that contains the identity.
/// Only for |G| <= 12 or so.
inline std::set<Set> subgroups_by_subsets(const Set& g) {
  const std::vector<Permutation> elems(g.begin(), g.end());
  const Permutation id = Permutation::identity(degree_of(g));
  std::set<Set> out;
  const std::size_t k = elems.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Set s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s.insert(elems[i]);
    if (!s.count(id)) continue;
    if (closed(s)) out.insert(std::move(s));
  }
  return out;
}

/// Every subgroup generated by at most three elements.
inline std::set<Set> subgroups_by_triples(const Set& g) {
  const std::vector<Permutation> elems(g.begin(), g.end());
  const std::size_t deg = degree_of(g);
  std::set<Set> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      for (std::size_t l = j; l < elems.size(); ++l) out.insert(closure({elems[i], elems[j], elems[l]}, deg));
  return out;
}

/// Cosets of a normal subgroup N, each as a sorted set, indexed in set order.
struct Cosets {
  std::vector<Set> classes;
  std::map<Permutation, std::size_t> of;
};

inline Cosets cosets(const Set& g, const Set& n) {
  std::set<Set> all;
  for (const auto& x : g) {
    Set c;
    for (const auto& y : n) c.insert(compose(x, y));
    all.insert(std::move(c));
  }
  Cosets out;
  out.classes.assign(all.begin(), all.end());
  for (std::size_t i = 0; i < out.classes.size(); ++i)
    for (const auto& x : out.classes[i]) out.of[x] = i;
  return out;
}

/// Isoclinism by trying every bijection of the central quotients. Only for
/// central quotients of order <= 8.
inline bool isoclinic(const Set& g, const Set& s) {
  const Cosets cg = cosets(g, center(g)), cs = cosets(s, center(s));
  const std::size_t k = cg.classes.size();
  if (k != cs.classes.size()) return false;
  const Set dg = derived(g), ds = derived(s);
  if (dg.size() != ds.size()) return false;

  auto rep = [](const Cosets& c, std::size_t i) { return *c.classes[i].begin(); };
  std::vector<std::size_t> alpha(k);
  for (std::size_t i = 0; i < k; ++i) alpha[i] = i;
  do {
    bool hom = true;
    for (std::size_t a = 0; a < k && hom; ++a)
      for (std::size_t b = 0; b < k && hom; ++b) {
        const std::size_t ab = cg.of.at(compose(rep(cg, a), rep(cg, b)));
        const std::size_t img = cs.of.at(compose(rep(cs, alpha[a]), rep(cs, alpha[b])));
        hom = alpha[ab] == img;
      }
    if (!hom) continue;

    // beta on commutators, read off any representatives.
    std::map<Permutation, Permutation> beta;
    bool ok = true;
    for (const auto& x : g)
      for (const auto& y : g) {
        const Permutation c = commutator(x, y);
        const Permutation d = commutator(rep(cs, alpha[cg.of.at(x)]), rep(cs, alpha[cg.of.at(y)]));
        auto [it, fresh] = beta.emplace(c, d);
        if (!fresh && it->second != d) ok = false;
      }
    if (!ok) continue;
    // Extend to products of commutators and require an isomorphism.
    bool grew = true;
    while (grew && ok) {
      grew = false;
      const auto snapshot = beta;
      for (const auto& [a, fa] : snapshot)
        for (const auto& [b, fb] : snapshot) {
          const Permutation ab = compose(a, b), img = compose(fa, fb);
          auto [it, fresh] = beta.emplace(ab, img);
          if (fresh)
            grew = true;
          else if (it->second != img)
            ok = false;
        }
    }
    if (!ok || beta.size() != dg.size()) continue;
    Set image;
    for (const auto& [a, fa] : beta) image.insert(fa);
    if (image == ds) return true;
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return false;
}

}  // namespace oracle
