#include <random>

#include "doctest.h"
#include "nacent/census.hpp"
#include "nacent/constructors.hpp"
#include "nacent/corpus.hpp"
#include "nacent/errors.hpp"
#include "nacent/spec_parser.hpp"
#include "nacent/structure.hpp"
#include "oracle/naive.hpp"

using namespace nacent;

namespace {

PermGroup g_of(const char* spec) { return build(parse_spec(spec)); }

oracle::Set as_set(const SubgroupMask& m) {
  oracle::Set out;
  for (auto i : m.members()) out.insert(m.parent().element(i));
  return out;
}

}  // namespace

TEST_CASE("centralizers") {
  const PermGroup s3 = g_of("S(3)");
  CHECK(centralizer(s3, s3.identity()).size() == 6);
  const Index t = *s3.index_of(Permutation::from_cycles(3, {{0, 1}}));
  const SubgroupMask c = centralizer(s3, t);
  CHECK(c.size() == 2);
  CHECK(c.contains(t));
  CHECK(c.is_subgroup());

  const PermGroup d4 = g_of("D(4)");
  const Index r = *d4.index_of(Permutation::from_cycles(4, {{0, 1, 2, 3}}));
  CHECK(as_set(centralizer(d4, r)) == oracle::centralizer(oracle::elements(d4), d4.element(r)));
  CHECK(centralizer(d4, r).size() == 4);
  CHECK_THROWS_AS(centralizer(d4, 8), std::out_of_range);
}

TEST_CASE("centers") {
  CHECK(center(g_of("C(6)")).size() == 6);
  CHECK(center(g_of("A(5)")).size() == 1);
  const PermGroup d4 = g_of("D(4)");
  CHECK(center(d4).size() == 2);
  CHECK(as_set(center(d4)) == oracle::center(oracle::elements(d4)));
  CHECK(center(CommutationTable(d4)) == center(d4));
}

TEST_CASE("census examples") {
  const CensusReport a5 = cent_census(g_of("A(5)"));
  CHECK(a5.cent_count == 22);
  CHECK(a5.nacent_count == 1);
  CHECK(a5.is_ac);
  const CensusReport c6 = cent_census(g_of("C(6)"));
  CHECK(c6.cent_count == 1);
  CHECK(c6.nacent_count == 0);
  CHECK(c6.is_abelian);
  CHECK_FALSE(c6.is_ac);
  const CensusReport p13 = cent_census(g_of("PSL2(13)"));
  CHECK(p13.cent_count == 275);
  CHECK(p13.nacent_count == 92);
  CHECK(p13.abelian_cent_count == 13 * 13 + 13 + 1);
  CHECK_THROWS_AS(cent_census(g_of("A(5)"), {50}), CapExceeded);
}

TEST_CASE("property: census agrees with the naive oracle") {
  GroupCache cache;
  for (const auto& spec : oracle_corpus()) {
    const PermGroup& g = cache.get(spec);
    REQUIRE(g.order() <= 200);
    CHECK_MESSAGE(cent_census(g) == oracle::census(oracle::elements(g)), spec);
  }
}

TEST_CASE("property: report invariants") {
  GroupCache cache;
  for (const auto& spec : oracle_corpus()) {
    const PermGroup& g = cache.get(spec);
    const CensusReport r = cent_census(g);
    CHECK(r.cent_count == r.nacent_count + r.abelian_cent_count);
    CHECK(r.is_abelian == (r.cent_count == 1));
    if (!r.is_abelian) CHECK(r.is_ac == (r.nacent_count == 1));
    REQUIRE_FALSE(r.centralizer_sizes.empty());
    CHECK(r.centralizer_sizes.back() == std::pair<std::size_t, std::size_t>{g.order(), 1});

    const CommutationTable t(g);
    Bitset meet(g.order());
    meet.set_all();
    for (const auto& c : distinct_centralizers(t)) meet &= c.bits();
    CHECK(meet == center(g).bits());
  }
}

TEST_CASE("property: H ∩ Z(G) lies in Z(H)") {
  for (const char* spec : {"S(4)", "D(6)", "Q(4)", "C(2) x D(4)", "A(4) x C(3)"}) {
    const PermGroup g = g_of(spec);
    const SubgroupMask z = center(g);
    for (const auto& h : all_subgroups(g)) {
      const PermGroup hg = as_group(h);
      const SubgroupMask zh = transport(center(hg), g);
      REQUIRE(intersect(h, z).bits().is_subset_of(zh.bits()));
    }
  }
}

TEST_CASE("relative census") {
  const PermGroup s4 = g_of("S(4)");
  const auto whole = relative_census(s4, SubgroupMask::whole(s4));
  CHECK(whole.cent_H == whole.cent_G);
  CHECK(whole.cent_G_H == whole.cent_G);
  const auto triv = relative_census(s4, SubgroupMask::trivial(s4));
  CHECK(triv.cent_H == 1);
  CHECK(triv.cent_G_H == 1);

  // A Sylow 2-subgroup: the dihedral subgroup of order 8.
  const Index gens[] = {*s4.index_of(Permutation::from_cycles(4, {{0, 1, 2, 3}})),
                        *s4.index_of(Permutation::from_cycles(4, {{0, 2}}))};
  const SubgroupMask p = generate(s4, gens);
  REQUIRE(p.size() == 8);
  const auto rc = relative_census(s4, p);
  const auto gs = oracle::elements(s4);
  const auto hs = as_set(p);
  CHECK(rc.cent_H == oracle::census(hs).cent_count);
  CHECK(rc.cent_G_H == oracle::relative_count(gs, hs));
  CHECK(rc.cent_G == oracle::census(gs).cent_count);
  CHECK(rc.cent_H <= rc.cent_G_H);
  CHECK(rc.cent_G_H <= rc.cent_G);

  Bitset bad(s4.order());
  bad.set(s4.identity());
  bad.set(gens[0]);
  CHECK_THROWS_AS(relative_census(s4, SubgroupMask(s4, bad)), PreconditionFailed);
}

TEST_CASE("nacent formula") {
  CHECK(psl2_nacent_formula(13) == 92);
  CHECK(psl2_nacent_formula(8) == 1);
  CHECK(psl2_nacent_formula(23) == 254);
  CHECK_THROWS_AS(psl2_nacent_formula(5), std::invalid_argument);
  CHECK_THROWS_AS(psl2_nacent_formula(4), std::invalid_argument);
  CHECK_THROWS_AS(psl2_nacent_formula(6), std::invalid_argument);
  CHECK_THROWS_AS(psl2_nacent_formula(10), std::invalid_argument);
  CHECK_THROWS_AS(psl2_nacent_formula(12), std::invalid_argument);
}

TEST_CASE("property: nacent formula matches brute force") {
  for (std::int64_t q : {7, 8, 9, 11, 13, 16, 17}) {
    CHECK_MESSAGE(cent_census(psl2(q)).nacent_count == psl2_nacent_formula(static_cast<std::uint64_t>(q)), "q = ", q);
  }
}

TEST_CASE("property: relabelling points leaves the census unchanged") {
  std::mt19937 rng(2024);
  for (const char* spec : {"S(4)", "D(9)", "Q(3)", "PSL2(7)", "H(3) x C(2)"}) {
    const PermGroup g = g_of(spec);
    std::vector<Point> im(g.degree());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = static_cast<Point>(i);
    std::shuffle(im.begin(), im.end(), rng);
    const Permutation c(im);
    std::vector<Permutation> gens;
    for (const auto& s : g.generators()) gens.push_back(relabel(s, c));
    CHECK_MESSAGE(cent_census(PermGroup::close(g.degree(), gens)) == cent_census(g), spec);
  }
}

TEST_CASE("property: centralizer counts multiply over direct products") {
  const char* parts[] = {"S(3)", "D(4)", "Q(2)", "C(4)", "A(4)", "H(3)"};
  for (const char* a : parts)
    for (const char* b : parts) {
      const PermGroup ga = g_of(a), gb = g_of(b);
      CHECK_MESSAGE(cent_census(direct_product(ga, gb)).cent_count ==
                        cent_census(ga).cent_count * cent_census(gb).cent_count,
                    a, " x ", b);
    }
}

TEST_CASE("property: commutation table is independent of thread count") {
  const PermGroup g = g_of("PSL2(11)");
  const CommutationTable one(g, 1), many(g, 4);
  for (Index i = 0; i < g.order(); ++i) REQUIRE(one.row(i) == many.row(i));
  CHECK(cent_census(one) == cent_census(many));
}
