// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nacent/census.hpp"
#include "nacent/commands.hpp"
#include "nacent/constructors.hpp"
#include "nacent/corpus.hpp"
#include "nacent/isoclinism.hpp"
#include "nacent/spec_parser.hpp"
#include "oracle/naive.hpp"

using namespace nacent;

namespace {

// Budgets in seconds. Counts are exact: tolerance 0.
constexpr double kBudgetA5 = 1, kBudgetPsl8 = 1, kBudgetA7 = 30, kBudgetPsl23 = 60, kBudgetPsl13 = 5,
                 kBudgetPsu = 120, kBudgetD40 = 1;
constexpr double kBudgetSweep = 300;
constexpr double kBudgetCounterexample = 1;
constexpr double kBudgetLemmaSuite = 300;
constexpr double kBudgetSimpleQuotient = 120;
constexpr double kBudgetBound = 120;
constexpr std::size_t kMinBoundGroups = 20;
constexpr std::size_t kOracleMaxOrder = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED ") + what;
  }
};

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome census_row(const char* label, const std::function<PermGroup()>& make, std::size_t cent, std::size_t nacent,
                   double budget) {
  Outcome o;
  const auto t = Clock::now();
  const CensusReport r = cent_census(make());
  const double s = seconds_since(t);
  std::ostringstream what;
  what << label;
  if (cent != SIZE_MAX) what << " cent " << r.cent_count;
  if (nacent != SIZE_MAX) what << " nacent " << r.nacent_count;
  what << " in " << fmt(s);
  const bool exact = (cent == SIZE_MAX || r.cent_count == cent) && (nacent == SIZE_MAX || r.nacent_count == nacent);
  o.require(exact && s < budget, what.str());
  return o;
}

Outcome merge(const std::vector<Outcome>& parts) {
  Outcome o;
  for (const auto& p : parts) o.require(p.pass, p.detail);
  return o;
}

Outcome c1() {
  std::vector<Outcome> rows;
  rows.push_back(census_row("A5", [] { return standard_family(Family::Alternating, 5); }, 22, 1, kBudgetA5));
  rows.push_back(census_row("PSL(2,8)", [] { return psl2(8); }, 74, 1, kBudgetPsl8));
  rows.push_back(census_row("A7", [] { return standard_family(Family::Alternating, 7); }, 807, 141, kBudgetA7));
  rows.push_back(census_row("PSL(2,23)", [] { return psl2(23); }, 807, 254, kBudgetPsl23));
  rows.push_back(census_row("PSL(2,13)", [] { return psl2(13); }, 275, 92, kBudgetPsl13));
  rows.push_back(census_row("PSU(3,3)", [] { return psu3(3); }, SIZE_MAX, 92, kBudgetPsu));
  rows.push_back(census_row("D(40) order 80", [] { return standard_family(Family::Dihedral, 40); }, 22, SIZE_MAX,
                            kBudgetD40));
  Outcome o = merge(rows);
  o.detail += "; D(20) order 40 cent " + std::to_string(cent_census(standard_family(Family::Dihedral, 20)).cent_count);
  return o;
}

Outcome c2() {
  Outcome o;
  const auto t = Clock::now();
  std::size_t agree = 0;
  const std::int64_t qs[] = {7, 8, 9, 11, 13, 16, 17, 23, 25};
  for (auto q : qs) {
    const std::uint64_t brute = cent_census(psl2(q)).nacent_count;
    const std::uint64_t formula = psl2_nacent_formula(static_cast<std::uint64_t>(q));
    if (brute == formula) {
      ++agree;
    } else {
      o.require(false, "q=" + std::to_string(q) + " brute " + std::to_string(brute) + " formula " +
                           std::to_string(formula));
    }
  }
  const double s = seconds_since(t);
  o.require(agree == std::size(qs) && s < kBudgetSweep,
            std::to_string(agree) + "/" + std::to_string(std::size(qs)) + " q agree in " + fmt(s));
  return o;
}

Outcome c3() {
  Outcome o;
  const PermGroup u = psu3(3);
  const PermGroup l = psl2(13);
  const auto t = Clock::now();
  const std::size_t nu = cent_census(u).nacent_count, nl = cent_census(l).nacent_count;
  const IsomorphismResult iso = find_isomorphism(u, l);
  const double s = seconds_since(t);
  o.require(nu == nl && nu == 92, "nacent " + std::to_string(nu) + " = " + std::to_string(nl));
  o.require(!iso.map && iso.certificate == IsoCertificate::DifferentOrder,
            "not isomorphic, orders " + std::to_string(u.order()) + " vs " + std::to_string(l.order()));
  o.require(s < kBudgetCounterexample, "census and search in " + fmt(s) + " beyond construction");
  return o;
}

Outcome suite_outcome(const SuiteReport& r, double s, double budget) {
  Outcome o;
  o.require(r.violations == 0 && r.instances > 0 && r.inconclusive == 0,
            r.name + ": " + std::to_string(r.groups) + " groups, " + std::to_string(r.instances) + " instances, " +
                std::to_string(r.violations) + " violations, " + std::to_string(r.inconclusive) + " inconclusive");
  for (const auto& f : r.failures) o.require(false, f);
  if (budget > 0) o.require(s < budget, "in " + fmt(s));
  return o;
}

template <class F>
Outcome timed_suite(F run, double budget) {
  const auto t = Clock::now();
  const SuiteReport r = run();
  return suite_outcome(r, seconds_since(t), budget);
}

Outcome c4(GroupCache& cache) {
  const auto specs = subgroup_corpus();
  return timed_suite([&] { return run_subgroup_suite(specs, cache, Caps{}); }, kBudgetLemmaSuite);
}

Outcome c5(GroupCache& cache) {
  return timed_suite([&] { return run_maximal_suite(subgroup_corpus(), cache, Caps{}); }, 0);
}

Outcome c6(GroupCache& cache) {
  return timed_suite([&] { return run_small_n_suite(subgroup_corpus(), cache, Caps{}); }, 0);
}

Outcome c7() {
  Outcome o;
  for (const char* spec : {"C(2) x A(5)", "C(3) x A(5)"}) {
    const auto t = Clock::now();
    const Verdict v = check_gz_simple_proposition(build(parse_spec(spec)));
    const double s = seconds_since(t);
    std::size_t evaluated = 0;
    for (const auto& c : v.clauses) evaluated += c.applicable;
    o.require(v.hypothesis_met && v.ok() && evaluated == v.clauses.size() && s < kBudgetSimpleQuotient,
              std::string(spec) + ": " + std::to_string(evaluated) + " clauses hold in " + fmt(s));
  }
  return o;
}

Outcome c8(GroupCache& cache) {
  const auto specs = nilpotent_corpus();
  Outcome o = timed_suite([&] { return run_bound_suite(specs, cache, Caps{}); }, kBudgetBound);
  o.require(specs.size() >= kMinBoundGroups, std::to_string(specs.size()) + " nilpotent groups");
  return o;
}

Outcome c9(GroupCache& cache) {
  std::set<std::string> specs;
  for (const auto& list : {oracle_corpus(), subgroup_corpus(), nilpotent_corpus(), simple_quotient_corpus()})
    for (const auto& s : list) specs.insert(s);
  Outcome o;
  std::size_t checked = 0, equal = 0;
  for (const auto& spec : specs) {
    const PermGroup& g = cache.get(spec);
    if (g.order() > kOracleMaxOrder) continue;
    ++checked;
    if (cent_census(g) == oracle::census(oracle::elements(g)))
      ++equal;
    else
      o.require(false, spec + " differs");
  }
  o.require(equal == checked && checked > 0,
            std::to_string(equal) + "/" + std::to_string(checked) + " groups of order <= 200 match");
  return o;
}

Outcome c10() {
  CommandOptions opts;
  opts.json = true;
  std::ostringstream a, b, err;
  const int ca = cmd_verify_paper(opts, a, err);
  const int cb = cmd_verify_paper(opts, b, err);
  Outcome o;
  o.require(ca == kExitOk && cb == kExitOk, "both runs exit 0");
  o.require(!a.str().empty() && a.str() == b.str(), std::to_string(a.str().size()) + " bytes identical");
  return o;
}

}  // namespace

int main() {
  GroupCache cache;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exact census reproduction", c1},
      {"nacent formula sweep", c2},
      {"counterexample integrity", c3},
      {"subgroup census suite", [&] { return c4(cache); }},
      {"maximal subgroup suite", [&] { return c5(cache); }},
      {"small-n suite", [&] { return c6(cache); }},
      {"simple central quotient", c7},
      {"derived length bound", [&] { return c8(cache); }},
      {"oracle equivalence", [&] { return c9(cache); }},
      {"determinism", c10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %2zu %-26s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
