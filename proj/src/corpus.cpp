#include "nacent/corpus.hpp"

#include <algorithm>

#include "nacent/census.hpp"
#include "nacent/errors.hpp"
#include "nacent/isoclinism.hpp"
#include "nacent/spec_parser.hpp"
#include "nacent/structure.hpp"

namespace nacent {

namespace {

std::string failed_clauses(const Verdict& v) {
  std::string out;
  for (const auto& c : v.clauses)
    if (c.applicable && !c.holds) out += (out.empty() ? "" : ", ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  return out;
}

void tally(SuiteReport& r, const std::string& spec, const Verdict& v) {
  if (!v.hypothesis_met) return;
  ++r.instances;
  for (const auto& c : v.clauses)
    if (!c.applicable) {
      ++r.inconclusive;
      r.notes.push_back(spec + ": " + v.subject + ": " + c.name + " " + c.detail);
    }
  if (!v.ok()) {
    ++r.violations;
    r.failures.push_back(spec + ": " + v.subject + ": " + failed_clauses(v));
  }
}

template <class F>
SuiteReport for_each_group(std::string name, const std::vector<std::string>& specs, GroupCache& cache, F&& body) {
  SuiteReport r;
  r.name = std::move(name);
  for (const auto& spec : specs) {
    try {
      const PermGroup& g = cache.get(spec);
      ++r.groups;
      body(r, spec, g);
    } catch (const CapExceeded& e) {
      ++r.inconclusive;
      r.notes.push_back(spec + ": " + e.what());
    }
  }
  return r;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

const PermGroup& GroupCache::get(const std::string& spec) {
  auto it = groups_.find(spec);
  if (it == groups_.end())
    it = groups_.emplace(spec, std::make_unique<PermGroup>(build(parse_spec(spec), cap_))).first;
  return *it->second;
}

std::vector<std::string> subgroup_corpus() {
  return {"S(3)",       "D(4)",      "D(5)",      "D(6)",      "D(7)",      "D(8)",      "D(9)",
          "D(10)",      "D(11)",     "D(12)",     "Q(2)",      "Q(3)",      "Q(4)",      "A(4)",
          "S(4)",       "A(5)",      "H(3)",      "C(2) x A(5)", "C(2) x D(4)", "C(3) x S(3)", "D(4) x C(3)",
          "Q(2) x C(2)", "C(2) x S(4)", "D(8) x C(3)", "C(4)",    "C(2) x C(2)"};
}

std::vector<std::string> nilpotent_corpus() {
  return {"D(4)",        "D(8)",        "D(16)",       "D(32)",       "D(64)",       "Q(2)",        "Q(4)",
          "Q(8)",        "H(3)",        "H(5)",        "D(4) x C(3)", "D(4) x H(3)", "Q(2) x C(3)", "D(8) x C(5)",
          "H(3) x C(2)", "H(3) x C(4)", "D(4) x D(4)", "D(4) x Q(2)", "Q(2) x H(3)", "D(8) x H(3)", "H(5) x C(2)",
          "D(4) x C(9)", "H(3) x H(3)"};
}

std::vector<std::string> oracle_corpus() {
  return {"C(1)",        "C(6)",        "C(2) x C(2)", "S(3)",        "D(4)",        "D(5)",        "D(6)",
          "D(8)",        "D(12)",       "D(20)",       "D(40)",       "D(50)",       "D(100)",      "Q(2)",
          "Q(3)",        "Q(4)",        "Q(8)",        "Q(12)",       "A(4)",        "S(4)",        "A(5)",
          "S(5)",        "H(3)",        "PSL2(4)",     "PSL2(5)",     "C(2) x A(5)", "C(3) x A(5)", "C(2) x S(4)",
          "D(4) x C(3)", "D(4) x D(4)", "D(8) x C(3)", "H(3) x C(2)", "Q(2) x Q(2)", "S(3) x S(3)", "A(4) x C(3)",
          "H(3) x S(3)"};
}

std::vector<std::string> simple_quotient_corpus() { return {"A(5)", "C(2) x A(5)", "C(3) x A(5)", "S(3)"}; }

std::vector<std::string> conjecture_corpus(std::size_t max_order) {
  std::vector<std::pair<std::size_t, std::string>> items;
  auto add = [&](std::size_t order, std::string spec) {
    if (order <= max_order) items.emplace_back(order, std::move(spec));
  };
  auto leaf = [](const char* name, std::size_t n) { return std::string(name) + "(" + std::to_string(n) + ")"; };

  std::vector<std::pair<std::size_t, std::string>> nonabelian;
  for (std::size_t n = 1; n <= max_order; ++n) add(n, leaf("C", n));
  for (std::size_t n = 3; 2 * n <= max_order; ++n) {
    add(2 * n, leaf("D", n));
    nonabelian.emplace_back(2 * n, leaf("D", n));
  }
  for (std::size_t n = 2; 4 * n <= max_order; ++n) {
    add(4 * n, leaf("Q", n));
    nonabelian.emplace_back(4 * n, leaf("Q", n));
  }
  for (std::size_t n = 3; factorial(n) <= max_order; ++n) {
    if (n > 3) add(factorial(n), leaf("S", n));
    nonabelian.emplace_back(factorial(n), leaf("S", n));
  }
  for (std::size_t n = 4; factorial(n) / 2 <= max_order; ++n) {
    add(factorial(n) / 2, leaf("A", n));
    nonabelian.emplace_back(factorial(n) / 2, leaf("A", n));
  }
  for (std::size_t p : {3, 5, 7}) {
    add(p * p * p, leaf("H", p));
    nonabelian.emplace_back(p * p * p, leaf("H", p));
  }
  for (std::size_t k = 2; k <= 3; ++k)
    for (const auto& [order, spec] : nonabelian) add(k * order, leaf("C", k) + " x " + spec);

  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  std::vector<std::string> out;
  for (auto& [order, spec] : items) out.push_back(std::move(spec));
  return out;
}

SuiteReport run_subgroup_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps& caps) {
  std::size_t equal = 0;
  SuiteReport report =
      for_each_group("subgroup-census", specs, cache, [&](SuiteReport& r, const std::string& spec, const PermGroup& g) {
        const auto lattice = all_subgroups(g, caps.lattice);
        const CommutationTable t(g);
        for (const auto& h : lattice) {
          Verdict v = check_lemma_pi(t, h, caps.isoclinism);
          if (v.hypothesis_met) ++equal;
          // The unconditional clauses count for every subgroup.
          v.hypothesis_met = true;
          tally(r, spec, v);
        }
      });
  report.notes.push_back(std::to_string(equal) + " subgroups with |cent(H)| = |cent(G)|");
  return report;
}

SuiteReport run_ac_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps& caps) {
  return for_each_group("ac-criterion", specs, cache, [&](SuiteReport& r, const std::string& spec, const PermGroup& g) {
    const CommutationTable t(g);
    const CensusReport c = cent_census(t);
    if (c.is_abelian) return;
    bool premise = true;
    for (const auto& h : all_subgroups(g, caps.lattice)) {
      const std::size_t nh = restricted_cent_count(t, h);
      if (nh != 1 && nh != c.cent_count) {
        premise = false;
        break;
      }
    }
    if (!premise) return;
    Verdict v;
    v.subject = "non-abelian subgroups share |cent(G)| = " + std::to_string(c.cent_count);
    v.add("ac-group", c.is_ac, "nacent " + std::to_string(c.nacent_count));
    tally(r, spec, v);
  });
}

SuiteReport run_maximal_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps& caps) {
  return for_each_group("maximal-subgroup", specs, cache, [&](SuiteReport& r, const std::string& spec, const PermGroup& g) {
    for (const auto& v : check_maximal_proposition(g, caps.lattice, caps.isoclinism)) tally(r, spec, v);
  });
}

SuiteReport run_small_n_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps& caps) {
  return for_each_group("small-n", specs, cache, [&](SuiteReport& r, const std::string& spec, const PermGroup& g) {
    if (cent_census(g, {caps.group}).is_abelian) return;
    for (const auto& v : check_small_n_theorem(g, caps.lattice, caps.isoclinism)) tally(r, spec, v);
  });
}

SuiteReport run_simple_quotient_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps& caps) {
  return for_each_group("simple-central-quotient", specs, cache,
                        [&](SuiteReport& r, const std::string& spec, const PermGroup& g) {
                          const Verdict v = check_gz_simple_proposition(g, caps.isoclinism);
                          if (!v.hypothesis_met) r.notes.push_back(spec + ": G/Z(G) not simple");
                          tally(r, spec, v);
                        });
}

SuiteReport run_bound_suite(const std::vector<std::string>& specs, GroupCache& cache, const Caps&) {
  return for_each_group("derived-length-bound", specs, cache, [&](SuiteReport& r, const std::string& spec, const PermGroup& g) {
    Verdict v;
    try {
      const BoundReport b = derived_length_bound(g);
      v.subject = "n " + std::to_string(b.n) + ", d " + std::to_string(b.actual_d);
      v.add("d-le-proof-bound", b.actual_d <= b.proof_bound, std::to_string(b.proof_bound));
      v.add("d-le-stated-bound", static_cast<std::int64_t>(b.actual_d) <= b.stated_bound,
            std::to_string(b.stated_bound));
      v.add("cent-product", b.cent_product == b.n, std::to_string(b.cent_product));
      for (const auto& c : b.components)
        if (!c.abelian)
          v.add("sylow-" + std::to_string(c.prime) + "-cent-ge-p+1", c.cent_count >= c.prime + 1,
                std::to_string(c.cent_count));
      if (b.stated_bound < static_cast<std::int64_t>(b.proof_bound))
        r.notes.push_back(spec + ": stated bound " + std::to_string(b.stated_bound) + " below proof bound " +
                          std::to_string(b.proof_bound));
    } catch (const PreconditionFailed& e) {
      v.subject = "precondition";
      v.add("non-abelian-nilpotent", false, e.what());
    }
    tally(r, spec, v);
  });
}

}  // namespace nacent
