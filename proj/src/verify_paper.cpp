#include <algorithm>
#include <functional>
#include <map>

#include "nacent/census.hpp"
#include "nacent/commands.hpp"
#include "nacent/constructors.hpp"
#include "nacent/isoclinism.hpp"

namespace nacent {

namespace {

class RowBuilder {
 public:
  RowBuilder(const VerifyOptions& o, GroupCache& cache) : options_(o), cache_(cache) {}

  // `compute` returns the computed value and may extend the note.
  void add(std::string claim, std::string location, std::string expected,
           const std::function<std::string(std::string&)>& compute, bool reinterpreted = false, std::string note = {}) {
    VerdictRow row;
    row.claim = std::move(claim);
    row.location = std::move(location);
    const auto o = options_.expected_overrides.find(row.claim);
    row.expected = o == options_.expected_overrides.end() ? std::move(expected) : o->second;
    row.note = std::move(note);
    try {
      row.computed = compute(row.note);
      row.status = row.computed != row.expected ? "mismatch" : reinterpreted ? "reinterpreted" : "match";
    } catch (const std::exception& e) {
      row.computed = "-";
      row.status = "inconclusive";
      row.note += (row.note.empty() ? "" : "; ") + std::string(e.what());
    }
    rows_.push_back(std::move(row));
  }

  const CensusReport& census(const std::string& spec) {
    auto it = census_.find(spec);
    if (it == census_.end()) it = census_.emplace(spec, cent_census(group(spec), {options_.caps.group})).first;
    return it->second;
  }
  const PermGroup& group(const std::string& spec) { return cache_.get(spec); }

  std::vector<VerdictRow> take() {
    std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) { return a.claim < b.claim; });
    return std::move(rows_);
  }

 private:
  const VerifyOptions& options_;
  GroupCache& cache_;
  std::map<std::string, CensusReport> census_;
  std::vector<VerdictRow> rows_;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::vector<VerdictRow> verify_rows(const VerifyOptions& options) {
  GroupCache cache(std::max<std::size_t>(options.caps.group, 1));
  RowBuilder rb(options, cache);
  const Caps& caps = options.caps;

  const std::string table = "cent/nacent comparison table";
  struct Named {
    const char* id;
    const char* spec;
    std::uint64_t cent;
    std::uint64_t nacent;
  };
  for (const Named& n : {Named{"A5", "A(5)", 22, 1}, Named{"PSL2-8", "PSL2(8)", 74, 1}, Named{"A7", "A(7)", 807, 141}}) {
    rb.add(std::string("cent-") + n.id, table, str(n.cent), [&](std::string&) { return str(rb.census(n.spec).cent_count); });
    rb.add(std::string("nacent-") + n.id, table, str(n.nacent),
           [&](std::string&) { return str(rb.census(n.spec).nacent_count); });
  }
  rb.add("cent-PSL2-23", table, "807", [&](std::string&) { return str(rb.census("PSL2(23)").cent_count); });
  rb.add(
      "nacent-PSL2-23", table, "254",
      [&](std::string& note) {
        note += "; nacent(PSL(2,7)) = " + str(rb.census("PSL2(7)").nacent_count);
        return str(rb.census("PSL2(23)").nacent_count);
      },
      true, "value printed under the name PSL(2,7); it is the PSL(2,23) value");

  const std::string lemma = "PSL(2,q) nacent lemma";
  rb.add("cent-PSL2-13", lemma + ", q = 1 mod 4", "275", [&](std::string&) { return str(rb.census("PSL2(13)").cent_count); },
         false, "(3q^2 + 3q + 4)/2 at q = 13");
  rb.add("abelian-cent-PSL2-13", lemma + ", q = 1 mod 4", "183",
         [&](std::string&) { return str(rb.census("PSL2(13)").abelian_cent_count); }, false, "q^2 + q + 1 at q = 13");
  rb.add("nacent-PSL2-13", lemma + ", q = 1 mod 4", "92",
         [&](std::string&) { return str(rb.census("PSL2(13)").nacent_count); });

  for (std::uint64_t q : {7, 8, 9, 11, 13, 16, 17, 23, 25}) {
    const bool third_case = q % 4 == 3;
    std::string id = "nacent-formula-q" + std::string(q < 10 ? "0" : "") + str(q);
    rb.add(
        id, lemma, str(psl2_nacent_formula(q)),
        [&, q](std::string&) { return str(rb.census("PSL2(" + str(q) + ")").nacent_count); }, third_case,
        third_case ? "third case stated for q = 2 mod 4, applied to q = 3 mod 4" : "");
  }

  const std::string counter = "PSU(3,3) counterexample";
  rb.add("nacent-PSU3-3", counter, "92", [&](std::string&) { return str(rb.census("PSU3(3)").nacent_count); });
  rb.add("counterexample-nacent-equal", counter, "92", [&](std::string&) {
    const auto a = rb.census("PSU3(3)").nacent_count, b = rb.census("PSL2(13)").nacent_count;
    return a == b ? str(a) : str(a) + " vs " + str(b);
  });
  rb.add(
      "counterexample-not-isomorphic", counter, "absent",
      [&](std::string& note) {
        const auto r = find_isomorphism(rb.group("PSU3(3)"), rb.group("PSL2(13)"), caps.group);
        note += "; orders " + str(rb.group("PSU3(3)").order()) + " and " + str(rb.group("PSL2(13)").order());
        if (r.certificate == IsoCertificate::Found) return std::string("found");
        return std::string(r.certificate == IsoCertificate::TooLarge ? "unknown" : "absent");
      },
      true, "printed as an order comparison with PSL(2,3); read as PSL(2,13)");

  const std::string question = "cent(G) = cent(S) question";
  rb.add(
      "cent-D40", question, "22",
      [&](std::string& note) {
        note += "; order-40 reading D(20) gives " + str(rb.census("D(20)").cent_count);
        return str(rb.census("D(40)").cent_count);
      },
      false, "dihedral group of order 80");
  auto not_isoclinic = [&](const char* a, const char* b) {
    return [&, a, b](std::string& note) {
      const auto r = isoclinic(rb.group(a), rb.group(b), caps.isoclinism);
      note += r.reason;
      return to_string(r.status);
    };
  };
  rb.add("not-isoclinic-A7-PSL2-23", question, "not-isoclinic", not_isoclinic("A(7)", "PSL2(23)"));
  rb.add("not-isoclinic-D40-A5", question, "not-isoclinic", not_isoclinic("D(40)", "A(5)"));

  auto suite = [&](const std::string& id, const std::string& location,
                   const std::function<SuiteReport()>& run) {
    rb.add("suite-" + id, location, "0", [&](std::string& note) {
      const SuiteReport r = run();
      note = str(r.groups) + " groups, " + str(r.instances) + " instances, " + str(r.inconclusive) + " inconclusive";
      return str(r.violations);
    });
  };
  suite("subgroup-census", "subgroup census lemma",
        [&] { return run_subgroup_suite(subgroup_corpus(), cache, caps); });
  suite("ac-criterion", "AC-group criterion", [&] { return run_ac_suite(subgroup_corpus(), cache, caps); });
  suite("maximal-subgroup", "maximal subgroup proposition",
        [&] { return run_maximal_suite(subgroup_corpus(), cache, caps); });
  suite("small-n", "n < 6 theorem", [&] { return run_small_n_suite(subgroup_corpus(), cache, caps); });
  suite("simple-central-quotient", "simple central quotient proposition",
        [&] { return run_simple_quotient_suite(simple_quotient_corpus(), cache, caps); });
  suite("derived-length-bound", "nilpotent derived length theorem",
        [&] { return run_bound_suite(nilpotent_corpus(), cache, caps); });

  return rb.take();
}

}  // namespace nacent
