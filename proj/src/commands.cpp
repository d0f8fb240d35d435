#include "nacent/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>

#include "json.hpp"

#include "nacent/census.hpp"
#include "nacent/constructors.hpp"
#include "nacent/errors.hpp"
#include "nacent/isoclinism.hpp"
#include "nacent/spec_parser.hpp"
#include "nacent/structure.hpp"

namespace nacent {

namespace {

using Json = nlohmann::ordered_json;

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }

void emit(std::ostream& out, const Json& record) { out << record.dump() << '\n'; }

// Aligned "key  value" lines; all values of a record share one column.
void emit_text(std::ostream& out, const Json& record) {
  std::size_t width = 0;
  for (const auto& [k, v] : record.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : record.items())
    out << std::left << std::setw(static_cast<int>(width + 2)) << k << (v.is_string() ? v.get<std::string>() : v.dump())
        << '\n';
}

template <class F>
int guarded(std::ostream& err, const std::string& subject, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << subject << ": " << e.what() << '\n';
  } catch (const CapExceeded& e) {
    err << "error: " << subject << ": " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << subject << ": " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << subject << ": " << e.what() << '\n';
  }
  return kExitInputError;
}

PermGroup build_checked(const std::string& text, const Caps& caps) {
  const GroupSpec spec = parse_spec(text);
  return build(spec, std::max<std::size_t>(caps.group, 1));
}

Json census_record(const std::string& spec, const CensusReport& c) {
  Json sizes = Json::array();
  for (const auto& [size, count] : c.centralizer_sizes) sizes.push_back({{"size", str(size)}, {"count", str(count)}});
  return Json{{"spec", spec},
              {"order", str(c.order)},
              {"center_size", str(c.center_size)},
              {"cent_count", str(c.cent_count)},
              {"nacent_count", str(c.nacent_count)},
              {"abelian_cent_count", str(c.abelian_cent_count)},
              {"is_ac", c.is_ac},
              {"is_abelian", c.is_abelian},
              {"centralizer_sizes", sizes}};
}

std::string sizes_text(const CensusReport& c) {
  std::string out;
  for (const auto& [size, count] : c.centralizer_sizes) out += (out.empty() ? "" : " ") + str(size) + "^" + str(count);
  return out;
}

Json verdict_record(const std::string& check, const Verdict& v) {
  Json clauses = Json::array();
  for (const auto& c : v.clauses)
    clauses.push_back({{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}, {"detail", c.detail}});
  return Json{{"check", check},
              {"subject", v.subject},
              {"hypothesis_met", v.hypothesis_met},
              {"ok", v.ok()},
              {"clauses", clauses}};
}

std::string verdict_text(const std::string& check, const Verdict& v) {
  std::string line = std::string(v.ok() ? "[ok]   " : "[FAIL] ") + check + "  " + v.subject;
  if (!v.hypothesis_met) line += "  (hypothesis not met)";
  for (const auto& c : v.clauses) {
    line += "  " + c.name + "=" + (!c.applicable ? "skipped" : c.holds ? "yes" : "no");
    if (!c.detail.empty()) line += " [" + c.detail + "]";
  }
  return line;
}

}  // namespace

int cmd_census(const std::string& spec, const CommandOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, spec, [&] {
    const PermGroup g = build_checked(spec, o.caps);
    const CensusReport c = cent_census(g, {o.caps.group});
    Json record = census_record(spec, c);
    if (o.json) {
      emit(out, record);
    } else {
      record["centralizer_sizes"] = sizes_text(c);
      emit_text(out, record);
    }
    return int{kExitOk};
  });
}

int cmd_isoclinic(const std::string& a, const std::string& b, const CommandOptions& o, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, a + " / " + b, [&] {
    const PermGroup ga = build_checked(a, o.caps);
    const PermGroup gb = build_checked(b, o.caps);
    const IsoclinismResult r = isoclinic(ga, gb, o.caps.isoclinism);
    Json record{{"a", a}, {"b", b}, {"status", to_string(r.status)}, {"reason", r.reason},
                {"alphas_tried", str(r.alphas_tried)}};
    int code = kExitOk;
    if (r.witness) {
      const bool valid = validate_witness(ga, gb, *r.witness);
      if (!valid) code = kExitViolation;
      Json alpha = Json::array();
      for (auto x : r.witness->alpha) alpha.push_back(str(std::uint64_t{x}));
      record["witness_valid"] = valid;
      record["alpha"] = alpha;
      record["beta_size"] = str(r.witness->beta.size());
    }
    if (o.json) {
      emit(out, record);
    } else {
      if (record.contains("alpha")) {
        std::string text;
        for (const auto& x : record["alpha"]) text += (text.empty() ? "" : " ") + x.get<std::string>();
        record["alpha"] = text;
      }
      emit_text(out, record);
    }
    return code;
  });
}

int cmd_bound(const std::string& spec, const CommandOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, spec, [&] {
    const PermGroup g = build_checked(spec, o.caps);
    const BoundReport b = derived_length_bound(g);
    Json comps = Json::array();
    std::string comps_text;
    for (const auto& c : b.components) {
      comps.push_back({{"prime", str(c.prime)},
                       {"order", str(c.order)},
                       {"cent_count", str(c.cent_count)},
                       {"abelian", c.abelian},
                       {"log_bound", c.abelian ? std::string("-") : str(c.log_bound)}});
      comps_text += (comps_text.empty() ? "" : "; ") + ("P" + str(c.prime) + " order " + str(c.order) + " cent " +
                                                        str(c.cent_count) + (c.abelian ? " abelian" : ""));
    }
    const bool holds = b.actual_d <= b.proof_bound && static_cast<std::int64_t>(b.actual_d) <= b.stated_bound &&
                       b.cent_product == b.n;
    Json record{{"spec", spec},
                {"n", str(b.n)},
                {"p", str(b.p)},
                {"m", str(b.m)},
                {"stated_bound", str(b.stated_bound)},
                {"proof_bound", str(b.proof_bound)},
                {"actual_d", str(b.actual_d)},
                {"excluded_prime", str(b.excluded_prime)},
                {"cent_product", str(b.cent_product)},
                {"holds", holds},
                {"components", comps}};
    if (o.json) {
      emit(out, record);
    } else {
      record["components"] = comps_text;
      emit_text(out, record);
    }
    return int{holds ? kExitOk : kExitViolation};
  });
}

int cmd_subgroup_scan(const std::string& spec, const CommandOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, spec, [&] {
    const PermGroup g = build_checked(spec, o.caps);
    const auto lattice = all_subgroups(g, o.caps.lattice);
    const CommutationTable t(g);
    const bool abelian = cent_census(t).is_abelian;

    std::vector<std::pair<std::string, Verdict>> verdicts;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      Verdict v = check_lemma_pi(t, lattice[i], o.caps.isoclinism);
      v.subject = "#" + str(i) + " " + v.subject;
      verdicts.emplace_back("subgroup", std::move(v));
    }
    for (auto& v : check_maximal_proposition(g, o.caps.lattice, o.caps.isoclinism))
      verdicts.emplace_back("maximal", std::move(v));
    if (!abelian)
      for (auto& v : check_small_n_theorem(g, o.caps.lattice, o.caps.isoclinism))
        verdicts.emplace_back("small-n", std::move(v));

    std::size_t violations = 0;
    for (const auto& [check, v] : verdicts) {
      if (!v.ok()) ++violations;
      if (o.json)
        emit(out, verdict_record(check, v));
      else
        out << verdict_text(check, v) << '\n';
    }
    Json summary{{"check", "summary"},
                 {"spec", spec},
                 {"subgroups", str(lattice.size())},
                 {"verdicts", str(verdicts.size())},
                 {"violations", str(violations)}};
    if (o.json) {
      emit(out, summary);
    } else {
      out << '\n';
      emit_text(out, summary);
    }
    return int{violations ? kExitViolation : kExitOk};
  });
}

int cmd_verify_paper(const CommandOptions& o, std::ostream& out, std::ostream& err,
                     const std::map<std::string, std::string>& expected_overrides) {
  return guarded(err, "verify-paper", [&] {
    VerifyOptions vo;
    vo.caps = o.caps;
    vo.expected_overrides = expected_overrides;
    const auto rows = verify_rows(vo);
    bool mismatch = false;
    std::size_t w_claim = 5, w_exp = 8, w_comp = 8, w_status = 6;
    for (const auto& r : rows) {
      mismatch |= r.status == "mismatch";
      w_claim = std::max(w_claim, r.claim.size());
      w_exp = std::max(w_exp, r.expected.size());
      w_comp = std::max(w_comp, r.computed.size());
      w_status = std::max(w_status, r.status.size());
    }
    if (!o.json) {
      auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                      const std::string& e) {
        out << std::left << std::setw(static_cast<int>(w_claim + 2)) << a << std::setw(static_cast<int>(w_exp + 2))
            << b << std::setw(static_cast<int>(w_comp + 2)) << c << std::setw(static_cast<int>(w_status + 2)) << d
            << e << '\n';
      };
      line("claim", "expected", "computed", "status", "note");
      for (const auto& r : rows) line(r.claim, r.expected, r.computed, r.status, r.note);
    } else {
      for (const auto& r : rows)
        emit(out, Json{{"claim", r.claim},
                       {"location", r.location},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"status", r.status},
                       {"note", r.note}});
    }
    return int{mismatch ? kExitViolation : kExitOk};
  });
}

int cmd_conjecture_scan(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, "conjecture-scan", [&] {
    if (o.max_order > 400) throw std::invalid_argument("max-order above 400");
    GroupCache cache(std::max<std::size_t>(o.caps.group, 1));
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> buckets;
    for (const auto& spec : conjecture_corpus(o.max_order)) {
      const PermGroup& g = cache.get(spec);
      const std::size_t n = cent_census(g, {o.caps.group}).cent_count;
      const std::size_t d = derived_subgroup(g, SubgroupMask::whole(g)).size();
      buckets[{n, d}].push_back(spec);
    }

    std::size_t pairs = 0, isoclinic_pairs = 0, inconclusive = 0;
    for (const auto& [key, members] : buckets) {
      const Json bucket{{"kind", "bucket"},
                        {"cent", str(key.first)},
                        {"derived_order", str(key.second)},
                        {"size", str(members.size())}};
      if (o.json) {
        emit(out, bucket);
      } else {
        out << "bucket cent=" << key.first << " |G'|=" << key.second << " (" << members.size() << " groups)\n";
      }
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i; j < members.size(); ++j) {
          const auto r = isoclinic(cache.get(members[i]), cache.get(members[j]), o.caps.isoclinism);
          ++pairs;
          if (r.status == IsoclinismStatus::Isoclinic) ++isoclinic_pairs;
          if (r.status == IsoclinismStatus::Inconclusive) ++inconclusive;
          if (o.json)
            emit(out, Json{{"kind", "pair"}, {"a", members[i]}, {"b", members[j]}, {"status", to_string(r.status)}});
          else
            out << "  " << members[i] << "  ~  " << members[j] << "  " << to_string(r.status) << '\n';
        }
    }
    const Json summary{{"kind", "summary"},
                       {"max_order", str(o.max_order)},
                       {"buckets", str(buckets.size())},
                       {"pairs", str(pairs)},
                       {"isoclinic", str(isoclinic_pairs)},
                       {"inconclusive", str(inconclusive)}};
    if (o.json) {
      emit(out, summary);
    } else {
      out << '\n';
      emit_text(out, summary);
    }
    return int{kExitOk};
  });
}

}  // namespace nacent
