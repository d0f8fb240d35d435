#include <array>
#include <cstdio>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "nacent/commands.hpp"
#include "nacent/spec_parser.hpp"

using namespace nacent;
using Kind = GroupSpec::Kind;

namespace {

struct Run {
  int code;
  std::string out, err;
};

template <class F>
Run capture(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

CommandOptions json_opts() {
  CommandOptions o;
  o.json = true;
  return o;
}

nlohmann::json first_record(const std::string& text) { return nlohmann::json::parse(text.substr(0, text.find('\n'))); }

std::size_t parse_error_position(const char* text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

GroupSpec random_leaf(std::mt19937& rng) {
  static const std::array<std::pair<Kind, int>, 8> kinds{{{Kind::Cyclic, 1},
                                                          {Kind::Dihedral, 1},
                                                          {Kind::Symmetric, 1},
                                                          {Kind::Alternating, 3},
                                                          {Kind::PSL2, 2},
                                                          {Kind::PSU3, 3},
                                                          {Kind::Heisenberg, 3},
                                                          {Kind::Dicyclic, 2}}};
  const auto [k, lo] = kinds[rng() % kinds.size()];
  return GroupSpec::leaf(k, lo + static_cast<std::int64_t>(rng() % 40));
}

// Products nest to the left, matching how "x" associates.
GroupSpec random_spec(std::mt19937& rng, int factors) {
  GroupSpec s = random_leaf(rng);
  for (int i = 1; i < factors; ++i) s = GroupSpec::product(std::move(s), random_leaf(rng));
  return s;
}

// Inserts random runs of blanks around parentheses and product signs.
std::string respace(const std::string& s, std::mt19937& rng) {
  std::string out;
  for (char c : s) {
    if (c == ' ') continue;
    const bool boundary = c == '(' || c == ')' || c == 'x';
    if (boundary) out.append(rng() % 3, ' ');
    out += c;
    if (boundary) out.append(c == 'x' ? 1 + rng() % 2 : rng() % 3, ' ');
  }
  return out;
}

}  // namespace

TEST_CASE("spec parser examples") {
  CHECK(parse_spec("A(5)") == GroupSpec::leaf(Kind::Alternating, 5));
  CHECK(parse_spec("D(4) x H(3)") ==
        GroupSpec::product(GroupSpec::leaf(Kind::Dihedral, 4), GroupSpec::leaf(Kind::Heisenberg, 3)));
  CHECK(parse_spec("PSU3(3)") == GroupSpec::leaf(Kind::PSU3, 3));
  CHECK(parse_spec("  Q(2)x C(3) ") ==
        GroupSpec::product(GroupSpec::leaf(Kind::Dicyclic, 2), GroupSpec::leaf(Kind::Cyclic, 3)));
  const GroupSpec left = parse_spec("C(2) x C(3) x C(5)");
  REQUIRE(left.kind == Kind::Product);
  CHECK(left.operands[0].kind == Kind::Product);
  CHECK(left.operands[1] == GroupSpec::leaf(Kind::Cyclic, 5));
}

TEST_CASE("spec parser errors") {
  try {
    parse_spec("PSL2(13");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
    CHECK(e.expected().count(")") == 1);
  }
  CHECK(parse_error_position("B(3)") == 1);
  CHECK(parse_error_position("A(5) x") == 7);
  CHECK(parse_error_position("A(5) y") == 6);
  CHECK(parse_error_position("C(1,2)") == 1);
  CHECK(parse_error_position("C(x)") == 3);
  CHECK(parse_error_position("C()") == 3);
  CHECK(parse_error_position("") == 1);
  CHECK(parse_error_position("C(99999999999999999999)") > 0);
  CHECK(parse_error_position("C(-3)") > 0);
}

TEST_CASE("property: specs survive printing and reparsing") {
  std::mt19937 rng(0x5eed);
  for (int i = 0; i < 500; ++i) {
    const GroupSpec s = random_spec(rng, 1 + static_cast<int>(rng() % 4));
    const std::string text = to_string(s);
    REQUIRE_MESSAGE(parse_spec(text) == s, text);
    REQUIRE_MESSAGE(parse_spec(respace(text, rng)) == s, text);
    REQUIRE(to_string(parse_spec(text)) == text);
  }
}

TEST_CASE("census command") {
  const Run a5 = capture([](auto& o, auto& e) { return cmd_census("A(5)", json_opts(), o, e); });
  CHECK(a5.code == kExitOk);
  const auto r = first_record(a5.out);
  CHECK(r["cent_count"] == "22");
  CHECK(r["nacent_count"] == "1");
  CHECK(r["order"] == "60");
  CHECK(r["is_ac"] == true);

  const Run p8 = capture([](auto& o, auto& e) { return cmd_census("PSL2(8)", json_opts(), o, e); });
  CHECK(first_record(p8.out)["cent_count"] == "74");
  CHECK(first_record(p8.out)["nacent_count"] == "1");

  const Run text = capture([](auto& o, auto& e) { return cmd_census("S(3)", CommandOptions{}, o, e); });
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("cent_count") != std::string::npos);
}

TEST_CASE("isoclinic command") {
  const Run absent = capture([](auto& o, auto& e) { return cmd_isoclinic("D(4)", "A(4)", json_opts(), o, e); });
  CHECK(absent.code == kExitOk);
  CHECK(first_record(absent.out)["status"] == "not-isoclinic");
  const Run found = capture([](auto& o, auto& e) { return cmd_isoclinic("D(4)", "Q(2)", json_opts(), o, e); });
  CHECK(first_record(found.out)["status"] == "isoclinic");
  CHECK(first_record(found.out)["witness_valid"] == true);
}

TEST_CASE("exit codes") {
  CHECK(capture([](auto& o, auto& e) { return cmd_census("PSL2(13", {}, o, e); }).code == kExitInputError);
  const Run bad = capture([](auto& o, auto& e) { return cmd_census("Z(3)", {}, o, e); });
  CHECK(bad.code == kExitInputError);
  CHECK_FALSE(bad.err.empty());
  CHECK(capture([](auto& o, auto& e) { return cmd_census("PSL2(6)", {}, o, e); }).code == kExitInputError);
  CommandOptions tight;
  tight.caps.group = 100;
  CHECK(capture([&](auto& o, auto& e) { return cmd_census("A(5) x C(2)", tight, o, e); }).code == kExitInputError);
  CHECK(capture([](auto& o, auto& e) { return cmd_bound("S(3)", {}, o, e); }).code == kExitInputError);
  CHECK(capture([](auto& o, auto& e) { return cmd_bound("H(3)", {}, o, e); }).code == kExitOk);
  CHECK(capture([](auto& o, auto& e) { return cmd_subgroup_scan("S(4)", {}, o, e); }).code == kExitOk);
  CommandOptions big;
  big.max_order = 401;
  CHECK(capture([&](auto& o, auto& e) { return cmd_conjecture_scan(big, o, e); }).code == kExitInputError);
}

TEST_CASE("bound command reports the stated bound") {
  const Run r = capture([](auto& o, auto& e) { return cmd_bound("D(4) x H(3)", json_opts(), o, e); });
  REQUIRE(r.code == kExitOk);
  const auto rec = first_record(r.out);
  CHECK(rec.dump().find("\"20\"") != std::string::npos);
}

TEST_CASE("verify-paper detects a corrupted constant") {
  const Run clean = capture([](auto& o, auto& e) { return cmd_verify_paper(json_opts(), o, e); });
  CHECK(clean.code == kExitOk);
  const Run broken =
      capture([](auto& o, auto& e) { return cmd_verify_paper(json_opts(), o, e, {{"cent-A5", "23"}}); });
  CHECK(broken.code == kExitViolation);
  CHECK(broken.out.find("mismatch") != std::string::npos);
  const Run broken2 =
      capture([](auto& o, auto& e) { return cmd_verify_paper({}, o, e, {{"nacent-PSU3-3", "91"}}); });
  CHECK(broken2.code == kExitViolation);
}

TEST_CASE("verify-paper output is deterministic") {
  const Run a = capture([](auto& o, auto& e) { return cmd_verify_paper(json_opts(), o, e); });
  const Run b = capture([](auto& o, auto& e) { return cmd_verify_paper(json_opts(), o, e); });
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    const auto rec = nlohmann::json::parse(line);
    CHECK(rec.contains("claim"));
    ++rows;
  }
  CHECK(rows == verify_rows().size());
}

TEST_CASE("conjecture scan") {
  CommandOptions o = json_opts();
  o.max_order = 24;
  const Run r = capture([&](auto& out, auto& err) { return cmd_conjecture_scan(o, out, err); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("summary") != std::string::npos);
  const Run again = capture([&](auto& out, auto& err) { return cmd_conjecture_scan(o, out, err); });
  CHECK(r.out == again.out);
}

#ifdef NACENT_CLI_PATH
TEST_CASE("cli binary") {
  auto run = [](const std::string& args) {
    const std::string cmd = std::string(NACENT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int status = pclose(p);
    return std::pair{WEXITSTATUS(status), out};
  };
  const auto [code, out] = run("--json census 'A(5)'");
  CHECK(code == 0);
  CHECK(first_record(out)["cent_count"] == "22");
  CHECK(run("census 'PSL2(13'").first == 2);
  CHECK(run("isoclinic 'D(4)' 'Q(2)'").first == 0);
  CHECK(run("conjecture-scan --max-order 1000").first != 0);
  CHECK(run("").first != 0);
}
#endif
