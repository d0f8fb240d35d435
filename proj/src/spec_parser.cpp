#include "nacent/spec_parser.hpp"

#include <cctype>
#include <map>

namespace nacent {

namespace {

using Kind = GroupSpec::Kind;

const std::map<std::string, Kind, std::less<>>& names() {
  static const std::map<std::string, Kind, std::less<>> table{
      {"C", Kind::Cyclic},  {"D", Kind::Dihedral}, {"S", Kind::Symmetric},  {"A", Kind::Alternating},
      {"PSL2", Kind::PSL2}, {"PSU3", Kind::PSU3},  {"H", Kind::Heisenberg}, {"Q", Kind::Dicyclic},
  };
  return table;
}

std::set<std::string> name_set() {
  std::set<std::string> out;
  for (const auto& [n, k] : names()) out.insert(n);
  return out;
}

std::string quote(const std::set<std::string>& s) {
  std::string out;
  for (const auto& e : s) out += (out.empty() ? "" : ", ") + ("\"" + e + "\"");
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec acc = term();
    while (true) {
      skip_ws();
      if (at_end()) return acc;
      if (peek() != 'x') fail({"x", "end of input"}, "trailing input");
      ++pos_;
      acc = GroupSpec::product(std::move(acc), term());
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(std::set<std::string> expected, const std::string& what) const {
    throw ParseError(pos_ + 1, std::move(expected), what);
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail({std::string(1, c)}, std::string("expected '") + c + "'");
    ++pos_;
  }

  GroupSpec term() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && (std::isupper(static_cast<unsigned char>(peek())) ||
                         (pos_ > start && std::isdigit(static_cast<unsigned char>(peek())))))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto it = names().find(name);
    if (it == names().end()) {
      pos_ = start;
      fail(name_set(), name.empty() ? "expected a group name" : "unknown group name '" + std::string(name) + "'");
    }
    GroupSpec spec;
    spec.kind = it->second;
    constexpr std::size_t arity = 1;
    expect('(');
    spec.params.push_back(integer());
    while (true) {
      skip_ws();
      if (at_end() || (peek() != ',' && peek() != ')'))
        fail(spec.params.size() < arity ? std::set<std::string>{",", ")"} : std::set<std::string>{")"},
             "unterminated parameter list");
      if (peek() == ')') break;
      ++pos_;
      spec.params.push_back(integer());
    }
    if (spec.params.size() != arity)
      throw ParseError(start + 1, {")"},
                       std::string(name) + " takes " + std::to_string(arity) + " parameter, got " +
                           std::to_string(spec.params.size()));
    ++pos_;
    return spec;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail({"integer"}, "malformed integer");
    if (pos_ - start > 9) {
      pos_ = start;
      fail({"integer"}, "integer out of range");
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* name_of(Kind k) {
  for (const auto& [n, kind] : names())
    if (kind == k) return n.c_str();
  return "?";
}

}  // namespace

ParseError::ParseError(std::size_t position, std::set<std::string> expected, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message + " (expected " +
                         quote(expected) + ")"),
      position_(position),
      expected_(std::move(expected)) {}

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupSpec& spec) {
  if (spec.kind == Kind::Product) return to_string(spec.operands.at(0)) + " x " + to_string(spec.operands.at(1));
  std::string out = name_of(spec.kind);
  out += '(';
  for (std::size_t i = 0; i < spec.params.size(); ++i) out += (i ? "," : "") + std::to_string(spec.params[i]);
  return out + ')';
}

}  // namespace nacent
