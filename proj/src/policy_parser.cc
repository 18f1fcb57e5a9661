// Copyright 2026 The provgroup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "provgroup/policy.h"

namespace provgroup {
namespace {

enum class Tok { kIdent, kNumber, kPunct, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourcePosition pos;
};

std::string Describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
         c == '-';
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  SourcePosition pos{1, 1};
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.pos = pos;
    std::size_t len = 0;
    if (IsIdentStart(c)) {
      tok.kind = Tok::kIdent;
      while (i + len < text.size() && IsIdentChar(text[i + len])) ++len;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.kind = Tok::kNumber;
      while (i + len < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[i + len])) ||
              text[i + len] == '.')) {
        ++len;
      }
    } else if (c == '>' && i + 1 < text.size() && text[i + 1] == '=') {
      tok.kind = Tok::kPunct;
      len = 2;
    } else if (std::string_view("[](),;.").find(c) != std::string_view::npos) {
      tok.kind = Tok::kPunct;
      len = 1;
    } else {
      throw Error(ErrorCode::kSyntaxError,
                  std::string("unexpected character '") + c + "'", pos);
    }
    tok.text = std::string(text.substr(i, len));
    out.push_back(std::move(tok));
    advance(len);
  }
  Token end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Tokenize(text)) {}

  Policy Parse() {
    if (Peek().kind == Tok::kEnd) {
      throw Error(ErrorCode::kSyntaxError, "empty policy", Peek().pos);
    }
    while (Peek().kind != Tok::kEnd) {
      if (PeekIs("list")) {
        ParseList();
      } else if (PeekIs("for")) {
        ParseRule();
      } else {
        throw Error(ErrorCode::kSyntaxError,
                    "expected 'list' or 'for all', found " + Describe(Peek()),
                    Peek().pos);
      }
    }
    return std::move(policy_);
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool PeekIs(std::string_view text, std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind != Tok::kEnd && t.text == text;
  }
  const Token& Next() {
    const Token& t = Peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  const Token& Expect(std::string_view text) {
    if (!PeekIs(text)) {
      throw Error(ErrorCode::kSyntaxError,
                  "expected '" + std::string(text) + "', found " +
                      Describe(Peek()),
                  Peek().pos);
    }
    return Next();
  }
  const Token& ExpectIdent(std::string_view what) {
    if (Peek().kind != Tok::kIdent) {
      throw Error(ErrorCode::kSyntaxError,
                  "expected " + std::string(what) + ", found " +
                      Describe(Peek()),
                  Peek().pos);
    }
    return Next();
  }

  void ParseList() {
    Expect("list");
    ClassificationList list;
    const Token& name = ExpectIdent("list name");
    list.name = name.text;
    if (policy_.find_list(list.name) != nullptr) {
      throw Error(ErrorCode::kSyntaxError,
                  "list '" + list.name + "' is declared twice", name.pos);
    }
    Expect("[");
    std::set<std::string> seen;
    while (true) {
      const Token& c = ExpectIdent("classification constant");
      if (!seen.insert(c.text).second) {
        throw Error(ErrorCode::kSyntaxError,
                    "constant '" + c.text + "' repeated in list '" +
                        list.name + "'",
                    c.pos);
      }
      list.constants.push_back(c.text);
      if (PeekIs("]")) break;
      Expect(",");
    }
    Expect("]");
    Expect(";");
    policy_.lists.push_back(std::move(list));
  }

  void RequireVar(const Rule& rule, const Token& var) const {
    if (var.text != rule.left_var && var.text != rule.right_var) {
      throw Error(ErrorCode::kUnknownVariable,
                  "'" + var.text + "' is not bound by the pattern (" +
                      rule.left_var + " " + std::string(RelKindName(rule.rel)) +
                      " " + rule.right_var + ")",
                  var.pos);
    }
  }

  Condition ParseCondition(const Rule& rule) {
    if (PeekIs("true") && PeekIs(")", 1)) {
      Next();
      return AlwaysTrue{};
    }
    const Token& var = ExpectIdent("a pattern variable or 'true'");
    RequireVar(rule, var);
    if (PeekIs("descendantOf")) {
      Next();
      const Token& anchor = Peek();
      if (anchor.kind != Tok::kIdent && anchor.kind != Tok::kNumber) {
        throw Error(ErrorCode::kSyntaxError,
                    "expected a node id after 'descendantOf', found " +
                        Describe(anchor),
                    anchor.pos);
      }
      Next();
      return DescendantOf{var.text, NodeId(anchor.text)};
    }
    Expect(".");
    PropertyAtLeast cond;
    cond.var = var.text;
    cond.property = ExpectIdent("property name").text;
    Expect(">=");
    const Token& constant = ExpectIdent("classification constant");
    Expect("in");
    const Token& list_name = ExpectIdent("list name");
    const ClassificationList* list = policy_.find_list(list_name.text);
    if (list == nullptr) {
      throw Error(ErrorCode::kUnknownList,
                  "list '" + list_name.text + "' is not declared",
                  list_name.pos);
    }
    if (std::find(list->constants.begin(), list->constants.end(),
                  constant.text) == list->constants.end()) {
      throw Error(ErrorCode::kUnknownConstant,
                  "'" + constant.text + "' is not a constant of list '" +
                      list->name + "'",
                  constant.pos);
    }
    cond.constant = constant.text;
    cond.list = list->name;
    if (PeekIs("(") && PeekIs("def", 1)) {
      Next();
      Next();
      const Token& value = ExpectIdent("'true' or 'false'");
      if (value.text != "true" && value.text != "false") {
        throw Error(ErrorCode::kSyntaxError,
                    "expected 'true' or 'false', found " + Describe(value),
                    value.pos);
      }
      cond.default_value = value.text == "true";
      Expect(")");
    }
    return cond;
  }

  void ParseRule() {
    Rule rule;
    rule.position = Expect("for").pos;
    Expect("all");
    Expect("(");
    rule.left_var = ExpectIdent("pattern variable").text;
    const Token& rel = ExpectIdent("'used', 'genBy' or 'wasGeneratedBy'");
    if (rel.text == "used") {
      rule.rel = RelKind::kUsed;
    } else if (rel.text == "genBy" || rel.text == "wasGeneratedBy") {
      rule.rel = RelKind::kGenBy;
    } else {
      throw Error(ErrorCode::kSyntaxError,
                  "expected 'used', 'genBy' or 'wasGeneratedBy', found " +
                      Describe(rel),
                  rel.pos);
    }
    rule.right_var = ExpectIdent("pattern variable").text;
    Expect(")");
    Expect("where");
    Expect("(");
    rule.condition = ParseCondition(rule);
    Expect(")");
    while (PeekIs(")")) {
      const Token& extra = Next();
      policy_.warnings.push_back(
          "line " + std::to_string(extra.pos.line) + ", column " +
          std::to_string(extra.pos.column) + ": ignored surplus ')'");
    }
    Expect("setSensitivity");
    Expect("(");
    const Token& target = ExpectIdent("pattern variable");
    RequireVar(rule, target);
    rule.target_var = target.text;
    Expect(",");
    const Token& number = Peek();
    if (number.kind != Tok::kNumber) {
      throw Error(ErrorCode::kSyntaxError,
                  "expected a non-negative number, found " + Describe(number),
                  number.pos);
    }
    const auto [end, ec] = std::from_chars(
        number.text.data(), number.text.data() + number.text.size(),
        rule.sensitivity);
    if (ec != std::errc() || end != number.text.data() + number.text.size()) {
      throw Error(ErrorCode::kSyntaxError,
                  "malformed number " + Describe(number), number.pos);
    }
    Next();
    Expect(")");
    Expect(";");
    policy_.rules.push_back(std::move(rule));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Policy policy_;
};

}  // namespace

const ClassificationList* Policy::find_list(std::string_view name) const {
  for (const ClassificationList& list : lists) {
    if (list.name == name) return &list;
  }
  return nullptr;
}

Policy ParsePolicy(std::string_view text) { return Parser(text).Parse(); }

}  // namespace provgroup
