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

#include "provgroup/error.h"
#include "provgroup/provn_io.h"

namespace provgroup {
namespace {

enum class Tok {
  kName,     // identifiers and qualified names
  kLiteral,  // numbers and dateTimes: anything starting with a digit
  kString,   // "..."
  kQName,    // '...'
  kIri,      // <...>
  kLang,     // @en
  kPunct,    // ( ) [ ] , ; = %% -
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;  // unescaped for strings, without delimiters
  std::size_t offset = 0;
  std::size_t end = 0;
};

bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
         c == '-' || c == '.';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  SourcePosition PositionOf(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    const std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    return {static_cast<int>(line),
            static_cast<int>(offset - line_starts_[line - 1] + 1)};
  }

  [[noreturn]] void Fail(std::size_t offset, const std::string& message) const {
    throw Error(ErrorCode::kSyntaxError, message, PositionOf(offset));
  }

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipTrivia();
      Token tok;
      tok.offset = i_;
      if (i_ >= text_.size()) {
        out.push_back(tok);
        return out;
      }
      const char c = text_[i_];
      if (c == '"') {
        tok.kind = Tok::kString;
        tok.text = ReadString();
      } else if (c == '\'') {
        tok.kind = Tok::kQName;
        const std::size_t close = text_.find('\'', i_ + 1);
        if (close == std::string_view::npos) Fail(i_, "unterminated '...'");
        tok.text = std::string(text_.substr(i_ + 1, close - i_ - 1));
        i_ = close + 1;
      } else if (c == '<') {
        tok.kind = Tok::kIri;
        const std::size_t close = text_.find('>', i_ + 1);
        if (close == std::string_view::npos) Fail(i_, "unterminated <IRI>");
        tok.text = std::string(text_.substr(i_ + 1, close - i_ - 1));
        i_ = close + 1;
      } else if (c == '@') {
        tok.kind = Tok::kLang;
        std::size_t j = i_ + 1;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) ||
                text_[j] == '-')) {
          ++j;
        }
        tok.text = std::string(text_.substr(i_ + 1, j - i_ - 1));
        i_ = j;
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && i_ + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[i_ + 1])))) {
        tok.kind = Tok::kLiteral;
        std::size_t j = i_ + 1;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) ||
                text_[j] == ':' || text_[j] == '-' || text_[j] == '+' ||
                text_[j] == '.')) {
          ++j;
        }
        tok.text = std::string(text_.substr(i_, j - i_));
        i_ = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tok.kind = Tok::kName;
        std::size_t j = i_ + 1;
        while (j < text_.size() && IsNameChar(text_[j])) ++j;
        tok.text = std::string(text_.substr(i_, j - i_));
        i_ = j;
      } else if (c == '%' && i_ + 1 < text_.size() && text_[i_ + 1] == '%') {
        tok.kind = Tok::kPunct;
        tok.text = "%%";
        i_ += 2;
      } else if (std::string_view("()[],;=-").find(c) != std::string_view::npos) {
        tok.kind = Tok::kPunct;
        tok.text = std::string(1, c);
        ++i_;
      } else {
        Fail(i_, std::string("unexpected character '") + c + "'");
      }
      tok.end = i_;
      out.push_back(std::move(tok));
    }
  }

 private:
  void SkipTrivia() {
    while (i_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[i_]))) {
        ++i_;
      } else if (text_.substr(i_, 2) == "//") {
        while (i_ < text_.size() && text_[i_] != '\n') ++i_;
      } else if (text_.substr(i_, 2) == "/*") {
        const std::size_t close = text_.find("*/", i_ + 2);
        if (close == std::string_view::npos) Fail(i_, "unterminated comment");
        i_ = close + 2;
      } else {
        return;
      }
    }
  }

  std::string ReadString() {
    const std::size_t start = i_;
    std::string out;
    ++i_;
    while (i_ < text_.size() && text_[i_] != '"') {
      if (text_[i_] == '\\' && i_ + 1 < text_.size()) {
        const char e = text_[i_ + 1];
        out += e == 'n' ? '\n' : e == 't' ? '\t' : e;
        i_ += 2;
      } else {
        out += text_[i_++];
      }
    }
    if (i_ >= text_.size()) Fail(start, "unterminated string");
    ++i_;
    return out;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::vector<std::size_t> line_starts_;
};

bool IsNumericXsdType(std::string_view type) {
  static const std::set<std::string_view> kTypes = {
      "xsd:double", "xsd:float", "xsd:decimal", "xsd:int",
      "xsd:integer", "xsd:long", "xsd:short", "xsd:nonNegativeInteger"};
  return kTypes.contains(type);
}

std::optional<double> ParseDouble(std::string_view text) {
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

struct Attribute {
  std::string key;
  PropertyValue value;
  std::size_t offset;
};

class ProvNParser {
 public:
  ProvNParser(std::string_view text, BuildMode mode)
      : lexer_(text), tokens_(lexer_.Run()), mode_(mode) {}

  ProvNDocument Parse() {
    ProvNDocument doc;
    ExpectName("document");
    while (!PeekName("endDocument")) {
      const Token& kw = Peek();
      if (kw.kind != Tok::kName) {
        if (kw.kind == Tok::kEnd) {
          lexer_.Fail(kw.offset, "missing 'endDocument'");
        }
        lexer_.Fail(kw.offset, "expected a statement, found '" + kw.text + "'");
      }
      const std::size_t start = kw.offset;
      Next();
      if (kw.text == "prefix") {
        ExpectName(nullptr);
        Expect(Tok::kIri, "namespace IRI");
        continue;
      }
      if (kw.text == "default") {
        Expect(Tok::kIri, "namespace IRI");
        continue;
      }
      if (kw.text == "entity" || kw.text == "activity") {
        ParseElement(kw.text == "entity" ? NodeKind::kEntity
                                         : NodeKind::kActivity);
      } else if (kw.text == "used") {
        ParseRelation(RelKind::kUsed);
      } else if (kw.text == "wasGeneratedBy") {
        ParseRelation(RelKind::kGenBy);
      } else {
        throw Error(ErrorCode::kUnknownStatement,
                    "'" + kw.text +
                        "' statements are not supported; only entity, "
                        "activity, used and wasGeneratedBy are accepted",
                    lexer_.PositionOf(start));
      }
      doc.statements.push_back(StatementSpan{kw.text, lexer_.PositionOf(start),
                                             start, last_end_ - start});
    }
    Next();
    if (Peek().kind != Tok::kEnd) {
      lexer_.Fail(Peek().offset, "unexpected text after 'endDocument'");
    }
    doc.graph = ProvGraph::Build(std::move(nodes_), std::move(edges_),
                                 std::move(events_), mode_);
    return doc;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& Next() {
    const Token& t = tokens_[pos_];
    last_end_ = t.end;
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool PeekPunct(std::string_view p, std::size_t ahead = 0) const {
    return Peek(ahead).kind == Tok::kPunct && Peek(ahead).text == p;
  }
  bool PeekName(std::string_view name) const {
    return Peek().kind == Tok::kName && Peek().text == name;
  }
  std::string Found() const {
    return Peek().kind == Tok::kEnd ? "end of input" : "'" + Peek().text + "'";
  }
  void ExpectPunct(std::string_view p) {
    if (!PeekPunct(p)) {
      lexer_.Fail(Peek().offset,
                  "expected '" + std::string(p) + "', found " + Found());
    }
    Next();
  }
  const Token& Expect(Tok kind, const char* what) {
    if (Peek().kind != kind) {
      lexer_.Fail(Peek().offset,
                  "expected " + std::string(what) + ", found " + Found());
    }
    return Next();
  }
  const Token& ExpectName(const char* name) {
    if (Peek().kind != Tok::kName || (name != nullptr && Peek().text != name)) {
      lexer_.Fail(Peek().offset,
                  "expected " +
                      (name ? "'" + std::string(name) + "'"
                            : std::string("an identifier")) +
                      ", found " + Found());
    }
    return Next();
  }
  // An identifier; '-' (unknown) is rejected.
  NodeId ExpectId(const char* role) {
    if (PeekPunct("-")) {
      lexer_.Fail(Peek().offset,
                  "the " + std::string(role) +
                      " of a relation must be named; '-' is not supported");
    }
    if (Peek().kind != Tok::kName && Peek().kind != Tok::kLiteral) {
      lexer_.Fail(Peek().offset, "expected the " + std::string(role) +
                                     " identifier, found " + Found());
    }
    return NodeId(Next().text);
  }

  std::optional<EventTime> ParseTimeOrDash() {
    if (PeekPunct("-")) {
      Next();
      return std::nullopt;
    }
    const Token& t = Expect(Tok::kLiteral, "an xsd:dateTime or '-'");
    auto time = EventTime::ParseIso8601(t.text);
    if (!time) lexer_.Fail(t.offset, "malformed dateTime '" + t.text + "'");
    return time;
  }

  std::vector<Attribute> ParseAttributes() {
    std::vector<Attribute> out;
    ExpectPunct("[");
    if (PeekPunct("]")) {
      Next();
      return out;
    }
    while (true) {
      Attribute attr;
      attr.offset = Peek().offset;
      attr.key = ExpectName(nullptr).text;
      ExpectPunct("=");
      const Token& v = Peek();
      if (v.kind == Tok::kString) {
        Next();
        if (PeekPunct("%%")) {
          Next();
          const Token& type = ExpectName(nullptr);
          if (IsNumericXsdType(type.text)) {
            auto number = ParseDouble(v.text);
            if (!number) {
              lexer_.Fail(v.offset, "'" + v.text + "' is not a valid " +
                                        type.text);
            }
            attr.value = *number;
          } else {
            attr.value = v.text;
          }
        } else {
          if (Peek().kind == Tok::kLang) Next();
          attr.value = v.text;
        }
      } else if (v.kind == Tok::kQName) {
        Next();
        attr.value = v.text;
      } else if (v.kind == Tok::kLiteral) {
        Next();
        auto number = ParseDouble(v.text);
        if (!number) lexer_.Fail(v.offset, "malformed number '" + v.text + "'");
        attr.value = *number;
      } else {
        lexer_.Fail(v.offset, "expected an attribute value, found " + Found());
      }
      out.push_back(std::move(attr));
      if (PeekPunct("]")) break;
      ExpectPunct(",");
    }
    Next();
    return out;
  }

  double ReservedNumber(const Attribute& attr) {
    if (const double* d = std::get_if<double>(&attr.value)) return *d;
    if (auto number = ParseDouble(std::get<std::string>(attr.value))) {
      return *number;
    }
    lexer_.Fail(attr.offset, attr.key + " must be a number");
  }

  void ParseElement(NodeKind kind) {
    ExpectPunct("(");
    const std::size_t id_offset = Peek().offset;
    ProvNode node{.id = ExpectId(NodeKindName(kind).data()), .kind = kind};
    if (!declared_.insert(node.id).second) {
      throw Error(ErrorCode::kRedeclaredId,
                  "'" + node.id.str() + "' is declared more than once",
                  lexer_.PositionOf(id_offset));
    }
    std::vector<Attribute> attrs;
    if (PeekPunct(",")) {
      Next();
      if (kind == NodeKind::kActivity && !PeekPunct("[")) {
        ActivityInterval interval;
        interval.start = ParseTimeOrDash();
        ExpectPunct(",");
        interval.end = ParseTimeOrDash();
        if (interval.start || interval.end) events_[node.id] = interval;
        if (PeekPunct(",")) {
          Next();
          attrs = ParseAttributes();
        }
      } else {
        attrs = ParseAttributes();
      }
    }
    ExpectPunct(")");
    for (Attribute& attr : attrs) {
      if (attr.key == kSourceAttribute) {
        const auto* text = std::get_if<std::string>(&attr.value);
        if (text == nullptr) lexer_.Fail(attr.offset, "provabs:source must be a string");
        NodeSet source;
        std::size_t i = 0;
        while (i < text->size()) {
          while (i < text->size() && std::isspace(static_cast<unsigned char>((*text)[i]))) ++i;
          std::size_t j = i;
          while (j < text->size() && !std::isspace(static_cast<unsigned char>((*text)[j]))) ++j;
          if (j > i) source.insert(NodeId(text->substr(i, j - i)));
          i = j;
        }
        if (source.empty()) lexer_.Fail(attr.offset, "provabs:source is empty");
        node.source = std::move(source);
      } else if (attr.key == kSensitivityAttribute) {
        node.sensitivity = ReservedNumber(attr);
      } else if (attr.key == kUtilityAttribute) {
        node.utility = ReservedNumber(attr);
      } else if (!node.properties.emplace(attr.key, attr.value).second) {
        lexer_.Fail(attr.offset, "attribute '" + attr.key + "' repeated");
      }
    }
    nodes_.push_back(std::move(node));
  }

  void ParseRelation(RelKind rel) {
    ExpectPunct("(");
    // Optional relation identifier: `used(u1; a1, e1)` or `used(-; a1, e1)`.
    if ((Peek().kind == Tok::kName || PeekPunct("-")) && PeekPunct(";", 1)) {
      Next();
      Next();
    }
    ProvEdge edge;
    edge.rel = rel;
    edge.subject = ExpectId(rel == RelKind::kUsed ? "activity" : "entity");
    ExpectPunct(",");
    edge.object = ExpectId(rel == RelKind::kUsed ? "entity" : "activity");
    if (PeekPunct(",")) {
      Next();
      if (PeekPunct("[")) {
        ParseAttributes();
      } else {
        edge.time = ParseTimeOrDash();
        if (PeekPunct(",")) {
          Next();
          ParseAttributes();
        }
      }
    }
    ExpectPunct(")");
    edges_.push_back(std::move(edge));
  }

  Lexer lexer_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_end_ = 0;
  BuildMode mode_;
  std::set<NodeId> declared_;
  std::vector<ProvNode> nodes_;
  std::vector<ProvEdge> edges_;
  ActivityEvents events_;
};

}  // namespace

ProvNDocument ParseProvNDocument(std::string text, BuildMode mode) {
  ProvNDocument doc = ProvNParser(text, mode).Parse();
  doc.text = std::move(text);
  return doc;
}

ProvGraph ParseProvN(std::string_view text) {
  return ProvNParser(text, BuildMode::kStrict).Parse().graph;
}

}  // namespace provgroup
