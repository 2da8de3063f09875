#pragma once

// .jrule documents, one rule scheme per file:
//
//   rule      := "rule" IDENT orbit "{" "left" block "right" block "}"
//   block     := "{" (nodedecl | arcdecl)* "}"
//   nodedecl  := IDENT ":" gorbit ["hook"]
//   arcdecl   := IDENT "-" NAT "-" IDENT
//   orbit     := "<" NAT ("," NAT)* ">"
//   gorbit    := "<" (NAT|"_") ("," (NAT|"_"))* ">"
//
// '#' starts a comment that runs to the end of the line.

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gmapkit/error.hpp"
#include "gmapkit/relabel.hpp"
#include "gmapkit/scheme.hpp"

namespace gmapkit::io {

namespace detail {

struct Token {
  enum class Kind { ident, nat, punct, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class RuleLexer {
 public:
  explicit RuleLexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Token::Kind::ident;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Token::Kind::nat;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += advance();
        if (t.text.size() > 6) throw SyntaxError("number too large", t.line, t.column);
      } else if (std::string_view("{}<>,:-").find(c) != std::string_view::npos) {
        t.kind = Token::Kind::punct;
        t.text = advance();
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'", line_, column_);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class RuleParser {
 public:
  explicit RuleParser(std::string_view text) : tokens_(RuleLexer(text).run()) {}

  RuleScheme parse() {
    RuleScheme rule;
    expect_word("rule");
    rule.name = expect_name("rule name");
    const Token& at_param = peek();
    std::vector<Dim> param;
    for (Dim d : orbit(false)) param.push_back(d);
    try {
      rule.parameter = OrbitType(param);
    } catch (const Error&) {
      semantic(at_param, "parameter orbit type must be strictly increasing");
    }
    rule.left.parameter = rule.parameter;
    rule.right.parameter = rule.parameter;
    expect_punct("{");
    expect_word("left");
    block(rule.left, rule, true);
    expect_word("right");
    block(rule.right, rule, false);
    expect_punct("}");
    if (peek().kind != Token::Kind::end) fail(peek(), "expected end of input after the rule");
    if (rule.hook.empty()) semantic(tokens_.back(), "no hook: mark exactly one left node with 'hook'");
    check_rule_scheme(rule);
    return rule;
  }

 private:
  static bool is_keyword(std::string_view s) { return s == "rule" || s == "left" || s == "right" || s == "hook"; }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::end) ++pos_;
    return t;
  }

  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    std::string found = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(message + ", found " + found, t.line, t.column);
  }

  [[noreturn]] static void semantic(const Token& t, const std::string& message) {
    throw Error(ErrorCode::scheme, std::to_string(t.line) + ":" + std::to_string(t.column) + ": " + message);
  }

  void expect_word(std::string_view word) {
    const Token& t = next();
    if (t.kind != Token::Kind::ident || t.text != word) fail(t, "expected '" + std::string(word) + "'");
  }

  void expect_punct(std::string_view p) {
    const Token& t = next();
    if (t.kind != Token::Kind::punct || t.text != p) fail(t, "expected '" + std::string(p) + "'");
  }

  std::string expect_name(std::string_view what) {
    const Token& t = next();
    if (t.kind != Token::Kind::ident || is_keyword(t.text) || t.text == "_") fail(t, "expected " + std::string(what));
    return t.text;
  }

  std::vector<Dim> orbit(bool generalized) {
    std::vector<Dim> out;
    expect_punct("<");
    while (true) {
      const Token& t = next();
      if (t.kind == Token::Kind::nat) {
        out.push_back(std::stoi(t.text));
      } else if (generalized && t.kind == Token::Kind::ident && t.text == "_") {
        out.push_back(GeneralizedOrbitType::kRemove);
      } else {
        fail(t, generalized ? "expected a dimension or '_'" : "expected a dimension");
      }
      const Token& sep = next();
      if (sep.kind == Token::Kind::punct && sep.text == ">") return out;
      if (sep.kind != Token::Kind::punct || sep.text != ",") fail(sep, "expected ',' or '>'");
    }
  }

  void block(GraphScheme& scheme, RuleScheme& rule, bool left) {
    expect_punct("{");
    std::map<std::string, const Token*> declared;
    std::vector<std::pair<SchemeArc, const Token*>> arcs;
    while (!(peek().kind == Token::Kind::punct && peek().text == "}")) {
      const Token& name_token = peek();
      std::string name = expect_name("a node declaration, an arc, or '}'");
      const Token& op = next();
      if (op.kind == Token::Kind::punct && op.text == ":") {
        const Token& at = peek();
        std::vector<Dim> entries = orbit(true);
        SchemeNode node{name, {}};
        try {
          node.decoration = GeneralizedOrbitType(entries);
        } catch (const Error& e) {
          semantic(at, "node '" + name + "': " + e.what());
        }
        if (node.decoration.size() != rule.parameter.size()) {
          semantic(at, "node '" + name + "': decoration " + node.decoration.to_string() +
                           " does not have the length of the parameter " + rule.parameter.to_string());
        }
        if (declared.contains(name)) semantic(name_token, "duplicate node '" + name + "'");
        declared.emplace(name, &name_token);
        if (peek().kind == Token::Kind::ident && peek().text == "hook") {
          const Token& h = next();
          if (!left) semantic(h, "the hook '" + name + "' must be a left node");
          if (!rule.hook.empty()) semantic(h, "second hook '" + name + "' (already '" + rule.hook + "')");
          if (node.decoration.has_remove()) {
            semantic(h, "hook '" + name + "' decoration " + node.decoration.to_string() + " contains '_'");
          }
          rule.hook = name;
        }
        scheme.nodes.push_back(std::move(node));
      } else if (op.kind == Token::Kind::punct && op.text == "-") {
        const Token& d = next();
        if (d.kind != Token::Kind::nat) fail(d, "expected an arc dimension");
        expect_punct("-");
        std::string to = expect_name("the arc's target node");
        if (to == name) semantic(name_token, "self-arc on node '" + name + "' is not supported");
        arcs.push_back({SchemeArc{name, to, std::stoi(d.text)}, &name_token});
      } else {
        fail(op, "expected ':' or '-' after '" + name + "'");
      }
    }
    expect_punct("}");
    for (auto& [arc, at] : arcs) {
      for (const auto& end : {arc.from, arc.to}) {
        if (!declared.contains(end)) semantic(*at, "arc references undeclared node '" + end + "'");
      }
      scheme.arcs.push_back(std::move(arc));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RuleScheme parse_rule_scheme(std::string_view text) { return detail::RuleParser(text).parse(); }

/// Canonical text: nodes before arcs in each block, declaration order kept.
inline std::string serialize_rule_scheme(const RuleScheme& rule) {
  std::string out = "rule " + rule.name + " " + rule.parameter.to_string() + " {\n";
  auto side = [&](const char* title, const GraphScheme& s, bool left) {
    out += std::string("  ") + title + " {\n";
    for (const auto& n : s.nodes) {
      out += "    " + n.name + ": " + n.decoration.to_string();
      if (left && n.name == rule.hook) out += " hook";
      out += "\n";
    }
    for (const auto& a : s.arcs) out += "    " + a.from + " -" + std::to_string(a.dim) + "- " + a.to + "\n";
    out += "  }\n";
  };
  side("left", rule.left, true);
  side("right", rule.right, false);
  out += "}\n";
  return out;
}

}  // namespace gmapkit::io
