#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "shlab/core.hpp"
#include "shlab/term.hpp"

namespace shlab {

// Recursive-descent parser for the identity language.
//
//   identity := term '=' term
//   term     := join ('->' term)?          right-associative
//   join     := meet ('|' meet)*           left-associative
//   meet     := postfix ('&' postfix)*     left-associative
//   postfix  := atom ("'" | "*" | "+")*
//   atom     := variable | '0' | '1' | '(' term ')'
//
// Variables are lowercase identifiers not starting with 'v' (reserved as a
// join glyph in common mathematical input): [a-u w-z][a-z0-9]*.
// The postfix sugar t* = t -> 0 and t+ = ((t')*)' is expanded here, so the
// returned tree only uses the basic signature.
class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  TermPtr parse_term() {
    TermPtr t = term();
    skip_ws();
    if (pos_ != text_.size()) err("trailing input after term");
    return t;
  }

  Identity parse_identity() {
    TermPtr lhs = term();
    skip_ws();
    if (!eat('=')) err("expected '=' between identity sides");
    TermPtr rhs = term();
    skip_ws();
    if (pos_ != text_.size()) err("trailing input after identity");
    return Identity(std::move(lhs), std::move(rhs));
  }

private:
  TermPtr term() {
    TermPtr l = join();
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return Term::imp(std::move(l), term());
    }
    return l;
  }

  TermPtr join() {
    TermPtr l = meet();
    while (true) {
      skip_ws();
      if (!eat('|')) return l;
      l = Term::join(std::move(l), meet());
    }
  }

  TermPtr meet() {
    TermPtr l = postfix();
    while (true) {
      skip_ws();
      if (!eat('&')) return l;
      l = Term::meet(std::move(l), postfix());
    }
  }

  TermPtr postfix() {
    TermPtr t = atom();
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\'') { ++pos_; t = Term::neg(std::move(t)); }
      else if (c == '*') { ++pos_; t = Term::star(std::move(t)); }
      else if (c == '+') { ++pos_; t = Term::plus(std::move(t)); }
      else break;
    }
    return t;
  }

  TermPtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) err("unexpected end of input");
    char c = text_[pos_];
    if (c == '0') { ++pos_; return Term::zero(); }
    if (c == '1') { ++pos_; return Term::one(); }
    if (c == '(') {
      ++pos_;
      TermPtr t = term();
      skip_ws();
      if (!eat(')')) err("expected ')'");
      return t;
    }
    if (c == 'v') err("variable names may not start with 'v'");
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(text_[pos_]))))
        ++pos_;
      return Term::var(std::string(text_.substr(start, pos_ - start)));
    }
    err(std::string("unknown token '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  [[noreturn]] void err(const std::string& what) const {
    throw parse_error(what, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline TermPtr parse_term(std::string_view text) {
  return Parser(text).parse_term();
}

inline Identity parse_identity(std::string_view text) {
  return Parser(text).parse_identity();
}

// One entry of an identity-catalog file.  A line is either
//   NAME: <identity>        e.g.  DM: x'' = x
//   NAME: @<condition-id>   e.g.  SC: @SC
// Blank lines and lines starting with '#' are ignored.
struct CatalogEntry {
  std::string name;
  bool is_condition = false;
  std::string condition_id;  // when is_condition
  Identity identity;         // otherwise
};

inline std::vector<CatalogEntry> parse_identity_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    std::string_view line = text.substr(
        line_start, nl == std::string_view::npos ? text.size() - line_start
                                                 : nl - line_start);
    ++line_no;
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b != std::string_view::npos && line[b] != '#') {
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos)
        throw validation_error("identity catalog line " +
                               std::to_string(line_no) + ": missing ':'");
      CatalogEntry e;
      std::string_view name = line.substr(b, colon - b);
      while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
        name.remove_suffix(1);
      e.name = std::string(name);
      std::string_view body = line.substr(colon + 1);
      std::size_t bb = body.find_first_not_of(" \t");
      if (e.name.empty() || bb == std::string_view::npos)
        throw validation_error("identity catalog line " +
                               std::to_string(line_no) + ": empty name or body");
      body = body.substr(bb);
      while (!body.empty() && (body.back() == ' ' || body.back() == '\t' ||
                               body.back() == '\r'))
        body.remove_suffix(1);
      if (body.front() == '@') {
        e.is_condition = true;
        e.condition_id = std::string(body.substr(1));
      } else {
        try {
          e.identity = parse_identity(body);
        } catch (const parse_error& pe) {
          throw validation_error("identity catalog line " +
                                 std::to_string(line_no) + ": " + pe.what());
        }
      }
      out.push_back(std::move(e));
    }
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  return out;
}

}  // namespace shlab
