#pragma once

#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetpoly/poset.hpp"

namespace posetpoly {

/// Syntax error with the offending position in the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Expression tree over poset atoms.
///
///   expr   := term { "+" term }          disjoint union, lowest precedence
///   term   := factor { "<" factor }      ordinal sum
///   factor := "A(" int ")" | "C(" int ")" | "X" | "op(" expr ")"
///           | "(" expr ")" | "file:" path
///
/// Both binary operators are left-associative. Elaboration numbers the left
/// operand's elements before the right operand's.
struct PosetExpr {
  enum class Kind { antichain, chain, x_poset, literal, disjoint_union, ordinal_sum, dual_of };

  Kind kind = Kind::antichain;
  int count = 0;                            // antichain / chain size
  Poset literal;                            // loaded from a file atom
  std::string source;                       // file path, kept for display
  std::vector<PosetExpr> children;          // operands

  int element_count() const {
    switch (kind) {
      case Kind::antichain:
      case Kind::chain: return count;
      case Kind::x_poset: return 5;
      case Kind::literal: return literal.size();
      case Kind::dual_of: return children[0].element_count();
      case Kind::disjoint_union:
      case Kind::ordinal_sum:
        return children[0].element_count() + children[1].element_count();
    }
    return 0;
  }
};

inline Poset elaborate(const PosetExpr& e) {
  switch (e.kind) {
    case PosetExpr::Kind::antichain: return Poset::antichain(e.count);
    case PosetExpr::Kind::chain: return Poset::chain(e.count);
    case PosetExpr::Kind::x_poset: return Poset::x_poset();
    case PosetExpr::Kind::literal: return e.literal;
    case PosetExpr::Kind::dual_of: return elaborate(e.children[0]).dual();
    case PosetExpr::Kind::disjoint_union:
      return disjoint_union(elaborate(e.children[0]), elaborate(e.children[1]));
    case PosetExpr::Kind::ordinal_sum:
      return ordinal_sum(elaborate(e.children[0]), elaborate(e.children[1]));
  }
  throw std::logic_error("elaborate: bad expression node");
}

inline std::string to_string(const PosetExpr& e) {
  auto child = [&](const PosetExpr& c, bool parens) {
    std::string s = to_string(c);
    return parens ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case PosetExpr::Kind::antichain: return "A(" + std::to_string(e.count) + ")";
    case PosetExpr::Kind::chain: return "C(" + std::to_string(e.count) + ")";
    case PosetExpr::Kind::x_poset: return "X";
    case PosetExpr::Kind::literal: return e.source.empty() ? "file:<poset>" : "file:" + e.source;
    case PosetExpr::Kind::dual_of: return "op(" + to_string(e.children[0]) + ")";
    case PosetExpr::Kind::disjoint_union:
      return child(e.children[0], false) + " + " + child(e.children[1], false);
    case PosetExpr::Kind::ordinal_sum:
      return child(e.children[0], e.children[0].kind == PosetExpr::Kind::disjoint_union) +
             " < " +
             child(e.children[1], e.children[1].kind == PosetExpr::Kind::disjoint_union ||
                                      e.children[1].kind == PosetExpr::Kind::ordinal_sum);
  }
  return "?";
}

/// Poset file format: first data line holds the element count, each further
/// line "i j" declares i < j as a generating relation (0-based). '#' starts
/// a comment, blank lines are skipped, transitive closure is applied.
inline Poset read_poset(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> rels;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (ls >> n) {
        if (n < 0 || n > kMaxElements)
          throw std::invalid_argument("poset file: bad element count on line " +
                                      std::to_string(lineno));
      }
      continue;
    }
    int i, j;
    if (ls >> i) {
      if (!(ls >> j))
        throw std::invalid_argument("poset file: incomplete relation on line " +
                                    std::to_string(lineno));
      rels.emplace_back(i, j);
    }
  }
  if (n < 0) throw std::invalid_argument("poset file: missing element count");
  return Poset::from_relations(n, rels);
}

inline Poset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open poset file: " + path);
  return read_poset(in);
}

class ExprParser {
 public:
  ExprParser(std::string_view text, int max_elements)
      : text_(text), max_elements_(max_elements) {}

  PosetExpr parse() {
    PosetExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    if (e.element_count() > max_elements_)
      throw ParseError("expression exceeds the element limit of " +
                           std::to_string(max_elements_),
                       0);
    return e;
  }

 private:
  PosetExpr parse_expr() {
    PosetExpr lhs = parse_term();
    for (;;) {
      skip_ws();
      if (!consume('+')) return lhs;
      PosetExpr node;
      node.kind = PosetExpr::Kind::disjoint_union;
      node.children.push_back(std::move(lhs));
      node.children.push_back(parse_term());
      lhs = std::move(node);
    }
  }

  PosetExpr parse_term() {
    PosetExpr lhs = parse_factor();
    for (;;) {
      skip_ws();
      if (!consume('<')) return lhs;
      PosetExpr node;
      node.kind = PosetExpr::Kind::ordinal_sum;
      node.children.push_back(std::move(lhs));
      node.children.push_back(parse_factor());
      lhs = std::move(node);
    }
  }

  PosetExpr parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected a poset atom", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PosetExpr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == 'A' || c == 'C') {
      ++pos_;
      expect('(');
      int k = parse_int();
      expect(')');
      PosetExpr e;
      e.kind = c == 'A' ? PosetExpr::Kind::antichain : PosetExpr::Kind::chain;
      e.count = k;
      return e;
    }
    if (c == 'X') {
      ++pos_;
      PosetExpr e;
      e.kind = PosetExpr::Kind::x_poset;
      return e;
    }
    if (text_.substr(pos_).starts_with("op(")) {
      pos_ += 3;
      PosetExpr e;
      e.kind = PosetExpr::Kind::dual_of;
      e.children.push_back(parse_expr());
      expect(')');
      return e;
    }
    if (text_.substr(pos_).starts_with("file:")) {
      pos_ += 5;
      std::size_t start = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != ')' && text_[pos_] != '+' && text_[pos_] != '<')
        ++pos_;
      if (pos_ == start) throw ParseError("expected a file path after 'file:'", pos_);
      PosetExpr e;
      e.kind = PosetExpr::Kind::literal;
      e.source = std::string(text_.substr(start, pos_ - start));
      e.literal = load_poset_file(e.source);
      return e;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    long long v = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      v = v * 10 + (text_[i] - '0');
      if (v > max_elements_)
        throw ParseError("size exceeds the element limit of " + std::to_string(max_elements_),
                         start);
    }
    return static_cast<int>(v);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string_view text_;
  int max_elements_;
  std::size_t pos_ = 0;
};

inline PosetExpr parse_expr(std::string_view text, int max_elements = kMaxElements) {
  return ExprParser(text, max_elements).parse();
}

}  // namespace posetpoly
