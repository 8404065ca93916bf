/*
 * Front end for the analyzed mini-language.
 *
 *   program := stmt*
 *   stmt    := ident "=" rhs ";" | "if" "(" cond ")" block ("else" block)?
 *            | "while" "(" cond ")" block
 *            | "for" ident "=" int "to" int block
 *            | "skip" ";" | "@" ident ":" stmt
 *   rhs     := expr | "?"
 *   expr    := term (("+"|"-") term)* ; term := int | ident | int "*" ident | "-" term
 *   cond    := "?" | ident cmpop int | ident "-" ident cmpop int
 *            | ident ("-" ident)? "in" setlit
 *            | ident ("-" ident)? "%" int "==" int
 *   setlit  := "[" bound "," bound "]" | int "Z" "+" int ; bound := int | rat | "-oo" | "+oo"
 *
 * "#" starts a line comment. "@label:" names the program point before
 * the statement. The first occurrence of a variable must be as an
 * assignment target (or a for-loop counter); "v0" is reserved for the
 * zero anchor of the relational domains.
 */
#pragma once

#include <wrd/syntax.hpp>

#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace wrd {

class parse_error : public std::runtime_error {
 public:
  int line, col;
  parse_error(const std::string& msg, int line_, int col_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

template <scalar S>
struct stmt {
  enum class kind { assign, if_else, while_loop, for_loop, skip };
  kind k = kind::skip;
  std::vector<std::string> labels;
  int line = 0, col = 0;

  int var = -1;  // assign target / for counter
  bool random_rhs = false;
  std::optional<expr<S>> rhs;

  std::optional<guard_atom<S>> cond;  // if / while
  std::vector<stmt> body;             // then-branch / loop body
  std::vector<stmt> else_body;

  S for_lo{0}, for_hi{0};
};

template <scalar S>
struct program {
  std::vector<std::string> var_names;  // [0] = "0", user variables from id 1
  std::vector<stmt<S>> body;

  int nvars() const { return static_cast<int>(var_names.size()) - 1; }
  int var_id(const std::string& name) const {
    for (std::size_t i = 1; i < var_names.size(); ++i)
      if (var_names[i] == name) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

struct token {
  enum class kind { ident, number, punct, eof };
  kind k;
  std::string text;
  int line, col;
};

inline std::vector<token> lex(std::string_view src) {
  std::vector<token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_'))
        ++j;
      out.push_back({token::kind::ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '/' && j + 1 < src.size() &&
          std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      out.push_back({token::kind::number, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    static const char* two[] = {"<=", ">=", "==", "!="};
    bool matched = false;
    for (const char* t : two) {
      if (src.substr(i, 2) == t) {
        out.push_back({token::kind::punct, t, tl, tc});
        advance(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static const std::string singles = "=;(){}[],+-*%:@<>?";
    if (singles.find(c) != std::string::npos) {
      out.push_back({token::kind::punct, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({token::kind::eof, "", line, col});
  return out;
}

template <scalar S>
class parser {
  std::vector<token> toks_;
  std::size_t pos_ = 0;
  program<S> prog_;
  std::set<std::string> labels_seen_;

  static bool is_keyword(const std::string& s) {
    return s == "if" || s == "else" || s == "while" || s == "for" ||
           s == "to" || s == "in" || s == "skip" || s == "oo";
  }

  const token& cur() const { return toks_[pos_]; }
  const token& next() { return toks_[pos_++]; }
  bool at_punct(const std::string& p) const {
    return cur().k == token::kind::punct && cur().text == p;
  }
  bool at_ident(const std::string& s) const {
    return cur().k == token::kind::ident && cur().text == s;
  }
  void expect_punct(const std::string& p) {
    if (!at_punct(p))
      throw parse_error("expected '" + p + "'", cur().line, cur().col);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, cur().line, cur().col);
  }

  S parse_number_text(const token& t) {
    auto v = parse_scalar<S>(t.text);
    if (!v) {
      if constexpr (!is_rational_mode<S>)
        throw parse_error("rational literal in integer mode", t.line, t.col);
      throw parse_error("bad number '" + t.text + "'", t.line, t.col);
    }
    return *v;
  }

  S parse_signed_number() {
    bool negate = false;
    if (at_punct("-")) {
      negate = true;
      ++pos_;
    }
    if (cur().k != token::kind::number) fail("expected a number");
    S v = parse_number_text(next());
    return negate ? S(-v) : v;
  }

  int declare_or_lookup(const token& t, bool declaring) {
    if (t.text == "v0")
      throw parse_error("'v0' is reserved", t.line, t.col);
    if (is_keyword(t.text))
      throw parse_error("'" + t.text + "' is a keyword", t.line, t.col);
    int id = prog_.var_id(t.text);
    if (id >= 0) return id;
    if (!declaring)
      throw parse_error("use of undeclared variable '" + t.text + "'", t.line, t.col);
    prog_.var_names.push_back(t.text);
    return static_cast<int>(prog_.var_names.size()) - 1;
  }

  int parse_var_use() {
    if (cur().k != token::kind::ident) fail("expected a variable");
    const token t = next();
    return declare_or_lookup(t, false);
  }

  expr<S> parse_term() {
    if (at_punct("-")) {
      ++pos_;
      return expr<S>::negation(parse_term());
    }
    if (cur().k == token::kind::number) {
      S v = parse_number_text(next());
      if (at_punct("*")) {
        ++pos_;
        int id = parse_var_use();
        return expr<S>::scaled(std::move(v), expr<S>::variable(id));
      }
      return expr<S>::constant(std::move(v));
    }
    if (cur().k == token::kind::ident) return expr<S>::variable(parse_var_use());
    fail("expected a term");
  }

  expr<S> parse_expr() {
    expr<S> e = parse_term();
    while (at_punct("+") || at_punct("-")) {
      bool plus = at_punct("+");
      ++pos_;
      expr<S> rhs = parse_term();
      e = plus ? expr<S>::addition(std::move(e), std::move(rhs))
               : expr<S>::subtraction(std::move(e), std::move(rhs));
    }
    return e;
  }

  bound<S> parse_bound() {
    if (at_punct("-")) {
      ++pos_;
      if (at_ident("oo")) {
        ++pos_;
        return bound<S>::minus_infinity();
      }
      if (cur().k != token::kind::number) fail("expected a bound");
      return bound<S>(S(-parse_number_text(next())));
    }
    if (at_punct("+")) {
      ++pos_;
      if (at_ident("oo")) {
        ++pos_;
        return bound<S>::plus_infinity();
      }
      if (cur().k != token::kind::number) fail("expected a bound");
      return bound<S>(parse_number_text(next()));
    }
    if (cur().k == token::kind::number) return bound<S>(parse_number_text(next()));
    fail("expected a bound");
  }

  set_literal<S> parse_setlit() {
    if (at_punct("[")) {
      ++pos_;
      bound<S> lo = parse_bound();
      expect_punct(",");
      bound<S> hi = parse_bound();
      expect_punct("]");
      if (lo.is_plus_infinity() || hi.is_minus_infinity())
        fail("bad interval bounds");
      return set_literal<S>::range(lo, hi);
    }
    if (at_punct("{")) {
      ++pos_;
      S v = parse_signed_number();
      expect_punct("}");
      return set_literal<S>::singleton(std::move(v));
    }
    if (cur().k != token::kind::number) fail("expected a set literal");
    const token kt = cur();
    S k = parse_number_text(next());
    if (!at_ident("Z")) fail("expected 'Z' in progression literal");
    ++pos_;
    expect_punct("+");
    S r = parse_signed_number();
    if (k <= 0) throw parse_error("progression step must be positive", kt.line, kt.col);
    return set_literal<S>::progression(modulus<S>::finite(std::move(k)), std::move(r));
  }

  guard_atom<S> parse_cond() {
    if (at_punct("?")) {
      ++pos_;
      return guard_atom<S>::nondet();
    }
    int i = parse_var_use();
    std::optional<int> j;
    if (at_punct("-")) {
      ++pos_;
      j = parse_var_use();
    }
    if (at_ident("in")) {
      ++pos_;
      set_literal<S> s = parse_setlit();
      if (j) return guard_atom<S>::diff_in_set(i, *j, std::move(s));
      return guard_atom<S>::var_in_set(i, std::move(s));
    }
    if (at_punct("%")) {
      ++pos_;
      const token kt = cur();
      if (cur().k != token::kind::number) fail("expected a modulus");
      S k = parse_number_text(next());
      if (k <= 0) throw parse_error("modulus must be positive", kt.line, kt.col);
      expect_punct("==");
      S r = parse_signed_number();
      return guard_atom<S>::mod(i, j, std::move(k), std::move(r));
    }
    cmp_op op;
    if (at_punct("<=")) op = cmp_op::le;
    else if (at_punct("<")) op = cmp_op::lt;
    else if (at_punct(">=")) op = cmp_op::ge;
    else if (at_punct(">")) op = cmp_op::gt;
    else if (at_punct("==")) op = cmp_op::eq;
    else if (at_punct("!=")) op = cmp_op::ne;
    else fail("expected a comparison");
    ++pos_;
    S c = parse_signed_number();
    if (j) return guard_atom<S>::diff_cmp(i, *j, op, std::move(c));
    return guard_atom<S>::cmp(i, op, std::move(c));
  }

  std::vector<stmt<S>> parse_block() {
    expect_punct("{");
    std::vector<stmt<S>> out;
    while (!at_punct("}")) {
      if (cur().k == token::kind::eof) fail("unterminated block");
      out.push_back(parse_stmt());
    }
    ++pos_;
    return out;
  }

  stmt<S> parse_stmt() {
    stmt<S> s;
    s.line = cur().line;
    s.col = cur().col;
    while (at_punct("@")) {
      ++pos_;
      if (cur().k != token::kind::ident) fail("expected a label name");
      const token t = next();
      if (!labels_seen_.insert(t.text).second)
        throw parse_error("duplicate label '" + t.text + "'", t.line, t.col);
      s.labels.push_back(t.text);
      expect_punct(":");
      s.line = cur().line;
      s.col = cur().col;
    }
    if (at_ident("skip")) {
      ++pos_;
      expect_punct(";");
      s.k = stmt<S>::kind::skip;
      return s;
    }
    if (at_ident("if")) {
      ++pos_;
      expect_punct("(");
      s.cond = parse_cond();
      expect_punct(")");
      s.k = stmt<S>::kind::if_else;
      s.body = parse_block();
      if (at_ident("else")) {
        ++pos_;
        s.else_body = parse_block();
      }
      return s;
    }
    if (at_ident("while")) {
      ++pos_;
      expect_punct("(");
      s.cond = parse_cond();
      expect_punct(")");
      s.k = stmt<S>::kind::while_loop;
      s.body = parse_block();
      return s;
    }
    if (at_ident("for")) {
      ++pos_;
      if (cur().k != token::kind::ident) fail("expected a counter variable");
      const token t = next();
      s.var = declare_or_lookup(t, true);
      expect_punct("=");
      s.for_lo = parse_signed_number();
      if (!at_ident("to")) fail("expected 'to'");
      ++pos_;
      s.for_hi = parse_signed_number();
      s.k = stmt<S>::kind::for_loop;
      s.body = parse_block();
      return s;
    }
    if (cur().k == token::kind::ident) {
      const token t = next();
      s.var = declare_or_lookup(t, true);
      expect_punct("=");
      if (at_punct("?")) {
        ++pos_;
        s.random_rhs = true;
      } else {
        s.rhs = parse_expr();
      }
      expect_punct(";");
      s.k = stmt<S>::kind::assign;
      return s;
    }
    fail("expected a statement");
  }

 public:
  explicit parser(std::string_view src) : toks_(lex(src)) {
    prog_.var_names.push_back("0");
  }

  program<S> run() {
    while (cur().k != token::kind::eof) prog_.body.push_back(parse_stmt());
    return std::move(prog_);
  }
};

}  // namespace detail

template <scalar S>
program<S> parse_program(std::string_view source) {
  return detail::parser<S>(source).run();
}

}  // namespace wrd
