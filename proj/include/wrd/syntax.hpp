/*
 * Expression trees and guard atoms of the analyzed language, shared by
 * the non-relational and the constraint-matrix domains. Variable ids
 * index the program's variable table; id 0 is the zero anchor of the
 * relational domains and never appears in source programs.
 */
#pragma once

#include <wrd/basis.hpp>

#include <memory>
#include <optional>

namespace wrd {

template <scalar S>
class expr {
 public:
  enum class kind { constant, variable, negation, addition, subtraction, scaled, random };

 private:
  kind k_;
  S value_;
  int var_ = -1;
  std::shared_ptr<const expr> a_, b_;

  expr(kind k, S v, int var, std::shared_ptr<const expr> a,
       std::shared_ptr<const expr> b)
      : k_(k), value_(std::move(v)), var_(var), a_(std::move(a)), b_(std::move(b)) {}

 public:
  static expr constant(S v) { return expr(kind::constant, std::move(v), -1, nullptr, nullptr); }
  static expr variable(int id) { return expr(kind::variable, S(0), id, nullptr, nullptr); }
  static expr negation(expr e) {
    return expr(kind::negation, S(0), -1, std::make_shared<expr>(std::move(e)), nullptr);
  }
  static expr addition(expr a, expr b) {
    return expr(kind::addition, S(0), -1, std::make_shared<expr>(std::move(a)),
                std::make_shared<expr>(std::move(b)));
  }
  static expr subtraction(expr a, expr b) {
    return expr(kind::subtraction, S(0), -1, std::make_shared<expr>(std::move(a)),
                std::make_shared<expr>(std::move(b)));
  }
  static expr scaled(S k, expr e) {
    return expr(kind::scaled, std::move(k), -1, std::make_shared<expr>(std::move(e)), nullptr);
  }
  static expr random() { return expr(kind::random, S(0), -1, nullptr, nullptr); }

  kind which() const { return k_; }
  const S& value() const { return value_; }
  int var() const { return var_; }
  const expr& left() const { return *a_; }
  const expr& right() const { return *b_; }
  bool is_random() const { return k_ == kind::random; }

  std::string str() const {
    switch (k_) {
      case kind::constant: return render_scalar(value_);
      case kind::variable: return "v" + std::to_string(var_);
      case kind::negation: return "-(" + a_->str() + ")";
      case kind::addition: return "(" + a_->str() + " + " + b_->str() + ")";
      case kind::subtraction: return "(" + a_->str() + " - " + b_->str() + ")";
      case kind::scaled: return render_scalar(value_) + "*(" + a_->str() + ")";
      case kind::random: return "?";
    }
    return "?";
  }
};

// Structural abstract evaluation (sound per basis contract; Random maps
// to top). vars[i] is the abstract value of variable i.
template <basis B>
typename B::element_type eval_expr(
    const expr<typename B::scalar_type>& e,
    const std::vector<typename B::element_type>& vars) {
  using E = expr<typename B::scalar_type>;
  switch (e.which()) {
    case E::kind::constant: return B::singleton(e.value());
    case E::kind::variable: return vars.at(static_cast<std::size_t>(e.var()));
    case E::kind::negation: return B::neg(eval_expr<B>(e.left(), vars));
    case E::kind::addition:
      return B::add(eval_expr<B>(e.left(), vars), eval_expr<B>(e.right(), vars));
    case E::kind::subtraction:
      return B::add(eval_expr<B>(e.left(), vars),
                    B::neg(eval_expr<B>(e.right(), vars)));
    case E::kind::scaled: return B::scale(e.value(), eval_expr<B>(e.left(), vars));
    case E::kind::random: return B::top();
  }
  return B::top();
}

enum class cmp_op { le, lt, ge, gt, eq, ne };

inline std::string cmp_op_str(cmp_op op) {
  switch (op) {
    case cmp_op::le: return "<=";
    case cmp_op::lt: return "<";
    case cmp_op::ge: return ">=";
    case cmp_op::gt: return ">";
    case cmp_op::eq: return "==";
    case cmp_op::ne: return "!=";
  }
  return "?";
}

template <scalar S>
class guard_atom {
 public:
  enum class kind { var_in_set, diff_in_set, cmp, diff_cmp, mod, nondet };

 private:
  kind k_;
  int lhs_ = -1, rhs_ = -1;  // diff atoms constrain lhs - rhs
  std::optional<set_literal<S>> lit_;
  cmp_op op_ = cmp_op::le;
  S c_{0};

  explicit guard_atom(kind k) : k_(k) {}

 public:
  static guard_atom nondet() { return guard_atom(kind::nondet); }
  static guard_atom var_in_set(int i, set_literal<S> s) {
    guard_atom g(kind::var_in_set);
    g.lhs_ = i;
    g.lit_ = std::move(s);
    return g;
  }
  static guard_atom diff_in_set(int i, int j, set_literal<S> s) {
    guard_atom g(kind::diff_in_set);
    g.lhs_ = i;
    g.rhs_ = j;
    g.lit_ = std::move(s);
    return g;
  }
  static guard_atom cmp(int i, cmp_op op, S c) {
    guard_atom g(kind::cmp);
    g.lhs_ = i;
    g.op_ = op;
    g.c_ = std::move(c);
    return g;
  }
  static guard_atom diff_cmp(int i, int j, cmp_op op, S c) {
    guard_atom g(kind::diff_cmp);
    g.lhs_ = i;
    g.rhs_ = j;
    g.op_ = op;
    g.c_ = std::move(c);
    return g;
  }
  static guard_atom mod(int i, std::optional<int> j, S k, S r) {
    guard_atom g(kind::mod);
    g.lhs_ = i;
    g.rhs_ = j ? *j : -1;
    g.lit_ = set_literal<S>::progression(modulus<S>::finite(std::move(k)), std::move(r));
    return g;
  }

  kind which() const { return k_; }
  int lhs() const { return lhs_; }
  int rhs() const { return rhs_; }
  bool is_diff() const { return rhs_ >= 0; }
  const set_literal<S>& lit() const { return *lit_; }
  cmp_op op() const { return op_; }
  const S& constant() const { return c_; }

  std::string str() const {
    auto v = [](int id) { return "v" + std::to_string(id); };
    switch (k_) {
      case kind::nondet: return "?";
      case kind::var_in_set: return v(lhs_) + " in " + lit_->str();
      case kind::diff_in_set:
        return v(lhs_) + " - " + v(rhs_) + " in " + lit_->str();
      case kind::cmp: return v(lhs_) + " " + cmp_op_str(op_) + " " + render_scalar(c_);
      case kind::diff_cmp:
        return v(lhs_) + " - " + v(rhs_) + " " + cmp_op_str(op_) + " " +
               render_scalar(c_);
      case kind::mod: {
        std::string base = is_diff() ? v(lhs_) + " - " + v(rhs_) : v(lhs_);
        return base + " in " + lit_->str();
      }
    }
    return "?";
  }
};

// The concrete set a comparison filters to, when the bases can express
// it: over Z strict bounds shift by one; over Q they widen to closed
// bounds (a sound loss); disequality has no representable filter.
template <scalar S>
std::optional<set_literal<S>> cmp_to_literal(cmp_op op, const S& c) {
  using L = set_literal<S>;
  using BD = bound<S>;
  switch (op) {
    case cmp_op::le: return L::range(BD::minus_infinity(), BD(c));
    case cmp_op::ge: return L::range(BD(c), BD::plus_infinity());
    case cmp_op::eq: return L::range(BD(c), BD(c));
    case cmp_op::lt:
      if constexpr (is_rational_mode<S>)
        return L::range(BD::minus_infinity(), BD(c));
      else
        return L::range(BD::minus_infinity(), BD(S(c - 1)));
    case cmp_op::gt:
      if constexpr (is_rational_mode<S>)
        return L::range(BD(c), BD::plus_infinity());
      else
        return L::range(BD(S(c + 1)), BD::plus_infinity());
    case cmp_op::ne: return std::nullopt;
  }
  return std::nullopt;
}

// The concrete filter literal of an atom on lhs (unary) or lhs - rhs
// (relational), nullopt when only the identity filter is sound.
template <scalar S>
std::optional<set_literal<S>> atom_literal(const guard_atom<S>& g) {
  using K = typename guard_atom<S>::kind;
  switch (g.which()) {
    case K::var_in_set:
    case K::diff_in_set:
    case K::mod: return g.lit();
    case K::cmp:
    case K::diff_cmp: return cmp_to_literal<S>(g.op(), g.constant());
    case K::nondet: return std::nullopt;
  }
  return std::nullopt;
}

// Concrete truth of an atom; used by the concrete-execution oracle.
template <scalar S>
bool atom_holds(const guard_atom<S>& g, const std::vector<S>& vals) {
  using K = typename guard_atom<S>::kind;
  if (g.which() == K::nondet) return true;
  S v = vals.at(static_cast<std::size_t>(g.lhs()));
  if (g.is_diff()) v = S(v - vals.at(static_cast<std::size_t>(g.rhs())));
  switch (g.which()) {
    case K::var_in_set:
    case K::diff_in_set:
    case K::mod: return g.lit().contains(v);
    case K::cmp:
    case K::diff_cmp:
      switch (g.op()) {
        case cmp_op::le: return v <= g.constant();
        case cmp_op::lt: return v < g.constant();
        case cmp_op::ge: return v >= g.constant();
        case cmp_op::gt: return v > g.constant();
        case cmp_op::eq: return v == g.constant();
        case cmp_op::ne: return v != g.constant();
      }
      return true;
    case K::nondet: return true;
  }
  return true;
}

}  // namespace wrd
