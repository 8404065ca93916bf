/*
 * Constant-propagation basis: the flat lattice bottom < c < top.
 */
#pragma once

#include <wrd/basis.hpp>

namespace wrd {

template <scalar S>
class constant_elem {
  enum class tag { bot, val, top } t_;
  S v_;

  constant_elem(tag t, S v) : t_(t), v_(std::move(v)) {}

 public:
  static constant_elem bot() { return constant_elem(tag::bot, S(0)); }
  static constant_elem top() { return constant_elem(tag::top, S(0)); }
  static constant_elem val(S v) { return constant_elem(tag::val, std::move(v)); }

  bool is_bot() const { return t_ == tag::bot; }
  bool is_top() const { return t_ == tag::top; }
  bool is_val() const { return t_ == tag::val; }
  const S& value() const { return v_; }

  friend bool operator==(const constant_elem& a, const constant_elem& b) {
    return a.t_ == b.t_ && (a.t_ != tag::val || a.v_ == b.v_);
  }
  friend bool operator!=(const constant_elem& a, const constant_elem& b) {
    return !(a == b);
  }
};

template <scalar S>
struct constant_basis {
  using scalar_type = S;
  using element_type = constant_elem<S>;
  using E = element_type;

  static E bottom() { return E::bot(); }
  static E top() { return E::top(); }
  static E singleton(const S& c) { return E::val(c); }
  static bool is_bottom(const E& x) { return x.is_bot(); }
  static bool is_top(const E& x) { return x.is_top(); }

  static bool leq(const E& x, const E& y) {
    if (x.is_bot() || y.is_top()) return true;
    if (x.is_top() || y.is_bot()) return false;
    return x.value() == y.value();
  }

  static E meet(const E& x, const E& y) {
    if (x.is_bot() || y.is_bot()) return bottom();
    if (x.is_top()) return y;
    if (y.is_top()) return x;
    return x.value() == y.value() ? x : bottom();
  }

  static E join(const E& x, const E& y) {
    if (x.is_bot()) return y;
    if (y.is_bot()) return x;
    if (x.is_top() || y.is_top()) return top();
    return x.value() == y.value() ? x : top();
  }

  // Flat lattice, no infinite chains.
  static E widen(const E& x, const E& y) { return join(x, y); }

  static E add(const E& x, const E& y) {
    if (x.is_bot() || y.is_bot()) return bottom();
    if (x.is_top() || y.is_top()) return top();
    return E::val(S(x.value() + y.value()));
  }

  static E neg(const E& x) {
    if (x.is_val()) return E::val(S(-x.value()));
    return x;
  }

  static E scale(const S& k, const E& x) {
    if (x.is_bot()) return bottom();
    if (k == 0) return singleton(S(0));
    if (x.is_top()) return top();
    return E::val(S(k * x.value()));
  }

  static E approx(const set_literal<S>& s) {
    if (s.empty()) return bottom();
    if (s.which() == set_literal<S>::kind::range) {
      if (s.lo() == s.hi() && s.lo().is_finite()) return E::val(s.lo().value());
      return top();
    }
    if (!s.step().is_finite()) return E::val(s.base());
    return top();
  }

  static bool member(const E& x, const S& c) {
    if (x.is_bot()) return false;
    if (x.is_top()) return true;
    return x.value() == c;
  }

  static std::string render(const E& x) {
    if (x.is_bot()) return "_|_";
    if (x.is_top()) return "T";
    return render_scalar(x.value());
  }
};

}  // namespace wrd
