/*
 * Interval basis [a,b] with a in S u {-oo}, b in S u {+oo}, a <= b.
 * Infinite bounds are not members. One implementation serves both
 * scalar modes. Carries the classical widening: a bound that moved
 * is pushed to the corresponding infinity.
 */
#pragma once

#include <wrd/basis.hpp>

namespace wrd {

template <scalar S>
class interval_elem {
  bool bot_;
  bound<S> lo_, hi_;

  interval_elem(bool bot, bound<S> lo, bound<S> hi)
      : bot_(bot), lo_(std::move(lo)), hi_(std::move(hi)) {}

 public:
  static interval_elem bot() {
    return interval_elem(true, bound<S>(S(0)), bound<S>(S(0)));
  }
  // Empty ranges collapse to bottom.
  static interval_elem range(bound<S> lo, bound<S> hi) {
    if (hi < lo || lo.is_plus_infinity() || hi.is_minus_infinity())
      return bot();
    return interval_elem(false, std::move(lo), std::move(hi));
  }

  bool is_bot() const { return bot_; }
  const bound<S>& lo() const { return lo_; }
  const bound<S>& hi() const { return hi_; }

  friend bool operator==(const interval_elem& a, const interval_elem& b) {
    if (a.bot_ != b.bot_) return false;
    return a.bot_ || (a.lo_ == b.lo_ && a.hi_ == b.hi_);
  }
  friend bool operator!=(const interval_elem& a, const interval_elem& b) {
    return !(a == b);
  }
};

template <scalar S>
struct interval_basis {
  using scalar_type = S;
  using element_type = interval_elem<S>;
  using E = element_type;
  using BD = bound<S>;

  static E bottom() { return E::bot(); }
  static E top() {
    return E::range(BD::minus_infinity(), BD::plus_infinity());
  }
  static E singleton(const S& c) { return E::range(BD(c), BD(c)); }
  static bool is_bottom(const E& x) { return x.is_bot(); }
  static bool is_top(const E& x) {
    return !x.is_bot() && x.lo().is_minus_infinity() && x.hi().is_plus_infinity();
  }

  static bool leq(const E& x, const E& y) {
    if (x.is_bot()) return true;
    if (y.is_bot()) return false;
    return y.lo() <= x.lo() && x.hi() <= y.hi();
  }

  static E meet(const E& x, const E& y) {
    if (x.is_bot() || y.is_bot()) return bottom();
    return E::range(max(x.lo(), y.lo()), min(x.hi(), y.hi()));
  }

  static E join(const E& x, const E& y) {
    if (x.is_bot()) return y;
    if (y.is_bot()) return x;
    return E::range(min(x.lo(), y.lo()), max(x.hi(), y.hi()));
  }

  static E widen(const E& x, const E& y) {
    if (x.is_bot()) return y;
    if (y.is_bot()) return x;
    BD lo = x.lo() <= y.lo() ? x.lo() : BD::minus_infinity();
    BD hi = x.hi() >= y.hi() ? x.hi() : BD::plus_infinity();
    return E::range(lo, hi);
  }

  static E add(const E& x, const E& y) {
    if (x.is_bot() || y.is_bot()) return bottom();
    return E::range(x.lo() + y.lo(), x.hi() + y.hi());
  }

  static E neg(const E& x) {
    if (x.is_bot()) return bottom();
    return E::range(-x.hi(), -x.lo());
  }

  static E scale(const S& k, const E& x) {
    if (x.is_bot()) return bottom();
    if (k == 0) return singleton(S(0));
    if (k > 0) return E::range(x.lo().scaled(k), x.hi().scaled(k));
    return E::range(x.hi().scaled(k), x.lo().scaled(k));
  }

  static E approx(const set_literal<S>& s) {
    if (s.empty()) return bottom();
    if (s.which() == set_literal<S>::kind::range) return E::range(s.lo(), s.hi());
    if (!s.step().is_finite()) return singleton(s.base());
    return top();  // no finite interval contains an infinite progression
  }

  static bool member(const E& x, const S& c) {
    if (x.is_bot()) return false;
    return x.lo() <= BD(c) && BD(c) <= x.hi();
  }

  static std::string render(const E& x) {
    if (x.is_bot()) return "_|_";
    return "[" + x.lo().str() + "," + x.hi().str() + "]";
  }
};

}  // namespace wrd
