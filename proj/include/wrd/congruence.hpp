/*
 * Congruence basis aZ+b.
 *
 * Integer mode: a in N* u {oo}, b in Z; oo marks singletons {b}; 1Z+0
 * is the whole of Z and is the canonical top.
 * Rational mode: a in Q>0 u {oo}, b in Q. No class aZ+b covers all of
 * Q, so an explicit top element (denoting Q) completes the basis; it
 * also restores a widening, since rational moduli admit infinite
 * ascending chains ((1/2^n)Z grows forever) that the integer basis
 * does not have.
 *
 * Elements are kept canonical: finite modulus with residue in [0, a),
 * and in integer mode modulus 1 collapses to top. Canonical form makes
 * the concretization injective on representations.
 */
#pragma once

#include <wrd/basis.hpp>

namespace wrd {

template <scalar S>
class congruence_elem {
  enum class tag { bot, top, cls } t_;
  modulus<S> mod_;
  S res_;

  congruence_elem(tag t, modulus<S> m, S r)
      : t_(t), mod_(std::move(m)), res_(std::move(r)) {}

 public:
  static congruence_elem bot() {
    return congruence_elem(tag::bot, modulus<S>::infinite(), S(0));
  }
  static congruence_elem top() {
    return congruence_elem(tag::top, modulus<S>::infinite(), S(0));
  }
  // Canonicalizing constructor.
  static congruence_elem cls(modulus<S> m, S r) {
    if (!m.is_finite())
      return congruence_elem(tag::cls, std::move(m), std::move(r));
    if constexpr (!is_rational_mode<S>) {
      if (m.value() == 1) return top();
    }
    // reduce r into [0, m)
    const S& a = m.value();
    S f;
    if constexpr (is_rational_mode<S>) {
      f = S(floor_of(S(r / a)));
    } else {
      f = floor_div(r, a);
    }
    S rr = r - a * f;
    return congruence_elem(tag::cls, std::move(m), std::move(rr));
  }

  bool is_bot() const { return t_ == tag::bot; }
  bool is_top() const { return t_ == tag::top; }
  bool is_cls() const { return t_ == tag::cls; }
  bool is_singleton() const { return t_ == tag::cls && !mod_.is_finite(); }
  const modulus<S>& mod() const { return mod_; }
  const S& res() const { return res_; }

  friend bool operator==(const congruence_elem& a, const congruence_elem& b) {
    if (a.t_ != b.t_) return false;
    if (a.t_ != tag::cls) return true;
    return a.mod_ == b.mod_ && a.res_ == b.res_;
  }
  friend bool operator!=(const congruence_elem& a, const congruence_elem& b) {
    return !(a == b);
  }
};

template <scalar S>
struct congruence_basis {
  using scalar_type = S;
  using element_type = congruence_elem<S>;
  using E = element_type;
  using M = modulus<S>;

  static E bottom() { return E::bot(); }
  static E top() { return E::top(); }
  static E singleton(const S& c) { return E::cls(M::infinite(), c); }
  static bool is_bottom(const E& x) { return x.is_bot(); }
  static bool is_top(const E& x) { return x.is_top(); }

  static bool leq(const E& x, const E& y) {
    if (x.is_bot() || y.is_top()) return true;
    if (y.is_bot() || x.is_top()) return false;
    return divides(y.mod(), x.mod()) && congruent(x.res(), y.res(), y.mod());
  }

  static E meet(const E& x, const E& y) {
    if (x.is_bot() || y.is_bot()) return bottom();
    if (x.is_top()) return y;
    if (y.is_top()) return x;
    M g = gcd_ext(x.mod(), y.mod());
    if (!congruent(x.res(), y.res(), g)) return bottom();
    S r = bezout_combine(x.res(), x.mod(), y.res(), y.mod());
    return E::cls(lcm_ext(x.mod(), y.mod()), r);
  }

  static E join(const E& x, const E& y) {
    if (x.is_bot()) return y;
    if (y.is_bot()) return x;
    if (x.is_top() || y.is_top()) return top();
    M g = gcd_ext(x.mod(), y.mod());
    if (x.res() != y.res())
      g = gcd_ext(g, M::finite(abs_of(S(x.res() - y.res()))));
    return E::cls(g, x.res());
  }

  static E widen(const E& x, const E& y) {
    E j = join(x, y);
    if constexpr (!is_rational_mode<S>) {
      return j;  // no strictly increasing infinite chain over Z
    } else {
      if (x.is_bot() || j == x) return j;
      if (x.is_singleton()) return j;
      return top();  // a finite rational modulus refined: cut the chain
    }
  }

  static E add(const E& x, const E& y) {
    if (x.is_bot() || y.is_bot()) return bottom();
    if (x.is_top() || y.is_top()) return top();
    return E::cls(gcd_ext(x.mod(), y.mod()), S(x.res() + y.res()));
  }

  static E neg(const E& x) {
    if (!x.is_cls()) return x;
    return E::cls(x.mod(), S(-x.res()));
  }

  static E scale(const S& k, const E& x) {
    if (x.is_bot()) return bottom();
    if (k == 0) return singleton(S(0));
    if (x.is_top()) {
      if constexpr (is_rational_mode<S>) return top();
      else return E::cls(M::finite(abs_of(k)), S(0));  // k*Z exactly
    }
    M m = x.mod().is_finite() ? M::finite(S(abs_of(k) * x.mod().value()))
                              : M::infinite();
    return E::cls(std::move(m), S(k * x.res()));
  }

  static E approx(const set_literal<S>& s) {
    if (s.empty()) return bottom();
    if (s.which() == set_literal<S>::kind::progression)
      return E::cls(s.step(), s.base());
    if (s.lo() == s.hi() && s.lo().is_finite()) return singleton(s.lo().value());
    return top();
  }

  static bool member(const E& x, const S& c) {
    if (x.is_bot()) return false;
    if (x.is_top()) return true;
    return congruent(c, x.res(), x.mod());
  }

  static std::string render(const E& x) {
    if (x.is_bot()) return "_|_";
    if (x.is_top()) return "T";
    if (x.is_singleton()) return "{" + render_scalar(x.res()) + "}";
    return render_scalar(x.mod().value()) + "Z+" + render_scalar(x.res());
  }
};

}  // namespace wrd
