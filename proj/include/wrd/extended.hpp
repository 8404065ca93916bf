/*
 * Scalars extended with infinities.
 *
 * bound<S>   : S extended with -oo/+oo, totally ordered; interval bounds.
 * modulus<S> : strictly positive S extended with oo; congruence moduli.
 *              The extended divisibility, gcd and lcm treat oo as the
 *              largest modulus: gcd(y, oo) = y, lcm(y, oo) = oo, and
 *              every y divides oo.
 */
#pragma once

#include <wrd/scalar.hpp>

#include <compare>
#include <stdexcept>

namespace wrd {

template <scalar S>
class bound {
  int sign_;  // -1: -oo, 0: finite, +1: +oo
  S value_;

  bound(int sign, S v) : sign_(sign), value_(std::move(v)) {}

 public:
  bound() : sign_(0), value_(0) {}
  bound(S v) : sign_(0), value_(std::move(v)) {}

  static bound minus_infinity() { return bound(-1, S(0)); }
  static bound plus_infinity() { return bound(+1, S(0)); }

  bool is_finite() const { return sign_ == 0; }
  bool is_minus_infinity() const { return sign_ < 0; }
  bool is_plus_infinity() const { return sign_ > 0; }
  const S& value() const {
    if (!is_finite()) throw std::logic_error("bound: value of infinity");
    return value_;
  }

  friend bool operator==(const bound& a, const bound& b) {
    return a.sign_ == b.sign_ && (a.sign_ != 0 || a.value_ == b.value_);
  }
  friend bool operator!=(const bound& a, const bound& b) { return !(a == b); }
  friend bool operator<(const bound& a, const bound& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    return a.sign_ == 0 && a.value_ < b.value_;
  }
  friend bool operator<=(const bound& a, const bound& b) { return !(b < a); }
  friend bool operator>(const bound& a, const bound& b) { return b < a; }
  friend bool operator>=(const bound& a, const bound& b) { return !(a < b); }

  bound operator-() const {
    if (sign_ != 0) return bound(-sign_, S(0));
    return bound(S(-value_));
  }

  // Defined on every combination except -oo + +oo, which no coherent
  // interval computation produces.
  bound operator+(const bound& o) const {
    if (sign_ == 0 && o.sign_ == 0) return bound(S(value_ + o.value_));
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    if (sign_ != o.sign_) throw std::logic_error("bound: -oo + +oo");
    return *this;
  }

  // k * this; for k = 0 the result is 0 even on infinities (callers that
  // want bottom-absorption handle bottom before scaling).
  bound scaled(const S& k) const {
    if (k == 0) return bound(S(0));
    if (sign_ == 0) return bound(S(k * value_));
    return bound(k < 0 ? -sign_ : sign_, S(0));
  }

  std::string str() const {
    if (is_minus_infinity()) return "-oo";
    if (is_plus_infinity()) return "+oo";
    return render_scalar(value_);
  }
};

template <scalar S>
bound<S> min(const bound<S>& a, const bound<S>& b) {
  return a <= b ? a : b;
}
template <scalar S>
bound<S> max(const bound<S>& a, const bound<S>& b) {
  return a >= b ? a : b;
}

template <scalar S>
class modulus {
  bool finite_;
  S value_;  // > 0 when finite

  modulus(bool f, S v) : finite_(f), value_(std::move(v)) {}

 public:
  static modulus infinite() { return modulus(false, S(0)); }
  static modulus finite(S v) {
    if (v <= 0) throw std::logic_error("modulus: non-positive");
    return modulus(true, std::move(v));
  }

  bool is_finite() const { return finite_; }
  const S& value() const {
    if (!finite_) throw std::logic_error("modulus: value of oo");
    return value_;
  }

  friend bool operator==(const modulus& a, const modulus& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend bool operator!=(const modulus& a, const modulus& b) {
    return !(a == b);
  }

  std::string str() const { return finite_ ? render_scalar(value_) : "oo"; }
};

// y divides y2, i.e. y2 = k*y for some integer k >= 1, or y2 = oo.
template <scalar S>
bool divides(const modulus<S>& y, const modulus<S>& y2) {
  if (!y2.is_finite()) return true;
  if (!y.is_finite()) return false;
  if constexpr (is_rational_mode<S>) {
    q_number q = y2.value() / y.value();
    return q >= 1 && denominator_of(q) == 1;
  } else {
    return y2.value() >= y.value() && y2.value() % y.value() == 0;
  }
}

// x = x2 modulo y; with y = oo only equality qualifies.
template <scalar S>
bool congruent(const S& x, const S& x2, const modulus<S>& y) {
  if (x == x2) return true;
  if (!y.is_finite()) return false;
  return divides(y, modulus<S>::finite(abs_of(S(x - x2))));
}

template <scalar S>
modulus<S> gcd_ext(const modulus<S>& y, const modulus<S>& y2) {
  if (!y.is_finite()) return y2;
  if (!y2.is_finite()) return y;
  return modulus<S>::finite(gcd_pos(y.value(), y2.value()));
}

template <scalar S>
modulus<S> lcm_ext(const modulus<S>& y, const modulus<S>& y2) {
  if (!y.is_finite() || !y2.is_finite()) return modulus<S>::infinite();
  return modulus<S>::finite(lcm_pos(y.value(), y2.value()));
}

namespace detail {

// Extended Euclid: returns g = gcd(a, b) and u, v with a*u + b*v = g.
struct egcd_result {
  z_number g, u, v;
};
inline egcd_result egcd(z_number a, z_number b) {
  z_number u0 = 1, v0 = 0, u1 = 0, v1 = 1;
  while (b != 0) {
    z_number q = a / b;
    z_number r = a - q * b;
    a = b;
    b = r;
    z_number u2 = u0 - q * u1, v2 = v0 - q * v1;
    u0 = u1;
    v0 = v1;
    u1 = u2;
    v1 = v2;
  }
  if (a < 0) {
    a = -a;
    u0 = -u0;
    v0 = -v0;
  }
  return {a, u0, v0};
}

// Integer CRT: x = b [a], x = b2 [a2], both moduli positive.
// Precondition: b = b2 [gcd(a, a2)]. Result normalized into [0, lcm).
inline z_number crt(const z_number& b, const z_number& a, const z_number& b2,
                    const z_number& a2) {
  auto e = egcd(a, a2);
  z_number diff = b2 - b;
  if (diff % e.g != 0) throw std::logic_error("bezout_combine: incompatible");
  z_number l = a / e.g * a2;
  z_number t = (diff / e.g) * e.u % (a2 / e.g);
  z_number x = b + a * t;
  x %= l;
  if (x < 0) x += l;
  return x;
}

}  // namespace detail

// Residue combination by the Chinese remainder theorem: the returned b''
// satisfies b'' = b [a] and b'' = b2 [a2]. Callers check compatibility
// (b = b2 [gcd(a, a2)]) first; violations are contract errors.
template <scalar S>
S bezout_combine(const S& b, const modulus<S>& a, const S& b2,
                 const modulus<S>& a2) {
  if (!a.is_finite() && !a2.is_finite()) {
    if (b != b2) throw std::logic_error("bezout_combine: incompatible");
    return b;
  }
  if (!a.is_finite()) {
    if (!congruent(b, b2, a2)) throw std::logic_error("bezout_combine: incompatible");
    return b;
  }
  if (!a2.is_finite()) {
    if (!congruent(b2, b, a)) throw std::logic_error("bezout_combine: incompatible");
    return b2;
  }
  if constexpr (is_rational_mode<S>) {
    z_number d = lcm_pos(lcm_pos(denominator_of(b), denominator_of(b2)),
                         lcm_pos(denominator_of(a.value()), denominator_of(a2.value())));
    auto to_int = [&](const q_number& v) {
      q_number s = v * d;
      return numerator_of(s);
    };
    z_number x = detail::crt(to_int(b), to_int(a.value()), to_int(b2),
                             to_int(a2.value()));
    return q_number(x, d);
  } else {
    return detail::crt(b, a.value(), b2, a2.value());
  }
}

}  // namespace wrd
