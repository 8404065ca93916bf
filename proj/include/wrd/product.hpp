/*
 * Reduced-product basis combinator.
 *
 * Elements are pairs over two component bases. Every operation except
 * widening applies componentwise and then runs the reduction pair;
 * widening stays componentwise because re-tightening its output could
 * re-shrink components and break the ascending chain condition. A pair
 * with an empty joint concretization normalizes to the canonical
 * bottom (both components bottom).
 *
 * The shipped reduction between intervals and congruences pulls each
 * finite interval bound to the nearest member of the congruence class
 * and, when the interval collapses to one point, sharpens the
 * congruence to that singleton; the latter keeps representations
 * canonical.
 */
#pragma once

#include <wrd/basis.hpp>
#include <wrd/congruence.hpp>
#include <wrd/interval.hpp>

#include <utility>

namespace wrd {

template <class E1, class E2>
struct product_elem {
  E1 first;
  E2 second;

  friend bool operator==(const product_elem& a, const product_elem& b) {
    return a.first == b.first && a.second == b.second;
  }
  friend bool operator!=(const product_elem& a, const product_elem& b) {
    return !(a == b);
  }
};

template <basis B1, basis B2, class R>
  requires reduction_pair<R, B1, B2>
struct product_basis {
  using scalar_type = typename B1::scalar_type;
  static_assert(std::same_as<scalar_type, typename B2::scalar_type>);
  using E1 = typename B1::element_type;
  using E2 = typename B2::element_type;
  using element_type = product_elem<E1, E2>;
  using E = element_type;
  using S = scalar_type;

  static E bottom() { return {B1::bottom(), B2::bottom()}; }
  static E top() { return {B1::top(), B2::top()}; }
  static bool is_bottom(const E& x) { return B1::is_bottom(x.first); }
  static bool is_top(const E& x) {
    return B1::is_top(x.first) && B2::is_top(x.second);
  }

  static E reduce(E1 a, E2 b) {
    if (B1::is_bottom(a) || B2::is_bottom(b)) return bottom();
    E1 a2 = R::reduce_left(a, b);
    E2 b2 = R::reduce_right(a, b);
    if (B1::is_bottom(a2) || B2::is_bottom(b2)) return bottom();
    return {std::move(a2), std::move(b2)};
  }

  static E singleton(const S& c) {
    return reduce(B1::singleton(c), B2::singleton(c));
  }

  static bool leq(const E& x, const E& y) {
    return B1::leq(x.first, y.first) && B2::leq(x.second, y.second);
  }

  static E meet(const E& x, const E& y) {
    return reduce(B1::meet(x.first, y.first), B2::meet(x.second, y.second));
  }

  static E join(const E& x, const E& y) {
    if (is_bottom(x)) return y;
    if (is_bottom(y)) return x;
    return reduce(B1::join(x.first, y.first), B2::join(x.second, y.second));
  }

  // Componentwise, deliberately without reduction.
  static E widen(const E& x, const E& y) {
    if (is_bottom(x)) return y;
    if (is_bottom(y)) return x;
    return {B1::widen(x.first, y.first), B2::widen(x.second, y.second)};
  }

  static E add(const E& x, const E& y) {
    if (is_bottom(x) || is_bottom(y)) return bottom();
    return reduce(B1::add(x.first, y.first), B2::add(x.second, y.second));
  }

  static E neg(const E& x) {
    if (is_bottom(x)) return bottom();
    return reduce(B1::neg(x.first), B2::neg(x.second));
  }

  static E scale(const S& k, const E& x) {
    if (is_bottom(x)) return bottom();
    return reduce(B1::scale(k, x.first), B2::scale(k, x.second));
  }

  static E approx(const set_literal<S>& s) {
    return reduce(B1::approx(s), B2::approx(s));
  }

  static bool member(const E& x, const S& c) {
    return B1::member(x.first, c) && B2::member(x.second, c);
  }

  static std::string render(const E& x) {
    if (is_bottom(x)) return "_|_";
    return "(" + B1::render(x.first) + ", " + B2::render(x.second) + ")";
  }
};

// Reduction between the interval and congruence bases over one scalar
// mode. reduce_left clips the interval to the congruence members it
// actually contains; reduce_right keeps the congruence except when the
// clipped interval is a single point, which it reports exactly.
template <scalar S>
struct interval_congruence_reduction {
  using IB = interval_basis<S>;
  using CB = congruence_basis<S>;
  using IE = typename IB::element_type;
  using CE = typename CB::element_type;

  // Smallest member of the class >= v, if any.
  static std::optional<S> member_at_least(const CE& c, const S& v) {
    if (c.is_bot()) return std::nullopt;
    if (c.is_top()) return v;
    if (c.is_singleton()) {
      if (c.res() >= v) return c.res();
      return std::nullopt;
    }
    const S& a = c.mod().value();
    z_number k;
    if constexpr (is_rational_mode<S>) {
      k = ceil_of(S((v - c.res()) / a));
    } else {
      k = -floor_div(-(v - c.res()), a);
    }
    return S(c.res() + a * S(k));
  }

  static std::optional<S> member_at_most(const CE& c, const S& v) {
    CE n = CB::neg(c);
    auto r = member_at_least(n, S(-v));
    if (!r) return std::nullopt;
    return S(-*r);
  }

  static IE tightened(const IE& iv, const CE& cg) {
    if (iv.is_bot() || cg.is_bot()) return IB::bottom();
    if (cg.is_singleton())
      return IB::member(iv, cg.res()) ? IB::singleton(cg.res()) : IB::bottom();
    bound<S> lo = iv.lo(), hi = iv.hi();
    if (lo.is_finite()) {
      auto m = member_at_least(cg, lo.value());
      if (!m) return IB::bottom();
      lo = bound<S>(*m);
    }
    if (hi.is_finite()) {
      auto m = member_at_most(cg, hi.value());
      if (!m) return IB::bottom();
      hi = bound<S>(*m);
    }
    return IE::range(lo, hi);
  }

  static IE reduce_left(const IE& iv, const CE& cg) { return tightened(iv, cg); }

  static CE reduce_right(const IE& iv, const CE& cg) {
    IE t = tightened(iv, cg);
    if (t.is_bot()) return CB::bottom();
    if (t.lo() == t.hi() && t.lo().is_finite())
      return CB::singleton(t.lo().value());
    return cg;
  }
};

template <scalar S>
using interval_congruence_basis =
    product_basis<interval_basis<S>, congruence_basis<S>,
                  interval_congruence_reduction<S>>;

}  // namespace wrd
