/*
 * Exact arbitrary-precision scalars.
 *
 * Two number modes, fixed per analysis run: z_number (integers) and
 * q_number (rationals, kept in canonical reduced form with positive
 * denominator). All arithmetic is exact; nothing here rounds or
 * overflows, so the closure algorithm can chain sums of constants
 * indefinitely.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace wrd {

// Expression templates stay off so arithmetic yields plain values.
using z_number =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using q_number = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <class S>
inline constexpr bool is_rational_mode = false;
template <>
inline constexpr bool is_rational_mode<q_number> = true;

template <class S>
concept scalar = std::same_as<S, z_number> || std::same_as<S, q_number>;

inline z_number numerator_of(const z_number& x) { return x; }
inline z_number denominator_of(const z_number&) { return 1; }
inline z_number numerator_of(const q_number& x) {
  return boost::multiprecision::numerator(x);
}
inline z_number denominator_of(const q_number& x) {
  return boost::multiprecision::denominator(x);
}

// Floor division; divisor must be positive.
inline z_number floor_div(const z_number& a, const z_number& b) {
  z_number q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline z_number floor_of(const z_number& x) { return x; }
inline z_number floor_of(const q_number& x) {
  return floor_div(numerator_of(x), denominator_of(x));
}

template <scalar S>
z_number ceil_of(const S& x) {
  return -floor_of(S(-x));
}

inline z_number gcd_pos(const z_number& a, const z_number& b) {
  return boost::multiprecision::gcd(a, b);
}
inline z_number lcm_pos(const z_number& a, const z_number& b) {
  return boost::multiprecision::lcm(a, b);
}

// gcd over positive rationals: gcd(a/b, c/d) = gcd(ad, cb)/(bd), reduced.
// This is the largest q such that both arguments are integer multiples
// of q; lcm is the dual. Both coincide with the usual notions on Z.
inline q_number gcd_pos(const q_number& x, const q_number& y) {
  z_number a = numerator_of(x), b = denominator_of(x);
  z_number c = numerator_of(y), d = denominator_of(y);
  return q_number(gcd_pos(a * d, c * b), b * d);
}
inline q_number lcm_pos(const q_number& x, const q_number& y) {
  z_number a = numerator_of(x), b = denominator_of(x);
  z_number c = numerator_of(y), d = denominator_of(y);
  return q_number(lcm_pos(a * d, c * b), b * d);
}

template <scalar S>
S abs_of(const S& x) {
  return x < 0 ? S(-x) : x;
}

inline std::string render_scalar(const z_number& x) { return x.str(); }
inline std::string render_scalar(const q_number& x) {
  z_number d = denominator_of(x);
  if (d == 1) return numerator_of(x).str();
  return numerator_of(x).str() + "/" + d.str();
}

// Accepts "p" and, in rational mode, "p/q". Returns nullopt on anything else.
template <scalar S>
std::optional<S> parse_scalar(std::string_view text) {
  auto parse_int = [](std::string_view t) -> std::optional<z_number> {
    if (t.empty()) return std::nullopt;
    std::size_t i = 0;
    if (t[0] == '-' || t[0] == '+') i = 1;
    if (i == t.size()) return std::nullopt;
    for (std::size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return std::nullopt;
    return z_number(std::string(t));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    return S(*v);
  }
  if constexpr (!is_rational_mode<S>) {
    return std::nullopt;
  } else {
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return q_number(*n, *d);
  }
}

}  // namespace wrd
