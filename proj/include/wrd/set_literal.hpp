/*
 * Surface-syntax descriptions of concrete sets: ranges "[a,b]" (bounds
 * may be -oo/+oo, empty when a > b) and progressions "kZ+r" with the
 * singleton written "{r}". Every basis over-approximates these through
 * its approx operation.
 */
#pragma once

#include <wrd/extended.hpp>

namespace wrd {

template <scalar S>
class set_literal {
 public:
  enum class kind { range, progression };

 private:
  kind k_;
  bound<S> lo_, hi_;
  modulus<S> step_;
  S base_;

  set_literal(kind k, bound<S> lo, bound<S> hi, modulus<S> step, S base)
      : k_(k), lo_(std::move(lo)), hi_(std::move(hi)), step_(std::move(step)),
        base_(std::move(base)) {}

 public:
  static set_literal range(bound<S> lo, bound<S> hi) {
    return set_literal(kind::range, std::move(lo), std::move(hi),
                       modulus<S>::infinite(), S(0));
  }
  static set_literal progression(modulus<S> step, S base) {
    return set_literal(kind::progression, bound<S>(S(0)), bound<S>(S(0)),
                       std::move(step), std::move(base));
  }
  static set_literal singleton(S v) {
    return set_literal::progression(modulus<S>::infinite(), std::move(v));
  }

  kind which() const { return k_; }
  const bound<S>& lo() const { return lo_; }
  const bound<S>& hi() const { return hi_; }
  const modulus<S>& step() const { return step_; }
  const S& base() const { return base_; }

  bool empty() const { return k_ == kind::range && hi_ < lo_; }

  bool contains(const S& v) const {
    if (k_ == kind::range) return lo_ <= bound<S>(v) && bound<S>(v) <= hi_;
    return congruent(v, base_, step_);
  }

  std::string str() const {
    if (k_ == kind::range) return "[" + lo_.str() + "," + hi_.str() + "]";
    if (!step_.is_finite()) return "{" + render_scalar(base_) + "}";
    return render_scalar(step_.value()) + "Z+" + render_scalar(base_);
  }
};

// Parses the forms str() produces. Used by tests and tools; the program
// parser builds literals from its own token stream.
template <scalar S>
std::optional<set_literal<S>> parse_set_literal(std::string_view t) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  t = strip(t);
  if (t.empty()) return std::nullopt;
  auto parse_bound = [&](std::string_view s) -> std::optional<bound<S>> {
    s = strip(s);
    if (s == "-oo") return bound<S>::minus_infinity();
    if (s == "+oo") return bound<S>::plus_infinity();
    auto v = parse_scalar<S>(s);
    if (!v) return std::nullopt;
    return bound<S>(*v);
  };
  if (t.front() == '[') {
    if (t.back() != ']') return std::nullopt;
    auto body = t.substr(1, t.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto lo = parse_bound(body.substr(0, comma));
    auto hi = parse_bound(body.substr(comma + 1));
    if (!lo || !hi) return std::nullopt;
    if (lo->is_plus_infinity() || hi->is_minus_infinity()) return std::nullopt;
    return set_literal<S>::range(*lo, *hi);
  }
  if (t.front() == '{') {
    if (t.back() != '}') return std::nullopt;
    auto v = parse_scalar<S>(strip(t.substr(1, t.size() - 2)));
    if (!v) return std::nullopt;
    return set_literal<S>::singleton(*v);
  }
  auto z = t.find('Z');
  if (z == std::string_view::npos) return std::nullopt;
  auto k = parse_scalar<S>(strip(t.substr(0, z)));
  auto rest = strip(t.substr(z + 1));
  if (!k || *k <= 0 || rest.empty() || rest.front() != '+') return std::nullopt;
  auto r = parse_scalar<S>(strip(rest.substr(1)));
  if (!r) return std::nullopt;
  return set_literal<S>::progression(modulus<S>::finite(*k), *r);
}

}  // namespace wrd
