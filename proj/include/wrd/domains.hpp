/*
 * Engine-facing adapters: a uniform surface over the non-relational
 * environment functor and the constraint-matrix functor, including the
 * transfer functions for CFG actions.
 *
 * Matrix assignments go through a small pattern matcher:
 *   v = v + c            exact translation
 *   v = w + c  (w != v)  exact copy with offset
 *   v = w + u  (both != v) the dedicated sum transfer
 *   anything else        generic non-relational fallback
 */
#pragma once

#include <wrd/cfg.hpp>
#include <wrd/matrix.hpp>
#include <wrd/nonrel.hpp>

namespace wrd {

template <basis B>
struct env_domain {
  using S = typename B::scalar_type;
  using state = abstract_env<B>;

  int nvars;

  explicit env_domain(int nvars_) : nvars(nvars_) {}

  state initial() const { return state::top(nvars); }
  state bottom() const { return state::bottom(nvars); }
  bool is_bottom(const state& s) const { return s.is_bottom(); }
  state join(const state& a, const state& b) const { return state::join(a, b); }
  state widen(const state& a, const state& b) const { return state::widen(a, b); }
  bool leq(const state& a, const state& b) const { return state::leq(a, b); }
  bool eq_cells(const state& a, const state& b) const { return a == b; }
  state normalize(const state& s) const { return s; }

  state transfer(const action<S>& a, const state& s) const {
    switch (a.k) {
      case action<S>::kind::skip: return s;
      case action<S>::kind::guard: return s.guard(*a.atom);
      case action<S>::kind::assign:
        if (a.random_rhs) return s.assign_random(a.var);
        return s.assign(a.var, *a.rhs);
    }
    return s;
  }

  std::string render(const state& s, const std::vector<std::string>& names) const {
    return s.render(names);
  }
};

namespace detail {

// Recognizes v_j + c (including bare v_j and v_j - c) and c alone.
template <scalar S>
struct linear_shape {
  std::optional<int> var;
  std::optional<S> offset;  // set when the expression is var + offset
};

template <scalar S>
std::optional<linear_shape<S>> match_var_plus_const(const expr<S>& e) {
  using K = typename expr<S>::kind;
  switch (e.which()) {
    case K::variable: return linear_shape<S>{e.var(), S(0)};
    case K::addition: {
      const expr<S>&l = e.left(), &r = e.right();
      if (l.which() == K::variable && r.which() == K::constant)
        return linear_shape<S>{l.var(), r.value()};
      if (l.which() == K::constant && r.which() == K::variable)
        return linear_shape<S>{r.var(), l.value()};
      return std::nullopt;
    }
    case K::subtraction: {
      const expr<S>&l = e.left(), &r = e.right();
      if (l.which() == K::variable && r.which() == K::constant)
        return linear_shape<S>{l.var(), S(-r.value())};
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

}  // namespace detail

template <basis B>
struct matrix_domain {
  using S = typename B::scalar_type;
  using state = constraint_matrix<B>;

  int n;  // variables including the zero anchor

  explicit matrix_domain(int nvars) : n(nvars + 1) {}

  state initial() const { return state::top(n); }
  state bottom() const { return state::bottom(n); }
  bool is_bottom(const state& s) const { return s.is_empty(); }
  state join(const state& a, const state& b) const { return state::join(a, b); }
  state widen(const state& a, const state& b) const { return state::widen(a, b); }
  bool leq(const state& a, const state& b) const { return state::leq(a, b); }
  bool eq_cells(const state& a, const state& b) const {
    return state::eq_cells(a, b);
  }
  state normalize(const state& s) const { return s.close(); }

  state transfer_guard(const guard_atom<S>& g, const state& s) const {
    using K = typename guard_atom<S>::kind;
    if (g.which() == K::nondet) return s;
    auto lit = atom_literal(g);
    if (!lit) return s;  // disequalities filter nothing
    if (g.is_diff()) return s.guard(g.rhs(), g.lhs(), *lit);  // v_lhs - v_rhs
    return s.guard(0, g.lhs(), *lit);
  }

  state transfer_assign(int var, const expr<S>& e, const state& s) const {
    using K = typename expr<S>::kind;
    if (auto shape = detail::match_var_plus_const(e)) {
      if (*shape->var == var) return s.assign_translate(var, *shape->offset);
      return s.assign_copy_offset(var, *shape->var, *shape->offset);
    }
    if (e.which() == K::addition &&
        e.left().which() == K::variable && e.right().which() == K::variable &&
        e.left().var() != var && e.right().var() != var)
      return s.assign_sum(var, e.left().var(), e.right().var());
    return s.assign_generic(var, e);
  }

  state transfer(const action<S>& a, const state& s) const {
    switch (a.k) {
      case action<S>::kind::skip: return s;
      case action<S>::kind::guard: return transfer_guard(*a.atom, s);
      case action<S>::kind::assign:
        if (a.random_rhs) return s.forget(a.var);
        return transfer_assign(a.var, *a.rhs, s);
    }
    return s;
  }

  std::string render(const state& s, const std::vector<std::string>& names) const {
    return s.close().render(names);
  }
};

}  // namespace wrd
