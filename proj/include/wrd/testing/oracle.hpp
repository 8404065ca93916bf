/*
 * Brute-force reference implementations backing the property suites.
 * Deliberately naive: finite-window enumeration of concretizations,
 * closure by explicit simple-path sums, and concrete program
 * execution. Test support only, not part of the analysis API.
 */
#pragma once

#include <wrd/cfg.hpp>
#include <wrd/matrix.hpp>
#include <wrd/nonrel.hpp>

#include <map>
#include <set>

namespace wrd::testing {

// Finite candidate values per variable. Always contains 0 (the anchor).
template <scalar S>
struct window {
  std::vector<S> values;  // sorted, unique
};

inline window<z_number> make_int_window(int lo, int hi) {
  window<z_number> w;
  for (int v = lo; v <= hi; ++v) w.values.push_back(v);
  return w;
}

inline window<q_number> make_rat_window(int lo, int hi, int max_den) {
  std::set<q_number> vals;
  for (int d = 1; d <= max_den; ++d)
    for (z_number k = z_number(lo) * d; k <= z_number(hi) * d; ++k)
      vals.insert(q_number(k, d));
  window<q_number> w;
  w.values.assign(vals.begin(), vals.end());
  return w;
}

template <scalar S>
window<S> make_window(int lo, int hi, int max_den) {
  if constexpr (is_rational_mode<S>)
    return make_rat_window(lo, hi, max_den);
  else
    return make_int_window(lo, hi);
}

template <basis B>
std::vector<typename B::scalar_type> sample(
    const typename B::element_type& x, const window<typename B::scalar_type>& w) {
  return sample<B>(x, w.values);
}

// Enumerates points (0, x_1, .., x_{n-1}) over the window; the callback
// may return false to stop early. Returns true when enumeration ran to
// completion.
template <scalar S, class F>
bool for_each_point(const window<S>& w, int n, F&& f) {
  std::vector<S> point(static_cast<std::size_t>(n), S(0));
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  int level = 1;
  if (n == 1) return f(point);
  while (true) {
    if (level == n) {
      if (!f(point)) return false;
      --level;
      continue;
    }
    auto& i = idx[static_cast<std::size_t>(level)];
    if (i == w.values.size()) {
      i = 0;
      --level;
      if (level == 0) return true;
      continue;
    }
    point[static_cast<std::size_t>(level)] = w.values[i];
    ++i;
    ++level;
  }
}

template <basis B>
std::vector<std::vector<typename B::scalar_type>> gamma_enum(
    const constraint_matrix<B>& m, const window<typename B::scalar_type>& w) {
  std::vector<std::vector<typename B::scalar_type>> out;
  if (m.is_empty_state()) return out;
  for_each_point(w, m.dim(), [&](const auto& p) {
    if (m.gamma_contains(p)) out.push_back(p);
    return true;
  });
  return out;
}

template <basis B>
bool gamma_empty_on_window(const constraint_matrix<B>& m,
                           const window<typename B::scalar_type>& w) {
  if (m.is_empty_state()) return true;
  return for_each_point(w, m.dim(), [&](const auto& p) {
    return !m.gamma_contains(p);  // stop on the first witness
  });
}

// Reference closure: every cell as the meet over all simple paths of
// the sums along them. Exponential; capped at 5 variables.
template <basis B>
constraint_matrix<B> closure_by_paths(const constraint_matrix<B>& m) {
  using E = typename B::element_type;
  using S = typename B::scalar_type;
  if (m.is_empty_state()) return m;
  const int n = m.dim();
  if (n > 5) throw std::invalid_argument("closure_by_paths: too many variables");

  // Meet over every simple path from i to j of the sums along it:
  // endpoints fixed, intermediates pairwise distinct and disjoint from
  // {i, j}. For i == j this meets the simple cycles into the diagonal.
  auto paths_meet = [&](int i, int j) {
    E acc = B::top();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int cur, const E& sum) -> void {
      acc = B::meet(acc, B::add(sum, m.cell(cur, j)));
      for (int w = 0; w < n; ++w) {
        if (w == i || w == j || used[static_cast<std::size_t>(w)]) continue;
        used[static_cast<std::size_t>(w)] = 1;
        self(self, w, B::add(sum, m.cell(cur, w)));
        used[static_cast<std::size_t>(w)] = 0;
      }
    };
    rec(rec, i, B::singleton(S(0)));
    return acc;
  };

  constraint_matrix<B> r = constraint_matrix<B>::top(n);
  bool empty = false;
  for (int i = 0; i < n && !empty; ++i) {
    if (B::is_bottom(paths_meet(i, i))) empty = true;
    for (int j = i + 1; j < n; ++j) r = r.with_pair(i, j, paths_meet(i, j));
  }
  if (empty) return constraint_matrix<B>::bottom(n);
  return r;
}

// Concrete executions over the CFG. Variables start at zero (programs
// under test initialize before use); `?` assignments range over
// random_values; nondeterministic branches go both ways. A path may
// traverse at most backedge_budget back edges; exceeding it (or the
// global pair budget) sets `exhausted` so callers can skip rather than
// fail.
template <scalar S>
struct concrete_result {
  std::vector<std::set<std::vector<S>>> states;  // per node
  bool exhausted = false;
};

template <scalar S>
S eval_concrete(const expr<S>& e, const std::vector<S>& env) {
  using K = typename expr<S>::kind;
  switch (e.which()) {
    case K::constant: return e.value();
    case K::variable: return env.at(static_cast<std::size_t>(e.var()));
    case K::negation: return S(-eval_concrete(e.left(), env));
    case K::addition:
      return S(eval_concrete(e.left(), env) + eval_concrete(e.right(), env));
    case K::subtraction:
      return S(eval_concrete(e.left(), env) - eval_concrete(e.right(), env));
    case K::scaled: return S(e.value() * eval_concrete(e.left(), env));
    case K::random:
      throw std::logic_error("eval_concrete: embedded random");
  }
  throw std::logic_error("eval_concrete: bad expression");
}

template <scalar S>
concrete_result<S> concrete_run(const cfg<S>& g, const std::vector<S>& random_values,
                                int backedge_budget = 1 << 20,
                                std::size_t pair_budget = 200000) {
  concrete_result<S> res;
  res.states.assign(static_cast<std::size_t>(g.node_count), {});
  const int n = static_cast<int>(g.var_names.size());

  std::map<std::pair<int, std::vector<S>>, int> best;  // min back edges seen
  std::vector<std::tuple<int, std::vector<S>, int>> queue;
  std::vector<S> init(static_cast<std::size_t>(n), S(0));
  queue.push_back({g.entry, init, 0});
  best[{g.entry, init}] = 0;

  std::vector<std::vector<int>> out(static_cast<std::size_t>(g.node_count));
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    out[static_cast<std::size_t>(g.edges[e].src)].push_back(static_cast<int>(e));

  std::size_t processed = 0;
  while (!queue.empty()) {
    if (++processed > pair_budget) {
      res.exhausted = true;
      break;
    }
    auto [node, env, fuel] = queue.back();
    queue.pop_back();
    res.states[static_cast<std::size_t>(node)].insert(env);
    for (int ei : out[static_cast<std::size_t>(node)]) {
      const auto& e = g.edges[static_cast<std::size_t>(ei)];
      int nfuel = fuel + (e.back ? 1 : 0);
      if (nfuel > backedge_budget) {
        res.exhausted = true;
        continue;
      }
      std::vector<std::vector<S>> nexts;
      switch (e.act.k) {
        case action<S>::kind::skip: nexts.push_back(env); break;
        case action<S>::kind::guard:
          if (atom_holds(*e.act.atom, env)) nexts.push_back(env);
          break;
        case action<S>::kind::assign:
          if (e.act.random_rhs) {
            for (const S& v : random_values) {
              auto ne = env;
              ne[static_cast<std::size_t>(e.act.var)] = v;
              nexts.push_back(std::move(ne));
            }
          } else {
            auto ne = env;
            ne[static_cast<std::size_t>(e.act.var)] =
                eval_concrete(*e.act.rhs, env);
            nexts.push_back(std::move(ne));
          }
          break;
      }
      for (auto& ne : nexts) {
        auto key = std::make_pair(e.dst, ne);
        auto it = best.find(key);
        if (it != best.end() && it->second <= nfuel) continue;
        best[key] = nfuel;
        queue.push_back({e.dst, std::move(ne), nfuel});
      }
    }
  }
  return res;
}

}  // namespace wrd::testing
