/*
 * Property checks shared by the unit tests, the acceptance suite and
 * the CLI selftest. Each check runs a number of randomized cases
 * against the brute-force oracle and reports how many cases ran and
 * how many failed, with a note describing the first failure.
 *
 * Generated constants stay inside the oracle windows (see gen.hpp), so
 * window enumeration decides emptiness and set comparisons exactly.
 */
#pragma once

#include <wrd/domains.hpp>
#include <wrd/engine.hpp>
#include <wrd/testing/gen.hpp>
#include <wrd/testing/oracle.hpp>

namespace wrd::testing {

struct check_result {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string note;

  bool ok() const { return failures == 0; }
  void fail(const std::string& msg) {
    ++failures;
    if (note.empty()) note = msg;
  }
};

inline int weighted_dim(rng& r, int max_n) {
  int k = pick(r, 0, 99);
  if (k < 50 || max_n < 3) return 2;
  if (k < 85 || max_n < 4) return 3;
  return 4;
}

// ---------------------------------------------------------------------------
// Basis law suite (the acceptable-basis hypotheses).
// ---------------------------------------------------------------------------

template <basis B>
std::vector<check_result> run_basis_laws(rng& r, const window<typename B::scalar_type>& w,
                                         const window<typename B::scalar_type>& wide,
                                         int iters) {
  using S = typename B::scalar_type;
  using E = typename B::element_type;

  check_result gamma{"gamma strict/monotone/injective"};
  check_result exact_add{"add is the exact sum"};
  check_result exact_neg{"neg is the exact opposite"};
  check_result exact_meet{"meet is the exact intersection"};
  check_result single{"singletons are exact"};
  check_result pairwise{"empty meets have an empty pair"};
  check_result distrib{"meet distributes over add"};
  check_result morphism{"neg/add/meet morphism laws"};
  check_result joinlaw{"join is a least upper bound"};
  check_result widenlaw{"widening chains stabilize"};
  check_result approxlaw{"approx over-approximates"};
  check_result scalelaw{"scale is sound"};

  if (!sample<B>(B::bottom(), w).empty()) gamma.fail("bottom has members");

  for (int t = 0; t < iters; ++t) {
    E x = elem_gen<B>::random(r);
    E y = elem_gen<B>::random(r);
    E z = elem_gen<B>::random(r);
    auto sx = sample<B>(x, w), sy = sample<B>(y, w);

    // order laws on the window
    ++gamma.cases;
    if (B::leq(x, y)) {
      for (const S& v : sx)
        if (!B::member(y, v)) {
          gamma.fail("monotony: leq holds but a member escapes");
          break;
        }
    }
    if (!(x == y) && sample<B>(x, wide) == sample<B>(y, wide) &&
        !(B::is_bottom(x) || B::is_bottom(y)))
      gamma.fail("injectivity: distinct elements, equal window slices");

    // exact operators, member-level
    ++exact_add.cases;
    {
      E s = B::add(x, y);
      bool bad = false;
      for (const S& a : sx) {
        for (const S& b : sy)
          if (!B::member(s, S(a + b))) {
            exact_add.fail("sum misses " + render_scalar(S(a + b)));
            bad = true;
            break;
          }
        if (bad) break;
      }
      if (!bad && !B::is_bottom(x) && !B::is_bottom(y)) {
        // Witness scan runs from both sides: whichever operand has the
        // denser slice supplies the candidate, membership in the other
        // is closed-form and needs no window.
        for (const S& c : sample<B>(s, w)) {
          bool decomposed = false;
          for (const S& a : sample<B>(x, wide))
            if (B::member(y, S(c - a))) {
              decomposed = true;
              break;
            }
          if (!decomposed)
            for (const S& b : sample<B>(y, wide))
              if (B::member(x, S(c - b))) {
                decomposed = true;
                break;
              }
          if (!decomposed) {
            exact_add.fail("sum contains undecomposable " + render_scalar(c));
            break;
          }
        }
      }
      if ((B::is_bottom(x) || B::is_bottom(y)) && !B::is_bottom(s))
        exact_add.fail("bottom does not absorb add");
    }

    ++exact_neg.cases;
    {
      E n = B::neg(x);
      auto sn = sample<B>(n, w);
      std::vector<S> expect;
      for (auto it = sx.rbegin(); it != sx.rend(); ++it) expect.push_back(S(-*it));
      if (sn != expect) exact_neg.fail("negation window slice differs");
      if (!(B::neg(n) == x)) exact_neg.fail("negation is not involutive");
    }

    ++exact_meet.cases;
    {
      E m = B::meet(x, y);
      if (!B::leq(m, x) || !B::leq(m, y)) exact_meet.fail("meet not a lower bound");
      auto sm = sample<B>(m, w);
      std::vector<S> expect;
      for (const S& v : sx)
        if (B::member(y, v)) expect.push_back(v);
      if (sm != expect) exact_meet.fail("meet window slice differs");
    }

    ++single.cases;
    {
      S c = small_scalar<S>(r);
      E e = B::singleton(c);
      auto se = sample<B>(e, w);
      if (se.size() != 1 || se[0] != c) single.fail("singleton slice is not {c}");
    }

    ++pairwise.cases;
    {
      std::vector<E> fam;
      int sz = pick(r, 2, 4);
      for (int i = 0; i < sz; ++i) fam.push_back(elem_gen<B>::random(r, false));
      E all = fam[0];
      for (int i = 1; i < sz; ++i) all = B::meet(all, fam[static_cast<std::size_t>(i)]);
      if (B::is_bottom(all)) {
        bool found = false;
        for (std::size_t i = 0; i < fam.size() && !found; ++i)
          for (std::size_t j = i + 1; j < fam.size() && !found; ++j)
            if (B::is_bottom(B::meet(fam[i], fam[j]))) found = true;
        if (!found) pairwise.fail("empty family meet without an empty pair");
      }
    }

    ++distrib.cases;
    {
      std::vector<E> fam;
      int sz = pick(r, 2, 3);
      for (int i = 0; i < sz; ++i) fam.push_back(elem_gen<B>::random(r, false));
      E all = fam[0];
      for (int i = 1; i < sz; ++i) all = B::meet(all, fam[static_cast<std::size_t>(i)]);
      if (!B::is_bottom(all)) {
        E lhs = B::add(x, fam[0]);
        for (int i = 1; i < sz; ++i)
          lhs = B::meet(lhs, B::add(x, fam[static_cast<std::size_t>(i)]));
        if (!(lhs == B::add(x, all)))
          distrib.fail("meet over translated family differs");
      }
    }

    ++morphism.cases;
    {
      if (!(B::neg(B::add(x, y)) == B::add(B::neg(x), B::neg(y))))
        morphism.fail("neg does not distribute over add");
      if (!(B::neg(B::meet(x, y)) == B::meet(B::neg(x), B::neg(y))))
        morphism.fail("neg does not distribute over meet");
      if (!(B::add(x, y) == B::add(y, x)) || !(B::meet(x, y) == B::meet(y, x)))
        morphism.fail("commutativity fails");
      if (!(B::add(B::add(x, y), z) == B::add(x, B::add(y, z))))
        morphism.fail("add associativity fails");
      if (!(B::meet(B::meet(x, y), z) == B::meet(x, B::meet(y, z))))
        morphism.fail("meet associativity fails");
    }

    ++joinlaw.cases;
    {
      E j = B::join(x, y);
      if (!B::leq(x, j) || !B::leq(y, j)) joinlaw.fail("join is not an upper bound");
      if (B::leq(x, z) && B::leq(y, z) && !B::leq(j, z))
        joinlaw.fail("join is not least among sampled bounds");
    }

    ++widenlaw.cases;
    {
      E acc = B::bottom();
      E grow = B::bottom();
      int steps = 0;
      for (; steps < 50; ++steps) {
        grow = B::join(grow, elem_gen<B>::random(r));
        E nxt = B::widen(acc, grow);
        if (!B::leq(acc, nxt) || !B::leq(grow, nxt)) {
          widenlaw.fail("widening is not an upper bound");
          break;
        }
        if (nxt == acc) break;
        acc = nxt;
      }
      if (steps == 50) widenlaw.fail("widening chain did not stabilize");
    }

    ++approxlaw.cases;
    {
      set_literal<S> lit =
          pick(r, 0, 1) == 0
              ? set_literal<S>::range(bound<S>(small_scalar<S>(r)),
                                      bound<S>(small_scalar<S>(r)))
              : set_literal<S>::progression(
                    modulus<S>::finite(S(abs_of(small_scalar<S>(r, 1, 3)))),
                    small_scalar<S>(r));
      E a = B::approx(lit);
      for (const S& v : w.values)
        if (lit.contains(v) && !B::member(a, v)) {
          approxlaw.fail("approx misses a literal member");
          break;
        }
      if (lit.empty() && !B::is_bottom(a)) approxlaw.fail("empty literal not bottom");
    }

    ++scalelaw.cases;
    {
      S k = small_scalar<S>(r);
      E sc = B::scale(k, x);
      for (const S& a : sx)
        if (!B::member(sc, S(k * a))) {
          scalelaw.fail("scale misses a scaled member");
          break;
        }
      if (B::is_bottom(x) && !B::is_bottom(sc)) scalelaw.fail("scale of bottom");
    }
  }

  return {gamma,   exact_add, exact_neg, exact_meet, single,  pairwise,
          distrib, morphism,  joinlaw,   widenlaw,   approxlaw, scalelaw};
}

// Reduction pair laws for the shipped interval x congruence reduction.
template <scalar S>
check_result check_reduction_laws(rng& r, const window<S>& w, int iters) {
  using IB = interval_basis<S>;
  using CB = congruence_basis<S>;
  using R = interval_congruence_reduction<S>;
  check_result res{"reduction laws"};
  for (int t = 0; t < iters; ++t) {
    ++res.cases;
    auto iv = elem_gen<IB>::random(r);
    auto cg = elem_gen<CB>::random(r);
    auto l = R::reduce_left(iv, cg);
    auto rr = R::reduce_right(iv, cg);
    if (!IB::leq(l, iv) || !CB::leq(rr, cg)) {
      res.fail("reduction is not a tightening");
      continue;
    }
    for (const S& v : w.values) {
      bool before = IB::member(iv, v) && CB::member(cg, v);
      bool after = IB::member(l, v) && CB::member(rr, v);
      if (before != after) {
        res.fail("reduction changed the joint concretization at " + render_scalar(v));
        break;
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Closure / matrix-operation suites.
// ---------------------------------------------------------------------------

template <basis B>
bool coherent(const constraint_matrix<B>& m) {
  using S = typename B::scalar_type;
  if (m.is_empty_state()) return true;
  for (int i = 0; i < m.dim(); ++i) {
    if (!(m.cell(i, i) == B::singleton(S(0)))) return false;
    for (int j = 0; j < m.dim(); ++j)
      if (!(m.cell(i, j) == B::neg(m.cell(j, i)))) return false;
  }
  return true;
}

template <basis B>
std::vector<check_result> run_closure_suite(rng& r,
                                            const window<typename B::scalar_type>& w,
                                            int iters, int max_n) {
  using S = typename B::scalar_type;
  using M = constraint_matrix<B>;

  check_result paths{"closure equals the path oracle"};
  check_result empt{"emptiness agrees with window enumeration"};
  check_result gpres{"closure preserves gamma"};
  check_result idem{"closure is idempotent"};
  check_result coher{"closure preserves coherence"};
  check_result satur{"closed cells are saturated"};
  check_result normal{"closure is minimal among equivalents"};

  for (int t = 0; t < iters; ++t) {
    int n = weighted_dim(r, max_n);
    M m = random_matrix<B>(r, n);
    M c = m.close();

    ++empt.cases;
    bool window_empty = gamma_empty_on_window(m, w);
    if (c.is_empty_state() != window_empty)
      empt.fail(c.is_empty_state() ? "closure claims empty, window has a point"
                                   : "window empty, closure missed it");

    ++gpres.cases;
    if (!c.is_empty_state()) {
      bool same = for_each_point(w, n, [&](const auto& p) {
        return m.gamma_contains(p) == c.gamma_contains(p);
      });
      if (!same) gpres.fail("gamma changed under closure");
    }

    if (!c.is_empty_state()) {
      ++paths.cases;
      M ref = closure_by_paths(m);
      if (!M::eq_cells(c, ref)) paths.fail("cells differ from the path meet");

      ++idem.cases;
      if (!M::eq_cells(c.close(), c)) idem.fail("closing twice changed cells");
      M again = c.close_incremental({});
      if (!M::eq_cells(again, c)) idem.fail("empty incremental update changed cells");

      ++coher.cases;
      if (!coherent(c)) coher.fail("closed matrix lost coherence");

      if (n <= 3) {
        ++satur.cases;
        bool bad = false;
        for (int i = 0; i < n && !bad; ++i) {
          for (int j = 0; j < n && !bad; ++j) {
            if (i == j) continue;
            auto vals = sample<B>(c.cell(i, j), w);
            int checked = 0;
            for (const S& v : vals) {
              if (++checked > 3) break;
              bool witnessed = !for_each_point(w, n, [&](const auto& p) {
                return !(m.gamma_contains(p) &&
                         S(p[static_cast<std::size_t>(j)] -
                           p[static_cast<std::size_t>(i)]) == v);
              });
              if (!witnessed) {
                satur.fail("cell value " + render_scalar(v) + " unrealized");
                bad = true;
                break;
              }
            }
          }
        }
      }

      ++normal.cases;
      {
        M pert = c;
        int edits = pick(r, 1, 2);
        for (int e = 0; e < edits; ++e) {
          int i = pick(r, 0, n - 1), j = pick(r, 0, n - 1);
          if (i == j) continue;
          pert = pert.with_pair(i, j, elem_gen<B>::random(r));
        }
        if (M::eq_cells(pert.close(), c) && !M::leq(c, pert))
          normal.fail("an equivalent matrix has a tighter cell");
      }
    }
  }

  return {paths, empt, gpres, idem, coher, satur, normal};
}

template <basis B>
std::vector<check_result> run_operator_suite(rng& r,
                                             const window<typename B::scalar_type>& w,
                                             int iters, int max_n) {
  using S = typename B::scalar_type;
  using M = constraint_matrix<B>;

  check_result joincl{"join of closed matrices stays closed"};
  check_result joinlub{"join is the least containing matrix"};
  check_result incl{"inclusion and equality match the oracle"};
  check_result increm{"incremental closure equals full closure"};
  check_result fp{"forget and project honor their contracts"};
  check_result mono{"gamma is monotone in the order"};

  for (int t = 0; t < iters; ++t) {
    int n = weighted_dim(r, max_n);
    M a = random_matrix<B>(r, n);
    M b = random_matrix<B>(r, n);

    ++joincl.cases;
    M j = M::join(a, b);
    if (!j.is_empty_state() && !M::eq_cells(j.close(), j))
      joincl.fail("join result is not in closed form");

    if (n <= 3 && !j.is_empty_state()) {
      ++joinlub.cases;
      M cand = j;
      int i1 = pick(r, 0, n - 1), j1 = pick(r, 0, n - 1);
      if (i1 != j1) cand = cand.with_pair(i1, j1, elem_gen<B>::random(r));
      bool covers = for_each_point(w, n, [&](const auto& p) {
        if ((a.gamma_contains(p) || b.gamma_contains(p)) && !cand.gamma_contains(p))
          return false;
        return true;
      });
      if (covers) {
        bool least = for_each_point(w, n, [&](const auto& p) {
          return !j.gamma_contains(p) || cand.gamma_contains(p);
        });
        if (!least) joinlub.fail("a covering candidate is smaller than the join");
      }
    }

    ++incl.cases;
    {
      bool claimed = M::leq(a, b);
      bool actual = for_each_point(w, n, [&](const auto& p) {
        return !(a.gamma_contains(p) && !b.gamma_contains(p));
      });
      if (claimed && !actual) incl.fail("leq over-claims inclusion");
      if (!claimed && actual && !gamma_empty_on_window(a, w)) {
        // non-empty windows decide inclusion exactly under the
        // restricted constant alphabet
        incl.fail("leq under-claims inclusion");
      }
      bool eq_claimed = M::eq(a, b);
      bool eq_actual = for_each_point(w, n, [&](const auto& p) {
        return a.gamma_contains(p) == b.gamma_contains(p);
      });
      if (eq_claimed != eq_actual) incl.fail("eq disagrees with the window");
    }

    ++increm.cases;
    {
      M c = a.close();
      if (!c.is_empty_state()) {
        int i = pick(r, 0, n - 1), jj = pick(r, 0, n - 1);
        if (i != jj) {
          M touched = c.guard_elem(i, jj, elem_gen<B>::random(r));
          M lazy = touched.close();  // uses the dirty-index incremental path
          M full = touched.close_incremental([&] {
            std::vector<int> all;
            for (int v = 0; v < n; ++v) all.push_back(v);
            return all;
          }());
          if (!M::eq_cells(lazy, full))
            increm.fail("incremental and full closure differ");
        }
      }
    }

    ++fp.cases;
    if (n >= 2 && !a.is_empty()) {
      int i = pick(r, 1, n - 1);
      M f = a.forget(i);
      if (!M::eq_cells(f.close(), f)) fp.fail("forget result is not closed");
      if (!B::is_top(f.project(i))) fp.fail("projection after forget is not top");
      bool ok = for_each_point(w, n, [&](const auto& p) {
        bool in_f = f.gamma_contains(p);
        bool expect = false;
        for (const S& v : w.values) {
          auto q = p;
          q[static_cast<std::size_t>(i)] = v;
          if (a.gamma_contains(q)) {
            expect = true;
            break;
          }
        }
        return in_f == expect;
      });
      if (!ok) fp.fail("forget gamma differs from projection semantics");
      auto proj = sample<B>(a.project(i), w);
      std::set<S> seen;
      for_each_point(w, n, [&](const auto& p) {
        if (a.gamma_contains(p)) seen.insert(p[static_cast<std::size_t>(i)]);
        return true;
      });
      std::vector<S> seen_v(seen.begin(), seen.end());
      if (proj != seen_v) fp.fail("projection slice differs from enumeration");
    }

    ++mono.cases;
    {
      M loose = a;
      for (int e = 0; e < 2; ++e) {
        int i = pick(r, 0, n - 1), jj = pick(r, 0, n - 1);
        if (i == jj || loose.is_empty_state()) continue;
        loose = loose.with_pair(
            i, jj, B::join(loose.cell(i, jj), elem_gen<B>::random(r)));
      }
      bool sound = for_each_point(w, n, [&](const auto& p) {
        return !(a.gamma_contains(p) && !loose.gamma_contains(p));
      });
      if (!sound) mono.fail("loosening lost a point");
    }
  }

  return {joincl, joinlub, incl, increm, fp, mono};
}

// Widening termination in the zone domain: the advocated iteration
// X <- X widen F(close(X)) stabilizes for randomized monotone bodies.
inline check_result check_widening_termination(rng& r, int iters, int step_bound = 50) {
  using B = interval_basis<z_number>;
  using M = constraint_matrix<B>;
  check_result res{"widening iteration stabilizes"};
  for (int t = 0; t < iters; ++t) {
    ++res.cases;
    int n = pick(r, 2, 4);
    M base = random_matrix<B>(r, n, false);
    struct step {
      int kind = 0, i = 0, j = 0;
      z_number c{0};
      interval_elem<z_number> e = interval_basis<z_number>::top();
    };
    std::vector<step> body;
    int len = pick(r, 1, 4);
    for (int s = 0; s < len; ++s) {
      step st;
      st.kind = pick(r, 0, 2);
      st.i = pick(r, 0, n - 1);
      st.j = pick(r, 0, n - 1);
      st.c = small_scalar<z_number>(r);
      st.e = elem_gen<B>::random(r, false);
      body.push_back(st);
    }
    auto F = [&](const M& x) {
      M cur = x;
      for (const auto& st : body) {
        if (cur.is_empty_state()) break;
        if (st.kind == 0 && st.i != st.j) cur = cur.guard_elem(st.i, st.j, st.e);
        else if (st.kind == 1 && st.i != 0) cur = cur.assign_translate(st.i, st.c);
        else if (st.i != st.j && st.i != 0) cur = cur.assign_copy_offset(st.i, st.j, st.c);
      }
      return M::join(base, cur);
    };
    M x = M::bottom(n);
    int steps = 0;
    for (; steps < step_bound; ++steps) {
      M nxt = M::widen(x, F(x.close()));
      if (M::eq_cells(nxt, x)) break;
      x = nxt;
    }
    if (steps == step_bound) res.fail("iteration did not stabilize");
  }
  return res;
}

// End-to-end soundness: every concrete state reached at a node lies in
// the concretization of the abstract state computed for that node.
inline std::vector<check_result> check_end_to_end(rng& r, int programs) {
  using S = z_number;
  check_result sound{"concrete states lie in the invariants"};
  check_result postfix{"results are post-fixpoints"};

  for (int t = 0; t < programs; ++t) {
    program_gen gen(r);
    std::string src = gen.run();
    program<S> p = parse_program<S>(src);
    cfg<S> g = build_cfg(p);
    auto conc = concrete_run<S>(g, {z_number(-2), z_number(0), z_number(3)},
                                1 << 20, 100000);
    if (conc.exhausted) continue;  // skip, never false-fail

    auto run_one = [&](auto dom, const char* name) {
      auto states = analyze(g, dom, {});
      ++sound.cases;
      for (int node = 0; node < g.node_count; ++node) {
        for (const auto& env : conc.states[static_cast<std::size_t>(node)]) {
          bool inside;
          if constexpr (requires { states[0].gamma_contains(env); })
            inside = states[static_cast<std::size_t>(node)].gamma_contains(env);
          else
            inside = states[static_cast<std::size_t>(node)].contains(env);
          if (!inside) {
            sound.fail(std::string(name) + ": concrete state escapes at node " +
                       std::to_string(node));
            return;
          }
        }
      }
      ++postfix.cases;
      if (!is_post_fixpoint(g, dom, states))
        postfix.fail(std::string(name) + ": one more pass changes states");
    };

    int nv = p.nvars();
    run_one(env_domain<constant_basis<S>>(nv), "const");
    run_one(env_domain<interval_basis<S>>(nv), "interval");
    run_one(env_domain<congruence_basis<S>>(nv), "congruence");
    run_one(matrix_domain<interval_basis<S>>(nv), "zone");
    run_one(matrix_domain<congruence_basis<S>>(nv), "zone-congruence");
    run_one(matrix_domain<interval_congruence_basis<S>>(nv), "zone-product");
    run_one(matrix_domain<constant_basis<S>>(nv), "translated-eq");
  }
  return {sound, postfix};
}

}  // namespace wrd::testing
