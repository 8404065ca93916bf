/*
 * Weakly relational domain: coherent constraint matrices over an
 * acceptable basis, closed by a modified Floyd-Warshall iteration.
 *
 * cell(i, j) constrains v_j - v_i. Index 0 is the synthetic zero
 * variable, so unary facts about v_i live in cell(0, i). Coherence
 * (cell(i,j) = -cell(j,i), exact-zero diagonal) is structural: every
 * write goes through a mirroring setter, and constructors pin the
 * diagonal.
 *
 * Matrices are immutable values. The closure cache is a tri-state
 * carried by the value itself: closed, closed-before-these-indices-
 * changed (feeding the incremental algorithm), or unknown. A matrix
 * with empty concretization is the distinguished empty state, never an
 * all-bottom cell array.
 */
#pragma once

#include <wrd/syntax.hpp>

#include <algorithm>
#include <stdexcept>

namespace wrd {

template <basis B>
class constraint_matrix {
 public:
  using S = typename B::scalar_type;
  using E = typename B::element_type;

 private:
  enum class cache { unknown, closed };

  int n_ = 0;
  bool empty_ = false;
  std::vector<E> cells_;
  cache cache_ = cache::unknown;
  bool base_closed_ = false;  // closed before dirty_ rows/columns changed
  std::vector<int> dirty_;

  constraint_matrix() = default;

  E& at(int i, int j) {
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
  }
  const E& at(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
  }

  void set_pair(int i, int j, E e) {
    at(j, i) = B::neg(e);
    at(i, j) = std::move(e);
  }

  void mark_touched(int i, int j) {
    if (cache_ == cache::closed) {
      base_closed_ = true;
      dirty_ = {i, j};
    } else if (base_closed_) {
      if (std::find(dirty_.begin(), dirty_.end(), i) == dirty_.end())
        dirty_.push_back(i);
      if (std::find(dirty_.begin(), dirty_.end(), j) == dirty_.end())
        dirty_.push_back(j);
    }
    cache_ = cache::unknown;
  }

  void invalidate() {
    cache_ = cache::unknown;
    base_closed_ = false;
    dirty_.clear();
  }

  static constraint_matrix empty_state(int n) {
    constraint_matrix m;
    m.n_ = n;
    m.empty_ = true;
    return m;
  }

  // Modified Floyd-Warshall: m^{k+1}_ij = m^k_ij /\ (m^k_ik + m^k_kj).
  // `skip` limits work to triples that involve a changed index. The
  // mirrored write keeps coherence structural through the iteration.
  constraint_matrix closed_form(const std::vector<char>* skip_unchanged) const {
    constraint_matrix r = *this;
    auto unchanged = [&](int v) {
      return skip_unchanged && !(*skip_unchanged)[static_cast<std::size_t>(v)];
    };
    for (int k = 0; k < n_; ++k) {
      for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
          if (unchanged(k) && unchanged(i) && unchanged(j)) continue;
          E through = B::add(r.at(i, k), r.at(k, j));
          E v = B::meet(r.at(i, j), std::move(through));
          r.set_pair(i, j, std::move(v));
        }
      }
    }
    for (int i = 0; i < n_; ++i)
      if (B::is_bottom(r.at(i, i))) return empty_state(n_);
    r.cache_ = cache::closed;
    r.base_closed_ = false;
    r.dirty_.clear();
    return r;
  }

 public:
  static constraint_matrix top(int n) {
    if (n < 1) throw std::invalid_argument("constraint_matrix: n must be >= 1");
    constraint_matrix m;
    m.n_ = n;
    m.cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                    B::top());
    for (int i = 0; i < n; ++i) m.at(i, i) = B::singleton(S(0));
    m.cache_ = cache::closed;
    return m;
  }

  static constraint_matrix bottom(int n) {
    if (n < 1) throw std::invalid_argument("constraint_matrix: n must be >= 1");
    return empty_state(n);
  }

  int dim() const { return n_; }
  bool is_empty_state() const { return empty_; }
  bool is_closed() const { return empty_ || cache_ == cache::closed; }

  const E& cell(int i, int j) const {
    if (empty_) throw std::logic_error("constraint_matrix: cell of empty state");
    return at(i, j);
  }

  // Replaces the (i,j)/(j,i) pair; test scaffolding for building
  // arbitrary coherent matrices.
  constraint_matrix with_pair(int i, int j, E e) const {
    if (i == j) throw std::invalid_argument("with_pair: diagonal is pinned");
    constraint_matrix r = *this;
    r.set_pair(i, j, std::move(e));
    r.invalidate();
    return r;
  }

  constraint_matrix close() const {
    if (empty_ || cache_ == cache::closed) return *this;
    if (base_closed_ && !dirty_.empty() &&
        static_cast<int>(dirty_.size()) < n_) {
      std::vector<char> changed(static_cast<std::size_t>(n_), 0);
      for (int v : dirty_) changed[static_cast<std::size_t>(v)] = 1;
      return close_incremental_impl(changed);
    }
    return closed_form(nullptr);
  }

  // Incremental closure: the matrix must have been closed before the
  // rows/columns listed in `changed` were modified. Unchanged stages
  // are reordered first and triples entirely inside the unchanged part
  // are skipped.
  constraint_matrix close_incremental(const std::vector<int>& changed) const {
    if (empty_) return *this;
    if (changed.empty() && cache_ == cache::closed) return *this;
    std::vector<char> flags(static_cast<std::size_t>(n_), 0);
    for (int v : changed) flags[static_cast<std::size_t>(v)] = 1;
    return close_incremental_impl(flags);
  }

  bool is_empty() const {
    if (empty_) return true;
    if (cache_ == cache::closed) return false;
    return close().is_empty_state();
  }

  // Gamma inclusion: close the left argument only.
  static bool leq(const constraint_matrix& a, const constraint_matrix& b) {
    constraint_matrix ca = a.close();
    if (ca.empty_) return true;
    if (b.empty_) return false;
    for (int i = 0; i < ca.n_; ++i)
      for (int j = 0; j < ca.n_; ++j)
        if (!B::leq(ca.at(i, j), b.at(i, j))) return false;
    return true;
  }

  static bool eq(const constraint_matrix& a, const constraint_matrix& b) {
    constraint_matrix ca = a.close(), cb = b.close();
    if (ca.empty_ || cb.empty_) return ca.empty_ == cb.empty_;
    return ca.cells_ == cb.cells_;
  }

  // Representation equality (used for fixpoint detection).
  static bool eq_cells(const constraint_matrix& a, const constraint_matrix& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.cells_ == b.cells_;
  }

  static constraint_matrix meet(const constraint_matrix& a,
                                const constraint_matrix& b) {
    if (a.empty_) return a;
    if (b.empty_) return b;
    constraint_matrix r = a;
    for (int i = 0; i < r.n_; ++i)
      for (int j = i + 1; j < r.n_; ++j)
        r.set_pair(i, j, B::meet(a.at(i, j), b.at(i, j)));
    r.invalidate();
    return r;
  }

  // Closes both arguments; the cellwise join of closed matrices is the
  // least matrix containing both and is itself closed.
  static constraint_matrix join(const constraint_matrix& a,
                                const constraint_matrix& b) {
    constraint_matrix ca = a.close();
    if (ca.empty_) return b.close();
    constraint_matrix cb = b.close();
    if (cb.empty_) return ca;
    constraint_matrix r = ca;
    for (int i = 0; i < r.n_; ++i)
      for (int j = i + 1; j < r.n_; ++j)
        r.set_pair(i, j, B::join(ca.at(i, j), cb.at(i, j)));
    r.cache_ = cache::closed;
    r.base_closed_ = false;
    r.dirty_.clear();
    return r;
  }

  // Point-wise widening. The left argument is taken as-is: closing the
  // accumulated chain breaks the ascending chain condition, so this
  // operation never closes anything itself.
  static constraint_matrix widen(const constraint_matrix& a,
                                 const constraint_matrix& b) {
    if (a.empty_) {
      constraint_matrix r = b;
      r.invalidate();
      return r;
    }
    if (b.empty_) return a;
    constraint_matrix r = a;
    for (int i = 0; i < r.n_; ++i)
      for (int j = i + 1; j < r.n_; ++j)
        r.set_pair(i, j, B::widen(a.at(i, j), b.at(i, j)));
    r.invalidate();
    return r;
  }

  // Constrains v_j - v_i to the given element (and v_i - v_j to its
  // negation); exactly two cells change, so incremental closure applies
  // with changed = {i, j}.
  constraint_matrix guard_elem(int i, int j, const E& e) const {
    if (i == j) throw std::invalid_argument("guard: i and j must differ");
    if (empty_) return *this;
    constraint_matrix r = *this;
    r.set_pair(i, j, B::meet(at(i, j), e));
    r.mark_touched(i, j);
    return r;
  }

  constraint_matrix guard(int i, int j, const set_literal<S>& s) const {
    return guard_elem(i, j, B::approx(s));
  }

  // Value set of v_i, exact on non-empty matrices by saturation.
  E project(int i) const {
    constraint_matrix c = close();
    if (c.empty_) return B::bottom();
    return c.at(0, i);
  }

  // Drops all constraints on v_i from the closed matrix, which keeps
  // every implicit constraint between the remaining variables. The
  // result is still closed.
  constraint_matrix forget(int i) const {
    if (i == 0) throw std::invalid_argument("forget: the zero variable is pinned");
    if (empty_) return *this;
    constraint_matrix c = close();
    if (c.empty_) return c;
    for (int l = 0; l < n_; ++l) {
      if (l == i) continue;
      c.set_pair(i, l, B::top());
    }
    c.cache_ = cache::closed;
    c.base_closed_ = false;
    c.dirty_.clear();
    return c;
  }

  // v_i <- v_i + c: exact, and it commutes with closure, so the cache
  // survives untouched.
  constraint_matrix assign_translate(int i, const S& c) const {
    if (empty_ || c == 0) return *this;
    constraint_matrix r = *this;
    E minus = B::singleton(S(-c));
    for (int l = 0; l < n_; ++l) {
      if (l == i) continue;
      r.set_pair(i, l, B::add(at(i, l), minus));
    }
    return r;
  }

  // v_i <- v_j + c, i != j: forget then the exact relational guard.
  constraint_matrix assign_copy_offset(int i, int j, const S& c) const {
    if (i == j || i == 0)
      throw std::invalid_argument("assign_copy_offset: bad indices");
    if (empty_) return *this;
    return forget(i).guard_elem(j, i, B::singleton(c));
  }

  // v_i <- v_j + v_k with j, k != i: unary image plus the two exact
  // relational residues from the closed argument.
  constraint_matrix assign_sum(int i, int j, int k) const {
    if (i == 0 || j == i || k == i)
      throw std::invalid_argument("assign_sum: bad indices");
    if (empty_) return *this;
    constraint_matrix c = close();
    if (c.empty_) return c;
    E pj = c.at(0, j), pk = c.at(0, k);
    constraint_matrix r = c.forget(i);
    r = r.guard_elem(0, i, B::add(pj, pk));
    r = r.guard_elem(j, i, pk);
    return r.guard_elem(k, i, pj);
  }

  // Fallback for arbitrary right-hand sides: evaluate the expression
  // over the closed projections, then forget + unary guard.
  constraint_matrix assign_generic(int i, const expr<S>& e) const {
    if (i == 0) throw std::invalid_argument("assign_generic: bad index");
    if (empty_) return *this;
    if (e.is_random()) return forget(i);
    constraint_matrix c = close();
    if (c.empty_) return c;
    std::vector<E> vars;
    vars.reserve(static_cast<std::size_t>(n_));
    vars.push_back(B::singleton(S(0)));
    for (int l = 1; l < n_; ++l) vars.push_back(c.at(0, l));
    E v = eval_expr<B>(e, vars);
    return c.forget(i).guard_elem(0, i, v);
  }

  // Membership in Gamma(m): x_0 = 0 and every difference lands in its cell.
  bool gamma_contains(const std::vector<S>& point) const {
    if (empty_) return false;
    if (static_cast<int>(point.size()) != n_) return false;
    if (point[0] != 0) return false;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!B::member(at(i, j), S(point[static_cast<std::size_t>(j)] -
                                   point[static_cast<std::size_t>(i)])))
          return false;
    return true;
  }

  // One line per non-top off-diagonal cell, ordered by (i, j).
  std::string render(const std::vector<std::string>& names) const {
    if (empty_) return "  _|_\n";
    std::string out;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i == j || B::is_top(at(i, j))) continue;
        out += "  " + names.at(static_cast<std::size_t>(j)) + " - " +
               names.at(static_cast<std::size_t>(i)) + " in " +
               B::render(at(i, j)) + "\n";
      }
    }
    return out;
  }

 private:
  constraint_matrix close_incremental_impl(const std::vector<char>& changed) const {
    constraint_matrix r = *this;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k)
      if (!changed[static_cast<std::size_t>(k)]) order.push_back(k);
    for (int k = 0; k < n_; ++k)
      if (changed[static_cast<std::size_t>(k)]) order.push_back(k);
    auto is_changed = [&](int v) { return changed[static_cast<std::size_t>(v)] != 0; };
    for (int k : order) {
      for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
          if (!is_changed(k) && !is_changed(i) && !is_changed(j)) continue;
          E through = B::add(r.at(i, k), r.at(k, j));
          E v = B::meet(r.at(i, j), std::move(through));
          r.set_pair(i, j, std::move(v));
        }
      }
    }
    for (int i = 0; i < n_; ++i)
      if (B::is_bottom(r.at(i, i))) return empty_state(n_);
    r.cache_ = cache::closed;
    r.base_closed_ = false;
    r.dirty_.clear();
    return r;
  }
};

}  // namespace wrd
