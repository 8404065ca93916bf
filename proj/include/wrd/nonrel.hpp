/*
 * Non-relational domain functor: one basis element per variable, with
 * point-wise lattice operations and expression-based transfer
 * functions. Any bottom component smashes the whole environment to a
 * canonical bottom. Slot 0 mirrors the relational domains' zero
 * anchor and stays pinned to the singleton {0}.
 */
#pragma once

#include <wrd/syntax.hpp>

namespace wrd {

template <basis B>
class abstract_env {
 public:
  using S = typename B::scalar_type;
  using E = typename B::element_type;

 private:
  bool bot_;
  std::vector<E> slots_;  // size = nvars + 1, slot 0 = singleton(0)

  abstract_env(bool bot, std::vector<E> slots)
      : bot_(bot), slots_(std::move(slots)) {}

 public:
  static abstract_env top(int nvars) {
    std::vector<E> s;
    s.reserve(static_cast<std::size_t>(nvars) + 1);
    s.push_back(B::singleton(S(0)));
    for (int i = 0; i < nvars; ++i) s.push_back(B::top());
    return abstract_env(false, std::move(s));
  }
  static abstract_env bottom(int nvars) {
    return abstract_env(true, std::vector<E>(static_cast<std::size_t>(nvars) + 1,
                                             B::bottom()));
  }

  bool is_bottom() const { return bot_; }
  int size() const { return static_cast<int>(slots_.size()); }
  const E& get(int i) const { return slots_.at(static_cast<std::size_t>(i)); }
  const std::vector<E>& slots() const { return slots_; }

  abstract_env with(int i, E v) const {
    if (bot_) return *this;
    if (B::is_bottom(v)) return bottom(size() - 1);
    std::vector<E> s = slots_;
    s[static_cast<std::size_t>(i)] = std::move(v);
    return abstract_env(false, std::move(s));
  }

  friend bool operator==(const abstract_env& a, const abstract_env& b) {
    if (a.bot_ != b.bot_) return false;
    return a.bot_ || a.slots_ == b.slots_;
  }

  static bool leq(const abstract_env& a, const abstract_env& b) {
    if (a.bot_) return true;
    if (b.bot_) return false;
    for (std::size_t i = 0; i < a.slots_.size(); ++i)
      if (!B::leq(a.slots_[i], b.slots_[i])) return false;
    return true;
  }

  static abstract_env join(const abstract_env& a, const abstract_env& b) {
    if (a.bot_) return b;
    if (b.bot_) return a;
    std::vector<E> s;
    s.reserve(a.slots_.size());
    for (std::size_t i = 0; i < a.slots_.size(); ++i)
      s.push_back(B::join(a.slots_[i], b.slots_[i]));
    return abstract_env(false, std::move(s));
  }

  static abstract_env meet(const abstract_env& a, const abstract_env& b) {
    if (a.bot_ || b.bot_) return bottom(a.size() - 1);
    std::vector<E> s;
    s.reserve(a.slots_.size());
    for (std::size_t i = 0; i < a.slots_.size(); ++i) {
      E m = B::meet(a.slots_[i], b.slots_[i]);
      if (B::is_bottom(m)) return bottom(a.size() - 1);
      s.push_back(std::move(m));
    }
    return abstract_env(false, std::move(s));
  }

  static abstract_env widen(const abstract_env& a, const abstract_env& b) {
    if (a.bot_) return b;
    if (b.bot_) return a;
    std::vector<E> s;
    s.reserve(a.slots_.size());
    for (std::size_t i = 0; i < a.slots_.size(); ++i)
      s.push_back(B::widen(a.slots_[i], b.slots_[i]));
    return abstract_env(false, std::move(s));
  }

  E eval(const expr<S>& e) const { return eval_expr<B>(e, slots_); }

  abstract_env assign(int i, const expr<S>& e) const {
    if (bot_) return *this;
    return with(i, eval(e));
  }

  abstract_env assign_random(int i) const {
    if (bot_) return *this;
    return with(i, B::top());
  }

  // Only unary atoms filter; relational shapes keep the environment.
  abstract_env guard(const guard_atom<S>& g) const {
    if (bot_) return *this;
    if (g.is_diff() || g.which() == guard_atom<S>::kind::nondet) return *this;
    auto lit = atom_literal(g);
    if (!lit) return *this;
    int i = g.lhs();
    return with(i, B::meet(get(i), B::approx(*lit)));
  }

  // One concrete state per user variable; vals[0] is the anchor slot.
  bool contains(const std::vector<S>& vals) const {
    if (bot_) return false;
    if (vals.size() != slots_.size()) return false;
    for (std::size_t i = 0; i < slots_.size(); ++i)
      if (!B::member(slots_[i], vals[i])) return false;
    return true;
  }

  std::string render(const std::vector<std::string>& names) const {
    if (bot_) return "  _|_\n";
    std::string out;
    for (std::size_t i = 1; i < slots_.size(); ++i) {
      if (B::is_top(slots_[i])) continue;
      out += "  " + names.at(i) + " in " + B::render(slots_[i]) + "\n";
    }
    return out;
  }
};

}  // namespace wrd
