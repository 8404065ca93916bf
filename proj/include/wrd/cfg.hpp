/*
 * Control flow graphs for structured programs.
 *
 * Nodes are program points; edges carry guard, assignment or skip
 * actions. Structured construction guarantees that every cycle passes
 * through a marked loop head, which is where the fixpoint engine
 * widens.
 *
 * if (c)      branches into Guard(c) / Guard(negate(c)) edges.
 * while (c)   loop head with Guard(c) into the body and
 *             Guard(negate(c)) to the exit.
 * for v=a to b  desugars to v=a, a loop head, Guard(v<=b) into the
 *             body, v=v+1 back; the exit edge carries the exact
 *             equality Guard(v == max(a, b+1)) instead of negate(v<=b):
 *             a unit-step counter leaves the loop at exactly that
 *             value, and the equality is what lets relational domains
 *             keep the bound a plain inequality widens away.
 */
#pragma once

#include <wrd/program.hpp>

namespace wrd {

template <scalar S>
struct action {
  enum class kind { guard, assign, skip };
  kind k = kind::skip;
  std::optional<guard_atom<S>> atom;
  int var = -1;
  bool random_rhs = false;
  std::optional<expr<S>> rhs;

  static action guard(guard_atom<S> g) {
    action a;
    a.k = kind::guard;
    a.atom = std::move(g);
    return a;
  }
  static action assign(int var, expr<S> e) {
    action a;
    a.k = kind::assign;
    a.var = var;
    a.rhs = std::move(e);
    return a;
  }
  static action assign_random(int var) {
    action a;
    a.k = kind::assign;
    a.var = var;
    a.random_rhs = true;
    return a;
  }
  static action skip() { return action{}; }

  std::string str() const {
    switch (k) {
      case kind::guard: return "guard " + atom->str();
      case kind::assign:
        return "v" + std::to_string(var) + " := " + (random_rhs ? "?" : rhs->str());
      case kind::skip: return "skip";
    }
    return "skip";
  }
};

// Exact negation where the scalar set allows it: over Z strict and
// non-strict bounds complement each other shifted by one; over Q the
// complement of a non-strict bound is strict (its transfer then
// over-approximates with the closed bound). Equality and the set /
// modulus shapes have no representable complement and negate to the
// always-true atom.
template <scalar S>
guard_atom<S> negate_atom(const guard_atom<S>& g) {
  using K = typename guard_atom<S>::kind;
  auto flip = [](cmp_op op) {
    switch (op) {
      case cmp_op::le: return cmp_op::gt;
      case cmp_op::lt: return cmp_op::ge;
      case cmp_op::ge: return cmp_op::lt;
      case cmp_op::gt: return cmp_op::le;
      default: return cmp_op::le;
    }
  };
  switch (g.which()) {
    case K::cmp:
    case K::diff_cmp: {
      auto make = [&](cmp_op op, S c) {
        return g.which() == K::cmp
                   ? guard_atom<S>::cmp(g.lhs(), op, std::move(c))
                   : guard_atom<S>::diff_cmp(g.lhs(), g.rhs(), op, std::move(c));
      };
      switch (g.op()) {
        case cmp_op::eq: return guard_atom<S>::nondet();
        case cmp_op::ne: return make(cmp_op::eq, g.constant());
        default:
          if constexpr (is_rational_mode<S>) {
            return make(flip(g.op()), g.constant());
          } else {
            switch (g.op()) {
              case cmp_op::le: return make(cmp_op::ge, S(g.constant() + 1));
              case cmp_op::lt: return make(cmp_op::ge, g.constant());
              case cmp_op::ge: return make(cmp_op::le, S(g.constant() - 1));
              case cmp_op::gt: return make(cmp_op::le, g.constant());
              default: return guard_atom<S>::nondet();
            }
          }
      }
    }
    case K::var_in_set:
    case K::diff_in_set:
    case K::mod:
    case K::nondet: return guard_atom<S>::nondet();
  }
  return guard_atom<S>::nondet();
}

template <scalar S>
struct cfg {
  struct edge {
    int src, dst;
    action<S> act;
    bool back = false;  // returns to a loop head
  };

  int node_count = 0;
  int entry = 0, exit = 0;
  std::vector<edge> edges;
  std::vector<char> loop_head;
  std::vector<std::pair<std::string, int>> points;  // labels in program order
  std::vector<std::string> var_names;

  int point_node(const std::string& label) const {
    for (const auto& [l, n] : points)
      if (l == label) return n;
    return -1;
  }

  std::vector<std::vector<int>> in_edges() const {
    std::vector<std::vector<int>> in(static_cast<std::size_t>(node_count));
    for (std::size_t e = 0; e < edges.size(); ++e)
      in[static_cast<std::size_t>(edges[e].dst)].push_back(static_cast<int>(e));
    return in;
  }

  // Reverse post-order over the edge-insertion DFS; deterministic.
  std::vector<int> reverse_post_order() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(node_count));
    for (std::size_t e = 0; e < edges.size(); ++e)
      out[static_cast<std::size_t>(edges[e].src)].push_back(static_cast<int>(e));
    std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
    std::vector<int> post;
    post.reserve(static_cast<std::size_t>(node_count));
    // iterative DFS
    std::vector<std::pair<int, std::size_t>> stack;
    auto visit = [&](int root) {
      if (seen[static_cast<std::size_t>(root)]) return;
      seen[static_cast<std::size_t>(root)] = 1;
      stack.push_back({root, 0});
      while (!stack.empty()) {
        auto& [node, idx] = stack.back();
        const auto& succ = out[static_cast<std::size_t>(node)];
        if (idx < succ.size()) {
          int dst = edges[static_cast<std::size_t>(succ[idx])].dst;
          ++idx;
          if (!seen[static_cast<std::size_t>(dst)]) {
            seen[static_cast<std::size_t>(dst)] = 1;
            stack.push_back({dst, 0});
          }
        } else {
          post.push_back(node);
          stack.pop_back();
        }
      }
    };
    visit(entry);
    for (int v = 0; v < node_count; ++v) visit(v);
    std::reverse(post.begin(), post.end());
    return post;
  }

  std::string str() const {
    std::string out = "entry " + std::to_string(entry) + ", exit " +
                      std::to_string(exit) + "\n";
    for (const auto& [l, n] : points)
      out += "point @" + l + " = node " + std::to_string(n) + "\n";
    for (int v = 0; v < node_count; ++v)
      if (loop_head[static_cast<std::size_t>(v)])
        out += "loop head " + std::to_string(v) + "\n";
    for (const auto& e : edges)
      out += std::to_string(e.src) + " -> " + std::to_string(e.dst) + " [" +
             e.act.str() + "]\n";
    return out;
  }
};

namespace detail {

template <scalar S>
class cfg_builder {
  cfg<S> g_;

  int fresh() {
    g_.loop_head.push_back(0);
    return g_.node_count++;
  }

  void emit(int src, int dst, action<S> a, bool back = false) {
    g_.edges.push_back({src, dst, std::move(a), back});
  }

  int build_block(const std::vector<stmt<S>>& body, int cur) {
    for (const auto& s : body) cur = build_stmt(s, cur);
    return cur;
  }

  int build_stmt(const stmt<S>& s, int cur) {
    for (const auto& l : s.labels) g_.points.push_back({l, cur});
    switch (s.k) {
      case stmt<S>::kind::skip: {
        int nxt = fresh();
        emit(cur, nxt, action<S>::skip());
        return nxt;
      }
      case stmt<S>::kind::assign: {
        int nxt = fresh();
        if (s.random_rhs)
          emit(cur, nxt, action<S>::assign_random(s.var));
        else
          emit(cur, nxt, action<S>::assign(s.var, *s.rhs));
        return nxt;
      }
      case stmt<S>::kind::if_else: {
        int then_entry = fresh();
        int else_entry = fresh();
        emit(cur, then_entry, action<S>::guard(*s.cond));
        emit(cur, else_entry, action<S>::guard(negate_atom(*s.cond)));
        int then_exit = build_block(s.body, then_entry);
        int else_exit = build_block(s.else_body, else_entry);
        int join = fresh();
        emit(then_exit, join, action<S>::skip());
        emit(else_exit, join, action<S>::skip());
        return join;
      }
      case stmt<S>::kind::while_loop: {
        // The statement's own node is the loop head.
        g_.loop_head[static_cast<std::size_t>(cur)] = 1;
        int body_entry = fresh();
        int after = fresh();
        emit(cur, body_entry, action<S>::guard(*s.cond));
        emit(cur, after, action<S>::guard(negate_atom(*s.cond)));
        int body_exit = build_block(s.body, body_entry);
        emit(body_exit, cur, action<S>::skip(), /*back=*/true);
        return after;
      }
      case stmt<S>::kind::for_loop: {
        int head = fresh();
        emit(cur, head, action<S>::assign(s.var, expr<S>::constant(s.for_lo)));
        g_.loop_head[static_cast<std::size_t>(head)] = 1;
        int body_entry = fresh();
        int after = fresh();
        emit(head, body_entry,
             action<S>::guard(guard_atom<S>::cmp(s.var, cmp_op::le, s.for_hi)));
        S exit_val = s.for_lo > s.for_hi ? s.for_lo : S(s.for_hi + 1);
        emit(head, after,
             action<S>::guard(guard_atom<S>::cmp(s.var, cmp_op::eq, exit_val)));
        int body_exit = build_block(s.body, body_entry);
        emit(body_exit, head,
             action<S>::assign(
                 s.var, expr<S>::addition(expr<S>::variable(s.var),
                                          expr<S>::constant(S(1)))),
             /*back=*/true);
        return after;
      }
    }
    return cur;
  }

 public:
  cfg<S> run(const program<S>& p) {
    g_.var_names = p.var_names;
    g_.entry = fresh();
    g_.exit = build_block(p.body, g_.entry);
    return std::move(g_);
  }
};

}  // namespace detail

template <scalar S>
cfg<S> build_cfg(const program<S>& p) {
  return detail::cfg_builder<S>().run(p);
}

}  // namespace wrd
