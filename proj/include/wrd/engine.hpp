/*
 * Abstract fixpoint engine.
 *
 * Sweeps the CFG in reverse post-order until every state is stable.
 * Widening applies at loop heads only: the accumulated state is the
 * left argument and is never closed; the incoming join is normalized
 * (closed, for matrix domains) before it becomes the right argument.
 * A widen-delay of k makes the first k growing visits at each head use
 * plain join instead.
 */
#pragma once

#include <wrd/domains.hpp>

namespace wrd {

struct analyze_options {
  int widen_delay = 0;
  int max_sweeps = 100000;
};

class analysis_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class D, scalar S>
std::vector<typename D::state> analyze(const cfg<S>& g, const D& dom,
                                       const analyze_options& opt = {}) {
  using state = typename D::state;
  std::vector<state> st(static_cast<std::size_t>(g.node_count), dom.bottom());
  std::vector<int> grow_count(static_cast<std::size_t>(g.node_count), 0);
  const auto rpo = g.reverse_post_order();
  const auto in = g.in_edges();

  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    bool changed = false;
    for (int node : rpo) {
      state incoming = dom.bottom();
      if (node == g.entry) incoming = dom.initial();
      for (int e : in[static_cast<std::size_t>(node)]) {
        const auto& edge = g.edges[static_cast<std::size_t>(e)];
        incoming = dom.join(
            incoming, dom.transfer(edge.act, st[static_cast<std::size_t>(edge.src)]));
      }
      auto& cur = st[static_cast<std::size_t>(node)];
      if (g.loop_head[static_cast<std::size_t>(node)]) {
        if (dom.leq(incoming, cur)) continue;
        state right = dom.normalize(incoming);
        auto& visits = grow_count[static_cast<std::size_t>(node)];
        state nxt = visits < opt.widen_delay ? dom.join(cur, right)
                                             : dom.widen(cur, right);
        ++visits;
        if (!dom.eq_cells(nxt, cur)) {
          cur = std::move(nxt);
          changed = true;
        }
      } else {
        if (!dom.eq_cells(incoming, cur)) {
          cur = std::move(incoming);
          changed = true;
        }
      }
    }
    if (!changed) return st;
  }
  throw analysis_error("fixpoint iteration exceeded its sweep budget");
}

// Post-fixpoint check: one more propagation pass must change nothing,
// i.e. each edge's transfer lands inside the stored successor state.
template <class D, scalar S>
bool is_post_fixpoint(const cfg<S>& g, const D& dom,
                      const std::vector<typename D::state>& st) {
  if (!dom.leq(dom.initial(), st[static_cast<std::size_t>(g.entry)])) return false;
  for (const auto& e : g.edges) {
    auto out = dom.transfer(e.act, st[static_cast<std::size_t>(e.src)]);
    if (!dom.leq(out, st[static_cast<std::size_t>(e.dst)])) return false;
  }
  return true;
}

}  // namespace wrd
