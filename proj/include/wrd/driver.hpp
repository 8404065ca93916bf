/*
 * Batch analysis driver: selects scalar mode and domain construction,
 * runs the fixpoint engine, and prints the invariants at each labeled
 * program point. Output is byte-deterministic for a given input.
 *
 * Domain names follow the constructed-domain catalogue:
 *   const | interval | congruence   point-wise environments
 *   zone                            matrices over intervals
 *   zone-congruence                 matrices over congruences
 *   zone-product                    matrices over interval x congruence
 *   translated-eq                   matrices over constants
 */
#pragma once

#include <wrd/constant.hpp>
#include <wrd/engine.hpp>
#include <wrd/product.hpp>

namespace wrd {

enum class scalar_mode { integers, rationals };
enum class domain_name {
  constants,
  intervals,
  congruences,
  zone,
  zone_congruence,
  zone_product,
  translated_eq,
};

inline std::optional<domain_name> parse_domain_name(std::string_view s) {
  if (s == "const") return domain_name::constants;
  if (s == "interval") return domain_name::intervals;
  if (s == "congruence") return domain_name::congruences;
  if (s == "zone") return domain_name::zone;
  if (s == "zone-congruence") return domain_name::zone_congruence;
  if (s == "zone-product") return domain_name::zone_product;
  if (s == "translated-eq") return domain_name::translated_eq;
  return std::nullopt;
}

struct run_config {
  scalar_mode mode = scalar_mode::integers;
  domain_name domain = domain_name::intervals;
  int widen_delay = 0;
  std::optional<std::string> point;  // restrict output to one label
  bool dump_cfg = false;
};

struct run_result {
  std::string output;
  int exit_code = 0;  // 0 ok, 1 infeasible entry
};

namespace detail {

template <class D, scalar S>
run_result run_with_domain(const cfg<S>& g, const D& dom, const run_config& cfg_in) {
  analyze_options opt;
  opt.widen_delay = cfg_in.widen_delay;
  auto states = analyze(g, dom, opt);

  run_result r;
  if (cfg_in.dump_cfg) r.output += g.str();
  for (const auto& [label, node] : g.points) {
    if (cfg_in.point && *cfg_in.point != label) continue;
    r.output += "@" + label + ":\n";
    r.output += dom.render(states[static_cast<std::size_t>(node)], g.var_names);
  }
  if (dom.is_bottom(states[static_cast<std::size_t>(g.entry)])) r.exit_code = 1;
  return r;
}

template <scalar S>
run_result run_mode(const std::string& source, const run_config& conf) {
  program<S> p = parse_program<S>(source);
  cfg<S> g = build_cfg(p);
  int nv = p.nvars();
  switch (conf.domain) {
    case domain_name::constants:
      return run_with_domain(g, env_domain<constant_basis<S>>(nv), conf);
    case domain_name::intervals:
      return run_with_domain(g, env_domain<interval_basis<S>>(nv), conf);
    case domain_name::congruences:
      return run_with_domain(g, env_domain<congruence_basis<S>>(nv), conf);
    case domain_name::zone:
      return run_with_domain(g, matrix_domain<interval_basis<S>>(nv), conf);
    case domain_name::zone_congruence:
      return run_with_domain(g, matrix_domain<congruence_basis<S>>(nv), conf);
    case domain_name::zone_product:
      return run_with_domain(g, matrix_domain<interval_congruence_basis<S>>(nv), conf);
    case domain_name::translated_eq:
      return run_with_domain(g, matrix_domain<constant_basis<S>>(nv), conf);
  }
  throw std::logic_error("unknown domain");
}

}  // namespace detail

// Throws parse_error on malformed programs.
inline run_result run_analysis(const std::string& source, const run_config& conf) {
  if (conf.mode == scalar_mode::integers)
    return detail::run_mode<z_number>(source, conf);
  return detail::run_mode<q_number>(source, conf);
}

}  // namespace wrd
