/*
 * The basis contract.
 *
 * A basis abstracts subsets of the scalar set: a computer-representable
 * lattice slice with a strict, monotonic, injective concretization.
 * Acceptable bases additionally provide exact meet, negation and
 * Minkowski sum, exact singletons, pairwise emptiness of empty meets,
 * and restricted distributivity of meet over sum; those laws make the
 * shortest-path closure of the relational lift correct and live in the
 * property suite, not here.
 *
 * Every basis is a stateless struct of static operations over an
 * immutable element type. scale is the least over-approximation of
 * {k*c | c in gamma(x)} and is exact whenever that set is representable.
 */
#pragma once

#include <wrd/set_literal.hpp>

#include <concepts>
#include <string>
#include <vector>

namespace wrd {

template <class B>
concept basis =
    scalar<typename B::scalar_type> &&
    std::equality_comparable<typename B::element_type> &&
    requires(const typename B::element_type& x, const typename B::element_type& y,
             const typename B::scalar_type& c,
             const set_literal<typename B::scalar_type>& s) {
      { B::bottom() } -> std::same_as<typename B::element_type>;
      { B::top() } -> std::same_as<typename B::element_type>;
      { B::is_bottom(x) } -> std::same_as<bool>;
      { B::is_top(x) } -> std::same_as<bool>;
      { B::leq(x, y) } -> std::same_as<bool>;
      { B::meet(x, y) } -> std::same_as<typename B::element_type>;
      { B::join(x, y) } -> std::same_as<typename B::element_type>;
      { B::widen(x, y) } -> std::same_as<typename B::element_type>;
      { B::add(x, y) } -> std::same_as<typename B::element_type>;
      { B::neg(x) } -> std::same_as<typename B::element_type>;
      { B::scale(c, x) } -> std::same_as<typename B::element_type>;
      { B::singleton(c) } -> std::same_as<typename B::element_type>;
      { B::approx(s) } -> std::same_as<typename B::element_type>;
      { B::member(x, c) } -> std::same_as<bool>;
      { B::render(x) } -> std::same_as<std::string>;
    };

template <basis B>
bool contains_zero(const typename B::element_type& x) {
  return B::member(x, typename B::scalar_type(0));
}

// Finite slice of gamma(x): the members among the given candidate values.
// Together with member this is how the oracle observes concretizations.
template <basis B>
std::vector<typename B::scalar_type> sample(
    const typename B::element_type& x,
    const std::vector<typename B::scalar_type>& candidates) {
  std::vector<typename B::scalar_type> out;
  for (const auto& v : candidates)
    if (B::member(x, v)) out.push_back(v);
  return out;
}

// A reduction pair tightens the two halves of a product element without
// changing the joint concretization:
//   reduce_left(c1,c2) <= c1, reduce_right(c1,c2) <= c2, and
//   gamma1(left) /\ gamma2(right) = gamma1(c1) /\ gamma2(c2).
template <class R, class B1, class B2>
concept reduction_pair = basis<B1> && basis<B2> &&
    requires(const typename B1::element_type& a, const typename B2::element_type& b) {
      { R::reduce_left(a, b) } -> std::same_as<typename B1::element_type>;
      { R::reduce_right(a, b) } -> std::same_as<typename B2::element_type>;
    };

}  // namespace wrd
