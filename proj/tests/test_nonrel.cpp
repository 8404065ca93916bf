#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wrd/nonrel.hpp>
#include <wrd/testing/gen.hpp>
#include <wrd/testing/oracle.hpp>

using namespace wrd;
using namespace wrd::testing;

namespace {

using ZI = interval_basis<z_number>;
using ZC = congruence_basis<z_number>;
using EI = abstract_env<ZI>;
using EC = abstract_env<ZC>;
using XZ = expr<z_number>;

interval_elem<z_number> iv(int lo, int hi) {
  return interval_elem<z_number>::range(bound<z_number>(z_number(lo)),
                                        bound<z_number>(z_number(hi)));
}

}  // namespace

TEST_CASE("point-wise lattice operations") {
  auto a = EI::top(1).with(1, iv(0, 1));
  auto b = EI::top(1).with(1, iv(2, 3));
  CHECK(EI::join(a, b).get(1) == iv(0, 3));
  CHECK(EI::meet(a, b).is_bottom());
  auto widened = EI::widen(EI::top(1).with(1, iv(0, 1)), EI::top(1).with(1, iv(0, 2)));
  CHECK(widened.get(1) ==
        interval_elem<z_number>::range(bound<z_number>(z_number(0)),
                                       bound<z_number>::plus_infinity()));
  CHECK(EI::leq(a, EI::top(1)));
  CHECK(EI::leq(EI::bottom(1), a));
  CHECK_FALSE(EI::leq(a, b));
}

TEST_CASE("bottom smashing") {
  auto a = EI::top(2).with(1, ZI::bottom());
  CHECK(a.is_bottom());
  CHECK(a == EI::bottom(2));
  CHECK(a.assign(1, XZ::constant(z_number(5))).is_bottom());
}

TEST_CASE("expression evaluation") {
  auto env = EI::top(1).with(1, iv(0, 3));
  CHECK(env.eval(XZ::addition(XZ::variable(1), XZ::constant(z_number(2)))) == iv(2, 5));
  // x - x loses the correlation in the interval basis
  CHECK(env.with(1, iv(0, 1))
            .eval(XZ::subtraction(XZ::variable(1), XZ::variable(1))) == iv(-1, 1));
  auto cenv = EC::top(1).with(1, congruence_elem<z_number>::cls(
                                     modulus<z_number>::finite(z_number(2)),
                                     z_number(1)));
  CHECK(cenv.eval(XZ::scaled(z_number(3), XZ::variable(1))) ==
        congruence_elem<z_number>::cls(modulus<z_number>::finite(z_number(6)),
                                       z_number(3)));
  CHECK(ZI::is_top(env.eval(XZ::random())));
}

TEST_CASE("assignment") {
  auto env = EI::top(2).with(1, iv(0, 3));
  auto out = env.assign(2, XZ::addition(XZ::variable(1), XZ::constant(z_number(2))));
  CHECK(out.get(2) == iv(2, 5));
  CHECK(out.get(1) == iv(0, 3));
  CHECK(EI::bottom(2).assign(1, XZ::constant(z_number(1))).is_bottom());
  CHECK(ZI::is_top(env.assign_random(1).get(1)));
}

TEST_CASE("guards filter unary atoms only") {
  auto env = EI::top(2).with(1, iv(0, 9));
  auto g = env.guard(guard_atom<z_number>::var_in_set(
      1, *parse_set_literal<z_number>("[5,20]")));
  CHECK(g.get(1) == iv(5, 9));

  // relational atoms are the identity here
  auto rel = env.guard(guard_atom<z_number>::diff_in_set(
      1, 2, *parse_set_literal<z_number>("[0,0]")));
  CHECK(rel == env);

  auto cenv = EC::top(1).with(1, congruence_elem<z_number>::cls(
                                     modulus<z_number>::finite(z_number(2)),
                                     z_number(0)));
  auto dead = cenv.guard(guard_atom<z_number>::var_in_set(
      1, *parse_set_literal<z_number>("2Z+1")));
  CHECK(dead.is_bottom());

  auto cmp = env.guard(guard_atom<z_number>::cmp(1, cmp_op::lt, z_number(5)));
  CHECK(cmp.get(1) == iv(0, 4));
  auto ne = env.guard(guard_atom<z_number>::cmp(1, cmp_op::ne, z_number(5)));
  CHECK(ne == env);
}

TEST_CASE("evaluation is sound on sampled environments") {
  rng r(99);
  auto w = make_int_window(-10, 10);
  for (int t = 0; t < 300; ++t) {
    auto e1 = elem_gen<ZI>::random(r, false);
    auto e2 = elem_gen<ZI>::random(r, false);
    auto env = EI::top(2).with(1, e1).with(2, e2);
    if (env.is_bottom()) continue;
    // random linear expression over the two variables
    XZ ex = XZ::addition(XZ::scaled(small_scalar<z_number>(r), XZ::variable(1)),
                         XZ::variable(2));
    if (pick(r, 0, 1)) ex = XZ::subtraction(ex, XZ::variable(1));
    auto res = env.eval(ex);
    for (const auto& a : sample<ZI>(env.get(1), w))
      for (const auto& b : sample<ZI>(env.get(2), w)) {
        std::vector<z_number> vals = {z_number(0), a, b};
        CHECK(ZI::member(res, eval_concrete(ex, vals)));
      }
  }
}

TEST_CASE("guard soundness on sampled environments") {
  rng r(7);
  auto w = make_int_window(-10, 10);
  for (int t = 0; t < 300; ++t) {
    auto env = EI::top(1).with(1, elem_gen<ZI>::random(r, false));
    if (env.is_bottom()) continue;
    auto lit = set_literal<z_number>::range(bound<z_number>(small_scalar<z_number>(r)),
                                            bound<z_number>(small_scalar<z_number>(r)));
    auto g = env.guard(guard_atom<z_number>::var_in_set(1, lit));
    for (const auto& v : sample<ZI>(env.get(1), w))
      if (lit.contains(v)) CHECK(g.contains({z_number(0), v}));
  }
}
