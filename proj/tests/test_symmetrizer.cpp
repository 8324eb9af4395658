#include <doctest.h>

#include "msuper/symmetrizer.hpp"

using namespace msuper;

TEST_CASE("t-multinomial") {
  CHECK(t_multinomial({1, 1, 0, 0, 0}, 3) == t_bracket(3));          // [3]!/([2]![1]!)
  CHECK(t_multinomial({2, 2, 2, 0, 0}, 3) == RatQT::one());          // constant window
  CHECK(t_multinomial({1, 0, 0, 0, 0}, 2) == t_bracket(2));          // [2]!
  CHECK(t_multinomial({0, 0, 0}, 0) == RatQT::one());
}

TEST_CASE("window rearrangements") {
  const ModuleLabel e = ModuleLabel::type0_special(5, 1);  // window 3
  const auto alphas = window_rearrangements({2, 1, 0, 0, 0}, e);
  CHECK(alphas.size() == 6);
  const auto repeated = window_rearrangements({1, 1, 0, 0, 0}, e);
  CHECK(repeated.size() == 3);  // multiset permutations only
  for (const Composition& a : repeated) CHECK(in_class_N0(a, 5, 1));
}

TEST_CASE("degenerate lambda") {
  MCache cache;
  const ModuleLabel e = ModuleLabel::type0_special(4, 1);
  const Composition zero(4, 0);
  CHECK(build_symmetrized(zero, e, SymKind::s, &cache) ==
        SuperPoly::lift(tau_general(e)));
  CHECK(closed_eval_symmetrized(zero, e, SymKind::s) == RatQT::one());
  const ModuleLabel f = ModuleLabel::type1_special(4, 2);
  CHECK(closed_eval_symmetrized(zero, f, SymKind::a) == RatQT::one());
}

TEST_CASE("annihilation and closed values at small size") {
  MCache cache;
  const ModuleLabel e = ModuleLabel::type0_special(5, 1);  // window 3
  const Composition lam{2, 1, 0, 0, 0};
  const SuperPoly ps = build_symmetrized(lam, e, SymKind::s, &cache);
  for (int i = 1; i < 3; ++i)
    CHECK((hecke_T_full(i, ps) - ps.scaled(RatQT::t())).is_zero());
  const RatQT closed = closed_eval_symmetrized(lam, e, SymKind::s);
  CHECK(substitute_x(ps, PointSpec::x0(5)) ==
        SuperPoly::lift(tau_general(e).scaled(closed)));

  const ModuleLabel f = ModuleLabel::type1_special(5, 2);  // window 2
  const Composition mu{2, 1, 0, 0, 0};
  const SuperPoly pa = build_symmetrized(mu, f, SymKind::a, &cache);
  CHECK((hecke_T_full(1, pa) + pa).is_zero());
  const RatQT closed_a = closed_eval_symmetrized(mu, f, SymKind::a);
  CHECK(substitute_x(pa, PointSpec::x1(5)) ==
        SuperPoly::lift(tau_general(f).scaled(closed_a)));
}

TEST_CASE("the t-multinomial sum over rearrangements") {
  const ModuleLabel e = ModuleLabel::type0_special(5, 1);
  for (const Composition& lam : {Composition{1, 1, 0, 0, 0}, Composition{2, 1, 0, 0, 0},
                                 Composition{2, 2, 1, 0, 0}}) {
    const RatQT lhs = rr_sum(lam, e);
    const RatQT rhs =
        t_multinomial(lam, 3) / R_product(1, window_reversal(lam, e), e);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("class mismatch errors") {
  const ModuleLabel e = ModuleLabel::type0_special(4, 1);
  CHECK_THROWS_AS(build_symmetrized({0, 0, 1, 0}, e, SymKind::s, nullptr), std::domain_error);
  CHECK_THROWS_AS(build_symmetrized({1, 0, 0, 0}, e, SymKind::a, nullptr), std::domain_error);
  CHECK_THROWS_AS(closed_eval_symmetrized({0, 1, 0, 0}, e, SymKind::s), std::domain_error);
}
