#include <doctest.h>

#include <random>

#include "msuper/yang_baxter.hpp"

using namespace msuper;

namespace {

uint64_t mask_of(std::initializer_list<int> idx) {
  uint64_t m = 0;
  for (int i : idx) m |= uint64_t(1) << (i - 1);
  return m;
}

// Builds through the rightmost descent instead of the leftmost; independent
// route for the path-independence property.
SuperPoly build_rightmost(const Composition& alpha, const ModuleLabel& label) {
  if (comp_degree(alpha) == 0) return SuperPoly::lift(tau_general(label));
  int descent = 0;
  for (int i = label.N - 1; i >= 1; --i) {
    if (alpha[i - 1] > alpha[i]) {
      descent = i;
      break;
    }
  }
  if (descent > 0) {
    Composition beta = alpha;
    std::swap(beta[descent - 1], beta[descent]);
    const SuperPoly mb = build_rightmost(beta, label);
    const SpectralVector zeta = spectral_vector(beta, label);
    const RatQT shift =
        (RatQT::one() - RatQT::t()) / (RatQT::one() - spectral_ratio(zeta, descent + 1, descent));
    return hecke_T_full(descent, mb) + mb.scaled(shift);
  }
  Composition prev(label.N);
  prev[0] = alpha[label.N - 1] - 1;
  for (int i = 1; i < label.N; ++i) prev[i] = alpha[i - 1];
  Composition xn(label.N, 0);
  xn[label.N - 1] = 1;
  return w_op(build_rightmost(prev, label)).mul_x(xn);
}

std::vector<Composition> compositions_of(int n, int d) {
  std::vector<Composition> out;
  Composition cur(n, 0);
  auto rec = [&](auto&& self, int slot, int rest) -> void {
    if (slot == n - 1) {
      cur[slot] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[slot] = v;
      self(self, slot + 1, rest - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace

TEST_CASE("rank function") {
  CHECK(rank_function({0, 2, 1}) == std::vector<int>({3, 1, 2}));
  CHECK(rank_function({1, 1}) == std::vector<int>({1, 2}));
  CHECK(rank_function({3, 2, 2, 0}) == std::vector<int>({1, 2, 3, 4}));
  // r_alpha applied to alpha sorts it.
  std::mt19937_64 gen(2);
  for (int rep = 0; rep < 30; ++rep) {
    Composition alpha(4);
    for (int& v : alpha) v = static_cast<int>(gen() % 4);
    const std::vector<int> r = rank_function(alpha);
    Composition sorted(4);
    for (int i = 0; i < 4; ++i) sorted[r[i] - 1] = alpha[i];
    CHECK(sorted == sorted_partition(alpha));
  }
}

TEST_CASE("inversions") {
  CHECK(inversions({0, 2, 1}) == 2);
  CHECK(inversions({3, 1, 0}) == 0);
  CHECK(inversions({0, 1, 2, 3, 4}) == 10);
}

TEST_CASE("spectral vectors") {
  const ModuleLabel e34 = ModuleLabel::type0_label(4, mask_of({3, 4}));
  CHECK(content_vector(e34) == std::vector<int>({2, 1, -1, 0}));
  const SpectralVector zeta = spectral_vector({1, 0, 0, 0}, e34);
  CHECK(zeta == SpectralVector({{1, 2}, {0, 1}, {0, -1}, {0, 0}}));

  // Frozen tails: type 0 has zeta(i) = t^{i-N} on the last m+1 slots.
  const ModuleLabel e = ModuleLabel::type0_special(6, 2);
  const SpectralVector z0 = spectral_vector({2, 1, 0, 0, 0, 0}, e);
  for (int i = 4; i <= 6; ++i) CHECK(z0[i - 1] == SpectralEntry{0, i - 6});
  const ModuleLabel f = ModuleLabel::type1_special(6, 2);
  const SpectralVector z1 = spectral_vector({2, 1, 0, 0, 0, 0}, f);
  for (int i = 3; i <= 6; ++i) CHECK(z1[i - 1] == SpectralEntry{0, 6 - i});
}

TEST_CASE("reduced words") {
  std::mt19937_64 gen(9);
  for (int rep = 0; rep < 40; ++rep) {
    Composition alpha(5);
    for (int& v : alpha) v = static_cast<int>(gen() % 3);
    const std::vector<int> perm = rank_function(alpha);
    const std::vector<int> word = reduced_word(perm);
    // Accumulate s_{i_1}...s_{i_k} left to right by right multiplication.
    std::vector<int> p(5);
    for (int i = 0; i < 5; ++i) p[i] = i + 1;
    for (int i : word) std::swap(p[i - 1], p[i]);
    CHECK(p == perm);
    int inv = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (perm[i] > perm[j]) ++inv;
    CHECK(static_cast<int>(word.size()) == inv);
  }
}

TEST_CASE("base case and a hand-built affine step") {
  const ModuleLabel e2 = ModuleLabel::type0_special(2, 0);
  MCache cache;
  CHECK(build_M({0, 0}, e2, &cache) == SuperPoly::lift(tau_general(e2)));
  // M_{(0,1)} = x_2 w(tau) = t^2 x_2 phi_empty for N = 2, m = 0.
  const SuperPoly m01 = build_M({0, 1}, e2, &cache);
  CHECK(m01 == SuperPoly::monomial(2, {0, 1}, 0, RatQT::t_pow(2)));
}

TEST_CASE("eigenfunction property on a sweep") {
  MCache cache;
  for (int n = 3; n <= 4; ++n) {
    const ModuleLabel label = ModuleLabel::type0_special(n, 1);
    for (int d = 0; d <= 2; ++d) {
      for (const Composition& alpha : compositions_of(n, d)) {
        const SuperPoly m = build_M(alpha, label, &cache);
        const SpectralVector zeta = spectral_vector(alpha, label);
        for (int i = 1; i <= n; ++i) {
          CHECK(cherednik_xi(i, m) ==
                m.scaled(RatQT::qt_pow(zeta[i - 1].qexp, zeta[i - 1].texp)));
        }
        CHECK(leading_term_check(alpha, label, m));
      }
    }
  }
}

TEST_CASE("path independence of the descent choice") {
  MCache cache;
  const ModuleLabel label = ModuleLabel::type1_special(4, 2);
  for (const Composition& alpha :
       {Composition{2, 0, 1, 0}, Composition{1, 0, 2, 0}, Composition{2, 1, 0, 0},
        Composition{0, 2, 0, 1}}) {
    CHECK(build_M(alpha, label, &cache) == build_rightmost(alpha, label));
  }
}

TEST_CASE("key annihilation relations along the graph") {
  MCache cache;
  const ModuleLabel label = ModuleLabel::type0_special(4, 1);
  for (const Composition& alpha : compositions_of(4, 2)) {
    const SuperPoly m = build_M(alpha, label, &cache);
    const SpectralVector zeta = spectral_vector(alpha, label);
    for (int i = 1; i < 4; ++i) {
      const RatQT ratio = spectral_ratio(zeta, i + 1, i);
      if (ratio == RatQT::t()) CHECK((hecke_T_full(i, m) + m).is_zero());
      if (ratio == RatQT::t().inverse())
        CHECK((hecke_T_full(i, m) - m.scaled(RatQT::t())).is_zero());
    }
  }
}

TEST_CASE("substituted annihilation at matching points") {
  // If (T_i + 1) M = 0 then at any point with y_{i+1} = t y_i the
  // substituted value obeys the same relation through the theta-only
  // action, and dually for (T_i - t) at points with y_i = t y_{i+1}.
  MCache cache;
  const ModuleLabel label = ModuleLabel::type0_special(5, 1);
  const Composition alpha{1, 1, 0, 0, 0};
  const SuperPoly m = build_M(alpha, label, &cache);
  const SpectralVector zeta = spectral_vector(alpha, label);
  // Equal adjacent window parts: zeta(2) = zeta(1)/t, a (T_1 - t) relation.
  REQUIRE(spectral_ratio(zeta, 2, 1) == RatQT::t().inverse());
  REQUIRE((hecke_T_full(1, m) - m.scaled(RatQT::t())).is_zero());
  const PointSpec y = PointSpec::t_powers({5, 4, 0, 1, 2});  // y_1 = t y_2
  const SuperPoly at_y = substitute_x(m, y);
  CHECK((hecke_T_theta(1, at_y) - at_y.scaled(RatQT::t())).is_zero());
  // Frozen type-0 tail: zeta(5) = t zeta(4), a (T_4 + 1) relation.
  REQUIRE(spectral_ratio(zeta, 5, 4) == RatQT::t());
  REQUIRE((hecke_T_full(4, m) + m).is_zero());
  const PointSpec u = PointSpec::t_powers({5, 4, 0, 1, 2});  // u_5 = t u_4
  const SuperPoly at_u = substitute_x(m, u);
  CHECK((hecke_T_theta(4, at_u) + at_u).is_zero());
  // Dual statement on a frozen type-1 tail with zeta(i+1) = zeta(i)/t.
  const ModuleLabel f = ModuleLabel::type1_special(5, 2);
  const Composition beta{1, 1, 0, 0, 0};
  const SuperPoly mf = build_M(beta, f, &cache);
  const SpectralVector zf = spectral_vector(beta, f);
  REQUIRE(spectral_ratio(zf, 4, 3) == RatQT::t().inverse());
  REQUIRE((hecke_T_full(3, mf) - mf.scaled(RatQT::t())).is_zero());
  const PointSpec v = PointSpec::t_powers({7, 3, 2, 1, 0});  // v_3 = t v_4
  const SuperPoly at_v = substitute_x(mf, v);
  CHECK((hecke_T_theta(3, at_v) - at_v.scaled(RatQT::t())).is_zero());
}

TEST_CASE("cache reuse") {
  MCache cache;
  const ModuleLabel label = ModuleLabel::type0_special(3, 1);
  const Composition alpha{2, 0, 0};
  const SuperPoly a = build_M(alpha, label, &cache);
  const size_t filled = cache.size();
  CHECK(filled > 1);  // intermediate nodes are published too
  CHECK(build_M(alpha, label, &cache) == a);
  CHECK(cache.size() == filled);
  CHECK(cache.find(alpha, label) != nullptr);
}
