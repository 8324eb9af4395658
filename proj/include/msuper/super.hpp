#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "msuper/fermion.hpp"
#include "msuper/qt.hpp"

namespace msuper {

/// Exponent vector alpha in N_0^N.
using Composition = std::vector<int>;

inline int comp_degree(const Composition& a) {
  int s = 0;
  for (int v : a) s += v;
  return s;
}

/// Monomial key x^alpha phi_E; ordered graded-lex on alpha, then by mask,
/// so equality, serialization and iteration order are all deterministic.
struct SKey {
  Composition alpha;
  uint64_t theta = 0;
  friend bool operator==(const SKey&, const SKey&) = default;
};

struct SKeyLess {
  bool operator()(const SKey& x, const SKey& y) const {
    const int dx = comp_degree(x.alpha), dy = comp_degree(y.alpha);
    if (dx != dy) return dx < dy;
    if (x.alpha != y.alpha) return x.alpha < y.alpha;
    return x.theta < y.theta;
  }
};

/// Superpolynomial: commuting x_1..x_N tensor fermionic theta_1..theta_N
/// with coefficients in Q(q,t).
struct SuperPoly {
  int N = 0;
  std::map<SKey, RatQT, SKeyLess> terms;

  explicit SuperPoly(int n = 0) : N(n) {}

  static SuperPoly lift(const FermionPoly& p);
  static SuperPoly monomial(int N, const Composition& alpha, uint64_t theta, const RatQT& c);

  bool is_zero() const { return terms.empty(); }
  void add_term(const SKey& k, const RatQT& c);
  SuperPoly operator+(const SuperPoly& rhs) const;
  SuperPoly operator-(const SuperPoly& rhs) const;
  SuperPoly scaled(const RatQT& c) const;
  /// Multiplies by the monomial x^beta.
  SuperPoly mul_x(const Composition& beta) const;
  friend bool operator==(const SuperPoly&, const SuperPoly&) = default;

  /// Coefficient of x^alpha as a fermionic polynomial.
  FermionPoly x_coefficient(const Composition& alpha) const;
  /// Distinct x-exponents present.
  std::vector<Composition> x_support() const;
};

/// Per-coordinate substitution descriptor: each x_i is symbolic or t^k.
struct PointCoord {
  bool symbolic = true;
  int tpow = 0;
};

struct PointSpec {
  std::vector<PointCoord> coords;

  static PointSpec all_symbolic(int N) { return PointSpec{std::vector<PointCoord>(N)}; }
  /// x^(0) = (1, t, t^2, ..., t^{N-1}).
  static PointSpec x0(int N);
  /// x^(1) = (1, t^-1, ..., t^{1-N}).
  static PointSpec x1(int N);
  /// All coordinates fixed to the given t-powers.
  static PointSpec t_powers(const std::vector<int>& exps);
  /// Swaps coordinates i, i+1 (1-based).
  PointSpec swapped(int i) const;
};

/// q-substitution context for operators: generic q, or q = t^e.
struct QSpec {
  std::optional<int> e;
  RatQT qpow(int k) const { return e ? RatQT::t_pow(*e * k) : RatQT::q_pow(k); }
};

/// Full Hecke action with the divided difference expanded per monomial:
/// T_i p = (1-t) x_{i+1} (p - p s_i)/(x_i - x_{i+1}) + T_i^theta (p s_i).
SuperPoly hecke_T_full(int i, const SuperPoly& p, bool inverse = false);

/// Hecke generator acting on the theta part only, x untouched.
SuperPoly hecke_T_theta(int i, const SuperPoly& p);

/// Shift operator: w p(x;theta) = T^(N) p(q x_N, x_1, ..., x_{N-1}; theta),
/// where the Hecke word T_{N-1}...T_1 acts on the theta variables.
SuperPoly w_op(const SuperPoly& p, const QSpec& qs = {});

/// Cherednik operator xi_i = t^{i-N} T_i...T_{N-1} w T_1^{-1}...T_{i-1}^{-1}
/// built from the full Hecke action.
SuperPoly cherednik_xi(int i, const SuperPoly& p, const QSpec& qs = {});

/// Jucys-Murphy element on superpolynomials (full Hecke action).
SuperPoly jucys_full(int i, const SuperPoly& p);

/// Replaces each fixed coordinate x_i by t^k; symbolic coordinates remain.
SuperPoly substitute_x(const SuperPoly& p, const PointSpec& pt);

/// Specializes every coefficient at q = t^e (throws pole_error on a pole).
SuperPoly specialize_q(const SuperPoly& p, int e);

/// b(x;i) = (t-1)/(1 - x_i/x_{i+1}) at a point with fixed distinct
/// coordinates i, i+1.
RatQT b_factor(const PointSpec& pt, int i);

/// lhs == factor * rhs without materializing the scaled copy.
bool equals_scaled(const SuperPoly& lhs, const SuperPoly& rhs, const RatQT& factor);

}  // namespace msuper
