#pragma once

#include "msuper/yang_baxter.hpp"

namespace msuper {

// Scalar machinery for the closed evaluation formulas: t-integers, the
// kappa and u factors, Pochhammer symbols, (q,t)-hook products and the
// special values V^(0), V^(1).

/// [n]_t = 1 + t + ... + t^{n-1}.
RatQT t_bracket(int n);
/// [n]_t! = prod_{i<=n} [i]_t.
RatQT t_factorial(int n);
/// kappa_n = t^n/[n]_t for n >= 1, kappa_{-n} = -1/[n]_t; kappa_0 undefined.
RatQT kappa(int n);

/// u0(z) = (t-z)/(1-z); pole at z = 1.
RatQT u0(const RatQT& z);
/// u1(z) = (1-tz)/(1-z); pole at z = 1.
RatQT u1(const RatQT& z);

/// (a;q)_n = prod_{l=0}^{n-1} (1 - a q^l).
RatQT pochhammer(const RatQT& a, int n);

enum class TDir { t, inv_t };

/// (a;q,t)_lambda = prod_i (a t^{1-i};q)_{lambda_i}; the inv_t variant uses
/// t^{i-1} in place of t^{1-i}.
RatQT pochhammer_lambda(const RatQT& a, const Composition& lambda, TDir tdir);

/// Leg length of the box (i,j) in a composition diagram; reduces to the
/// partition leg when the shape is weakly decreasing.
int leg_length(int i, int j, const Composition& shape);

/// (q,t)-hook product prod_{(i,j) in shape} (1 - a q^{arm} t^{+-leg}).
RatQT hook_product(const RatQT& a, const Composition& shape, TDir tdir);

/// R_k(beta, E') = prod over inverted pairs of u_k(zeta(j)/zeta(i)).
RatQT R_product(int k, const Composition& beta, const ModuleLabel& label);

/// Closed special value at x^(0) for alpha with zero tail (positions
/// i >= N-m); partitions use the telescoped product of the evaluation
/// theorem, general compositions divide by R_1(alpha, E).
RatQT V0(const Composition& alpha, const ModuleLabel& label);
/// Same value through the (q,t)-hook form, cross-checkable against V0.
RatQT V0_hook(const Composition& alpha, const ModuleLabel& label);

/// Closed special value at x^(1) for alpha supported on the first m slots.
RatQT V1(const Composition& alpha, const ModuleLabel& label);
RatQT V1_hook(const Composition& alpha, const ModuleLabel& label);

/// e0(lambda) = sum lambda_i (2N - m - i - 1), e1 = sum lambda_i (N - m - i).
int e0_exponent(const Composition& lambda, int N, int m);
int e1_exponent(const Composition& lambda, int N, int m);
/// n(lambda) = sum lambda_i (i - 1).
int n_exponent(const Composition& lambda);

/// Class membership: alpha_i = 0 for i >= N-m (type 0) / i > m (type 1).
bool in_class_N0(const Composition& alpha, int N, int m);
bool in_class_N1(const Composition& alpha, int N, int m);

}  // namespace msuper
