#pragma once

#include "msuper/evaluation.hpp"

namespace msuper {

// Restricted symmetrization (type 0) and antisymmetrization (type 1) of the
// Macdonald superpolynomials, together with their closed special values.

enum class SymKind { s, a };

/// Distinct rearrangements of lambda inside the active window (first
/// N-m-1 slots for type 0, first m for type 1), zero elsewhere.
std::vector<Composition> window_rearrangements(const Composition& lambda,
                                               const ModuleLabel& label);

/// p^s_lambda = sum_alpha R_0(alpha,E) M_alpha, or
/// p^a_lambda = sum_alpha (-1)^{inv(alpha)} R_1(alpha,F) M_alpha.
SuperPoly build_symmetrized(const Composition& lambda, const ModuleLabel& label, SymKind kind,
                            MCache* cache = nullptr);

/// Multiplicities n_j = #{l <= window : lambda_l = j} for 0 <= j <= lambda_1;
/// the entries always sum to the window length.
std::vector<int> multiplicity_profile(const Composition& lambda, int window);

/// [window]_t! / prod_j [n_j(lambda)]_t! where n_j counts parts equal to j
/// inside the window.
RatQT t_multinomial(const Composition& lambda, int window);

/// Coefficient of tau in the symmetrized polynomial at its special point:
/// multinomial times V^(0)(R0 lambda) (kind s) resp. the signed type-1
/// variant with V^(1)(R1 lambda) (kind a).
RatQT closed_eval_symmetrized(const Composition& lambda, const ModuleLabel& label, SymKind kind);

/// Reversal of the window block, zero-padded: the argument fed to V in the
/// closed special values.
Composition window_reversal(const Composition& lambda, const ModuleLabel& label);

/// Direct summation sum_alpha R_0(alpha,E)/R_1(alpha,E); equals
/// t_multinomial / R_1(R0 lambda, E) for type 0.
RatQT rr_sum(const Composition& lambda, const ModuleLabel& label);

}  // namespace msuper
