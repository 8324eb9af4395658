#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "msuper/qt.hpp"

namespace msuper {

enum class LabelKind { type0, type1 };

/// Label of an irreducible Hecke module of hook isotype inside the fermionic
/// polynomials.  The set is a bitmask over {1..N} (bit i-1 <-> member i).
///
/// type0 labels contain N and span ker D (fermionic degree |set|-1);
/// type1 labels avoid N and span ker M (fermionic degree |set|+1).
struct ModuleLabel {
  LabelKind kind = LabelKind::type0;
  int N = 0;
  uint64_t set = 0;

  static ModuleLabel type0_label(int N, uint64_t set);
  static ModuleLabel type1_label(int N, uint64_t set);
  /// E = {N-m, ..., N}, the type-0 set whose tau equals D(phi_E) exactly.
  static ModuleLabel type0_special(int N, int m);
  /// F = {1, ..., m}, the type-1 set whose tau equals M(phi_F) exactly.
  static ModuleLabel type1_special(int N, int m);

  int size() const;
  int fermionic_degree() const;
  /// Window parameter m: |set|-1 for type 0, |set| for type 1.  Positions
  /// i >= N-m (type 0) resp. i > m (type 1) carry frozen spectral entries.
  int window_m() const;
  bool is_special() const;
  std::vector<int> members() const;

  friend bool operator==(const ModuleLabel&, const ModuleLabel&) = default;
};

/// Polynomial in N anti-commuting variables theta_1..theta_N.  Monomials
/// phi_E = theta_{i_1}...theta_{i_k} (indices increasing) are keyed by the
/// bitmask of E; no zero coefficients are stored.
struct FermionPoly {
  int N = 0;
  std::map<uint64_t, RatQT> terms;

  explicit FermionPoly(int n = 0) : N(n) {}

  /// Basis monomial phi_E.
  static FermionPoly phi(int N, uint64_t mask);

  bool is_zero() const { return terms.empty(); }
  void add_term(uint64_t mask, const RatQT& c);
  FermionPoly operator+(const FermionPoly& rhs) const;
  FermionPoly operator-(const FermionPoly& rhs) const;
  FermionPoly scaled(const RatQT& c) const;
  friend bool operator==(const FermionPoly&, const FermionPoly&) = default;
};

/// Number of members of E below i, the sign bookkeeping exponent.
inline int sign_count(uint64_t mask, int i) {
  return __builtin_popcountll(mask & ((uint64_t(1) << (i - 1)) - 1));
}

/// Exterior multiplication theta_i (zero when i already present).
FermionPoly theta_hat(int i, const FermionPoly& p);
/// Interior derivative (zero when i absent).
FermionPoly partial(int i, const FermionPoly& p);
/// M = sum_i theta_hat_i, raises fermionic degree.
FermionPoly op_M(const FermionPoly& p);
/// D = sum_i t^{i-1} partial_i, lowers fermionic degree.
FermionPoly op_D(const FermionPoly& p);

/// Hecke generator on the theta variables, 1 <= i < N.
FermionPoly hecke_T(int i, const FermionPoly& p);
/// T_i^{-1} = (T_i + 1 - t)/t.
FermionPoly hecke_T_inv(int i, const FermionPoly& p);
/// Applies generators word[0], word[1], ... in that order.
FermionPoly hecke_T_word(const std::vector<int>& word, const FermionPoly& p, bool inverse = false);

/// Jucys-Murphy element omega_i = t^{i-N} T_i...T_{N-1} T_{N-1}...T_i.
FermionPoly jucys_murphy(int i, const FermionPoly& p);

/// Content vector [c(1), ..., c(N)] of the hook tableau attached to a label.
/// Members of the set fill the column (contents 0,-1,... for type 0 and
/// -1,-2,... for type 1); the complement fills the first row.
std::vector<int> content_vector(const ModuleLabel& label);

/// #{(i,j) : i < j, i in set, j not in set}.
int inv_set(const ModuleLabel& label);

/// tau for the special sets only: D(phi_E) resp. M(phi_F).
FermionPoly tau_special(const ModuleLabel& label);

/// The unique joint Jucys-Murphy eigenvector with eigenvalues t^{c(i)},
/// solved by exact kernel intersection inside ker D (resp. ker M) and
/// normalized so the psi_E coefficient is t^{inv(E)} (type 0) resp. the
/// eta_F coefficient is 1 (type 1).
FermionPoly tau_general(const ModuleLabel& label);

/// Whether a sequence is the content vector of some reverse standard Young
/// tableau on {1..N} (any partition shape).  Entries are inserted N..1 onto
/// addable corners; corners of a fixed content are unique, so the greedy
/// placement decides membership.
bool is_rsyt_content_vector(const std::vector<int>& contents);

}  // namespace msuper
